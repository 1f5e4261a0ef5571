#include <gtest/gtest.h>

#include <ward/io.hpp>
#include <ward/suites.hpp>

#include "oracle.hpp"

using namespace ward;
using json = nlohmann::json;

namespace
{

template <class F>
void expect_code(errc code, F &&fn)
{
    try {
        fn();
        FAIL() << "expected " << errc_name(code);
    } catch (const error &e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

std::string dump_reports(const std::vector<RuleReport> &reports)
{
    json arr = json::array();
    for (const auto &r : reports) arr.push_back(io::to_json(r));
    return arr.dump();
}

} // namespace

TEST(Io, SeriesRoundTrip)
{
    for (const char *spec : {"natural", "q", "q=3/2", "fib", "custom:[0,1,2,1,3,1,4]"}) {
        const auto ctx = PsiContext::from_spec(spec, 6);
        const auto f = divide(WardSeries::e_psi(ctx, 6), WardSeries::from_rationals(ctx, oracle::Seq{2, 1, -1}));
        const json j = io::to_json(f);
        EXPECT_EQ(io::series_from_json(j, ctx), f);
        EXPECT_EQ(io::to_json(io::series_from_json(j, ctx)).dump(), j.dump());
        EXPECT_EQ(io::series_from_json(json::parse(j.dump()), ctx), f);
    }
}

TEST(Io, SeriesFormat)
{
    const auto qs = PsiContext::q_symbolic(4);
    const json j = io::to_json(WardSeries::monomial(qs, 2, 2));
    EXPECT_EQ(j.at("psi"), "q");
    EXPECT_EQ(j.at("order"), 2);
    EXPECT_EQ(j.at("coeffs")[2], json::parse(R"({"num":["1","1"],"den":["1"]})"));
    const auto nat = PsiContext::natural(4);
    EXPECT_EQ(io::to_json(WardSeries::from_rationals(nat, oracle::Seq{Rational(1, 2), -3})).dump(),
              R"({"coeffs":["1/2","-3"],"order":1,"psi":"natural"})");
}

TEST(Io, SeriesErrors)
{
    const auto nat = PsiContext::natural(4);
    expect_code(errc::context_mismatch,
                [&] { io::series_from_json(json::parse(R"({"psi":"fib","coeffs":["1"]})"), nat); });
    expect_code(errc::parse_error,
                [&] { io::series_from_json(json::parse(R"({"psi":"natural","coeffs":["x"]})"), nat); });
    expect_code(errc::parse_error, [&] { io::series_from_json(json::parse(R"({"coeffs":["1"]})"), nat); });
    expect_code(errc::parse_error,
                [&] { io::series_from_json(json::parse(R"({"psi":"natural","order":3,"coeffs":["1"]})"), nat); });
    expect_code(errc::bound_exceeded, [&] {
        io::series_from_json(json::parse(R"({"psi":"natural","coeffs":["1","1","1","1","1","1"]})"), nat);
    });
    // q=6/4 names the same context as q=3/2.
    const auto qv = PsiContext::q_value(Rational(3, 2), 4);
    EXPECT_NO_THROW(io::series_from_json(json::parse(R"({"psi":"q=6/4","coeffs":["1"]})"), qv));
}

TEST(Io, InlineSeries)
{
    const auto nat = PsiContext::natural(4);
    const auto f = io::series_from_inline(" [1, -2/3 ,0] ", nat);
    EXPECT_EQ(f.order(), 2u);
    EXPECT_EQ(f[1], Scalar(Rational(-2, 3)));
    for (const char *bad : {"", "1,2", "[]", "[1,,2]", "[a]"}) {
        expect_code(errc::parse_error, [&] { io::series_from_inline(bad, nat); });
    }
}

TEST(Io, Chains)
{
    EXPECT_EQ(io::parse_chain("[(1,0),(3,1)]").str(), "*(1,0)*(3,1)");
    EXPECT_EQ(io::parse_chain("[ ( 2 , 1 ) ]", Flavor::star).str(), "#(2,1)");
    EXPECT_TRUE(io::parse_chain("[]").is_ordinary());
    for (const char *bad : {"", "(1,0)", "[(1,0)", "[(1)]", "[(a,0)]", "[(1,0)]x"}) {
        expect_code(errc::parse_error, [&] { io::parse_chain(bad); });
    }
    expect_code(errc::bad_indices, [] { io::parse_chain("[(1,1)]"); });
}

TEST(Io, PascalJson)
{
    const json rows = io::pascal_json(BinomialOperatorTable(2));
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0].at("op"), "*inf");
    EXPECT_EQ(rows[4].at("op"), "*(1,0) [+] *(2,1)");
}

TEST(Suites, CustomDefault)
{
    EXPECT_EQ(suites::custom_spec(6), "custom:[0,1,2,1,3,1,4]");
    EXPECT_EQ(suites::default_specs(8).size(), 5u);
}

TEST(Suites, DeterministicAndPassing)
{
    suites::Config cfg;
    cfg.order = 6;
    cfg.trials = 3;
    const auto a = suites::run("all", cfg), b = suites::run("all", cfg);
    EXPECT_EQ(dump_reports(a), dump_reports(b));
    for (const auto &r : a) EXPECT_TRUE(r.passed()) << r.rule << " [" << r.psi << "]";
    cfg.seed = 8;
    EXPECT_NE(dump_reports(suites::run("rules", cfg)), dump_reports(a));
}

TEST(Suites, InjectedFaultIsReported)
{
    suites::Config cfg;
    cfg.order = 5;
    cfg.trials = 1;
    cfg.inject_fault = true;
    const auto reports = suites::run("rules", cfg);
    std::size_t failed = 0;
    for (const auto &r : reports) {
        if (!r.passed()) {
            ++failed;
            EXPECT_TRUE(r.first_diff.has_value());
        }
    }
    EXPECT_EQ(failed, 1u);
}

TEST(Suites, Errors)
{
    suites::Config cfg;
    expect_code(errc::bad_spec, [&] { suites::run("nope", cfg); });
    cfg.psi_specs = {"custom:[0,1,2]"};
    expect_code(errc::bound_exceeded, [&] { suites::run("rules", cfg); });
}

TEST(Suites, SpecializationCoherence)
{
    suites::Config cfg;
    cfg.order = 6;
    cfg.trials = 2;
    cfg.psi_specs = {"q", "q=3/2"};
    const auto reports = suites::run("all", cfg);
    std::size_t coherence = 0;
    for (const auto &r : reports) {
        if (r.rule.starts_with("specialization_")) {
            ++coherence;
            EXPECT_TRUE(r.passed()) << r.rule;
            EXPECT_FALSE(r.lhs.empty());
        }
    }
    EXPECT_EQ(coherence, suites::suite_names().size());
}
