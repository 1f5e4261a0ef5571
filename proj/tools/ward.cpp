// ward: explore psi-sequences, compute series operations, print the operator
// Pascal triangle and run the verification suites.
//
// Exit status: 0 success, 1 failed check or computation error, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <ward/io.hpp>
#include <ward/suites.hpp>
#include <ward/ward.hpp>

namespace
{

using json = nlohmann::json;

struct Options {
    std::string psi = "natural";
    std::vector<std::string> psi_list;
    std::size_t order = 8;
    std::size_t n = 6;
    std::size_t i = 1, j = 0;
    std::size_t times = 1;
    std::string chain;
    bool star = false;
    std::string format = "plain";
    std::uint64_t seed = 7;
    std::size_t trials = 20;
    bool inject_fault = false;
    std::string kind, suite;
    std::string f, g;
    std::vector<std::string> inputs;
};

void emit(const json &j)
{
    std::cout << j.dump(2) << "\n";
}

int cmd_seq(const Options &o)
{
    const auto ctx = ward::PsiContext::from_spec(o.psi, o.n);
    const auto &c = *ctx;
    if (o.format == "json") {
        json rows = json::array();
        for (std::size_t n = 0; n <= o.n; ++n) {
            json binom = json::array(), kernel = json::array();
            for (std::size_t k = 0; k <= n; ++k) binom.push_back(ward::io::to_json(c.binomial(n, k)));
            for (std::size_t k = 0; k < n; ++k) kernel.push_back(ward::io::to_json(c.kernel(n, k)));
            rows.push_back(json{{"n", n},
                                {"psi", ward::io::to_json(c.psi(n))},
                                {"factorial", ward::io::to_json(c.factorial(n))},
                                {"binom", binom},
                                {"kernel", kernel}});
        }
        emit(json{{"psi", c.spec()}, {"rows", rows}});
        return 0;
    }
    auto join = [](auto first, auto last, auto fn) {
        std::string s;
        for (auto it = first; it != last; ++it) s += (s.empty() ? "" : ", ") + fn(*it);
        return s;
    };
    std::cout << "psi = " << c.spec() << "\n";
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n <= o.n; ++n) idx.push_back(n);
    std::cout << "psi_n: " << join(idx.begin(), idx.end(), [&](std::size_t n) { return c.psi(n).str(); }) << "\n";
    std::cout << "psi_n!: " << join(idx.begin(), idx.end(), [&](std::size_t n) { return c.factorial(n).str(); })
              << "\n";
    std::cout << "binomial rows:\n";
    for (std::size_t n = 0; n <= o.n; ++n) {
        std::cout << "  n=" << n << ": "
                  << join(idx.begin(), idx.begin() + static_cast<long>(n) + 1,
                          [&](std::size_t k) { return c.binomial(n, k).str(); })
                  << "\n";
    }
    std::cout << "F(n,k), k < n:\n";
    for (std::size_t n = 1; n <= o.n; ++n) {
        std::cout << "  n=" << n << ": "
                  << join(idx.begin(), idx.begin() + static_cast<long>(n),
                          [&](std::size_t k) { return c.kernel(n, k).str(); })
                  << "\n";
    }
    return 0;
}

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw ward::error(ward::errc::parse_error, "cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw ward::error(ward::errc::parse_error, "'" + path + "': " + e.what());
    }
}

bool is_inline(const std::string &s)
{
    return !s.empty() && s.front() == '[';
}

int cmd_op(const Options &o)
{
    const std::size_t arity = o.kind == "derive" ? 1 : 2;
    if (o.inputs.size() != arity) {
        throw ward::error(ward::errc::bad_spec,
                          "op " + o.kind + " takes " + std::to_string(arity) + " series argument(s)");
    }
    const ward::Flavor flavor = o.star ? ward::Flavor::star : ward::Flavor::asterisk;
    std::size_t shift = 0;
    std::optional<ward::ProductChain> chain;
    if (o.kind == "fontane" || o.kind == "star") {
        ward::detail::require_pair(o.i, o.j);
        shift = o.i;
    } else if (o.kind == "chain") {
        chain = ward::io::parse_chain(o.chain.empty() ? "[]" : o.chain, flavor);
        shift = chain->max_shift();
    }

    // The first argument fixes the psi-sequence; the bound covers the largest
    // order plus the kernel shift of the product.
    std::vector<json> docs(o.inputs.size());
    std::string spec = o.psi;
    std::size_t max_order = 0;
    for (std::size_t a = 0; a < o.inputs.size(); ++a) {
        if (is_inline(o.inputs[a])) {
            max_order = std::max(max_order, static_cast<std::size_t>(std::count(o.inputs[a].begin(), o.inputs[a].end(), ',')));
            continue;
        }
        docs[a] = read_json_file(o.inputs[a]);
        if (!docs[a].is_object() || !docs[a].contains("psi") || !docs[a].contains("coeffs") ||
            !docs[a]["psi"].is_string() || !docs[a]["coeffs"].is_array() || docs[a]["coeffs"].empty()) {
            throw ward::error(ward::errc::parse_error, "'" + o.inputs[a] + "' is not a series JSON document");
        }
        if (a == 0) spec = docs[a]["psi"].get<std::string>();
        max_order = std::max(max_order, docs[a]["coeffs"].size() - 1);
    }
    const auto ctx = ward::PsiContext::from_spec(spec, max_order + shift);
    std::vector<ward::WardSeries> s;
    for (std::size_t a = 0; a < o.inputs.size(); ++a) {
        s.push_back(is_inline(o.inputs[a]) ? ward::io::series_from_inline(o.inputs[a], ctx)
                                           : ward::io::series_from_json(docs[a], ctx));
    }

    std::optional<ward::WardSeries> r;
    if (o.kind == "mul") r = ward::mul_ordinary(s[0], s[1]);
    else if (o.kind == "fontane") r = ward::fontane_mul(s[0], s[1], o.i, o.j);
    else if (o.kind == "star") r = ward::star_mul(s[0], s[1], o.i, o.j);
    else if (o.kind == "chain") r = ward::chain_mul(s[0], s[1], *chain);
    else if (o.kind == "derive") r = ward::psi_derivative(s[0], o.times);
    else if (o.kind == "div") r = ward::divide(s[0], s[1]);
    else throw ward::error(ward::errc::bad_spec, "unknown op '" + o.kind + "'");
    emit(ward::io::to_json(*r));
    return 0;
}

int cmd_pascal(const Options &o)
{
    const ward::BinomialOperatorTable table(o.n);
    if (o.format == "json") {
        emit(ward::io::pascal_json(table));
        return 0;
    }
    for (std::size_t n = 0; n <= o.n; ++n) {
        std::cout << "n=" << n << ": ";
        for (std::size_t k = 0; k <= n; ++k) std::cout << (k ? " | " : "") << table(n, k).str();
        std::cout << "\n";
    }
    return 0;
}

int cmd_check(const Options &o)
{
    ward::suites::Config cfg;
    cfg.psi_specs = o.psi_list;
    cfg.order = o.order;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.inject_fault = o.inject_fault;
    const auto reports = ward::suites::run(o.suite, cfg);
    std::size_t failed = 0;
    for (const auto &r : reports) failed += r.passed() ? 0 : 1;

    if (o.format == "json") {
        json arr = json::array();
        for (const auto &r : reports) arr.push_back(ward::io::to_json(r));
        emit(json{{"suite", o.suite},
                  {"order", o.order},
                  {"seed", o.seed},
                  {"trials", o.trials},
                  {"passed", failed == 0},
                  {"failed", failed},
                  {"reports", arr}});
    } else {
        for (const auto &r : reports) {
            std::cout << (r.passed() ? "PASS " : "FAIL ") << r.rule << " [" << r.psi << "] order=" << r.order;
            if (r.first_diff) std::cout << " first_diff=" << *r.first_diff;
            if (!r.expect_equal) std::cout << " (expected to differ)";
            std::cout << "\n";
        }
        std::cout << reports.size() - failed << "/" << reports.size() << " passed\n";
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    Options o;
    CLI::App app{"psi-calculus on truncated psi-exponential series"};
    app.require_subcommand(1);
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
    };

    auto *seq = app.add_subcommand("seq", "psi_n, psi_n!, binomial rows and the F(n,k) triangle");
    seq->add_option("--psi", o.psi, "psi-spec: natural | q | q=<rational> | fib | custom:[...]");
    seq->add_option("--n", o.n, "Largest index");
    add_format(seq);

    auto *op = app.add_subcommand("op", "Series operation; prints series JSON");
    op->add_option("kind", o.kind, "mul | fontane | star | chain | derive | div")
        ->required()
        ->check(CLI::IsMember({"mul", "fontane", "star", "chain", "derive", "div"}));
    // Two scalar positionals: CLI11 would split an inline "[a,b]" given to a vector option.
    op->add_option("f", o.f, "Series JSON file or inline [a0,a1,...]")->required();
    op->add_option("g", o.g, "Second series (binary operations)");
    op->add_option("--psi", o.psi, "psi-spec for inline series");
    op->add_option("--i", o.i, "Product index i");
    op->add_option("--j", o.j, "Product index j");
    op->add_option("--chain", o.chain, "Chain \"[(i,j),...]\"");
    op->add_flag("--star", o.star, "Use the opposite (star) family for --chain");
    op->add_option("--times", o.times, "Number of derivatives")->check(CLI::PositiveNumber);

    auto *pascal = app.add_subcommand("pascal", "Binomial operators <n k> for k <= n <= N");
    pascal->add_option("--n", o.n, "Largest row");
    add_format(pascal);

    auto *check = app.add_subcommand("check", "Run a verification suite");
    check->add_option("suite", o.suite, "rings | rules | leibniz | quotient | all")
        ->required()
        ->check(CLI::IsMember({"rings", "rules", "leibniz", "quotient", "all"}));
    check->add_option("--psi", o.psi_list, "psi-spec (repeatable); default: the standard five");
    check->add_option("--order", o.order, "Series order");
    check->add_option("--seed", o.seed, "Random seed");
    check->add_option("--trials", o.trials, "Random trials per psi")->check(CLI::PositiveNumber);
    check->add_flag("--inject-fault", o.inject_fault, "Corrupt the first report (harness test)");
    add_format(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*seq) return cmd_seq(o);
        if (*op) {
            o.inputs = {o.f};
            if (!o.g.empty()) o.inputs.push_back(o.g);
            return cmd_op(o);
        }
        if (*pascal) return cmd_pascal(o);
        return cmd_check(o);
    } catch (const ward::error &e) {
        std::cerr << "error: " << e.what() << "\n";
        const bool usage = e.code() == ward::errc::bad_spec || e.code() == ward::errc::parse_error;
        return usage ? 2 : 1;
    }
}
