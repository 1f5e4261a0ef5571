#include <random>

#include <gtest/gtest.h>

#include <ward/series.hpp>

#include "oracle.hpp"

using namespace ward;
using oracle::Seq;

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

struct Rat {
    PsiContextPtr ctx;
    Seq psi;
};

std::vector<Rat> rational_contexts(std::size_t bound)
{
    return {
        {PsiContext::natural(bound), oracle::natural_psi(bound)},
        {PsiContext::fibonacci(bound), oracle::fib_psi(bound)},
        {PsiContext::q_value(Rational(3, 2), bound), oracle::q_psi(Rational(3, 2), bound)},
        {PsiContext::q_value(Rational(2), bound), oracle::q_psi(Rational(2), bound)},
        {PsiContext::from_spec("custom:[0,1,2,1,3,1,4,1,5,1,6,1,7,1,8]", 0),
         {0, 1, 2, 1, 3, 1, 4, 1, 5, 1, 6, 1, 7, 1, 8}},
        {PsiContext::from_spec("custom:[0,1,-1/2,3,7/3,-2,5,1,4,9,-1,2,3,1,6]", 0),
         {0, 1, Rational(-1, 2), 3, Rational(7, 3), -2, 5, 1, 4, 9, -1, 2, 3, 1, 6}},
    };
}

WardSeries series_of(const PsiContextPtr &ctx, const Seq &a)
{
    return WardSeries::from_rationals(ctx, a);
}

} // namespace

TEST(Series, Construction)
{
    const auto c = PsiContext::natural(5);
    expect_code(errc::bound_exceeded, [&] { WardSeries::zero(c, 6); });
    expect_code(errc::bound_exceeded, [&] { WardSeries(c, {}); });
    const auto x3 = WardSeries::monomial(c, 3, 5);
    EXPECT_EQ(x3[3], Scalar(Rational(6)));
    EXPECT_TRUE(WardSeries::monomial(c, 6, 5)[5].is_zero());
    EXPECT_EQ(x3.truncated(2).order(), 2u);
    expect_code(errc::bound_exceeded, [&] { x3.truncated(6); });
    const auto qs = PsiContext::q_symbolic(4);
    EXPECT_TRUE(WardSeries::from_rationals(qs, Seq{1, 2}).coeffs()[1].is_ratfunc());
}

TEST(Series, OrdinaryProductMatchesPowerSeries)
{
    std::mt19937_64 rng(3);
    for (const auto &[ctx, psi] : rational_contexts(14)) {
        for (int t = 0; t < 20; ++t) {
            const Seq a = oracle::random_ints(rng, 3 + t % 8), b = oracle::random_ints(rng, 5 + t % 6);
            const Seq want = oracle::from_ordinary(
                oracle::ord_mul(oracle::to_ordinary(a, psi), oracle::to_ordinary(b, psi)), psi);
            EXPECT_EQ(oracle::rationals(series_of(ctx, a) * series_of(ctx, b)), want) << ctx->spec();
        }
    }
}

TEST(Series, ChainProductMatchesKernelSum)
{
    std::mt19937_64 rng(4);
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>> chains{
        {{1, 0}}, {{2, 1}}, {{3, 0}}, {{1, 0}, {2, 0}}, {{3, 2}, {2, 1}, {1, 0}}, {{4, 1}, {4, 1}}};
    for (const auto &[ctx, psi] : rational_contexts(14)) {
        for (const auto &pairs : chains) {
            for (bool star : {false, true}) {
                const Seq a = oracle::random_ints(rng, 8), b = oracle::random_ints(rng, 8);
                std::vector<IndexPair> ip;
                for (auto [i, j] : pairs) ip.push_back({i, j});
                const ProductChain ch(ip, star ? Flavor::star : Flavor::asterisk);
                EXPECT_EQ(oracle::rationals(chain_mul(series_of(ctx, a), series_of(ctx, b), ch)),
                          oracle::kernel_product(a, b, psi, pairs, star))
                    << ctx->spec() << " " << ch.str();
            }
        }
    }
}

// With psi = [n]_q every *_{i,j} is f(x), g(x) -> q^j f(qx) g(x).
TEST(Series, QValueFontaneIsDilation)
{
    std::mt19937_64 rng(5);
    for (const Rational &q : {Rational(2), Rational(3, 2), Rational(-1, 3)}) {
        const auto ctx = PsiContext::q_value(q, 14);
        const Seq psi = oracle::q_psi(q, 14);
        for (std::size_t i = 1; i <= 4; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                const Seq a = oracle::random_ints(rng, 9), b = oracle::random_ints(rng, 9);
                const Seq fa = oracle::to_ordinary(a, psi), gb = oracle::to_ordinary(b, psi);
                const Rational qj = pow(q, static_cast<long>(j));
                const Seq want = oracle::from_ordinary(
                    oracle::ord_scale(oracle::ord_mul(oracle::ord_dilate(fa, q), gb), qj), psi);
                const Seq want_star = oracle::from_ordinary(
                    oracle::ord_scale(oracle::ord_mul(fa, oracle::ord_dilate(gb, q)), qj), psi);
                EXPECT_EQ(oracle::rationals(fontane_mul(series_of(ctx, a), series_of(ctx, b), i, j)), want);
                EXPECT_EQ(oracle::rationals(star_mul(series_of(ctx, a), series_of(ctx, b), i, j)), want_star);
            }
        }
    }
}

TEST(Series, DerivativeMatchesPowerSeries)
{
    std::mt19937_64 rng(6);
    for (const auto &[ctx, psi] : rational_contexts(14)) {
        const Seq a = oracle::random_ints(rng, 10);
        const Seq want = oracle::from_ordinary(oracle::ord_derivative(oracle::to_ordinary(a, psi), psi), psi);
        EXPECT_EQ(oracle::rationals(psi_derivative(series_of(ctx, a))), want);
    }
    // D_F x^4 = F_4 x^3 = 3 x^3
    const auto fib = PsiContext::fibonacci(6);
    const auto d = psi_derivative(WardSeries::monomial(fib, 4, 4));
    EXPECT_EQ(d, scalar_mul(Scalar(Rational(3)), WardSeries::monomial(fib, 3, 3)));
    expect_code(errc::order_zero, [&] { psi_derivative(WardSeries::zero(fib, 0)); });
    expect_code(errc::order_zero, [&] { psi_derivative(WardSeries::zero(fib, 2), 3); });
}

TEST(Series, ExponentialFamily)
{
    for (const char *spec : {"natural", "q", "q=3/2", "fib"}) {
        const auto c = PsiContext::from_spec(spec, 10);
        const auto e = WardSeries::e_psi(c, 10);
        const auto s = WardSeries::sin_psi(c, 10), co = WardSeries::cos_psi(c, 10);
        EXPECT_EQ(psi_derivative(e), e.truncated(9));
        EXPECT_EQ(psi_derivative(s), co.truncated(9));
        EXPECT_EQ(psi_derivative(co), (-s).truncated(9));
    }
}

TEST(Series, Division)
{
    std::mt19937_64 rng(7);
    for (const auto &[ctx, psi] : rational_contexts(14)) {
        for (int t = 0; t < 10; ++t) {
            Seq b = oracle::random_ints(rng, 9);
            if (b[0].is_zero()) b[0] = Rational(3);
            const auto f = series_of(ctx, oracle::random_ints(rng, 9)), g = series_of(ctx, b);
            EXPECT_EQ(divide(f, g) * g, f);
        }
        expect_code(errc::non_invertible, [&] { divide(series_of(ctx, Seq{1, 2}), series_of(ctx, Seq{0, 1})); });
    }
}

TEST(Series, UnitsAndDiagonals)
{
    const auto fib = PsiContext::fibonacci(16);
    std::mt19937_64 rng(8);
    for (std::size_t i = 1; i <= 4; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const auto f = series_of(fib, oracle::random_ints(rng, 10));
            // F_1 = F_2, so F(2,1) = 0 and (2,1) has no unit.
            if (i == 2 && j == 1) {
                EXPECT_TRUE(fib->kernel(i, j).is_zero());
                continue;
            }
            const Scalar e = fib->kernel(i, j).inverse();
            const auto unit = WardSeries::constant(fib, e, 10);
            EXPECT_EQ(fontane_mul(unit, f, i, j), scalar_mul(e, diag_l(f, i, j)));
            EXPECT_EQ(fontane_mul(f, unit, i, j), scalar_mul(e, diag_m(f, i, j)));
        }
    }
    const auto f = series_of(fib, Seq{1, 1, 1});
    EXPECT_EQ(diag_l(f, 3, 0), f);
}

// Opposite family: the same maps with the arguments swapped.
TEST(Series, StarUnits)
{
    for (const char *spec : {"fib", "q", "q=3/2"}) {
        const auto ctx = PsiContext::from_spec(spec, 16);
        std::mt19937_64 rng(10);
        for (std::size_t i = 1; i <= 4; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (ctx->kernel(i, j).is_zero()) continue;
                const auto f = series_of(ctx, oracle::random_ints(rng, 10));
                const Scalar e = ctx->kernel(i, j).inverse();
                const auto unit = WardSeries::constant(ctx, e, 10);
                EXPECT_EQ(star_mul(f, unit, i, j), scalar_mul(e, diag_l(f, i, j)));
                EXPECT_EQ(star_mul(unit, f, i, j), scalar_mul(e, diag_m(f, i, j)));
            }
        }
    }
}

TEST(Series, Errors)
{
    const auto a = PsiContext::natural(6), b = PsiContext::natural(6);
    const auto f = WardSeries::e_psi(a, 3), g = WardSeries::e_psi(b, 3);
    expect_code(errc::context_mismatch, [&] { (void)(f + g); });
    expect_code(errc::context_mismatch, [&] { (void)(f * g); });
    expect_code(errc::bad_indices, [&] { fontane_mul(f, f, 1, 1); });
    expect_code(errc::bad_indices, [&] { star_mul(f, f, 0, 0); });
    expect_code(errc::bound_exceeded, [&] { fontane_mul(f, f, 4, 0); });
    EXPECT_NO_THROW(fontane_mul(f, f, 3, 0));
    expect_code(errc::bad_indices, [] { ProductChain({{2, 2}}); });
}

TEST(Series, Specialize)
{
    const auto qs = PsiContext::q_symbolic(10), qv = PsiContext::q_value(Rational(3, 2), 10);
    std::mt19937_64 rng(9);
    const Seq a = oracle::random_ints(rng, 7), b = oracle::random_ints(rng, 7);
    const auto sym = fontane_mul(series_of(qs, a), series_of(qs, b), 3, 1);
    EXPECT_EQ(specialize(sym, qv), fontane_mul(series_of(qv, a), series_of(qv, b), 3, 1));
    expect_code(errc::context_mismatch, [&] { specialize(sym, qs); });
}
