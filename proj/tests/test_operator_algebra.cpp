#include <gtest/gtest.h>

#include <ward/operator_algebra.hpp>

#include "oracle.hpp"

using namespace ward;

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

OperatorSum S(std::size_t i, std::size_t j, Flavor f = Flavor::asterisk)
{
    return OperatorSum::product(i, j, f);
}

OperatorSum C(std::initializer_list<IndexPair> p)
{
    return OperatorSum(ProductChain(p));
}

Rational coefficient_sum(const OperatorSum &a)
{
    Rational s(0);
    for (const auto &t : a.terms()) s += t.coefficient().as_rational();
    return s;
}

} // namespace

TEST(OperatorSum, Rendering)
{
    EXPECT_EQ(OperatorSum::ordinary().str(), "*inf");
    EXPECT_EQ(OperatorSum::zero().str(), "*0");
    EXPECT_EQ(S(2, 1, Flavor::star).str(), "#(2,1)");
    EXPECT_EQ(C({{2, 0}, {1, 0}}).str(), "*(1,0)*(2,0)");
    EXPECT_EQ((S(1, 0) + S(1, 0)).str(), "2·*(1,0)");
    EXPECT_EQ((S(2, 1) + S(1, 0)).str(), "*(1,0) [+] *(2,1)");
}

TEST(OperatorSum, Canonicalization)
{
    const auto a = S(1, 0), b = S(3, 2), c = C({{2, 1}, {1, 0}});
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a + OperatorSum::zero(), a);
    EXPECT_EQ(C({{1, 0}, {2, 1}}), C({{2, 1}, {1, 0}}));
    EXPECT_EQ(scale(Scalar(Rational(3)), a + b) - a - a - a, scale(Scalar(Rational(3)), b));
    EXPECT_NE(S(1, 0), S(1, 0, Flavor::star));
}

TEST(OperatorSum, Concatenation)
{
    const auto ord = OperatorSum::ordinary();
    EXPECT_EQ(ord * S(2, 1), S(2, 1));
    EXPECT_EQ(S(2, 1, Flavor::star) * ord, S(2, 1, Flavor::star));
    EXPECT_EQ((S(1, 0) + S(2, 1)) * S(3, 0), C({{1, 0}, {3, 0}}) + C({{2, 1}, {3, 0}}));
    expect_code(errc::flavor_mismatch, [] { (void)(S(1, 0) * S(1, 0, Flavor::star)); });
    EXPECT_TRUE((OperatorSum::zero() * S(1, 0)).is_zero());
}

TEST(OperatorSum, RhoSigma)
{
    EXPECT_EQ(rho(OperatorSum::ordinary()), OperatorSum::ordinary());
    EXPECT_EQ(sigma(OperatorSum::ordinary()), S(1, 0));
    EXPECT_EQ(rho(C({{1, 0}, {3, 1}})), C({{2, 1}, {4, 2}}));
    EXPECT_EQ(sigma(C({{1, 0}, {3, 1}})), C({{1, 0}, {2, 0}, {4, 1}}));
    expect_code(errc::flavor_mismatch, [] { rho(S(1, 0, Flavor::star)); });
    expect_code(errc::flavor_mismatch, [] { sigma(S(1, 0, Flavor::star)); });
}

TEST(BinomialOperator, TableRows)
{
    const BinomialOperatorTable t(3);
    EXPECT_EQ(t(0, 0), OperatorSum::ordinary());
    EXPECT_EQ(t(1, 1), S(1, 0));
    EXPECT_EQ(t(2, 1), S(1, 0) + S(2, 1));
    EXPECT_EQ(t(2, 2), C({{1, 0}, {2, 0}}));
    // Row 3, k = 1 is the recurrence value, three single products.
    EXPECT_EQ(t(3, 1), S(1, 0) + S(2, 1) + S(3, 2));
    EXPECT_EQ(t(3, 2), C({{1, 0}, {2, 0}}) + C({{1, 0}, {3, 1}}) + C({{2, 1}, {3, 1}}));
    EXPECT_EQ(t(3, 3), C({{1, 0}, {2, 0}, {3, 0}}));
    EXPECT_EQ(t(2, 1).str() + "", "*(1,0) [+] *(2,1)");
    expect_code(errc::k_out_of_range, [&] { t(2, 3); });
    expect_code(errc::index_out_of_bound, [&] { t(4, 1); });
    expect_code(errc::k_out_of_range, [] { binomial_operator(3, 4); });
}

TEST(BinomialOperator, ClosedForms)
{
    const BinomialOperatorTable t(8);
    for (std::size_t n = 1; n <= 8; ++n) {
        OperatorSum k1;
        for (std::size_t i = 0; i < n; ++i) k1 = k1 + S(i + 1, i);
        EXPECT_EQ(t(n, 1), k1) << n;
        EXPECT_EQ(t(n, 1).terms().size(), n);
        if (n < 2) continue;
        OperatorSum k2;
        for (std::size_t i = 0; i + 2 <= n; ++i) {
            for (std::size_t j = 0; i + j + 2 <= n; ++j) k2 = k2 + C({{i + j + 2, i + j}, {i + 1, i}});
        }
        EXPECT_EQ(t(n, 2), k2) << n;
    }
}

TEST(BinomialOperator, StructuralInvariants)
{
    const BinomialOperatorTable t(9);
    for (std::size_t n = 0; n <= 9; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            // Every chain has length k; under psi = n all kernels are 1, so the
            // coefficients add up to the ordinary binomial coefficient.
            for (const auto &term : t(n, k).terms()) EXPECT_EQ(term.pairs().size(), k);
            EXPECT_EQ(coefficient_sum(t(n, k)), Rational(oracle::choose(static_cast<long>(n), static_cast<long>(k))));
            EXPECT_LE(t(n, k).max_shift(), n);
        }
    }
}

TEST(BinomialOperator, UnrolledRecurrence)
{
    const BinomialOperatorTable t(7);
    for (std::size_t n = 1; n <= 7; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            OperatorSum s;
            for (std::size_t i = 1; i <= k; ++i) {
                OperatorSum term = k - i + 1 <= n - i ? rho(t(n - i, k - i + 1)) : OperatorSum::zero();
                for (std::size_t r = 1; r < i; ++r) term = sigma(term);
                s = s + term;
            }
            OperatorSum tail = t(n - 1, 0);
            for (std::size_t r = 0; r < k; ++r) tail = sigma(tail);
            EXPECT_EQ(t(n, k), s + tail) << n << "," << k;
        }
    }
}

TEST(Apply, QBinomialOperator)
{
    const auto qs = PsiContext::q_symbolic(16);
    const BinomialOperatorTable t(5);
    const auto gauss = oracle::gaussian_table(5);
    for (std::size_t n = 0; n <= 5; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t a = 0; a <= 5; ++a) {
                for (std::size_t b = 0; a + b <= 5; ++b) {
                    const auto got = apply(t(n, k), WardSeries::monomial(qs, a, 6), WardSeries::monomial(qs, b, 6));
                    const Scalar c(RatFunc(gauss[n][k] * Poly::monomial(Rational(1), k * a)));
                    EXPECT_EQ(got, scalar_mul(c, WardSeries::monomial(qs, a + b, 6)));
                }
            }
        }
    }
}

TEST(Apply, ExtensionalEquality)
{
    const auto qs = PsiContext::q_symbolic(12);
    const auto fib = PsiContext::fibonacci(12);
    // q-collapse: all *_{i,j} with the same j act identically.
    EXPECT_TRUE(extensional_eq(S(1, 0), S(3, 0), qs, 6));
    EXPECT_TRUE(extensional_eq(S(2, 1), S(4, 1), qs, 6));
    EXPECT_FALSE(extensional_eq(S(2, 1), S(2, 0), qs, 6));
    EXPECT_FALSE(extensional_eq(S(1, 0), S(3, 0), fib, 6));
    // Natural: every product is the ordinary one.
    const auto nat = PsiContext::natural(12);
    EXPECT_TRUE(extensional_eq(C({{3, 1}, {2, 0}}), OperatorSum::ordinary(), nat, 6));
    expect_code(errc::bound_exceeded, [&] { extensional_eq(S(7, 0), S(1, 0), qs, 6); });
    EXPECT_TRUE(apply(OperatorSum::zero(), WardSeries::e_psi(qs, 4), WardSeries::e_psi(qs, 4)) ==
                WardSeries::zero(qs, 4));
}

TEST(Apply, LinearInTheOperator)
{
    const auto fib = PsiContext::fibonacci(12);
    const auto f = WardSeries::from_rationals(fib, oracle::Seq{1, -2, 3, 0, 1, 2});
    const auto g = WardSeries::from_rationals(fib, oracle::Seq{2, 1, 0, -1, 4, 1});
    const auto a = S(2, 1) + C({{1, 0}, {3, 2}}), b = S(4, 0, Flavor::asterisk);
    const Scalar three(Rational(3));
    EXPECT_EQ(apply(a + scale(three, b), f, g), apply(a, f, g) + scalar_mul(three, apply(b, f, g)));
}

// The action depends only on the multiset of pairs, so sorting pairs inside a
// chain during canonicalization is sound.
TEST(Apply, PairOrderDoesNotChangeTheAction)
{
    for (const char *spec : {"fib", "q", "custom:[0,1,2,1,3,1,4,1,5,1,6,1,7,1,8]"}) {
        const auto ctx = PsiContext::from_spec(spec, 14);
        const auto f = WardSeries::from_rationals(ctx, oracle::Seq{1, -2, 3, 0, 1, 2, -1});
        const auto g = WardSeries::from_rationals(ctx, oracle::Seq{2, 1, 0, -1, 4, 1, 3});
        for (Flavor fl : {Flavor::asterisk, Flavor::star}) {
            const auto a = chain_mul(f, g, ProductChain({{1, 0}, {3, 1}, {2, 0}}, fl));
            EXPECT_EQ(a, chain_mul(f, g, ProductChain({{3, 1}, {2, 0}, {1, 0}}, fl)));
            EXPECT_EQ(a, chain_mul(f, g, ProductChain({{2, 0}, {1, 0}, {3, 1}}, fl)));
        }
    }
    EXPECT_EQ(sigma(sigma(OperatorSum::ordinary())), C({{2, 0}, {1, 0}}));
}
