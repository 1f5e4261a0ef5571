#ifndef WARD_CALCULUS_HPP
#define WARD_CALCULUS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <ward/error.hpp>
#include <ward/operator_algebra.hpp>
#include <ward/product_chain.hpp>
#include <ward/series.hpp>

namespace ward
{

// Outcome of checking one derivative rule: the directly differentiated
// product (lhs) against the rewritten form (rhs), compared up to `order`.
struct RuleReport {
    std::string rule;
    std::string psi;
    std::size_t order = 0;
    bool equal = false;
    std::optional<std::size_t> first_diff;
    std::vector<Scalar> lhs;
    std::vector<Scalar> rhs;
    // Witness checks (e.g. non-associativity) expect the sides to differ.
    bool expect_equal = true;

    bool passed() const noexcept
    {
        return equal == expect_equal;
    }
};

// Compares coefficient lists up to the smaller of the two orders.
inline RuleReport compare_series(std::string rule, const WardSeries &lhs, const WardSeries &rhs)
{
    detail::require_same_context(lhs, rhs);
    RuleReport r;
    r.rule = std::move(rule);
    r.psi = lhs.ctx().spec();
    r.order = std::min(lhs.order(), rhs.order());
    r.lhs.assign(lhs.coeffs().begin(), lhs.coeffs().begin() + static_cast<long>(r.order) + 1);
    r.rhs.assign(rhs.coeffs().begin(), rhs.coeffs().begin() + static_cast<long>(r.order) + 1);
    for (std::size_t n = 0; n <= r.order; ++n) {
        if (!(r.lhs[n] == r.rhs[n])) {
            r.first_diff = n;
            break;
        }
    }
    r.equal = !r.first_diff.has_value();
    return r;
}

// D(f *_{i,j} g) = Df *_{i+1,j+1} g + f *_{i+1,j}*_{1,0} Dg
inline RuleReport product_rule_asterisk(const WardSeries &f, const WardSeries &g, std::size_t i, std::size_t j)
{
    detail::require_pair(i, j);
    const WardSeries df = psi_derivative(f), dg = psi_derivative(g);
    const WardSeries lhs = psi_derivative(fontane_mul(f, g, i, j));
    const WardSeries rhs = fontane_mul(df, g, i + 1, j + 1) + chain_mul(f, dg, ProductChain({{i + 1, j}, {1, 0}}));
    return compare_series("product_asterisk", lhs, rhs);
}

// D(f #_{i,j} g) = Df #_{i+1,j}#_{1,0} g + f #_{i+1,j+1} Dg
inline RuleReport product_rule_star(const WardSeries &f, const WardSeries &g, std::size_t i, std::size_t j)
{
    detail::require_pair(i, j);
    const WardSeries df = psi_derivative(f), dg = psi_derivative(g);
    const WardSeries lhs = psi_derivative(star_mul(f, g, i, j));
    const WardSeries rhs =
        chain_mul(df, g, ProductChain({{i + 1, j}, {1, 0}}, Flavor::star)) + star_mul(f, dg, i + 1, j + 1);
    return compare_series("product_star", lhs, rhs);
}

// Both forms of the ordinary product rule:
//   D(fg) = f *_{1,0} Dg + Df g
//   D(fg) = Df #_{1,0} g + f Dg
inline std::vector<RuleReport> product_rule_ordinary(const WardSeries &f, const WardSeries &g)
{
    const WardSeries df = psi_derivative(f), dg = psi_derivative(g);
    const WardSeries lhs = psi_derivative(mul_ordinary(f, g));
    std::vector<RuleReport> out;
    out.push_back(compare_series("product_ordinary_asterisk", lhs, fontane_mul(f, dg, 1, 0) + mul_ordinary(df, g)));
    out.push_back(compare_series("product_ordinary_star", lhs, star_mul(df, g, 1, 0) + mul_ordinary(f, dg)));
    return out;
}

// Derivative of the action of an operator sum whose chains all share one
// family (asterisk or star; ordinary terms belong to either):
//   asterisk: D(f A g) = Df rho(A) g + f sigma(A) Dg
//   star:     D(f A g) = f rho(A) Dg + Df sigma(A) g
// where rho/sigma are the pairwise shifts, applied flavor-preserving.
inline WardSeries product_rule_rhs(const OperatorSum &a, Flavor family, const WardSeries &f, const WardSeries &g)
{
    const WardSeries df = psi_derivative(f), dg = psi_derivative(g);
    const OperatorSum diag = detail::shift_diagonal(a);
    const OperatorSum appended = detail::shift_append(a, family);
    if (family == Flavor::asterisk) return apply(diag, df, g) + apply(appended, f, dg);
    return apply(diag, f, dg) + apply(appended, df, g);
}

// Chain rule for concatenated products of one flavor; the empty chain reduces
// to the ordinary product rule (first form).
inline RuleReport product_rule_chain(const WardSeries &f, const WardSeries &g, const ProductChain &chain)
{
    const WardSeries lhs = psi_derivative(chain_mul(f, g, chain));
    const WardSeries rhs = product_rule_rhs(OperatorSum(chain), chain.flavor(), f, g);
    return compare_series(chain.flavor() == Flavor::star ? "product_chain_star" : "product_chain_asterisk", lhs, rhs);
}

// Rule for a boxplus of two products, asterisk and star versions.
inline std::vector<RuleReport> product_rule_boxplus(const WardSeries &f, const WardSeries &g, std::size_t i1,
                                                    std::size_t j1, std::size_t i2, std::size_t j2)
{
    detail::require_pair(i1, j1);
    detail::require_pair(i2, j2);
    std::vector<RuleReport> out;
    for (Flavor fl : {Flavor::asterisk, Flavor::star}) {
        const OperatorSum a = boxplus(OperatorSum::product(i1, j1, fl), OperatorSum::product(i2, j2, fl));
        const WardSeries lhs = psi_derivative(apply(a, f, g));
        out.push_back(compare_series(fl == Flavor::asterisk ? "product_boxplus_asterisk" : "product_boxplus_star", lhs,
                                     product_rule_rhs(a, fl, f, g)));
    }
    return out;
}

// sum_{k=0}^{n} <n k>(D^{n-k} f, D^k g); exact up to min(f, g order) - n.
inline WardSeries general_leibniz(const WardSeries &f, const WardSeries &g, std::size_t n)
{
    detail::require_same_context(f, g);
    const std::size_t base = std::min(f.order(), g.order());
    if (n > base) {
        throw error(errc::order_zero, std::to_string(n) + "-th derivative of order-" + std::to_string(base) + " product");
    }
    const BinomialOperatorTable table(n);
    std::optional<WardSeries> acc;
    for (std::size_t k = 0; k <= n; ++k) {
        WardSeries term = apply(table(n, k), psi_derivative(f, n - k), psi_derivative(g, k));
        acc = acc ? *acc + term : std::move(term);
    }
    return acc->truncated(base - n);
}

inline RuleReport verify_general_leibniz(const WardSeries &f, const WardSeries &g, std::size_t n)
{
    const WardSeries rhs = general_leibniz(f, g, n);
    const WardSeries lhs = psi_derivative(mul_ordinary(f, g), n);
    return compare_series("general_leibniz_n" + std::to_string(n), lhs, rhs);
}

// D(f/g) = (Df - (f/g) *_{1,0} Dg) / g
inline WardSeries quotient_derivative(const WardSeries &f, const WardSeries &g)
{
    const WardSeries h = divide(f, g);
    return divide(psi_derivative(f) - fontane_mul(h, psi_derivative(g), 1, 0), g);
}

inline RuleReport verify_quotient(const WardSeries &f, const WardSeries &g)
{
    const WardSeries lhs = psi_derivative(divide(f, g));
    return compare_series("quotient", lhs, quotient_derivative(f, g));
}

// The two q-calculus displays of the quotient rule, checked against the
// direct derivative of f/g:
//   (g(qx) Df - f(qx) Dg) / (g(x) g(qx))
//   (g(x) Df - f(x) Dg) / (g(x) g(qx))
inline std::vector<RuleReport> verify_quotient_q_forms(const WardSeries &f, const WardSeries &g)
{
    detail::require_same_context(f, g);
    const Scalar &q = f.ctx().q();
    const WardSeries df = psi_derivative(f), dg = psi_derivative(g);
    const WardSeries gq = dilate(g, q), fq = dilate(f, q);
    const WardSeries denom = mul_ordinary(g, gq);
    const WardSeries lhs = psi_derivative(divide(f, g));
    std::vector<RuleReport> out;
    out.push_back(compare_series("quotient_q_dilated", lhs, divide(gq * df - fq * dg, denom)));
    out.push_back(compare_series("quotient_q_plain", lhs, divide(g * df - f * dg, denom)));
    return out;
}

// D(1/g) = -(1/g) ((1/g) *_{1,0} Dg)
inline WardSeries reciprocal_derivative(const WardSeries &g)
{
    const WardSeries h = divide(WardSeries::constant(g.context(), g.ctx().one(), g.order()), g);
    return -mul_ordinary(h, fontane_mul(h, psi_derivative(g), 1, 0));
}

inline RuleReport verify_reciprocal(const WardSeries &g)
{
    const WardSeries one = WardSeries::constant(g.context(), g.ctx().one(), g.order());
    return compare_series("reciprocal", psi_derivative(divide(one, g)), reciprocal_derivative(g));
}

} // namespace ward

#endif
