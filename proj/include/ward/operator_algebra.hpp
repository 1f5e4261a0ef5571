#ifndef WARD_OPERATOR_ALGEBRA_HPP
#define WARD_OPERATOR_ALGEBRA_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <ward/error.hpp>
#include <ward/product_chain.hpp>
#include <ward/psi_context.hpp>
#include <ward/scalar.hpp>
#include <ward/series.hpp>

namespace ward
{

// Formal sum (boxplus) of product chains: an element of the algebra of
// Fontane products. Kept canonical: pairs sorted inside each chain, terms
// sorted by (flavor, pairs), equal chains merged, zero terms dropped. Two
// sums are syntactically equal iff their canonical forms compare equal.
class OperatorSum
{
public:
    // The empty sum, i.e. the zero operator.
    OperatorSum() = default;

    OperatorSum(ProductChain chain) : terms_{std::move(chain)}
    {
        canonicalize();
    }

    explicit OperatorSum(std::vector<ProductChain> terms) : terms_(std::move(terms))
    {
        canonicalize();
    }

    static OperatorSum zero()
    {
        return OperatorSum();
    }

    // The ordinary product, unit of concatenation.
    static OperatorSum ordinary()
    {
        return OperatorSum(ProductChain::ordinary());
    }

    static OperatorSum product(std::size_t i, std::size_t j, Flavor flavor = Flavor::asterisk)
    {
        return OperatorSum(ProductChain({IndexPair{i, j}}, flavor));
    }

    std::span<const ProductChain> terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    std::size_t max_shift() const noexcept
    {
        std::size_t m = 0;
        for (const auto &t : terms_) m = std::max(m, t.max_shift());
        return m;
    }

    // Terms joined by " [+] "; the zero operator renders as "*0".
    std::string str() const
    {
        if (terms_.empty()) return "*0";
        std::string out;
        for (std::size_t t = 0; t < terms_.size(); ++t) {
            if (t) out += " [+] ";
            out += terms_[t].str();
        }
        return out;
    }

    friend bool operator==(const OperatorSum &a, const OperatorSum &b)
    {
        return a.terms_ == b.terms_;
    }

private:
    void canonicalize()
    {
        for (auto &t : terms_) t = t.sorted();
        auto key_less = [](const ProductChain &a, const ProductChain &b) {
            if (a.flavor() != b.flavor()) return a.flavor() < b.flavor();
            return std::lexicographical_compare(a.pairs().begin(), a.pairs().end(), b.pairs().begin(),
                                                b.pairs().end());
        };
        auto same_key = [](const ProductChain &a, const ProductChain &b) {
            return a.flavor() == b.flavor() && std::equal(a.pairs().begin(), a.pairs().end(), b.pairs().begin(),
                                                          b.pairs().end());
        };
        std::stable_sort(terms_.begin(), terms_.end(), key_less);
        std::vector<ProductChain> merged;
        merged.reserve(terms_.size());
        for (auto &t : terms_) {
            if (!merged.empty() && same_key(merged.back(), t)) {
                merged.back() = merged.back().with_coefficient(merged.back().coefficient() + t.coefficient());
            } else {
                merged.push_back(std::move(t));
            }
        }
        std::erase_if(merged, [](const ProductChain &t) { return t.coefficient().is_zero(); });
        terms_ = std::move(merged);
    }

    std::vector<ProductChain> terms_;
};

inline OperatorSum boxplus(const OperatorSum &a, const OperatorSum &b)
{
    std::vector<ProductChain> terms(a.terms().begin(), a.terms().end());
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return OperatorSum(std::move(terms));
}

inline OperatorSum scale(const Scalar &alpha, const OperatorSum &a)
{
    std::vector<ProductChain> terms;
    terms.reserve(a.terms().size());
    for (const auto &t : a.terms()) terms.push_back(t.with_coefficient(alpha * t.coefficient()));
    return OperatorSum(std::move(terms));
}

inline OperatorSum boxminus(const OperatorSum &a, const OperatorSum &b)
{
    std::vector<ProductChain> terms(a.terms().begin(), a.terms().end());
    for (const auto &t : b.terms()) terms.push_back(t.with_coefficient(-t.coefficient()));
    return OperatorSum(std::move(terms));
}

inline OperatorSum operator+(const OperatorSum &a, const OperatorSum &b)
{
    return boxplus(a, b);
}
inline OperatorSum operator-(const OperatorSum &a, const OperatorSum &b)
{
    return boxminus(a, b);
}

// Concatenation, distributed over the terms of both sums. Chains of
// different flavors cannot be concatenated; the ordinary product fits either.
inline OperatorSum concat(const OperatorSum &a, const OperatorSum &b)
{
    std::vector<ProductChain> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const auto &x : a.terms()) {
        for (const auto &y : b.terms()) {
            if (!x.is_ordinary() && !y.is_ordinary() && x.flavor() != y.flavor()) {
                throw error(errc::flavor_mismatch, "cannot concatenate " + x.str() + " with " + y.str());
            }
            std::vector<IndexPair> pairs(x.pairs().begin(), x.pairs().end());
            pairs.insert(pairs.end(), y.pairs().begin(), y.pairs().end());
            const Flavor fl = x.is_ordinary() ? y.flavor() : x.flavor();
            terms.emplace_back(std::move(pairs), fl, x.coefficient() * y.coefficient());
        }
    }
    return OperatorSum(std::move(terms));
}

inline OperatorSum operator*(const OperatorSum &a, const OperatorSum &b)
{
    return concat(a, b);
}

namespace detail
{

// (i,j) -> (i+1,j+1) on every pair, any flavor.
inline OperatorSum shift_diagonal(const OperatorSum &a)
{
    std::vector<ProductChain> terms;
    terms.reserve(a.terms().size());
    for (const auto &t : a.terms()) {
        std::vector<IndexPair> pairs;
        for (const auto &p : t.pairs()) pairs.push_back({p.i + 1, p.j + 1});
        terms.emplace_back(std::move(pairs), t.flavor(), t.coefficient());
    }
    return OperatorSum(std::move(terms));
}

// (i,j) -> (i+1,j) on every pair, then append (1,0); any flavor. The
// ordinary product becomes the single product (1,0) of the given flavor.
inline OperatorSum shift_append(const OperatorSum &a, Flavor ordinary_flavor = Flavor::asterisk)
{
    std::vector<ProductChain> terms;
    terms.reserve(a.terms().size());
    for (const auto &t : a.terms()) {
        std::vector<IndexPair> pairs;
        for (const auto &p : t.pairs()) pairs.push_back({p.i + 1, p.j});
        pairs.push_back({1, 0});
        terms.emplace_back(std::move(pairs), t.is_ordinary() ? ordinary_flavor : t.flavor(), t.coefficient());
    }
    return OperatorSum(std::move(terms));
}

inline void require_asterisk(const OperatorSum &a, const char *op)
{
    for (const auto &t : a.terms()) {
        if (t.flavor() == Flavor::star) {
            throw error(errc::flavor_mismatch, std::string(op) + " is only defined on asterisk chains, got " + t.str());
        }
    }
}

} // namespace detail

// rho: (i,j) -> (i+1,j+1) pairwise; fixes the ordinary product.
inline OperatorSum rho(const OperatorSum &a)
{
    detail::require_asterisk(a, "rho");
    return detail::shift_diagonal(a);
}

// sigma: (i,j) -> (i+1,j) pairwise, then concatenate *(1,0).
inline OperatorSum sigma(const OperatorSum &a)
{
    detail::require_asterisk(a, "sigma");
    return detail::shift_append(a);
}

// Rows 0..n_max of the binomial operators <n k>:
//   <n 0> = ordinary product, <n n> = *(1,0)*(2,0)...*(n,0),
//   <n k> = rho<n-1 k> [+] sigma<n-1 k-1> for 1 <= k <= n-1.
// Built row by row, so each entry is computed once.
class BinomialOperatorTable
{
public:
    explicit BinomialOperatorTable(std::size_t n_max)
    {
        rows_.reserve(n_max + 1);
        for (std::size_t n = 0; n <= n_max; ++n) {
            std::vector<OperatorSum> row;
            row.reserve(n + 1);
            row.push_back(OperatorSum::ordinary());
            for (std::size_t k = 1; k < n; ++k) {
                row.push_back(boxplus(rho(rows_[n - 1][k]), sigma(rows_[n - 1][k - 1])));
            }
            if (n >= 1) {
                std::vector<IndexPair> diag;
                for (std::size_t i = 1; i <= n; ++i) diag.push_back({i, 0});
                row.emplace_back(ProductChain(std::move(diag)));
            }
            rows_.push_back(std::move(row));
        }
    }

    std::size_t n_max() const noexcept
    {
        return rows_.size() - 1;
    }

    const OperatorSum &operator()(std::size_t n, std::size_t k) const
    {
        if (n > n_max()) {
            throw error(errc::index_out_of_bound, "binomial operator row " + std::to_string(n) + " not in table");
        }
        if (k > n) {
            throw error(errc::k_out_of_range,
                        "binomial operator <" + std::to_string(n) + " " + std::to_string(k) + "> needs k <= n");
        }
        return rows_[n][k];
    }

private:
    std::vector<std::vector<OperatorSum>> rows_;
};

inline OperatorSum binomial_operator(std::size_t n, std::size_t k)
{
    if (k > n) {
        throw error(errc::k_out_of_range,
                    "binomial operator <" + std::to_string(n) + " " + std::to_string(k) + "> needs k <= n");
    }
    return BinomialOperatorTable(n)(n, k);
}

// Action of a formal sum on a pair of series: sum of coefficient * chain
// products. The zero operator yields the zero series.
inline WardSeries apply(const OperatorSum &a, const WardSeries &f, const WardSeries &g)
{
    detail::require_same_context(f, g);
    const std::size_t order = std::min(f.order(), g.order());
    detail::require_headroom(f.ctx(), order, a.max_shift());
    WardSeries acc = WardSeries::zero(f.context(), order);
    for (const auto &t : a.terms()) acc = acc + chain_mul(f, g, t);
    return acc;
}

// Action-equality up to `order`: apply(A, x^a, x^b) == apply(B, x^a, x^b) for
// all a + b <= order. By bilinearity the monomial pairs span every pair of
// series truncated at that order.
inline bool extensional_eq(const OperatorSum &a, const OperatorSum &b, const PsiContextPtr &ctx, std::size_t order)
{
    detail::require_headroom(*ctx, order, std::max(a.max_shift(), b.max_shift()));
    std::vector<WardSeries> mono;
    mono.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) mono.push_back(WardSeries::monomial(ctx, n, order));
    for (std::size_t x = 0; x <= order; ++x) {
        for (std::size_t y = 0; x + y <= order; ++y) {
            if (!(apply(a, mono[x], mono[y]) == apply(b, mono[x], mono[y]))) return false;
        }
    }
    return true;
}

} // namespace ward

#endif
