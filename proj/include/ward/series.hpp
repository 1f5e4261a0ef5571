#ifndef WARD_SERIES_HPP
#define WARD_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <ward/error.hpp>
#include <ward/product_chain.hpp>
#include <ward/psi_context.hpp>
#include <ward/rational.hpp>
#include <ward/scalar.hpp>

namespace ward
{

// Truncated psi-exponential generating function sum_{n<=N} a_n x^n / psi_n!.
// Only a_0..a_N are stored; every operation returns the largest order at
// which its result is exact.
class WardSeries
{
public:
    WardSeries(PsiContextPtr ctx, std::vector<Scalar> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs))
    {
        if (!ctx_) throw error(errc::context_mismatch, "series without a psi context");
        if (c_.empty()) throw error(errc::bound_exceeded, "series needs at least one coefficient");
        if (c_.size() - 1 > ctx_->bound()) {
            throw error(errc::bound_exceeded, "series order " + std::to_string(c_.size() - 1) +
                                                  " exceeds context bound " + std::to_string(ctx_->bound()));
        }
        for (auto &c : c_) c = ctx_->coerce(c);
    }

    static WardSeries from_rationals(PsiContextPtr ctx, std::span<const Rational> coeffs)
    {
        std::vector<Scalar> v;
        v.reserve(coeffs.size());
        for (const auto &r : coeffs) v.push_back(ctx->lift(r));
        return WardSeries(std::move(ctx), std::move(v));
    }

    static WardSeries zero(PsiContextPtr ctx, std::size_t order)
    {
        std::vector<Scalar> v(order + 1, ctx->zero());
        return WardSeries(std::move(ctx), std::move(v));
    }

    static WardSeries constant(PsiContextPtr ctx, const Scalar &c, std::size_t order)
    {
        std::vector<Scalar> v(order + 1, ctx->zero());
        v[0] = ctx->coerce(c);
        return WardSeries(std::move(ctx), std::move(v));
    }

    // x^n, stored as a_n = psi_n!; zero when n exceeds the order.
    static WardSeries monomial(PsiContextPtr ctx, std::size_t n, std::size_t order)
    {
        std::vector<Scalar> v(order + 1, ctx->zero());
        if (n <= order) v[n] = ctx->factorial(n);
        return WardSeries(std::move(ctx), std::move(v));
    }

    // e_psi^x: a_n = 1.
    static WardSeries e_psi(PsiContextPtr ctx, std::size_t order)
    {
        std::vector<Scalar> v(order + 1, ctx->one());
        return WardSeries(std::move(ctx), std::move(v));
    }

    // sin_psi x: a_{2k+1} = (-1)^k, even coefficients zero.
    static WardSeries sin_psi(PsiContextPtr ctx, std::size_t order)
    {
        std::vector<Scalar> v(order + 1, ctx->zero());
        for (std::size_t n = 1; n <= order; n += 2) v[n] = (n / 2) % 2 == 0 ? ctx->one() : -ctx->one();
        return WardSeries(std::move(ctx), std::move(v));
    }

    // cos_psi x: a_{2k} = (-1)^k, odd coefficients zero.
    static WardSeries cos_psi(PsiContextPtr ctx, std::size_t order)
    {
        std::vector<Scalar> v(order + 1, ctx->zero());
        for (std::size_t n = 0; n <= order; n += 2) v[n] = (n / 2) % 2 == 0 ? ctx->one() : -ctx->one();
        return WardSeries(std::move(ctx), std::move(v));
    }

    const PsiContextPtr &context() const noexcept
    {
        return ctx_;
    }
    const PsiContext &ctx() const noexcept
    {
        return *ctx_;
    }
    std::size_t order() const noexcept
    {
        return c_.size() - 1;
    }
    std::span<const Scalar> coeffs() const noexcept
    {
        return c_;
    }
    const Scalar &operator[](std::size_t n) const
    {
        return c_.at(n);
    }

    WardSeries truncated(std::size_t order) const
    {
        if (order > this->order()) {
            throw error(errc::bound_exceeded, "cannot truncate order " + std::to_string(this->order()) + " series to " +
                                                  std::to_string(order));
        }
        return WardSeries(ctx_, std::vector<Scalar>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
    }

    // Same context object and identical coefficient lists.
    friend bool operator==(const WardSeries &a, const WardSeries &b)
    {
        return a.ctx_ == b.ctx_ && a.c_ == b.c_;
    }

private:
    PsiContextPtr ctx_;
    std::vector<Scalar> c_;
};

namespace detail
{

inline void require_same_context(const WardSeries &f, const WardSeries &g)
{
    if (f.context() != g.context()) {
        throw error(errc::context_mismatch,
                    "series over different psi contexts ('" + f.ctx().spec() + "' vs '" + g.ctx().spec() + "')");
    }
}

inline void require_headroom(const PsiContext &ctx, std::size_t order, std::size_t shift)
{
    if (order + shift > ctx.bound()) {
        throw error(errc::bound_exceeded, "order " + std::to_string(order) + " with kernel shift " +
                                              std::to_string(shift) + " exceeds bound " + std::to_string(ctx.bound()));
    }
}

inline void require_pair(std::size_t i, std::size_t j)
{
    if (j >= i) {
        throw error(errc::bad_indices, "product index (" + std::to_string(i) + "," + std::to_string(j) + ") needs j < i");
    }
}

} // namespace detail

inline WardSeries operator+(const WardSeries &f, const WardSeries &g)
{
    detail::require_same_context(f, g);
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<Scalar> v;
    v.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) v.push_back(f[k] + g[k]);
    return WardSeries(f.context(), std::move(v));
}

inline WardSeries operator-(const WardSeries &f)
{
    std::vector<Scalar> v;
    v.reserve(f.order() + 1);
    for (const auto &c : f.coeffs()) v.push_back(-c);
    return WardSeries(f.context(), std::move(v));
}

inline WardSeries operator-(const WardSeries &f, const WardSeries &g)
{
    return f + (-g);
}

inline WardSeries scalar_mul(const Scalar &alpha, const WardSeries &f)
{
    const Scalar a = f.ctx().coerce(alpha);
    std::vector<Scalar> v;
    v.reserve(f.order() + 1);
    for (const auto &c : f.coeffs()) v.push_back(a * c);
    return WardSeries(f.context(), std::move(v));
}

inline WardSeries operator*(const Scalar &alpha, const WardSeries &f)
{
    return scalar_mul(alpha, f);
}

// c_n = coefficient * sum_k [prod_h K_h(n,k)] binom(n,k) a_k b_{n-k}, with
// K_h = F(n+i_h, k+j_h) for asterisk chains and F(n+i_h, n-k+j_h) for star
// chains. The ordinary product is the empty chain.
inline WardSeries chain_mul(const WardSeries &f, const WardSeries &g, const ProductChain &chain)
{
    detail::require_same_context(f, g);
    const PsiContext &ctx = f.ctx();
    const std::size_t order = std::min(f.order(), g.order());
    detail::require_headroom(ctx, order, chain.max_shift());
    const bool star = chain.flavor() == Flavor::star;
    const auto pairs = chain.pairs();

    std::vector<Scalar> out;
    out.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Scalar acc = ctx.zero();
        for (std::size_t k = 0; k <= n; ++k) {
            if (f[k].is_zero() || g[n - k].is_zero()) continue;
            Scalar term = f[k] * g[n - k];
            term *= ctx.binomial(n, k);
            for (const auto &p : pairs) term *= ctx.kernel(n + p.i, (star ? n - k : k) + p.j);
            acc += term;
        }
        out.push_back(std::move(acc));
    }
    WardSeries result(f.context(), std::move(out));
    if (chain.coefficient().is_one()) return result;
    return scalar_mul(chain.coefficient(), result);
}

// Ordinary product: psi-binomial convolution.
inline WardSeries mul_ordinary(const WardSeries &f, const WardSeries &g)
{
    return chain_mul(f, g, ProductChain::ordinary());
}

inline WardSeries operator*(const WardSeries &f, const WardSeries &g)
{
    return mul_ordinary(f, g);
}

// Fontane product f *_{i,j} g.
inline WardSeries fontane_mul(const WardSeries &f, const WardSeries &g, std::size_t i, std::size_t j)
{
    detail::require_pair(i, j);
    return chain_mul(f, g, ProductChain({IndexPair{i, j}}, Flavor::asterisk));
}

// Opposite Fontane product f #_{i,j} g; equals fontane_mul(g, f, i, j).
inline WardSeries star_mul(const WardSeries &f, const WardSeries &g, std::size_t i, std::size_t j)
{
    detail::require_pair(i, j);
    return chain_mul(f, g, ProductChain({IndexPair{i, j}}, Flavor::star));
}

// D_psi shifts coefficients down: D_psi(x^{n+1}/psi_{n+1}!) = x^n/psi_n!.
inline WardSeries psi_derivative(const WardSeries &f)
{
    if (f.order() == 0) throw error(errc::order_zero, "derivative of an order-0 series has no exact coefficients");
    return WardSeries(f.context(), std::vector<Scalar>(f.coeffs().begin() + 1, f.coeffs().end()));
}

inline WardSeries psi_derivative(const WardSeries &f, std::size_t times)
{
    if (times > f.order()) {
        throw error(errc::order_zero, std::to_string(times) + " derivatives of an order-" + std::to_string(f.order()) +
                                          " series");
    }
    return WardSeries(f.context(), std::vector<Scalar>(f.coeffs().begin() + static_cast<long>(times), f.coeffs().end()));
}

// M_{i,j}: a_n -> F(n+i, n+j) a_n.
inline WardSeries diag_m(const WardSeries &f, std::size_t i, std::size_t j)
{
    detail::require_pair(i, j);
    detail::require_headroom(f.ctx(), f.order(), i);
    std::vector<Scalar> v;
    v.reserve(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n) v.push_back(f.ctx().kernel(n + i, n + j) * f[n]);
    return WardSeries(f.context(), std::move(v));
}

// L_{i,j}: a_n -> F(n+i, j) a_n. L_{i,0} is the identity.
inline WardSeries diag_l(const WardSeries &f, std::size_t i, std::size_t j)
{
    detail::require_pair(i, j);
    detail::require_headroom(f.ctx(), f.order(), i);
    std::vector<Scalar> v;
    v.reserve(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n) v.push_back(f.ctx().kernel(n + i, j) * f[n]);
    return WardSeries(f.context(), std::move(v));
}

// The unique h with h * g = f (ordinary product), by forward substitution
//   c_n = (a_n - sum_{k<n} binom(n,k) c_k b_{n-k}) / b_0.
inline WardSeries divide(const WardSeries &f, const WardSeries &g)
{
    detail::require_same_context(f, g);
    if (g[0].is_zero()) throw error(errc::non_invertible, "divisor has zero constant term");
    const PsiContext &ctx = f.ctx();
    const std::size_t order = std::min(f.order(), g.order());
    const Scalar inv_b0 = g[0].inverse();
    std::vector<Scalar> c;
    c.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Scalar acc = f[n];
        for (std::size_t k = 0; k < n; ++k) {
            if (c[k].is_zero() || g[n - k].is_zero()) continue;
            acc -= ctx.binomial(n, k) * c[k] * g[n - k];
        }
        c.push_back(acc * inv_b0);
    }
    return WardSeries(f.context(), std::move(c));
}

// f(c x): a_n -> c^n a_n. With c = q this is the dilation of q-calculus.
inline WardSeries dilate(const WardSeries &f, const Scalar &c)
{
    const Scalar base = f.ctx().coerce(c);
    std::vector<Scalar> v;
    v.reserve(f.order() + 1);
    Scalar power = f.ctx().one();
    for (const auto &a : f.coeffs()) {
        v.push_back(power * a);
        power *= base;
    }
    return WardSeries(f.context(), std::move(v));
}

// Evaluates every coefficient of a series over Q(q) at the rational q of
// `target` (a q=<value> context) and rebinds it there.
inline WardSeries specialize(const WardSeries &f, PsiContextPtr target)
{
    const Scalar &q = target->q();
    if (!q.is_rational() || target->symbolic()) {
        throw error(errc::context_mismatch, "specialization target must have a rational q");
    }
    std::vector<Scalar> v;
    v.reserve(f.order() + 1);
    for (const auto &c : f.coeffs()) v.emplace_back(c.evaluate(q.as_rational()));
    return WardSeries(std::move(target), std::move(v));
}

} // namespace ward

#endif
