#ifndef WARD_SUITES_HPP
#define WARD_SUITES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <ward/calculus.hpp>
#include <ward/error.hpp>
#include <ward/operator_algebra.hpp>
#include <ward/psi_context.hpp>
#include <ward/random.hpp>
#include <ward/series.hpp>

// Randomized verification suites behind `ward check`. Every psi-sequence sees
// the same stream of random integer inputs, so the symbolic-q run and a
// numeric-q run produce aligned reports that can be compared after
// specializing q.
namespace ward::suites
{

// Kernel headroom kept above the series order: chains up to index 4 in the
// product rules and binomial operators up to row 6.
inline constexpr std::size_t kHeadroom = 8;

struct Config {
    std::vector<std::string> psi_specs; // empty: default_specs()
    std::size_t order = 8;
    std::size_t trials = 20;
    std::uint64_t seed = 7;
    // Test fixture: perturbs the first report's right-hand side.
    bool inject_fault = false;
};

// 0,1,2,1,3,1,4,...: psi_{2m} = m+1 and psi_{2m+1} = 1.
inline std::string custom_spec(std::size_t bound)
{
    std::string s = "custom:[0";
    for (std::size_t n = 1; n <= bound; ++n) s += "," + std::to_string(n % 2 == 1 ? 1 : n / 2 + 1);
    return s + "]";
}

inline std::vector<std::string> default_specs(std::size_t order)
{
    return {"natural", "q", "q=3/2", "fib", custom_spec(order + kHeadroom)};
}

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"rings", "rules", "leibniz", "quotient"};
    return names;
}

namespace detail
{

// One independent stream per (seed, suite).
inline std::mt19937_64 suite_rng(std::uint64_t seed, std::uint32_t tag)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tag};
    return std::mt19937_64(seq);
}

inline RuleReport list_report(std::string rule, std::string psi, std::vector<Scalar> lhs, std::vector<Scalar> rhs)
{
    RuleReport r;
    r.rule = std::move(rule);
    r.psi = std::move(psi);
    r.order = lhs.empty() ? 0 : lhs.size() - 1;
    if (lhs.size() != rhs.size()) {
        r.first_diff = std::min(lhs.size(), rhs.size());
    } else {
        for (std::size_t n = 0; n < lhs.size(); ++n) {
            if (!(lhs[n] == rhs[n])) {
                r.first_diff = n;
                break;
            }
        }
    }
    r.equal = !r.first_diff.has_value();
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

// Syntactic (operator-level) checks carry no coefficient lists.
inline RuleReport flag_report(std::string rule, bool holds)
{
    RuleReport r;
    r.rule = std::move(rule);
    r.psi = "-";
    r.equal = holds;
    return r;
}

inline std::vector<IndexPair> all_pairs(std::size_t max_i)
{
    std::vector<IndexPair> v;
    for (std::size_t i = 1; i <= max_i; ++i) {
        for (std::size_t j = 0; j < i; ++j) v.push_back({i, j});
    }
    return v;
}

// Every multiset of pairs (j < i <= max_i) with 1..max_len elements.
inline std::vector<std::vector<IndexPair>> pair_multisets(std::size_t max_i, std::size_t max_len)
{
    const auto pairs = all_pairs(max_i);
    std::vector<std::vector<IndexPair>> out;
    std::vector<std::size_t> idx;
    auto rec = [&](auto &&self, std::size_t start) -> void {
        if (!idx.empty()) {
            std::vector<IndexPair> c;
            for (auto x : idx) c.push_back(pairs[x]);
            out.push_back(std::move(c));
        }
        if (idx.size() == max_len) return;
        for (std::size_t x = start; x < pairs.size(); ++x) {
            idx.push_back(x);
            self(self, x);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline Scalar power(const Scalar &base, std::size_t e, const PsiContext &ctx)
{
    Scalar r = ctx.one();
    for (std::size_t k = 0; k < e; ++k) r *= base;
    return r;
}

inline bool is_q(const PsiContext &ctx)
{
    return ctx.kind() == PsiKind::q_analog;
}

inline std::size_t random_order(std::mt19937_64 &rng, std::size_t lo, std::size_t hi)
{
    return draw_order(rng, std::min(lo, hi), hi);
}

inline WardSeries draw(std::mt19937_64 &rng, const PsiContextPtr &ctx, std::size_t lo, std::size_t hi,
                       bool nonzero_constant = false)
{
    return draw_integers(rng, random_order(rng, lo, hi), 4, nonzero_constant).bind(ctx);
}

} // namespace detail

// Fontane recurrences, ring laws of the Fontane products, q-collapse and
// non-associativity witnesses.
inline std::vector<RuleReport> rings(const PsiContextPtr &ctx, const Config &cfg, std::size_t order)
{
    using namespace detail;
    const PsiContext &c = *ctx;
    std::vector<RuleReport> out;

    std::vector<Scalar> l3, r3, l4, r4, ls, rs, lp, rp;
    for (std::size_t n = 1; n < c.bound(); ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            l3.push_back(c.binomial(n + 1, k));
            r3.push_back(c.binomial(n, k - 1) + c.kernel(n + 1, k) * c.binomial(n, k));
            l4.push_back(c.binomial(n + 1, k));
            r4.push_back(c.binomial(n, k) + c.kernel(n + 1, n - k + 1) * c.binomial(n, k - 1));
        }
    }
    for (std::size_t n = 0; n <= c.bound(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            ls.push_back(c.binomial(n, k));
            rs.push_back(c.binomial(n, n - k));
        }
    }
    for (std::size_t n = 0; n < c.bound(); ++n) {
        lp.push_back(c.psi(n + 1));
        rp.push_back(n == 0 ? c.psi(1) : c.psi(n) + c.kernel(n + 1, n));
    }
    out.push_back(list_report("fontane_recurrence", c.spec(), std::move(l3), std::move(r3)));
    out.push_back(list_report("fontane_recurrence_symmetric", c.spec(), std::move(l4), std::move(r4)));
    out.push_back(list_report("binomial_symmetry", c.spec(), std::move(ls), std::move(rs)));
    out.push_back(list_report("psi_step", c.spec(), std::move(lp), std::move(rp)));

    std::mt19937_64 rng = detail::suite_rng(cfg.seed, 1);
    const auto pairs = all_pairs(3);
    const auto chains = pair_multisets(3, 3);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const WardSeries f = draw(rng, ctx, 1, order), g = draw(rng, ctx, 1, order), h = draw(rng, ctx, 1, order);
        long alpha_i = 0;
        while (alpha_i == 0) alpha_i = std::uniform_int_distribution<long>(-5, 5)(rng);
        const Scalar alpha = c.lift(Rational(alpha_i));
        for (const auto &p : pairs) {
            // The unit 1/F(i,j) exists only when psi_i != psi_j.
            if (!c.kernel(p.i, p.j).is_zero()) {
                const Scalar e = c.kernel(p.i, p.j).inverse();
                const WardSeries unit = WardSeries::constant(ctx, e, f.order());
                out.push_back(compare_series("left_unit_l", fontane_mul(unit, f, p.i, p.j),
                                             scalar_mul(e, diag_l(f, p.i, p.j))));
                out.push_back(compare_series("left_unit_m", fontane_mul(f, unit, p.i, p.j),
                                             scalar_mul(e, diag_m(f, p.i, p.j))));
            }
            out.push_back(compare_series("distributive_right", fontane_mul(f, g + h, p.i, p.j),
                                         fontane_mul(f, g, p.i, p.j) + fontane_mul(f, h, p.i, p.j)));
            out.push_back(compare_series("distributive_left", fontane_mul(g + h, f, p.i, p.j),
                                         fontane_mul(g, f, p.i, p.j) + fontane_mul(h, f, p.i, p.j)));
            out.push_back(compare_series("bilinear_left", fontane_mul(scalar_mul(alpha, f), g, p.i, p.j),
                                         scalar_mul(alpha, fontane_mul(f, g, p.i, p.j))));
            out.push_back(compare_series("bilinear_right", fontane_mul(f, scalar_mul(alpha, g), p.i, p.j),
                                         scalar_mul(alpha, fontane_mul(f, g, p.i, p.j))));
            out.push_back(compare_series("opposite", star_mul(f, g, p.i, p.j), fontane_mul(g, f, p.i, p.j)));
            if (is_q(c)) {
                const Scalar qj = power(c.q(), p.j, c);
                out.push_back(compare_series("q_closed_form", fontane_mul(f, g, p.i, p.j),
                                             scalar_mul(qj, dilate(f, c.q()) * g)));
                out.push_back(compare_series("q_closed_form_star", star_mul(f, g, p.i, p.j),
                                             scalar_mul(qj, f * dilate(g, c.q()))));
            }
        }
        const auto &pc = chains[t % chains.size()];
        out.push_back(compare_series("chain_opposite", chain_mul(f, g, ProductChain(pc, Flavor::asterisk)),
                                     chain_mul(g, f, ProductChain(pc, Flavor::star))));
        if (is_q(c)) {
            for (std::size_t j = 0; j <= 1; ++j) {
                out.push_back(compare_series("q_collapse", fontane_mul(f, g, j + 1, j), fontane_mul(f, g, j + 2, j)));
                out.push_back(compare_series("q_collapse", fontane_mul(f, g, j + 1, j), fontane_mul(f, g, j + 3, j)));
            }
        }
        if (c.kind() == PsiKind::natural) {
            out.push_back(compare_series("associative", fontane_mul(fontane_mul(f, g, 1, 0), h, 1, 0),
                                         fontane_mul(f, fontane_mul(g, h, 1, 0), 1, 0)));
            out.push_back(compare_series("commutative", fontane_mul(f, g, 1, 0), fontane_mul(g, f, 1, 0)));
        }
    }

    if (c.kind() != PsiKind::natural) {
        // Witnesses among small fixed series: e_psi, x, 1+x, x^2, 1+x+x^2.
        const std::size_t wo = std::min<std::size_t>(4, order);
        const auto x = WardSeries::monomial(ctx, 1, wo), one = WardSeries::constant(ctx, c.one(), wo);
        const std::vector<WardSeries> cands{WardSeries::e_psi(ctx, wo), x, one + x, WardSeries::monomial(ctx, 2, wo),
                                            one + x + WardSeries::monomial(ctx, 2, wo)};
        std::optional<RuleReport> assoc, comm;
        for (const auto &a : cands) {
            for (const auto &b : cands) {
                if (!comm) {
                    auto r = compare_series("noncommutative_witness", fontane_mul(a, b, 1, 0), fontane_mul(b, a, 1, 0));
                    if (!r.equal) comm = std::move(r);
                }
                for (const auto &d : cands) {
                    if (assoc) break;
                    auto r = compare_series("nonassociative_witness", fontane_mul(fontane_mul(a, b, 1, 0), d, 1, 0),
                                            fontane_mul(a, fontane_mul(b, d, 1, 0), 1, 0));
                    if (!r.equal) assoc = std::move(r);
                }
            }
        }
        for (auto *w : {&assoc, &comm}) {
            RuleReport r = w->has_value() ? std::move(**w) : flag_report("witness_not_found", true);
            r.psi = c.spec();
            r.expect_equal = false;
            out.push_back(std::move(r));
        }
    }
    return out;
}

// Product rules for Fontane, opposite, ordinary, chained and boxplus products.
inline std::vector<RuleReport> rules(const PsiContextPtr &ctx, const Config &cfg, std::size_t order)
{
    using namespace detail;
    const PsiContext &c = *ctx;
    std::vector<RuleReport> out;
    std::mt19937_64 rng = detail::suite_rng(cfg.seed, 2);
    const auto pairs = all_pairs(3);
    const auto chains = pair_multisets(3, 3);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const WardSeries f = draw(rng, ctx, 1, order), g = draw(rng, ctx, 1, order);
        for (const auto &p : pairs) {
            out.push_back(product_rule_asterisk(f, g, p.i, p.j));
            out.push_back(product_rule_star(f, g, p.i, p.j));
        }
        for (auto &r : product_rule_ordinary(f, g)) out.push_back(std::move(r));
        const auto &pc = chains[t % chains.size()];
        out.push_back(product_rule_chain(f, g, ProductChain(pc, Flavor::asterisk)));
        out.push_back(product_rule_chain(f, g, ProductChain(pc, Flavor::star)));
        if (t == 0) out.push_back(product_rule_chain(f, g, ProductChain::ordinary()));
        const auto &p1 = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
        const auto &p2 = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
        for (auto &r : product_rule_boxplus(f, g, p1.i, p1.j, p2.i, p2.j)) out.push_back(std::move(r));
        if (is_q(c)) {
            // g = 1 in the (1,0)(2,0) chain rule: D_q f(q^2 x) = q^2 (D_q f)(q^2 x).
            const WardSeries one = WardSeries::constant(ctx, c.one(), f.order());
            const Scalar q2 = c.q() * c.q();
            out.push_back(compare_series("q_dilation_chain_rule",
                                         psi_derivative(chain_mul(f, one, ProductChain({{1, 0}, {2, 0}}))),
                                         scalar_mul(q2, dilate(psi_derivative(f), q2))));
        }
    }
    if (c.kind() == PsiKind::fibonacci && order >= 5) {
        // D_F(x^2 x^3) through x^2 *_{1,0} D_F x^3 + D_F x^2 . x^3 is F_5 x^4.
        const WardSeries x2 = WardSeries::monomial(ctx, 2, 5), x3 = WardSeries::monomial(ctx, 3, 5);
        const WardSeries via_rule = fontane_mul(x2, psi_derivative(x3), 1, 0) + mul_ordinary(psi_derivative(x2), x3);
        out.push_back(compare_series("fibonacci_monomial_example", via_rule,
                                     scalar_mul(c.lift(Rational(5)), WardSeries::monomial(ctx, 4, 4))));
    }
    return out;
}

// Binomial-operator identities and the general Leibniz rule.
inline std::vector<RuleReport> leibniz(const PsiContextPtr &ctx, const Config &cfg, std::size_t order)
{
    using namespace detail;
    const PsiContext &c = *ctx;
    std::vector<RuleReport> out;
    std::mt19937_64 rng = detail::suite_rng(cfg.seed, 3);
    const std::size_t n_max = std::min<std::size_t>(6, order);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::size_t n = t % (n_max + 1);
        const WardSeries f = draw(rng, ctx, n, order), g = draw(rng, ctx, n, order);
        out.push_back(verify_general_leibniz(f, g, n));
    }
    if (c.kind() == PsiKind::natural || is_q(c)) {
        // D^n(x e) = (q^n x + psi_n) e, with q = 1 in the natural case.
        const Scalar q = is_q(c) ? c.q() : c.one();
        const WardSeries e = WardSeries::e_psi(ctx, order);
        const WardSeries xe = WardSeries::monomial(ctx, 1, order) * e;
        for (std::size_t n = 0; n <= n_max && n < order; ++n) {
            out.push_back(compare_series("x_exp_closed_form", general_leibniz(WardSeries::monomial(ctx, 1, order), e, n),
                                         scalar_mul(power(q, n, c), xe) + scalar_mul(c.psi(n), e)));
        }
    }
    if (is_q(c)) {
        // <n k>(x^a, x^b) = binom(n,k)_q q^{ka} x^{a+b}
        const BinomialOperatorTable table(n_max);
        std::vector<Scalar> lhs, rhs;
        for (std::size_t n = 0; n <= n_max; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                for (std::size_t a = 0; a <= order; ++a) {
                    for (std::size_t b = 0; a + b <= order; ++b) {
                        const auto xa = WardSeries::monomial(ctx, a, order), xb = WardSeries::monomial(ctx, b, order);
                        const WardSeries got = apply(table(n, k), xa, xb);
                        const WardSeries want =
                            scalar_mul(c.binomial(n, k) * power(c.q(), k * a, c), WardSeries::monomial(ctx, a + b, order));
                        lhs.insert(lhs.end(), got.coeffs().begin(), got.coeffs().end());
                        rhs.insert(rhs.end(), want.coeffs().begin(), want.coeffs().end());
                    }
                }
            }
        }
        out.push_back(list_report("q_binomial_operator", c.spec(), std::move(lhs), std::move(rhs)));
    }
    return out;
}

// Operator-level identities of the binomial operators; independent of psi.
inline std::vector<RuleReport> pascal_identities()
{
    using namespace detail;
    std::vector<RuleReport> out;
    const BinomialOperatorTable table(8);
    auto star = [](std::size_t i, std::size_t j) { return OperatorSum::product(i, j); };
    auto chain = [](std::vector<IndexPair> p) { return OperatorSum(ProductChain(std::move(p))); };

    bool table_rows = table(0, 0) == OperatorSum::ordinary() && table(1, 1) == star(1, 0) &&
                      table(2, 1) == star(1, 0) + star(2, 1) && table(2, 2) == chain({{1, 0}, {2, 0}}) &&
                      table(3, 1) == star(1, 0) + star(2, 1) + star(3, 2) &&
                      table(3, 2) == chain({{1, 0}, {2, 0}}) + chain({{1, 0}, {3, 1}}) + chain({{2, 1}, {3, 1}}) &&
                      table(3, 3) == chain({{1, 0}, {2, 0}, {3, 0}});
    out.push_back(flag_report("pascal_table_rows", table_rows));

    bool boundary = true, k1 = true, k2 = true;
    for (std::size_t n = 0; n <= 8; ++n) {
        std::vector<IndexPair> diag;
        for (std::size_t i = 1; i <= n; ++i) diag.push_back({i, 0});
        boundary = boundary && table(n, 0) == OperatorSum::ordinary() && table(n, n) == chain(diag);
        if (n >= 1) {
            OperatorSum s;
            for (std::size_t i = 0; i + 1 <= n; ++i) s = s + star(i + 1, i);
            k1 = k1 && table(n, 1) == s;
        }
        if (n >= 2) {
            OperatorSum s;
            for (std::size_t i = 0; i + 2 <= n; ++i) {
                for (std::size_t j = 0; i + j + 2 <= n; ++j) s = s + chain({{i + j + 2, i + j}, {i + 1, i}});
            }
            k2 = k2 && table(n, 2) == s;
        }
    }
    out.push_back(flag_report("pascal_boundary", boundary));
    out.push_back(flag_report("binomial_operator_k1_closed_form", k1));
    out.push_back(flag_report("binomial_operator_k2_closed_form", k2));

    // <n k> = [+]_{i=1}^{k} sigma^{i-1} rho <n-i, k-i+1> [+] sigma^k <n-1, 0>,
    // reading <m, m+1> as the zero operator.
    bool unrolled = true;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            OperatorSum s;
            for (std::size_t i = 1; i <= k; ++i) {
                const std::size_t row = n - i, col = k - i + 1;
                OperatorSum term = col <= row ? rho(table(row, col)) : OperatorSum::zero();
                for (std::size_t r = 1; r < i; ++r) term = sigma(term);
                s = s + term;
            }
            OperatorSum tail = table(n - 1, 0);
            for (std::size_t r = 0; r < k; ++r) tail = sigma(tail);
            unrolled = unrolled && table(n, k) == s + tail;
        }
    }
    out.push_back(flag_report("binomial_operator_unrolled", unrolled));
    return out;
}

// Quotient and reciprocal rules.
inline std::vector<RuleReport> quotient(const PsiContextPtr &ctx, const Config &cfg, std::size_t order)
{
    using namespace detail;
    const PsiContext &c = *ctx;
    std::vector<RuleReport> out;
    std::mt19937_64 rng = detail::suite_rng(cfg.seed, 4);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const WardSeries f = draw(rng, ctx, 1, order), g = draw(rng, ctx, 1, order, true);
        out.push_back(verify_quotient(f, g));
        out.push_back(verify_reciprocal(g));
        const WardSeries h = divide(f, g);
        out.push_back(compare_series("quotient_product_identity", psi_derivative(f),
                                     fontane_mul(h, psi_derivative(g), 1, 0) + g * psi_derivative(h)));
        if (is_q(c)) {
            for (auto &r : verify_quotient_q_forms(f, g)) out.push_back(std::move(r));
        }
    }
    const WardSeries s = WardSeries::sin_psi(ctx, order), co = WardSeries::cos_psi(ctx, order);
    const WardSeries tan = divide(s, co);
    out.push_back(compare_series("tan_example", psi_derivative(tan), divide(co + fontane_mul(tan, s, 1, 0), co)));
    out.push_back(verify_quotient(s, co));
    if (is_q(c)) {
        const WardSeries e = WardSeries::e_psi(ctx, order);
        const WardSeries inv = divide(WardSeries::constant(ctx, c.one(), order), e);
        out.push_back(compare_series("q_reciprocal_exp", reciprocal_derivative(e), -dilate(inv, c.q())));
    }
    return out;
}

inline std::vector<RuleReport> run_one(std::string_view suite, const PsiContextPtr &ctx, const Config &cfg,
                                       std::size_t order)
{
    if (suite == "rings") return rings(ctx, cfg, order);
    if (suite == "rules") return rules(ctx, cfg, order);
    if (suite == "leibniz") return leibniz(ctx, cfg, order);
    if (suite == "quotient") return quotient(ctx, cfg, order);
    throw error(errc::bad_spec, "unknown suite '" + std::string(suite) + "'");
}

// Specializes every coefficient of the symbolic-q reports at the numeric q and
// compares against the aligned numeric-q reports.
inline RuleReport specialization_report(std::string_view suite, const std::vector<RuleReport> &symbolic,
                                        const std::vector<RuleReport> &numeric, const PsiContext &numeric_ctx)
{
    const Rational q = numeric_ctx.q().as_rational();
    std::vector<Scalar> lhs, rhs;
    bool aligned = symbolic.size() == numeric.size();
    for (std::size_t r = 0; aligned && r < symbolic.size(); ++r) {
        const auto &a = symbolic[r];
        const auto &b = numeric[r];
        if (a.rule != b.rule || a.lhs.size() != b.lhs.size() || a.rhs.size() != b.rhs.size()) {
            aligned = false;
            break;
        }
        for (const auto &x : a.lhs) lhs.emplace_back(x.evaluate(q));
        for (const auto &x : a.rhs) lhs.emplace_back(x.evaluate(q));
        rhs.insert(rhs.end(), b.lhs.begin(), b.lhs.end());
        rhs.insert(rhs.end(), b.rhs.begin(), b.rhs.end());
    }
    if (!aligned) return detail::flag_report("specialization_" + std::string(suite), false);
    return detail::list_report("specialization_" + std::string(suite), numeric_ctx.spec(), std::move(lhs),
                               std::move(rhs));
}

inline void recheck(RuleReport &r)
{
    RuleReport fresh = detail::list_report(r.rule, r.psi, r.lhs, r.rhs);
    r.equal = fresh.equal;
    r.first_diff = fresh.first_diff;
}

// Runs one suite ("rings", "rules", "leibniz", "quotient") or "all" over the
// configured psi-sequences.
inline std::vector<RuleReport> run(std::string_view suite, const Config &cfg)
{
    std::vector<std::string> names;
    if (suite == "all") {
        names = suite_names();
    } else {
        if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
            throw error(errc::bad_spec, "unknown suite '" + std::string(suite) + "'");
        }
        names.emplace_back(suite);
    }
    const std::vector<std::string> specs = cfg.psi_specs.empty() ? default_specs(cfg.order) : cfg.psi_specs;
    std::vector<PsiContextPtr> ctxs;
    std::vector<std::size_t> orders;
    for (const auto &s : specs) {
        ctxs.push_back(PsiContext::from_spec(s, cfg.order + kHeadroom));
        const std::size_t b = ctxs.back()->bound();
        if (b < kHeadroom + 1) {
            throw error(errc::bound_exceeded, "psi '" + s + "' is too short for the check suites");
        }
        orders.push_back(std::min(cfg.order, b - kHeadroom));
    }

    std::vector<RuleReport> out;
    for (const auto &name : names) {
        if (name == "leibniz") {
            for (auto &r : pascal_identities()) out.push_back(std::move(r));
        }
        std::vector<std::vector<RuleReport>> per_ctx;
        for (std::size_t c = 0; c < ctxs.size(); ++c) {
            per_ctx.push_back(run_one(name, ctxs[c], cfg, orders[c]));
            out.insert(out.end(), per_ctx.back().begin(), per_ctx.back().end());
        }
        for (std::size_t s = 0; s < ctxs.size(); ++s) {
            if (!ctxs[s]->symbolic() || ctxs[s]->kind() != PsiKind::q_analog) continue;
            for (std::size_t v = 0; v < ctxs.size(); ++v) {
                if (ctxs[v]->kind() != PsiKind::q_analog || ctxs[v]->symbolic() || orders[v] != orders[s]) continue;
                out.push_back(specialization_report(name, per_ctx[s], per_ctx[v], *ctxs[v]));
            }
        }
    }
    if (cfg.inject_fault) {
        for (auto &r : out) {
            if (r.rhs.empty() || !r.expect_equal) continue;
            r.rhs[0] += r.rhs[0].one_like();
            recheck(r);
            break;
        }
    }
    return out;
}

} // namespace ward::suites

#endif
