#ifndef WARD_PSI_CONTEXT_HPP
#define WARD_PSI_CONTEXT_HPP

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <ward/error.hpp>
#include <ward/poly.hpp>
#include <ward/rational.hpp>
#include <ward/scalar.hpp>

namespace ward
{

enum class PsiKind { natural, q_analog, fibonacci, custom };

class PsiContext;
using PsiContextPtr = std::shared_ptr<const PsiContext>;

// A psi-sequence (psi_0 = 0, psi_1 = 1, psi_n != 0) together with tables of
// psi_n, psi_n!, psi-binomials and Fontane kernels F(n,k), all precomputed up
// to a fixed bound. Immutable after construction, so a context can be shared
// freely between threads.
class PsiContext
{
    struct private_tag {
    };

public:
    static PsiContextPtr natural(std::size_t bound)
    {
        std::vector<Scalar> v;
        v.reserve(bound + 1);
        for (std::size_t n = 0; n <= bound; ++n) v.emplace_back(Rational(static_cast<long>(n)));
        return std::make_shared<const PsiContext>(private_tag{}, PsiKind::natural, "natural", std::nullopt,
                                                  std::move(v));
    }

    // psi_n = [n] = 1 + q + ... + q^(n-1) with q an indeterminate.
    static PsiContextPtr q_symbolic(std::size_t bound)
    {
        std::vector<Scalar> v;
        v.reserve(bound + 1);
        for (std::size_t n = 0; n <= bound; ++n) {
            v.emplace_back(RatFunc(Poly(std::vector<Rational>(n, Rational(1)))));
        }
        return std::make_shared<const PsiContext>(private_tag{}, PsiKind::q_analog, "q",
                                                  Scalar(RatFunc::indeterminate()), std::move(v));
    }

    // psi_n = [n] evaluated at a rational q.
    static PsiContextPtr q_value(const Rational &q, std::size_t bound)
    {
        std::vector<Scalar> v;
        v.reserve(bound + 1);
        Rational sum, power(1);
        for (std::size_t n = 0; n <= bound; ++n) {
            v.emplace_back(sum);
            sum += power;
            power *= q;
        }
        return std::make_shared<const PsiContext>(private_tag{}, PsiKind::q_analog, "q=" + q.str(), Scalar(q),
                                                  std::move(v));
    }

    static PsiContextPtr fibonacci(std::size_t bound)
    {
        std::vector<Scalar> v;
        v.reserve(bound + 1);
        Rational a, b(1);
        for (std::size_t n = 0; n <= bound; ++n) {
            v.emplace_back(a);
            a = std::exchange(b, a + b);
        }
        return std::make_shared<const PsiContext>(private_tag{}, PsiKind::fibonacci, "fib", std::nullopt,
                                                  std::move(v));
    }

    // values[n] = psi_n. The bound defaults to values.size() - 1 and may not
    // exceed it.
    static PsiContextPtr custom(std::vector<Scalar> values, std::optional<std::size_t> bound = std::nullopt)
    {
        if (values.size() < 2) {
            throw error(errc::bad_spec, "custom sequence needs at least psi_0 and psi_1");
        }
        const std::size_t avail = values.size() - 1;
        if (bound && *bound > avail) {
            throw error(errc::bound_exceeded, "custom sequence defines psi up to index " + std::to_string(avail));
        }
        values.resize((bound ? *bound : avail) + 1);
        std::string spec = "custom:[";
        for (std::size_t n = 0; n < values.size(); ++n) {
            if (n) spec += ",";
            spec += values[n].str();
        }
        spec += "]";
        return std::make_shared<const PsiContext>(private_tag{}, PsiKind::custom, std::move(spec), std::nullopt,
                                                  std::move(values));
    }

    // Grammar: "natural" | "q" | "q=<rational>" | "fib" | "custom:[s0,s1,...]".
    // A custom sequence always spans exactly the listed values; `bound` only
    // applies to the generated kinds.
    static PsiContextPtr from_spec(std::string_view spec, std::size_t bound)
    {
        auto trim = [](std::string_view s) {
            while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
            while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
            return s;
        };
        spec = trim(spec);
        try {
            if (spec == "natural") return natural(bound);
            if (spec == "q") return q_symbolic(bound);
            if (spec == "fib") return fibonacci(bound);
            if (spec.starts_with("q=")) return q_value(Rational::parse(spec.substr(2)), bound);
            if (spec.starts_with("custom:")) {
                auto body = trim(spec.substr(7));
                if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
                    throw error(errc::bad_spec, "custom sequence must be written as custom:[s0,s1,...]");
                }
                body = body.substr(1, body.size() - 2);
                std::vector<Scalar> values;
                while (!body.empty()) {
                    const auto comma = body.find(',');
                    values.emplace_back(Rational::parse(body.substr(0, comma)));
                    if (comma == std::string_view::npos) break;
                    body.remove_prefix(comma + 1);
                }
                return custom(std::move(values));
            }
        } catch (const error &e) {
            if (e.code() == errc::bad_spec || e.code() == errc::bound_exceeded) throw;
            throw error(errc::bad_spec, "invalid psi spec '" + std::string(spec) + "': " + e.what());
        }
        throw error(errc::bad_spec, "unknown psi spec '" + std::string(spec) + "'");
    }

    PsiContext(private_tag, PsiKind kind, std::string spec, std::optional<Scalar> q, std::vector<Scalar> psi)
        : kind_(kind), spec_(std::move(spec)), q_(std::move(q)), psi_(std::move(psi))
    {
        validate();
        build_tables();
    }

    PsiKind kind() const noexcept
    {
        return kind_;
    }
    // Canonical psi-spec string; parsing it reproduces an equivalent context.
    const std::string &spec() const noexcept
    {
        return spec_;
    }
    std::size_t bound() const noexcept
    {
        return psi_.size() - 1;
    }
    // True when scalars are rational functions of q rather than rationals.
    bool symbolic() const noexcept
    {
        return psi_[0].is_ratfunc();
    }
    bool has_q() const noexcept
    {
        return q_.has_value();
    }
    const Scalar &q() const
    {
        if (!q_) throw error(errc::bad_spec, "psi sequence '" + spec_ + "' has no q parameter");
        return *q_;
    }

    Scalar zero() const
    {
        return psi_[0].zero_like();
    }
    Scalar one() const
    {
        return psi_[0].one_like();
    }
    Scalar lift(const Rational &r) const
    {
        return symbolic() ? Scalar(RatFunc::constant(r)) : Scalar(r);
    }
    // Bring a scalar into this context's field. Rationals are embedded into
    // Q(q) for symbolic contexts; a rational function never maps to Q.
    Scalar coerce(const Scalar &s) const
    {
        if (s.same_variant(psi_[0])) return s;
        if (s.is_rational()) return lift(s.as_rational());
        throw error(errc::variant_mismatch, "rational function used in rational context '" + spec_ + "'");
    }

    const Scalar &psi(std::size_t n) const
    {
        check_index(n);
        return psi_[n];
    }

    const Scalar &factorial(std::size_t n) const
    {
        check_index(n);
        return fact_[n];
    }

    const Scalar &binomial(std::size_t n, std::size_t k) const
    {
        check_index(n);
        if (k > n) {
            throw error(errc::k_out_of_range,
                        "binomial(" + std::to_string(n) + "," + std::to_string(k) + ") needs k <= n");
        }
        return binom_[n][k];
    }

    // F(n,k) = (psi_n - psi_k) / psi_{n-k}, defined for k < n only.
    const Scalar &kernel(std::size_t n, std::size_t k) const
    {
        if (k >= n) {
            throw error(errc::kernel_undefined,
                        "F(" + std::to_string(n) + "," + std::to_string(k) + ") needs k < n");
        }
        check_index(n);
        return kernel_[n][k];
    }

private:
    void check_index(std::size_t n) const
    {
        if (n > bound()) {
            throw error(errc::index_out_of_bound,
                        "index " + std::to_string(n) + " exceeds bound " + std::to_string(bound()) + " of '" +
                            spec_ + "'");
        }
    }

    void validate() const
    {
        for (const auto &v : psi_) {
            if (!v.same_variant(psi_[0])) {
                throw error(errc::bad_spec, "psi values mix rationals and rational functions");
            }
        }
        if (!psi_[0].is_zero()) throw error(errc::bad_spec, "psi_0 must be 0");
        if (psi_.size() > 1 && !psi_[1].is_one()) throw error(errc::bad_spec, "psi_1 must be 1");
        for (std::size_t n = 1; n < psi_.size(); ++n) {
            if (psi_[n].is_zero()) {
                throw error(errc::bad_spec, "psi_" + std::to_string(n) + " is zero in '" + spec_ + "'");
            }
        }
    }

    void build_tables()
    {
        const std::size_t nb = psi_.size();
        fact_.reserve(nb);
        fact_.push_back(one());
        for (std::size_t n = 1; n < nb; ++n) fact_.push_back(fact_.back() * psi_[n]);

        binom_.resize(nb);
        for (std::size_t n = 0; n < nb; ++n) {
            binom_[n].reserve(n + 1);
            for (std::size_t k = 0; k <= n; ++k) binom_[n].push_back(fact_[n] / (fact_[k] * fact_[n - k]));
        }

        kernel_.resize(nb);
        for (std::size_t n = 1; n < nb; ++n) {
            kernel_[n].reserve(n);
            for (std::size_t k = 0; k < n; ++k) kernel_[n].push_back((psi_[n] - psi_[k]) / psi_[n - k]);
        }
    }

    PsiKind kind_;
    std::string spec_;
    std::optional<Scalar> q_;
    std::vector<Scalar> psi_;
    std::vector<Scalar> fact_;
    std::vector<std::vector<Scalar>> binom_;
    std::vector<std::vector<Scalar>> kernel_;
};

} // namespace ward

#endif
