#ifndef WARD_SCALAR_HPP
#define WARD_SCALAR_HPP

#include <ostream>
#include <string>
#include <utility>
#include <variant>

#include <ward/error.hpp>
#include <ward/poly.hpp>
#include <ward/rational.hpp>

namespace ward
{

// Element of Q(q): num/den with gcd(num, den) = 1 and den monic. The zero
// element is 0/1. Because the form is canonical, == is semantic equality.
class RatFunc
{
public:
    RatFunc() : den_(Poly::constant(1)) {}

    RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}

    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
    {
        normalize();
    }

    static RatFunc constant(const Rational &c)
    {
        return RatFunc(Poly::constant(c));
    }

    static RatFunc indeterminate()
    {
        return RatFunc(Poly::indeterminate());
    }

    const Poly &num() const noexcept
    {
        return num_;
    }
    const Poly &den() const noexcept
    {
        return den_;
    }

    bool is_zero() const noexcept
    {
        return num_.is_zero();
    }
    bool is_one() const
    {
        return num_.is_one() && den_.is_one();
    }
    bool is_polynomial() const
    {
        return den_.is_one();
    }

    Rational eval(const Rational &point) const
    {
        const Rational d = den_.eval(point);
        if (d.is_zero()) {
            throw error(errc::division_by_zero, "denominator " + den_.str() + " vanishes at q=" + point.str());
        }
        return num_.eval(point) / d;
    }

    RatFunc operator-() const
    {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatFunc inverse() const
    {
        if (is_zero()) {
            throw error(errc::division_by_zero, "inverse of zero rational function");
        }
        if (num_.is_constant()) {
            return RatFunc(den_ * num_[0].inverse());
        }
        // num and den are already coprime; only the monic rescale is needed.
        const Rational lc = num_.leading().inverse();
        return RatFunc(den_ * lc, num_ * lc, reduced_tag{});
    }

    friend RatFunc operator+(const RatFunc &a, const RatFunc &b)
    {
        if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RatFunc operator-(const RatFunc &a, const RatFunc &b)
    {
        return a + (-b);
    }

    friend RatFunc operator*(const RatFunc &a, const RatFunc &b)
    {
        if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RatFunc operator/(const RatFunc &a, const RatFunc &b)
    {
        if (b.is_zero()) {
            throw error(errc::division_by_zero, "rational function division by zero");
        }
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const RatFunc &a, const RatFunc &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(std::string_view var = "q") const
    {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
    }

private:
    struct reduced_tag {
    };

    RatFunc(Poly num, Poly den, reduced_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize()
    {
        if (den_.is_zero()) {
            throw error(errc::division_by_zero, "rational function with zero denominator");
        }
        if (num_.is_zero()) {
            den_ = Poly::constant(1);
            return;
        }
        if (den_.is_constant()) {
            num_ = num_ * den_[0].inverse();
            den_ = Poly::constant(1);
            return;
        }
        // Exact division is the common case for the psi tables.
        auto [quo, rem] = divmod(num_, den_);
        if (rem.is_zero()) {
            num_ = std::move(quo);
            den_ = Poly::constant(1);
            return;
        }
        const Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        const Rational lc = den_.leading().inverse();
        num_ = num_ * lc;
        den_ = den_ * lc;
    }

    Poly num_;
    Poly den_;
};

// Exact field element: either a rational or a rational function of q.
// Arithmetic never mixes the two alternatives.
class Scalar
{
public:
    Scalar() = default;

    Scalar(Rational r) : v_(std::move(r)) {}

    Scalar(RatFunc f) : v_(std::move(f)) {}

    static Scalar from_integer_ratio(long num, long den = 1)
    {
        return Scalar(Rational(num, den));
    }

    bool is_rational() const noexcept
    {
        return std::holds_alternative<Rational>(v_);
    }
    bool is_ratfunc() const noexcept
    {
        return std::holds_alternative<RatFunc>(v_);
    }

    const Rational &as_rational() const
    {
        if (!is_rational()) throw error(errc::variant_mismatch, "scalar is not a rational");
        return std::get<Rational>(v_);
    }
    const RatFunc &as_ratfunc() const
    {
        if (!is_ratfunc()) throw error(errc::variant_mismatch, "scalar is not a rational function");
        return std::get<RatFunc>(v_);
    }

    // Zero and one of the same alternative as *this.
    Scalar zero_like() const
    {
        return is_rational() ? Scalar(Rational()) : Scalar(RatFunc());
    }
    Scalar one_like() const
    {
        return is_rational() ? Scalar(Rational(1)) : Scalar(RatFunc::constant(Rational(1)));
    }

    bool is_zero() const
    {
        return std::visit([](const auto &x) { return x.is_zero(); }, v_);
    }
    bool is_one() const
    {
        return std::visit([](const auto &x) { return x.is_one(); }, v_);
    }

    bool same_variant(const Scalar &o) const noexcept
    {
        return v_.index() == o.v_.index();
    }

    // Specialize q to a rational point; rationals are returned unchanged.
    Rational evaluate(const Rational &q) const
    {
        if (is_rational()) return std::get<Rational>(v_);
        return std::get<RatFunc>(v_).eval(q);
    }

    Scalar inverse() const
    {
        return std::visit([](const auto &x) { return Scalar(x.inverse()); }, v_);
    }

    Scalar operator-() const
    {
        return std::visit([](const auto &x) { return Scalar(-x); }, v_);
    }

    friend Scalar operator+(const Scalar &a, const Scalar &b)
    {
        return binary(a, b, [](const auto &x, const auto &y) { return x + y; });
    }
    friend Scalar operator-(const Scalar &a, const Scalar &b)
    {
        return binary(a, b, [](const auto &x, const auto &y) { return x - y; });
    }
    friend Scalar operator*(const Scalar &a, const Scalar &b)
    {
        return binary(a, b, [](const auto &x, const auto &y) { return x * y; });
    }
    friend Scalar operator/(const Scalar &a, const Scalar &b)
    {
        return binary(a, b, [](const auto &x, const auto &y) { return x / y; });
    }

    Scalar &operator+=(const Scalar &o)
    {
        return *this = *this + o;
    }
    Scalar &operator-=(const Scalar &o)
    {
        return *this = *this - o;
    }
    Scalar &operator*=(const Scalar &o)
    {
        return *this = *this * o;
    }
    Scalar &operator/=(const Scalar &o)
    {
        return *this = *this / o;
    }

    friend bool operator==(const Scalar &a, const Scalar &b)
    {
        if (!a.same_variant(b)) {
            throw error(errc::variant_mismatch, "comparing a rational with a rational function");
        }
        return a.v_ == b.v_;
    }

    std::string str() const
    {
        return std::visit([](const auto &x) { return x.str(); }, v_);
    }

    friend std::ostream &operator<<(std::ostream &os, const Scalar &s)
    {
        return os << s.str();
    }

private:
    template <typename Op>
    static Scalar binary(const Scalar &a, const Scalar &b, Op op)
    {
        if (a.is_rational() && b.is_rational()) {
            return Scalar(op(std::get<Rational>(a.v_), std::get<Rational>(b.v_)));
        }
        if (a.is_ratfunc() && b.is_ratfunc()) {
            return Scalar(op(std::get<RatFunc>(a.v_), std::get<RatFunc>(b.v_)));
        }
        throw error(errc::variant_mismatch, "mixing a rational with a rational function");
    }

    std::variant<Rational, RatFunc> v_;
};

} // namespace ward

#endif
