#ifndef WARD_POLY_HPP
#define WARD_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <ward/error.hpp>
#include <ward/rational.hpp>

namespace ward
{

// Dense univariate polynomial over the rationals, coefficient i belonging to
// q^i. No trailing zeros are stored, so the zero polynomial is empty.
class Poly
{
public:
    Poly() = default;

    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
    {
        trim();
    }

    static Poly constant(const Rational &c)
    {
        return Poly(std::vector<Rational>{c});
    }

    // c * q^degree
    static Poly monomial(const Rational &c, std::size_t degree)
    {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return Poly(std::move(v));
    }

    static Poly indeterminate()
    {
        return monomial(Rational(1), 1);
    }

    std::span<const Rational> coeffs() const noexcept
    {
        return c_;
    }

    // Coefficient of q^i (zero past the degree).
    Rational operator[](std::size_t i) const
    {
        return i < c_.size() ? c_[i] : Rational();
    }

    bool is_zero() const noexcept
    {
        return c_.empty();
    }
    bool is_constant() const noexcept
    {
        return c_.size() <= 1;
    }
    bool is_one() const
    {
        return c_.size() == 1 && c_[0].is_one();
    }

    // Degree of the zero polynomial is reported as -1.
    long degree() const noexcept
    {
        return static_cast<long>(c_.size()) - 1;
    }

    const Rational &leading() const
    {
        return c_.back();
    }

    Rational eval(const Rational &point) const
    {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= point;
            acc += *it;
        }
        return acc;
    }

    Poly monic() const
    {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto &x : r.c_) x = -x;
        return r;
    }

    Poly &operator+=(const Poly &o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly &operator-=(const Poly &o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly &b)
    {
        return a += b;
    }
    friend Poly operator-(Poly a, const Poly &b)
    {
        return a -= b;
    }

    // Skips zero coefficients on both sides; kernels in the q-case are pure
    // powers q^k, so this turns most products into shifts.
    friend Poly operator*(const Poly &a, const Poly &b)
    {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(r));
    }

    friend Poly operator*(Poly a, const Rational &s)
    {
        if (s.is_zero()) return Poly();
        for (auto &x : a.c_) x *= s;
        return a;
    }

    Poly &operator*=(const Poly &o)
    {
        return *this = *this * o;
    }

    // Euclidean division: returns (quotient, remainder).
    friend std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b)
    {
        if (b.is_zero()) {
            throw error(errc::division_by_zero, "polynomial division by zero");
        }
        if (a.degree() < b.degree()) return {Poly(), a};
        std::vector<Rational> rem(a.c_.begin(), a.c_.end());
        std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
        const Rational lead_inv = b.leading().inverse();
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = quo.size(); k-- > 0;) {
            const Rational &top = rem[k + db];
            if (top.is_zero()) continue;
            Rational factor = top * lead_inv;
            for (std::size_t j = 0; j <= db; ++j) {
                if (b.c_[j].is_zero()) continue;
                rem[k + j] -= factor * b.c_[j];
            }
            quo[k] = std::move(factor);
        }
        rem.resize(db);
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    // Monic greatest common divisor; gcd(0, 0) = 0.
    friend Poly gcd(Poly a, Poly b)
    {
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = r.monic();
        }
        return a.monic();
    }

    friend bool operator==(const Poly &a, const Poly &b)
    {
        return a.c_ == b.c_;
    }

    // Human-readable form in ascending degree, e.g. "1+q+2q^2-(1/2)q^3".
    std::string str(std::string_view var = "q") const
    {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Rational &c = c_[i];
            if (c.is_zero()) continue;
            const bool neg = c.sign() < 0;
            const Rational mag = neg ? -c : c;
            if (neg) {
                out += "-";
            } else if (!out.empty()) {
                out += "+";
            }
            std::string mono;
            if (i >= 1) {
                mono = std::string(var);
                if (i >= 2) mono += "^" + std::to_string(i);
            }
            if (mono.empty()) {
                out += mag.str();
            } else if (!mag.is_one()) {
                out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
                out += mono;
            } else {
                out += mono;
            }
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const Poly &p)
    {
        return os << p.str();
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace ward

#endif
