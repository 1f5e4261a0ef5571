#ifndef WARD_RATIONAL_HPP
#define WARD_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <ward/error.hpp>

namespace ward
{

// Arbitrary-precision rational, always in lowest terms with a positive
// denominator. Thin value wrapper over GMP's mpq_class.
class Rational
{
public:
    Rational() = default;

    Rational(long value) : v_(value) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(const mpz_class &num, const mpz_class &den)
    {
        if (den == 0) {
            throw error(errc::division_by_zero, "rational with zero denominator");
        }
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(const mpq_class &v) : v_(v)
    {
        v_.canonicalize();
    }

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(std::string_view text)
    {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        auto valid_int = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s) {
                if (c < '0' || c > '9') return false;
            }
            return true;
        };
        auto to_mpz = [](std::string_view s) {
            if (!s.empty() && s.front() == '+') s.remove_prefix(1);
            return mpz_class(std::string(s), 10);
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            if (!valid_int(text)) {
                throw error(errc::parse_error, "not a rational: '" + std::string(text) + "'");
            }
            return Rational(to_mpz(text), mpz_class(1));
        }
        auto num = trim(text.substr(0, slash));
        auto den = trim(text.substr(slash + 1));
        if (!valid_int(num) || !valid_int(den)) {
            throw error(errc::parse_error, "not a rational: '" + std::string(text) + "'");
        }
        return Rational(to_mpz(num), to_mpz(den));
    }

    // "p/q", or "p" when the denominator is one.
    std::string str() const
    {
        if (is_integer()) {
            return v_.get_num().get_str();
        }
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    mpz_class numerator() const
    {
        return v_.get_num();
    }
    mpz_class denominator() const
    {
        return v_.get_den();
    }
    const mpq_class &raw() const noexcept
    {
        return v_;
    }

    bool is_zero() const noexcept
    {
        return sgn(v_) == 0;
    }
    bool is_one() const
    {
        return v_ == 1;
    }
    bool is_integer() const
    {
        return v_.get_den() == 1;
    }
    int sign() const noexcept
    {
        return sgn(v_);
    }

    Rational inverse() const
    {
        if (is_zero()) {
            throw error(errc::division_by_zero, "inverse of zero rational");
        }
        return Rational(mpq_class(1 / v_));
    }

    Rational operator-() const
    {
        return Rational(mpq_class(-v_));
    }

    Rational &operator+=(const Rational &o)
    {
        v_ += o.v_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        v_ -= o.v_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        v_ *= o.v_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw error(errc::division_by_zero, "rational division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.str();
    }

private:
    mpq_class v_;
};

// Integer power with a possibly negative exponent.
inline Rational pow(const Rational &base, long exponent)
{
    if (exponent < 0) {
        return pow(base.inverse(), -exponent);
    }
    Rational result(1), b = base;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1u) result *= b;
        e >>= 1;
        if (e != 0) b *= b;
    }
    return result;
}

} // namespace ward

#endif
