#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace qbruhat {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}
    Rational(int v) : v_(static_cast<long>(v)) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den)
    {
        if (den == 0)
            throw ZeroInverse("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Wraps a value GMP already produced in lowest terms (results of mpq arithmetic).
    static Rational from_canonical(mpq_class v)
    {
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& value() const noexcept { return v_; }
    bool is_zero() const noexcept { return sgn(v_) == 0; }
    int sign() const noexcept { return sgn(v_); }

    Rational operator-() const { return from_canonical(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw ZeroInverse();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }

    /// Accepts "p" or "p/q" with an optional leading sign; the result is normalized.
    static Rational parse(std::string_view text)
    {
        auto bad = [&] { return ParseError("rational '" + std::string(text) + "'"); };
        if (text.empty())
            throw bad();
        std::size_t pos = 0;
        if (text[0] == '+' || text[0] == '-')
            pos = 1;
        auto digits = [&](std::size_t from, std::size_t to) {
            if (from >= to)
                return false;
            for (std::size_t k = from; k < to; ++k)
                if (!std::isdigit(static_cast<unsigned char>(text[k])))
                    return false;
            return true;
        };
        auto slash = text.find('/');
        std::size_t num_end = slash == std::string_view::npos ? text.size() : slash;
        if (!digits(pos, num_end))
            throw bad();
        mpz_class num(std::string(text.substr(pos, num_end - pos)));
        if (text[0] == '-')
            num = -num;
        mpz_class den = 1;
        if (slash != std::string_view::npos) {
            if (!digits(slash + 1, text.size()))
                throw bad();
            den = mpz_class(std::string(text.substr(slash + 1)));
            if (den == 0)
                throw bad();
        }
        return Rational(num, den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Rational inverse(const Rational& r)
{
    if (r.is_zero())
        throw ZeroInverse();
    return Rational(1) / r;
}

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace qbruhat
