#pragma once

#include <array>
#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "rational.hpp"

namespace qbruhat {

/// Exact quaternion a + b i + c j + d k over the rationals.
///
/// Multiplication follows i^2 = j^2 = k^2 = ijk = -1 and is not commutative.
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(int a) : a_(a) {}
    Quaternion(long a) : a_(a) {}
    Quaternion(Rational a) : a_(std::move(a)) {}
    Quaternion(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    const Rational& re() const noexcept { return a_; }
    const Rational& im_i() const noexcept { return b_; }
    const Rational& im_j() const noexcept { return c_; }
    const Rational& im_k() const noexcept { return d_; }

    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }

    Quaternion conj() const { return {a_, -b_, -c_, -d_}; }

    /// a^2 + b^2 + c^2 + d^2; zero only at 0.
    Rational norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

    Quaternion operator-() const { return {-a_, -b_, -c_, -d_}; }
    Quaternion& operator+=(const Quaternion& o)
    {
        a_ += o.a_; b_ += o.b_; c_ += o.c_; d_ += o.d_;
        return *this;
    }
    Quaternion& operator-=(const Quaternion& o)
    {
        a_ -= o.a_; b_ -= o.b_; c_ -= o.c_; d_ -= o.d_;
        return *this;
    }

    friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
    friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }

    /// Hamilton product.
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y)
    {
        const mpq_class &xa = x.a_.value(), &xb = x.b_.value(), &xc = x.c_.value(), &xd = x.d_.value();
        const mpq_class &ya = y.a_.value(), &yb = y.b_.value(), &yc = y.c_.value(), &yd = y.d_.value();
        return {Rational::from_canonical(xa * ya - xb * yb - xc * yc - xd * yd),
                Rational::from_canonical(xa * yb + xb * ya + xc * yd - xd * yc),
                Rational::from_canonical(xa * yc - xb * yd + xc * ya + xd * yb),
                Rational::from_canonical(xa * yd + xb * yc - xc * yb + xd * ya)};
    }
    Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }

    friend bool operator==(const Quaternion& x, const Quaternion& y) = default;

    /// Canonical text: nonzero components only, e.g. "1/2-i+3*k"; zero prints as "0".
    std::string str() const
    {
        std::string out;
        auto term = [&](const Rational& c, const char* unit) {
            if (c.is_zero())
                return;
            std::string coef;
            if (*unit == '\0')
                coef = c.str();
            else if (c == Rational(1))
                coef = unit;
            else if (c == Rational(-1))
                coef = std::string("-") + unit;
            else
                coef = c.str() + "*" + unit;
            if (!out.empty() && coef.front() != '-')
                out += '+';
            out += coef;
        };
        term(a_, "");
        term(b_, "i");
        term(c_, "j");
        term(d_, "k");
        return out.empty() ? "0" : out;
    }

    /// Parses sums of terms "r", "r*u", "u", "-u" (u in {i,j,k}, r rational "p" or "p/q").
    /// Accepts the full "a+b*i+c*j+d*k" form as well as the canonical output of str().
    static Quaternion parse(std::string_view text)
    {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch)))
                s += ch;
        if (s.empty())
            throw ParseError("empty quaternion");
        std::array<Rational, 4> parts{};
        std::size_t pos = 0;
        while (pos < s.size()) {
            bool negative = false;
            if (s[pos] == '+' || s[pos] == '-') {
                negative = s[pos] == '-';
                ++pos;
            }
            else if (pos != 0) {
                throw ParseError("quaternion '" + s + "'");
            }
            std::size_t end = pos;
            while (end < s.size() && s[end] != '+' && s[end] != '-')
                ++end;
            std::string_view term(s.data() + pos, end - pos);
            if (term.empty())
                throw ParseError("quaternion '" + s + "'");
            int slot = 0;
            Rational coef(1);
            char last = term.back();
            if (last == 'i' || last == 'j' || last == 'k') {
                slot = last == 'i' ? 1 : last == 'j' ? 2 : 3;
                std::string_view head = term.substr(0, term.size() - 1);
                if (!head.empty()) {
                    if (head.back() != '*')
                        throw ParseError("quaternion term '" + std::string(term) + "'");
                    coef = Rational::parse(head.substr(0, head.size() - 1));
                }
            }
            else {
                coef = Rational::parse(term);
            }
            parts[slot] += negative ? -coef : coef;
            pos = end;
        }
        return {parts[0], parts[1], parts[2], parts[3]};
    }

    friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.str(); }

private:
    Rational a_, b_, c_, d_;
};

inline bool is_zero(const Quaternion& q) { return q.is_zero(); }

/// conj(q) / norm(q).
inline Quaternion inverse(const Quaternion& q)
{
    if (q.is_zero())
        throw ZeroInverse();
    Rational n = inverse(q.norm());
    return {q.re() * n, -q.im_i() * n, -q.im_j() * n, -q.im_k() * n};
}

inline std::string to_string(const Quaternion& q) { return q.str(); }

} // namespace qbruhat
