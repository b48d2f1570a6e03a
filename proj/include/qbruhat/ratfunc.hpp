#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace qbruhat {

namespace symbolic {

/// Exponent vector, trailing zeros trimmed; negative entries allowed.
using Monomial = std::vector<int>;

inline int exponent(const Monomial& m, std::size_t v) { return v < m.size() ? m[v] : 0; }

inline void trim(Monomial& m)
{
    while (!m.empty() && m.back() == 0)
        m.pop_back();
}

/// Lexicographic order with implicit zero padding.
struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        std::size_t n = std::max(a.size(), b.size());
        for (std::size_t v = 0; v < n; ++v) {
            int x = exponent(a, v), y = exponent(b, v);
            if (x != y)
                return x < y;
        }
        return false;
    }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    Monomial r(std::max(a.size(), b.size()), 0);
    for (std::size_t v = 0; v < r.size(); ++v)
        r[v] = exponent(a, v) + exponent(b, v);
    trim(r);
    return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b)
{
    Monomial r(std::max(a.size(), b.size()), 0);
    for (std::size_t v = 0; v < r.size(); ++v)
        r[v] = exponent(a, v) - exponent(b, v);
    trim(r);
    return r;
}

/// Global table of variable names; ids are assigned on first use.
class Variables {
public:
    static std::size_t id(const std::string& name)
    {
        std::lock_guard lock(mutex());
        auto& n = names();
        auto it = std::find(n.begin(), n.end(), name);
        if (it != n.end())
            return static_cast<std::size_t>(it - n.begin());
        n.push_back(name);
        return n.size() - 1;
    }
    static std::string name(std::size_t id)
    {
        std::lock_guard lock(mutex());
        return names().at(id);
    }

private:
    static std::vector<std::string>& names()
    {
        static std::vector<std::string> table;
        return table;
    }
    static std::mutex& mutex()
    {
        static std::mutex m;
        return m;
    }
};

/// Sparse Laurent polynomial with rational coefficients.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, LexLess>;

    Polynomial() = default;
    Polynomial(const Rational& c)
    {
        if (!c.is_zero())
            terms_[{}] = c;
    }
    static Polynomial variable(std::size_t id, int power = 1)
    {
        Monomial m(id + 1, 0);
        m[id] = power;
        trim(m);
        Polynomial p;
        p.terms_[m] = Rational(1);
        return p;
    }
    static Polynomial term(const Monomial& m, const Rational& c)
    {
        Polynomial p;
        if (!c.is_zero())
            p.terms_[m] = c;
        return p;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    const Terms& terms() const noexcept { return terms_; }
    std::pair<Monomial, Rational> leading() const { return *terms_.rbegin(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_)
            r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const
    {
        Polynomial r = *this;
        for (auto& [m, c] : r.terms_)
            c = -c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Componentwise minimum exponent over all terms.
    Monomial min_exponents() const
    {
        Monomial r;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (first) {
                r = m;
                first = false;
                continue;
            }
            std::size_t n = std::max(r.size(), m.size());
            r.resize(n, 0);
            for (std::size_t v = 0; v < n; ++v)
                r[v] = std::min(r[v], exponent(m, v));
        }
        trim(r);
        return r;
    }

    Polynomial shifted(const Monomial& by) const
    {
        Polynomial r;
        for (const auto& [m, c] : terms_)
            r.terms_[mono_mul(m, by)] = c;
        return r;
    }

    Polynomial scaled(const Rational& s) const
    {
        Polynomial r;
        if (s.is_zero())
            return r;
        for (const auto& [m, c] : terms_)
            r.terms_[m] = c * s;
        return r;
    }

    /// a / b when b divides a exactly in the Laurent ring.
    static std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b)
    {
        if (b.is_zero())
            throw ZeroInverse("polynomial division");
        if (a.is_zero())
            return Polynomial();
        if (b.is_monomial()) {
            auto [mb, cb] = b.leading();
            Polynomial r;
            for (const auto& [m, c] : a.terms_)
                r.terms_[mono_div(m, mb)] = c / cb;
            return r;
        }
        // Move both into the ordinary polynomial ring, then long-divide.
        Monomial sa = a.min_exponents(), sb = b.min_exponents();
        Polynomial num = a.shifted(negate(sa));
        Polynomial den = b.shifted(negate(sb));
        auto [md, cd] = den.leading();
        Polynomial q;
        while (!num.is_zero()) {
            auto [mr, cr] = num.leading();
            std::size_t n = std::max(mr.size(), md.size());
            for (std::size_t v = 0; v < n; ++v)
                if (exponent(mr, v) < exponent(md, v))
                    return std::nullopt;
            Polynomial t = term(mono_div(mr, md), cr / cd);
            q = q + t;
            num = num - t * den;
        }
        return q.shifted(mono_div(sa, sb));
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string mono;
            for (std::size_t v = 0; v < m.size(); ++v) {
                if (m[v] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += Variables::name(v);
                if (m[v] != 1)
                    mono += "^" + std::to_string(m[v]);
            }
            std::string coef;
            if (mono.empty())
                coef = c.str();
            else if (c == Rational(1))
                coef = mono;
            else if (c == Rational(-1))
                coef = "-" + mono;
            else
                coef = c.str() + "*" + mono;
            if (!out.empty() && coef.front() != '-')
                out += "+";
            out += coef;
        }
        return out;
    }

private:
    static Monomial negate(Monomial m)
    {
        for (int& e : m)
            e = -e;
        return m;
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    Terms terms_;
};

} // namespace symbolic

/// Commutative field of rational functions over Q in named variables.
///
/// Kept as numerator/denominator Laurent polynomials. Only exact
/// divisions are cancelled, so equality compares cross products.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(int c) : num_(Rational(c)), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(symbolic::Polynomial num, symbolic::Polynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero())
            throw ZeroInverse("rational function with zero denominator");
        normalize();
    }

    static RationalFunction variable(const std::string& name)
    {
        return {symbolic::Polynomial::variable(symbolic::Variables::id(name)), symbolic::Polynomial(Rational(1))};
    }

    const symbolic::Polynomial& numerator() const noexcept { return num_; }
    const symbolic::Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den_ == b.den_)
            return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    RationalFunction operator-() const
    {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        // cancel crosswise first to keep the pieces small
        symbolic::Polynomial an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
        if (auto q = symbolic::Polynomial::exact_divide(an, bd)) {
            an = *q;
            bd = symbolic::Polynomial(Rational(1));
        }
        if (auto q = symbolic::Polynomial::exact_divide(bn, ad)) {
            bn = *q;
            ad = symbolic::Polynomial(Rational(1));
        }
        return {an * bn, ad * bd};
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den_ == b.den_)
            return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str() const
    {
        if (den_ == symbolic::Polynomial(Rational(1)))
            return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    friend RationalFunction inverse(const RationalFunction& f);

    void normalize()
    {
        if (num_.is_zero()) {
            den_ = symbolic::Polynomial(Rational(1));
            return;
        }
        if (!den_.is_constant() || !(den_.leading().second == Rational(1))) {
            if (auto q = symbolic::Polynomial::exact_divide(num_, den_)) {
                num_ = *q;
                den_ = symbolic::Polynomial(Rational(1));
                return;
            }
        }
        // monic denominator
        Rational lead = den_.leading().second;
        if (!(lead == Rational(1))) {
            Rational s = Rational(1) / lead;
            num_ = num_.scaled(s);
            den_ = den_.scaled(s);
        }
    }

    symbolic::Polynomial num_;
    symbolic::Polynomial den_{Rational(1)};
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

inline RationalFunction inverse(const RationalFunction& f)
{
    if (f.is_zero())
        throw ZeroInverse("rational function");
    return {f.den_, f.num_};
}

inline std::string to_string(const RationalFunction& f) { return f.str(); }

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

} // namespace qbruhat
