#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "cells.hpp"
#include "identities.hpp"
#include "quasidet.hpp"
#include "weyl.hpp"

namespace qbruhat {

enum class GeneratorKind { raise, lower, torus, raise_negative, reflection };

/// One elementary factor: x_i(t), y_i(t), h_i(t), x_{-i}(t) or sbar_i.
template <DivisionRing S>
struct Generator {
    GeneratorKind kind;
    int i;
    S t{1};
};

/// x_i(t) = I + t E_{i,i+1}.
template <DivisionRing S>
Matrix<S> raise(int i, int n, const S& t)
{
    return embed_block<S>(n, i, S(1), t, S(0), S(1));
}

/// y_i(t) = I + t E_{i+1,i}.
template <DivisionRing S>
Matrix<S> lower(int i, int n, const S& t)
{
    return embed_block<S>(n, i, S(1), S(0), t, S(1));
}

/// h_i(t) = phi_i(diag(t, t^{-1})).
template <DivisionRing S>
Matrix<S> torus(int i, int n, const S& t)
{
    return embed_block<S>(n, i, t, S(0), S(0), inverse(t));
}

/// x_{-i}(t) = phi_i([[t^{-1}, 0], [1, t]]).
template <DivisionRing S>
Matrix<S> raise_negative(int i, int n, const S& t)
{
    return embed_block<S>(n, i, inverse(t), S(0), S(1), t);
}

template <DivisionRing S>
Matrix<S> generator_matrix(const Generator<S>& g, int n)
{
    switch (g.kind) {
    case GeneratorKind::raise: return raise(g.i, n, g.t);
    case GeneratorKind::lower: return lower(g.i, n, g.t);
    case GeneratorKind::torus: return torus(g.i, n, g.t);
    case GeneratorKind::raise_negative: return raise_negative(g.i, n, g.t);
    case GeneratorKind::reflection: return sbar<S>(g.i, n);
    }
    throw Error("unknown generator kind");
}

/// h * x_{i_1}(t_1) ... x_{i_m}(t_m); a letter -i stands for x_{-i}.
template <DivisionRing S>
Matrix<S> product_map(const DoubleWord& w, const std::vector<S>& t, const std::vector<S>& h = {})
{
    const int n = w.n();
    if (static_cast<int>(t.size()) != w.size())
        throw ShapeMismatch("word has " + std::to_string(w.size()) + " letters, got " + std::to_string(t.size()) +
                            " parameters");
    if (!h.empty() && static_cast<int>(h.size()) != n)
        throw ShapeMismatch("torus part needs " + std::to_string(n) + " entries");
    Matrix<S> x = h.empty() ? Matrix<S>::identity(n) : Matrix<S>::diagonal(h);
    for (int k = 1; k <= w.size(); ++k) {
        const S& tk = t[static_cast<std::size_t>(k - 1)];
        if (is_zero(tk))
            throw ZeroInverse("parameter t_" + std::to_string(k) + " is zero");
        int l = w[k];
        x = x * (l > 0 ? raise(l, n, tk) : raise_negative(-l, n, tk));
    }
    return x;
}

/// Recovered torus part and parameters, aligned with the word.
template <DivisionRing S>
struct FactorizationOutput {
    std::vector<S> h;
    std::vector<S> t;
};

// ---------------------------------------------------------------------------
// Unipotent factorization along (1..n-1; 1..n-2; ...; 1)

/// The word (1, 2, ..., n-1, 1, ..., n-2, ..., 1, 2, 1).
inline DoubleWord standard_unipotent_word(int n)
{
    std::vector<int> w;
    for (int i = 1; i < n; ++i)
        for (int l = 1; l <= n - i; ++l)
            w.push_back(l);
    return DoubleWord(std::move(w), n);
}

/// Position of t_{ij} in the standard unipotent word; its letter is j - i.
inline int standard_position(int n, int i, int j) { return n * (i - 1) - i * (i + 1) / 2 + j; }

/// t_{ij} = |x_{[j-i, j-1], [n-i+1, n]}|_{11} |x_{[j-i+1, j], [n-i+1, n]}|_{11}^{-1},
/// returned in word order.
template <DivisionRing S>
std::vector<S> solve_standard_unipotent(const Matrix<S>& x)
{
    if (!x.square())
        throw ShapeMismatch("unipotent factorization of non-square matrix");
    const int n = x.rows();
    std::vector<S> t(static_cast<std::size_t>(n * (n - 1) / 2));
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto cols = IndexSet::interval(n - i + 1, n);
            try {
                S top = quasidet(submatrix(x, IndexSet::interval(j - i, j - 1), cols), 1, 1);
                S bottom = quasidet(submatrix(x, IndexSet::interval(j - i + 1, j), cols), 1, 1);
                if (is_zero(bottom) || is_zero(top))
                    throw NotGeneric("zero quasiminor");
                t[static_cast<std::size_t>(standard_position(n, i, j) - 1)] = top * inverse(bottom);
            }
            catch (const NotGeneric& e) {
                throw NotGeneric("t_{" + std::to_string(i) + "," + std::to_string(j) + "}: " + e.witness());
            }
        }
    return t;
}

// ---------------------------------------------------------------------------
// Column-clearing factorization x = x(n-1,n-1) * prod x_k(t_{m,k})

template <DivisionRing S>
struct ClearingStep {
    int m;
    int k;
    S t;
    Matrix<S> stage; // x(m,k)
};

template <DivisionRing S>
struct UpperFactorization {
    std::vector<ClearingStep<S>> steps; // (1,n-1), ..., (1,1), (2,n-1), ..., (n-1,n-1)

    const Matrix<S>& residual() const { return steps.back().stage; }

    const ClearingStep<S>& at(int m, int k) const
    {
        for (const auto& s : steps)
            if (s.m == m && s.k == k)
                return s;
        throw IndexOutOfRange("stage (" + std::to_string(m) + "," + std::to_string(k) + ")");
    }

    /// residual * prod_{m=n-1..1} x_m(t_{m,m}) ... x_{n-1}(t_{m,n-1}).
    Matrix<S> rebuild(int n) const
    {
        Matrix<S> r = steps.empty() ? Matrix<S>() : residual();
        for (int m = n - 1; m >= 1; --m)
            for (int k = m; k <= n - 1; ++k)
                r = r * raise(k, n, at(m, k).t);
        return r;
    }
};

/// Delta^{m,k}_{[1,m],[k-m+1,k]}(x)^{-1} Delta^{m,k+1}_{[1,m],[k-m+2,k+1]}(x).
template <DivisionRing S>
S clearing_parameter(const Matrix<S>& x, int m, int k)
{
    auto rows = IndexSet::interval(1, m);
    S den = positive_quasiminor(x, MinorSpec(rows, IndexSet::interval(k - m + 1, k), m, k));
    S num = positive_quasiminor(x, MinorSpec(rows, IndexSet::interval(k - m + 2, k + 1), m, k + 1));
    if (is_zero(den))
        throw NotGeneric("D^{" + std::to_string(m) + "," + std::to_string(k) + "} vanishes");
    return inverse(den) * num;
}

/// Closed form for entry (i, j) of the stage x(m, k).
template <DivisionRing S>
S expected_stage_entry(const Matrix<S>& x, int m, int k, int i, int j)
{
    if ((i < j && i < m) || (i == m && j > k))
        return S(0);
    std::vector<int> rows;
    IndexSet cols;
    if (j <= k) {
        int p = std::min(m, j);
        for (int r = 1; r <= p - 1; ++r)
            rows.push_back(r);
        cols = IndexSet::interval(j - p + 1, j);
    }
    else {
        for (int r = 1; r <= m; ++r)
            rows.push_back(r);
        cols = IndexSet::interval(j - m, j);
    }
    rows.push_back(i);
    return quasidet(select(x, rows, cols.items()), static_cast<int>(rows.size()), cols.size());
}

/// Clears the strictly upper part column by column with x_k(-t) on the right.
/// A lower triangular input needs no clearing: all t vanish and every stage is x.
template <DivisionRing S>
UpperFactorization<S> upper_factorize(const Matrix<S>& x)
{
    if (!x.square())
        throw ShapeMismatch("factorization of non-square matrix");
    const int n = x.rows();
    UpperFactorization<S> r;
    const bool already_lower = is_lower_triangular(x);
    Matrix<S> cur = x;
    for (int m = 1; m <= n - 1; ++m)
        for (int k = n - 1; k >= m; --k) {
            S t(0);
            if (!already_lower) {
                try {
                    t = clearing_parameter(x, m, k);
                }
                catch (const NotGeneric& e) {
                    throw NotGeneric("t_{" + std::to_string(m) + "," + std::to_string(k) + "}: " + e.witness());
                }
                cur = cur * raise(k, n, -t);
            }
            r.steps.push_back({m, k, t, cur});
        }
    return r;
}

// ---------------------------------------------------------------------------
// Parameter recovery on double Bruhat cells

namespace detail {

/// Both stated forms of t_k; IdentityViolation when they differ.
template <DivisionRing S>
S twisted_parameter(const Matrix<S>& y, const DoubleWord& w, int k)
{
    const auto p = w.subword_perms(k);
    const int letter = w[k];
    const int i = std::abs(letter);
    auto d = [&](int level, const Permutation& a, const Permutation& b) {
        S v = delta(y, level, a, b);
        return v;
    };
    S first, second;
    if (letter < 0) {
        first = inverse(d(i, p.v_lt, p.u_gt)) * d(i, p.v_lt, p.u_ge);
        second = inverse(d(i + 1, p.v_lt, p.u_ge)) * d(i + 1, p.v_lt, p.u_gt);
    }
    else {
        first = inverse(d(i, p.v_le, p.u_gt)) * d(i + 1, p.v_lt, p.u_gt);
        second = inverse(d(i, p.v_lt, p.u_gt)) * d(i + 1, p.v_le, p.u_gt);
    }
    if (!(first == second))
        throw IdentityViolation("t_" + std::to_string(k) + " forms disagree: " + to_string(first) + " vs " +
                                to_string(second));
    return first;
}

} // namespace detail

/// h_i = Delta^{u^{-1}(i)}_{u,e}(x) and t_k through quasiminors of psi^{u,v}(x).
template <DivisionRing S>
FactorizationOutput<S> recover_params(const Matrix<S>& x, const DoubleWord& w)
{
    const int n = w.n();
    if (x.rows() != n || x.cols() != n)
        throw ShapeMismatch("matrix size does not match word degree");
    const Permutation u = w.u(), v = w.v();
    const auto label = classify(x);
    if (!(label == CellLabel{u, v}))
        throw WrongCell("word is for " + CellLabel{u, v}.str() + ", matrix lies in " + label.str());
    FactorizationOutput<S> out;
    const auto e = Permutation::identity(n);
    const auto uinv = u.inverse();
    for (int i = 1; i <= n; ++i)
        out.h.push_back(delta(x, uinv(i), u, e));
    const Matrix<S> y = twist_general(x, u, v);
    for (int k = 1; k <= w.size(); ++k) {
        try {
            out.t.push_back(detail::twisted_parameter(y, w, k));
        }
        catch (const NotGeneric& err) {
            throw NotGeneric("t_" + std::to_string(k) + ": " + err.witness());
        }
        catch (const ZeroInverse&) {
            throw NotGeneric("t_" + std::to_string(k) + ": vanishing quasiminor");
        }
    }
    if (!(product_map(w, out.t, out.h) == x))
        throw IdentityViolation("recovered parameters do not reproduce x");
    return out;
}

// ---------------------------------------------------------------------------
// Factorizations of G^{u,w0} and G^{w0,v}

template <DivisionRing S>
struct PositiveStandardFactorization {
    std::vector<ClearingStep<S>> steps; // t_{m,k} with stages, upper_factorize order
    Matrix<S> lower_part;               // x_- in G^{u,e}
};

/// x = x_- * prod_{m=n-1..1} x_m(t_{m,m}) ... x_{n-1}(t_{m,n-1}) for x in G^{u,w0};
/// each t is also read off psi^{u,w0}(x) and the two must agree.
template <DivisionRing S>
PositiveStandardFactorization<S> factor_u_w0(const Matrix<S>& x)
{
    const int n = x.rows();
    const auto label = classify(x);
    if (label.v.is_identity())
        return {{}, x};
    if (!(label.v == Permutation::longest(n)))
        throw WrongCell("expected v = w0, found " + label.v.str());
    auto up = upper_factorize(x);
    const Matrix<S> y = twist_general(x, label.u, label.v);
    for (const auto& s : up.steps) {
        const int i = s.m, j = s.k;
        S twisted = inverse(positive_quasiminor(
                        y, MinorSpec(IndexSet::interval(1, i) | IndexSet::interval(n + i + 1 - j, n),
                                     IndexSet::interval(1, j), i, j))) *
                    positive_quasiminor(y, MinorSpec(IndexSet::interval(1, i) | IndexSet::interval(n + i - j, n),
                                                     IndexSet::interval(1, j + 1), i, j + 1));
        if (!(twisted == s.t))
            throw IdentityViolation("t_{" + std::to_string(i) + "," + std::to_string(j) +
                                    "}: direct and twisted expressions differ");
    }
    return {up.steps, up.residual()};
}

template <DivisionRing S>
struct NegativeStandardFactorization {
    std::vector<S> h;
    struct Param {
        int m;
        int k;
        S tau;
    };
    std::vector<Param> tau; // m = 1..n-1, k = m..n-1
    Matrix<S> upper_part;   // x_+ in G^{e,v}

    const S& at(int m, int k) const
    {
        for (const auto& p : tau)
            if (p.m == m && p.k == k)
                return p.tau;
        throw IndexOutOfRange("tau (" + std::to_string(m) + "," + std::to_string(k) + ")");
    }

    /// diag(h) prod_{m=n-1..1} x_{-m}(tau_{m,m}) ... x_{-(n-1)}(tau_{m,n-1}).
    Matrix<S> lower_part() const
    {
        const int n = static_cast<int>(h.size());
        Matrix<S> l = Matrix<S>::diagonal(h);
        for (int m = n - 1; m >= 1; --m)
            for (int k = m; k <= n - 1; ++k)
                l = l * raise_negative(k, n, at(m, k));
        return l;
    }
};

/// x = h x_-^{(n-1)} ... x_-^{(1)} x_+ for x in G^{w0,v}, with
/// h_m = Delta^{m,n+1-m}_{[m,n],[1,n+1-m]} and
/// tau_{m,k} = Delta^{m,k+1-m}_{[m,k],[1,k+1-m]}^{-1} h_m, cross-checked on psi^{w0,v}(x).
template <DivisionRing S>
NegativeStandardFactorization<S> factor_w0_v(const Matrix<S>& x)
{
    const int n = x.rows();
    const auto label = classify(x);
    if (!(label.u == Permutation::longest(n)))
        throw WrongCell("expected u = w0, found " + label.u.str());
    NegativeStandardFactorization<S> r;
    for (int m = 1; m <= n; ++m)
        r.h.push_back(positive_quasiminor(
            x, MinorSpec(IndexSet::interval(m, n), IndexSet::interval(1, n + 1 - m), m, n + 1 - m)));
    for (int m = 1; m < n; ++m)
        for (int k = m; k < n; ++k) {
            S d = positive_quasiminor(
                x, MinorSpec(IndexSet::interval(m, k), IndexSet::interval(1, k + 1 - m), m, k + 1 - m));
            if (is_zero(d))
                throw NotGeneric("tau_{" + std::to_string(m) + "," + std::to_string(k) + "} denominator vanishes");
            r.tau.push_back({m, k, inverse(d) * r.h[static_cast<std::size_t>(m - 1)]});
        }
    const Matrix<S> y = twist_general(x, label.u, label.v);
    for (const auto& p : r.tau) {
        const int i = p.m, j = p.k;
        auto rows = IndexSet::interval(1, j);
        S twisted =
            inverse(positive_quasiminor(
                y, MinorSpec(rows, IndexSet::interval(n + 2 - i, n) | IndexSet::interval(1, j + 1 - i), j, j + 1 - i))) *
            positive_quasiminor(
                y, MinorSpec(rows, IndexSet::interval(n + 1 - i, n) | IndexSet::interval(1, j - i), j, n + 1 - i));
        if (!(twisted == p.tau))
            throw IdentityViolation("tau_{" + std::to_string(i) + "," + std::to_string(j) +
                                    "}: direct and twisted expressions differ");
    }
    r.upper_part = inverse(r.lower_part()) * x;
    if (!is_upper_unitriangular(r.upper_part))
        throw IdentityViolation("x_+ is not upper unitriangular");
    return r;
}

// ---------------------------------------------------------------------------
// Identities for the maximal twist psi^{w0,w0}

template <DivisionRing S>
struct DoubleRatioReport {
    std::vector<Equation<S>> checks;

    bool all_hold() const
    {
        for (const auto& c : checks)
            if (!c.holds())
                return false;
        return true;
    }
    std::size_t failures() const
    {
        std::size_t f = 0;
        for (const auto& c : checks)
            f += !c.holds();
        return f;
    }
};

namespace detail {

template <DivisionRing S>
S pq(const Matrix<S>& z, const IndexSet& rows, const IndexSet& cols, int i, int j)
{
    return positive_quasiminor(z, MinorSpec(rows, cols, i, j));
}

inline IndexSet iv(int a, int b) { return IndexSet::interval(a, b); }

// The four ratio families, indexed by 1 <= i <= j <= n-1.
template <DivisionRing S>
S twisted_t_ratio(const Matrix<S>& z, int n, int i, int j)
{
    return inverse(pq(z, iv(1, i) | iv(n + i + 1 - j, n), iv(1, j), i, j)) *
           pq(z, iv(1, i) | iv(n + i - j, n), iv(1, j + 1), i, j + 1);
}
template <DivisionRing S>
S direct_t_ratio(const Matrix<S>& z, int, int i, int j)
{
    return inverse(pq(z, iv(1, i), iv(j + 1 - i, j), i, j)) * pq(z, iv(1, i), iv(j - i + 2, j + 1), i, j + 1);
}
template <DivisionRing S>
S twisted_tau_ratio(const Matrix<S>& z, int n, int i, int j)
{
    return inverse(pq(z, iv(1, j), iv(n + 2 - i, n) | iv(1, j + 1 - i), j, j + 1 - i)) *
           pq(z, iv(1, j), iv(n + 1 - i, n) | iv(1, j - i), j, n + 1 - i);
}
template <DivisionRing S>
S direct_tau_ratio(const Matrix<S>& z, int n, int i, int j)
{
    return inverse(pq(z, iv(i, j), iv(1, j + 1 - i), i, j + 1 - i)) * pq(z, iv(i, n), iv(1, n + 1 - i), i, n + 1 - i);
}

} // namespace detail

namespace detail {
template <DivisionRing S>
DoubleRatioReport<S> double_ratio_report(const Matrix<S>& x, const Matrix<S>& y, bool with_extras);
} // namespace detail

/// Evaluates every identity relating x and y = psi^{w0,w0}(x).
/// `with_extras` adds two further corollary identities in a best-read form.
template <DivisionRing S>
DoubleRatioReport<S> verify_double_ratios(const Matrix<S>& x, bool with_extras = false)
{
    using namespace detail;
    const int n = x.rows();
    const auto w0 = Permutation::longest(n);
    const auto label = classify(x);
    if (!(label == CellLabel{w0, w0}))
        throw NotGeneric("x is not in the open cell G^{w0,w0}: " + label.str());
    try {
        return detail::double_ratio_report(x, twist_general(x, w0, w0), with_extras);
    }
    catch (const ZeroInverse&) {
        throw NotGeneric("a quasiminor entering the double ratios vanishes");
    }
}

namespace detail {

template <DivisionRing S>
DoubleRatioReport<S> double_ratio_report(const Matrix<S>& x, const Matrix<S>& y, bool with_extras)
{
    const int n = x.rows();
    DoubleRatioReport<S> rep;
    auto tag = [](int i, int j) { return " (i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")"; };
    for (int i = 1; i <= n; ++i)
        rep.checks.push_back({"anti-diagonal invariance (i=" + std::to_string(i) + ")",
                              pq(y, iv(n + 1 - i, n), iv(1, i), n + 1 - i, i),
                              pq(x, iv(n + 1 - i, n), iv(1, i), n + 1 - i, i)});
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) {
            rep.checks.push_back({"twisted t of y = direct t of x" + tag(i, j), twisted_t_ratio(y, n, i, j),
                                  direct_t_ratio(x, n, i, j)});
            rep.checks.push_back({"direct t of y = twisted t of x" + tag(i, j), direct_t_ratio(y, n, i, j),
                                  twisted_t_ratio(x, n, i, j)});
            rep.checks.push_back({"twisted tau of y = direct tau of x" + tag(i, j), twisted_tau_ratio(y, n, i, j),
                                  direct_tau_ratio(x, n, i, j)});
            rep.checks.push_back({"direct tau of y = twisted tau of x" + tag(i, j), direct_tau_ratio(y, n, i, j),
                                  twisted_tau_ratio(x, n, i, j)});
            rep.checks.push_back({"corollary product" + tag(i, j), pq(y, iv(i, j), iv(1, j + 1 - i), i, j + 1 - i),
                                  pq(x, iv(i, n), iv(1, n + 1 - i), i, n + 1 - i) *
                                      inverse(pq(x, iv(1, j), iv(n + 1 - i, n) | iv(1, j - i), j, n + 1 - i)) *
                                      pq(x, iv(1, j), iv(n + 2 - i, n) | iv(1, j + 1 - i), j, j + 1 - i)});
            if (with_extras) {
                auto lead = [&](const Matrix<S>& z) { return inverse(pq(z, iv(1, i), iv(1, i), i, i)); };
                auto wrapped = [&](const Matrix<S>& z) { return pq(z, iv(1, i) | iv(n + i - j + 1, n), iv(1, j), i, j); };
                auto block = [&](const Matrix<S>& z) { return pq(z, iv(1, i), iv(j - i + 1, j), i, j); };
                rep.checks.push_back({"corollary extra wrapped" + tag(i, j), lead(y) * wrapped(y), lead(x) * block(x)});
                rep.checks.push_back({"corollary extra block" + tag(i, j), lead(y) * block(y), lead(x) * wrapped(x)});
            }
        }
    return rep;
}

} // namespace detail

} // namespace qbruhat
