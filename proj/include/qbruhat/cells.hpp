#pragma once

#include <string>
#include <vector>

#include "gauss.hpp"
#include "quasidet.hpp"
#include "weyl.hpp"

namespace qbruhat {

/// (u, v) with x in B u B intersected with B^- v B^-.
struct CellLabel {
    Permutation u;
    Permutation v;

    friend bool operator==(const CellLabel&, const CellLabel&) = default;
    std::string str() const { return "(" + u.str() + ", " + v.str() + ")"; }
};

/// x = n * ubar * b with n in U(u) and b upper triangular.
template <DivisionRing S>
struct BruhatFactorization {
    Permutation u;
    Matrix<S> unipotent;
    Matrix<S> borel;
};

/// Pivot-pattern reduction for B u B.
///
/// Column by column from the left, the bottom-most nonzero entry is the
/// pivot; rows above it are cleared with upper row operations and the row
/// to its right with upper column operations. The pivot rows give u.
template <DivisionRing S>
BruhatFactorization<S> bruhat_factorization(const Matrix<S>& x)
{
    if (!x.square())
        throw ShapeMismatch("Bruhat factorization of non-square matrix");
    const int n = x.rows();
    Matrix<S> m = x;
    Matrix<S> row_ops = Matrix<S>::identity(n);
    Matrix<S> col_ops = Matrix<S>::identity(n);
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        int r = n;
        while (r >= 1 && is_zero(m(r, j)))
            --r;
        if (r < 1)
            throw NotGeneric("singular matrix: column " + std::to_string(j) + " vanishes after reduction");
        images[static_cast<std::size_t>(j - 1)] = r;
        S pinv = inverse(m(r, j));
        for (int s = 1; s < r; ++s) {
            if (is_zero(m(s, j)))
                continue;
            S f = m(s, j) * pinv;
            for (int c = 1; c <= n; ++c) {
                m(s, c) = m(s, c) - f * m(r, c);
                row_ops(s, c) = row_ops(s, c) - f * row_ops(r, c);
            }
        }
        for (int c = j + 1; c <= n; ++c) {
            if (is_zero(m(r, c)))
                continue;
            S g = pinv * m(r, c);
            for (int a = 1; a <= n; ++a) {
                m(a, c) = m(a, c) - m(a, j) * g;
                col_ops(a, c) = col_ops(a, c) - col_ops(a, j) * g;
            }
        }
    }
    Permutation u(std::move(images));
    Matrix<S> torus = inverse(representative<S>(u)) * m;
    return {u, inverse(row_ops), torus * inverse(col_ops)};
}

/// Pivot-pattern reduction for B^- v B^-: columns from the right, top-most pivot.
template <DivisionRing S>
Permutation opposite_bruhat_cell(const Matrix<S>& x)
{
    if (!x.square())
        throw ShapeMismatch("Bruhat cell of non-square matrix");
    const int n = x.rows();
    Matrix<S> m = x;
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int j = n; j >= 1; --j) {
        int r = 1;
        while (r <= n && is_zero(m(r, j)))
            ++r;
        if (r > n)
            throw NotGeneric("singular matrix: column " + std::to_string(j) + " vanishes after reduction");
        images[static_cast<std::size_t>(j - 1)] = r;
        S pinv = inverse(m(r, j));
        for (int s = r + 1; s <= n; ++s) {
            if (is_zero(m(s, j)))
                continue;
            S f = m(s, j) * pinv;
            for (int c = 1; c <= n; ++c)
                m(s, c) = m(s, c) - f * m(r, c);
        }
        for (int c = 1; c < j; ++c) {
            if (is_zero(m(r, c)))
                continue;
            S g = pinv * m(r, c);
            for (int a = 1; a <= n; ++a)
                m(a, c) = m(a, c) - m(a, j) * g;
        }
    }
    return Permutation(std::move(images));
}

template <DivisionRing S>
CellLabel classify(const Matrix<S>& x)
{
    return {bruhat_factorization(x).u, opposite_bruhat_cell(x)};
}

/// rank x_{[i,n],[1,j]} = #{a <= j : u(a) >= i} for every i, j.
template <DivisionRing S>
bool bruhat_rank_profile_matches(const Matrix<S>& x, const Permutation& u)
{
    const int n = x.rows();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int expected = 0;
            for (int a = 1; a <= j; ++a)
                expected += u(a) >= i;
            if (rank(submatrix(x, IndexSet::interval(i, n), IndexSet::interval(1, j))) != expected)
                return false;
        }
    return true;
}

/// rank x_{[1,i],[j,n]} = #{a >= j : v(a) <= i} for every i, j.
template <DivisionRing S>
bool opposite_rank_profile_matches(const Matrix<S>& x, const Permutation& v)
{
    const int n = x.rows();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int expected = 0;
            for (int a = j; a <= n; ++a)
                expected += v(a) <= i;
            if (rank(submatrix(x, IndexSet::interval(1, i), IndexSet::interval(j, n))) != expected)
                return false;
        }
    return true;
}

/// x in L^{u,v}: right cell and Delta^i_{u,e}(x) = 1 for all i.
template <DivisionRing S>
bool in_reduced_cell(const Matrix<S>& x, const Permutation& u, const Permutation& v)
{
    if (!(classify(x) == CellLabel{u, v}))
        return false;
    auto e = Permutation::identity(x.rows());
    for (int i = 1; i <= x.rows(); ++i)
        if (!(delta(x, i, u, e) == S(1)))
            return false;
    return true;
}

namespace detail {

template <DivisionRing S>
void require_cell(const Matrix<S>& x, const Permutation& u, const Permutation& v)
{
    auto got = classify(x);
    if (!(got == CellLabel{u, v}))
        throw WrongCell("expected " + CellLabel{u, v}.str() + ", found " + got.str());
}

template <DivisionRing S>
GaussParts<S> projection(const Matrix<S>& x, const char* what)
{
    try {
        return gauss_parts(x);
    }
    catch (const NotGeneric& e) {
        throw NotGeneric(std::string("Gauss projection of ") + what + " failed: " + e.witness());
    }
}

/// ([x vbar^{-1}]_-)^iota (x^iota)^{-1} ([ubar^{-1} x]_+)^iota, no cell check.
template <DivisionRing S>
Matrix<S> twist_core(const Matrix<S>& x, const Permutation& u, const Permutation& v)
{
    auto left = projection(x * representative<S>(v.inverse()), "x * rep(v^-1)").minus;
    auto right = projection(inverse(representative<S>(u)) * x, "rep(u)^-1 * x").plus;
    return iota(left) * inverse(iota(x)) * iota(right);
}

/// ubar [ubar^{-1} g]_0 ubar^{-1}.
template <DivisionRing S>
Matrix<S> twist_torus_prefix(const Matrix<S>& g, const Permutation& u)
{
    auto ub = representative<S>(u);
    auto ubinv = inverse(ub);
    return ub * projection(ubinv * g, "rep(u)^-1 * g").zero * ubinv;
}

} // namespace detail

/// psi^{u,v} on the reduced cell L^{u,v}; lands in L^{v,u}.
template <DivisionRing S>
Matrix<S> twist_reduced(const Matrix<S>& x, const Permutation& u, const Permutation& v)
{
    detail::require_cell(x, u, v);
    auto e = Permutation::identity(x.rows());
    for (int i = 1; i <= x.rows(); ++i)
        if (!(delta(x, i, u, e) == S(1)))
            throw WrongCell("not in reduced cell: D^" + std::to_string(i) + "_{u,e}(x) != 1");
    return detail::twist_core(x, u, v);
}

/// General twist on G^{u,v}: u([ubar^{-1} g]_0) times the reduced formula.
template <DivisionRing S>
Matrix<S> twist_general(const Matrix<S>& g, const Permutation& u, const Permutation& v)
{
    detail::require_cell(g, u, v);
    return detail::twist_torus_prefix(g, u) * detail::twist_core(g, u, v);
}

/// Second form: prefix [(vbar g^iota)^{-1}]_+ vbar ([ubar^{-1} g]_+)^iota.
template <DivisionRing S>
Matrix<S> twist_general_second_form(const Matrix<S>& g, const Permutation& u, const Permutation& v)
{
    detail::require_cell(g, u, v);
    auto vb = representative<S>(v);
    auto mid = detail::projection(inverse(vb * iota(g)), "(rep(v) g^iota)^-1").plus;
    auto right = detail::projection(inverse(representative<S>(u)) * g, "rep(u)^-1 * g").plus;
    return detail::twist_torus_prefix(g, u) * mid * vb * iota(right);
}

/// Third form: prefix ([g rep(v^{-1})]_-)^iota rep(u^{-1})^{-1} [rep(u^{-1}) (g^iota)^{-1}]_-.
template <DivisionRing S>
Matrix<S> twist_general_third_form(const Matrix<S>& g, const Permutation& u, const Permutation& v)
{
    detail::require_cell(g, u, v);
    auto left = detail::projection(g * representative<S>(v.inverse()), "g * rep(v^-1)").minus;
    auto uib = representative<S>(u.inverse());
    auto right = detail::projection(uib * inverse(iota(g)), "rep(u^-1) (g^iota)^-1").minus;
    return detail::twist_torus_prefix(g, u) * iota(left) * inverse(uib) * right;
}

} // namespace qbruhat
