#pragma once

#include <string>
#include <vector>

#include "quasidet.hpp"

namespace qbruhat {

/// A = lower * diag * upper with unitriangular outer factors.
template <DivisionRing S>
struct GaussTriple {
    Matrix<S> lower;
    Matrix<S> diag;
    Matrix<S> upper;

    Matrix<S> product() const { return lower * diag * upper; }
};

/// Gauss LDU through quasi-Plucker coordinates of the leading blocks.
///
/// diag_a = |A_{[1,a],[1,a]}|_{aa}; lower_{ba} is the right coordinate of the
/// first a columns and upper_{ab} the left coordinate of the first a rows.
template <DivisionRing S>
GaussTriple<S> ldu(const Matrix<S>& a)
{
    if (!a.square())
        throw ShapeMismatch("LDU of non-square matrix");
    const int n = a.rows();
    GaussTriple<S> r{Matrix<S>::identity(n), Matrix<S>(n, n), Matrix<S>::identity(n)};
    for (int k = 1; k <= n; ++k) {
        S y;
        try {
            y = principal_quasiminor(a, k);
        }
        catch (const NotGeneric&) {
            throw NotInGaussCell("y_" + std::to_string(k) + " undefined");
        }
        if (is_zero(y))
            throw NotInGaussCell("y_" + std::to_string(k) + " = 0");
        r.diag(k, k) = y;
    }
    for (int col = 1; col < n; ++col) {
        auto head = IndexSet::interval(1, col - 1);
        Matrix<S> left_cols = submatrix(a, IndexSet::interval(1, n), IndexSet::interval(1, col));
        Matrix<S> top_rows = submatrix(a, IndexSet::interval(1, col), IndexSet::interval(1, n));
        for (int b = col + 1; b <= n; ++b) {
            r.lower(b, col) = quasi_plucker_right(left_cols, b, col, head);
            r.upper(col, b) = quasi_plucker_left(top_rows, col, b, head);
        }
    }
    return r;
}

/// Independent LDU by plain elimination over the skew field.
template <DivisionRing S>
GaussTriple<S> ldu_by_elimination(const Matrix<S>& a)
{
    if (!a.square())
        throw ShapeMismatch("LDU of non-square matrix");
    const int n = a.rows();
    Matrix<S> m = a;
    GaussTriple<S> r{Matrix<S>::identity(n), Matrix<S>(n, n), Matrix<S>::identity(n)};
    for (int k = 1; k <= n; ++k) {
        const S p = m(k, k);
        if (is_zero(p))
            throw NotInGaussCell("leading " + std::to_string(k) + "x" + std::to_string(k) + " block singular");
        r.diag(k, k) = p;
        S pinv = inverse(p);
        for (int i = k + 1; i <= n; ++i)
            r.lower(i, k) = m(i, k) * pinv;
        for (int j = k + 1; j <= n; ++j)
            r.upper(k, j) = pinv * m(k, j);
        for (int i = k + 1; i <= n; ++i) {
            if (is_zero(m(i, k)))
                continue;
            for (int j = k + 1; j <= n; ++j)
                m(i, j) = m(i, j) - r.lower(i, k) * m(k, j);
        }
    }
    return r;
}

/// [x]_- = lower*diag, [x]_0 = diag, [x]_+ = upper; x = [x]_- [x]_+.
template <DivisionRing S>
struct GaussParts {
    Matrix<S> minus;
    Matrix<S> zero;
    Matrix<S> plus;
};

template <DivisionRing S>
GaussParts<S> gauss_parts(const Matrix<S>& x)
{
    auto t = ldu_by_elimination(x);
    return {t.lower * t.diag, t.diag, t.upper};
}

} // namespace qbruhat
