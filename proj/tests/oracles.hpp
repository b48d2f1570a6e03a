#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's quasideterminant or elimination code.

#include <qbruhat/matrix.hpp>
#include <qbruhat/rational.hpp>

#include <vector>

namespace oracle {

using qbruhat::Matrix;
using qbruhat::Rational;

/// Laplace expansion along the first row.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return Rational(1);
    if (n == 1)
        return a[0][0];
    Rational sum(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (a[0][c].is_zero())
            continue;
        std::vector<std::vector<Rational>> m;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(a[r][k]);
            m.push_back(std::move(row));
        }
        Rational term = a[0][c] * cofactor_det(m);
        sum = (c % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

inline std::vector<std::vector<Rational>> rows_of(const Matrix<Rational>& x, int skip_row = 0, int skip_col = 0)
{
    std::vector<std::vector<Rational>> out;
    for (int i = 1; i <= x.rows(); ++i) {
        if (i == skip_row)
            continue;
        std::vector<Rational> row;
        for (int j = 1; j <= x.cols(); ++j)
            if (j != skip_col)
                row.push_back(x(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

inline Rational det(const Matrix<Rational>& x) { return cofactor_det(rows_of(x)); }

/// (-1)^{p+q} det A / det A^{pq}, the commutative value of |A|_{pq}.
inline Rational commutative_quasidet(const Matrix<Rational>& a, int p, int q)
{
    Rational inner = cofactor_det(rows_of(a, p, q));
    Rational v = det(a) / inner;
    return (p + q) % 2 == 0 ? v : -v;
}

} // namespace oracle
