#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace qbruhat {

/// Strictly increasing list of 1-based indices.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> items) : IndexSet(std::vector<int>(items)) {}
    explicit IndexSet(std::vector<int> items) : items_(std::move(items))
    {
        for (std::size_t k = 0; k < items_.size(); ++k) {
            if (items_[k] < 1)
                throw IndexOutOfRange("index set entry " + std::to_string(items_[k]));
            if (k > 0 && items_[k] <= items_[k - 1])
                throw Error("index set must be strictly increasing");
        }
    }

    /// {a, a+1, ..., b}; empty when a > b.
    static IndexSet interval(int a, int b)
    {
        std::vector<int> v;
        for (int k = a; k <= b; ++k)
            v.push_back(k);
        return IndexSet(std::move(v));
    }

    /// Sorts and deduplicates arbitrary input.
    static IndexSet of(std::vector<int> items)
    {
        std::sort(items.begin(), items.end());
        items.erase(std::unique(items.begin(), items.end()), items.end());
        return IndexSet(std::move(items));
    }

    int size() const noexcept { return static_cast<int>(items_.size()); }
    bool empty() const noexcept { return items_.empty(); }
    int operator[](int k) const { return items_.at(static_cast<std::size_t>(k - 1)); } // 1-based
    bool contains(int i) const { return std::binary_search(items_.begin(), items_.end(), i); }

    /// 1-based position of i within the set.
    int position(int i) const
    {
        auto it = std::lower_bound(items_.begin(), items_.end(), i);
        if (it == items_.end() || *it != i)
            throw IndexOutOfRange(std::to_string(i) + " not in index set");
        return static_cast<int>(it - items_.begin()) + 1;
    }

    /// Number of elements strictly greater than i.
    int count_greater(int i) const
    {
        return static_cast<int>(items_.end() - std::upper_bound(items_.begin(), items_.end(), i));
    }

    IndexSet without(int i) const
    {
        std::vector<int> v;
        for (int a : items_)
            if (a != i)
                v.push_back(a);
        return IndexSet(std::move(v));
    }

    /// Elements of [1, n] not in the set.
    IndexSet complement(int n) const
    {
        std::vector<int> v;
        for (int a = 1; a <= n; ++a)
            if (!contains(a))
                v.push_back(a);
        return IndexSet(std::move(v));
    }

    friend IndexSet operator|(const IndexSet& a, const IndexSet& b)
    {
        std::vector<int> v = a.items_;
        v.insert(v.end(), b.items_.begin(), b.items_.end());
        return of(std::move(v));
    }

    std::span<const int> items() const noexcept { return items_; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;

    std::string str() const
    {
        std::string s = "{";
        for (std::size_t k = 0; k < items_.size(); ++k)
            s += (k ? "," : "") + std::to_string(items_[k]);
        return s + "}";
    }

private:
    std::vector<int> items_;
};

/// Dense rows x cols matrix over a division ring, addressed 1-based.
template <DivisionRing S>
class Matrix {
public:
    using scalar_type = S;

    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), S(0))
    {
        if (rows < 0 || cols < 0)
            throw ShapeMismatch("negative dimension");
    }
    Matrix(std::initializer_list<std::initializer_list<S>> rows)
    {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_)
                throw ShapeMismatch("ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 1; i <= n; ++i)
            m(i, i) = S(1);
        return m;
    }

    static Matrix diagonal(std::span<const S> d)
    {
        int n = static_cast<int>(d.size());
        Matrix m(n, n);
        for (int i = 1; i <= n; ++i)
            m(i, i) = d[static_cast<std::size_t>(i - 1)];
        return m;
    }

    /// Matrix unit E_{ij}.
    static Matrix unit(int n, int i, int j)
    {
        Matrix m(n, n);
        m.at(i, j) = S(1);
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    S& operator()(int i, int j)
    {
        assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
        return data_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
    }
    const S& operator()(int i, int j) const
    {
        assert(i >= 1 && i <= rows_ && j >= 1 && j <= cols_);
        return data_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
    }

    S& at(int i, int j)
    {
        check(i, j);
        return (*this)(i, j);
    }
    const S& at(int i, int j) const
    {
        check(i, j);
        return (*this)(i, j);
    }

    std::span<const S> entries() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator+(const Matrix& a, const Matrix& b)
    {
        same_shape(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] = r.data_[k] + b.data_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        same_shape(a, b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k)
            r.data_[k] = r.data_[k] - b.data_[k];
        return r;
    }

    /// Standard product; left factor entries multiply on the left.
    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw ShapeMismatch(std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " * " +
                                std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
        Matrix r(a.rows_, b.cols_);
        for (int i = 1; i <= a.rows_; ++i)
            for (int k = 1; k <= a.cols_; ++k) {
                const S& aik = a(i, k);
                if (is_zero(aik))
                    continue;
                for (int j = 1; j <= b.cols_; ++j)
                    if (!is_zero(b(k, j)))
                        r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }

    /// Multiplies every entry by s from the left.
    friend Matrix operator*(const S& s, Matrix m)
    {
        for (auto& e : m.data_)
            e = s * e;
        return m;
    }

    std::string str() const
    {
        std::string s = "[";
        for (int i = 1; i <= rows_; ++i) {
            s += i > 1 ? ", [" : "[";
            for (int j = 1; j <= cols_; ++j)
                s += (j > 1 ? ", " : "") + to_string((*this)(i, j));
            s += "]";
        }
        return s + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << m.str(); }

private:
    void check(int i, int j) const
    {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw IndexOutOfRange("(" + std::to_string(i) + "," + std::to_string(j) + ") in " +
                                  std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    static void same_shape(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw ShapeMismatch("elementwise operation");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<S> data_;
};

/// Rows and columns picked in the given order (repeats allowed).
template <DivisionRing S>
Matrix<S> select(const Matrix<S>& x, std::span<const int> rows, std::span<const int> cols)
{
    Matrix<S> r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b)
            r(static_cast<int>(a) + 1, static_cast<int>(b) + 1) = x.at(rows[a], cols[b]);
    return r;
}

/// x_{I,J}: entry (a,b) is x[I_a, J_b].
template <DivisionRing S>
Matrix<S> submatrix(const Matrix<S>& x, const IndexSet& I, const IndexSet& J)
{
    return select(x, I.items(), J.items());
}

/// A^{pq}: delete row p and column q.
template <DivisionRing S>
Matrix<S> minor_matrix(const Matrix<S>& a, int p, int q)
{
    return submatrix(a, IndexSet::interval(1, a.rows()).without(p), IndexSet::interval(1, a.cols()).without(q));
}

template <DivisionRing S>
Matrix<S> transpose(const Matrix<S>& x)
{
    Matrix<S> r(x.cols(), x.rows());
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = 1; j <= x.cols(); ++j)
            r(j, i) = x(i, j);
    return r;
}

/// Inverse by Gauss-Jordan elimination with first-nonzero pivoting.
///
/// Row operations apply their coefficients on the left, so the accumulated
/// operator is exactly x^{-1} over a skew field.
template <DivisionRing S>
Matrix<S> inverse(const Matrix<S>& x)
{
    if (!x.square())
        throw ShapeMismatch("inverse of non-square matrix");
    const int n = x.rows();
    Matrix<S> a = x;
    Matrix<S> r = Matrix<S>::identity(n);
    auto swap_rows = [n](Matrix<S>& m, int p, int q) {
        for (int j = 1; j <= n; ++j)
            std::swap(m(p, j), m(q, j));
    };
    for (int c = 1; c <= n; ++c) {
        int p = c;
        while (p <= n && is_zero(a(p, c)))
            ++p;
        if (p > n)
            throw NotGeneric("singular matrix: no pivot in column " + std::to_string(c));
        if (p != c) {
            swap_rows(a, p, c);
            swap_rows(r, p, c);
        }
        S piv = inverse(a(c, c));
        for (int j = 1; j <= n; ++j) {
            a(c, j) = piv * a(c, j);
            r(c, j) = piv * r(c, j);
        }
        for (int i = 1; i <= n; ++i) {
            if (i == c || is_zero(a(i, c)))
                continue;
            S f = a(i, c);
            for (int j = 1; j <= n; ++j) {
                a(i, j) = a(i, j) - f * a(c, j);
                r(i, j) = r(i, j) - f * r(c, j);
            }
        }
    }
    return r;
}

/// sigma(x)_{ij} = x_{n+1-i, n+1-j}.
template <DivisionRing S>
Matrix<S> sigma(const Matrix<S>& x)
{
    if (!x.square())
        throw ShapeMismatch("sigma of non-square matrix");
    const int n = x.rows();
    Matrix<S> r(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            r(i, j) = x(n + 1 - i, n + 1 - j);
    return r;
}

/// J_n = diag(-1, 1, -1, ..., (-1)^n).
template <DivisionRing S>
Matrix<S> alternating_signs(int n)
{
    Matrix<S> j(n, n);
    for (int i = 1; i <= n; ++i)
        j(i, i) = i % 2 == 0 ? S(1) : S(-1);
    return j;
}

/// Positive inverse x^iota = J_n x^{-1} J_n, an involutive antiautomorphism
/// fixing diagonal inverses and the elementary generators x_i(t), y_i(t).
template <DivisionRing S>
Matrix<S> iota(const Matrix<S>& x)
{
    Matrix<S> inv = inverse(x);
    const int n = x.rows();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if ((i + j) % 2 == 1)
                inv(i, j) = -inv(i, j);
    return inv;
}

template <DivisionRing S>
bool is_diagonal(const Matrix<S>& x)
{
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = 1; j <= x.cols(); ++j)
            if (i != j && !is_zero(x(i, j)))
                return false;
    return true;
}

template <DivisionRing S>
bool is_lower_triangular(const Matrix<S>& x)
{
    for (int i = 1; i <= x.rows(); ++i)
        for (int j = i + 1; j <= x.cols(); ++j)
            if (!is_zero(x(i, j)))
                return false;
    return true;
}

template <DivisionRing S>
bool is_upper_triangular(const Matrix<S>& x)
{
    return is_lower_triangular(transpose(x));
}

template <DivisionRing S>
bool has_unit_diagonal(const Matrix<S>& x)
{
    for (int i = 1; i <= std::min(x.rows(), x.cols()); ++i)
        if (!(x(i, i) == S(1)))
            return false;
    return true;
}

template <DivisionRing S>
bool is_upper_unitriangular(const Matrix<S>& x)
{
    return is_upper_triangular(x) && has_unit_diagonal(x);
}

template <DivisionRing S>
bool is_lower_unitriangular(const Matrix<S>& x)
{
    return is_lower_triangular(x) && has_unit_diagonal(x);
}

template <DivisionRing S>
std::vector<S> diagonal_entries(const Matrix<S>& x)
{
    std::vector<S> d;
    for (int i = 1; i <= std::min(x.rows(), x.cols()); ++i)
        d.push_back(x(i, i));
    return d;
}

/// Rank of the row space, computed by row reduction with left coefficients.
template <DivisionRing S>
int rank(Matrix<S> a)
{
    int r = 0;
    for (int c = 1; c <= a.cols() && r < a.rows(); ++c) {
        int p = r + 1;
        while (p <= a.rows() && is_zero(a(p, c)))
            ++p;
        if (p > a.rows())
            continue;
        ++r;
        for (int j = 1; j <= a.cols(); ++j)
            std::swap(a(p, j), a(r, j));
        S piv = inverse(a(r, c));
        for (int i = r + 1; i <= a.rows(); ++i) {
            if (is_zero(a(i, c)))
                continue;
            S f = a(i, c) * piv;
            for (int j = c; j <= a.cols(); ++j)
                a(i, j) = a(i, j) - f * a(r, j);
        }
    }
    return r;
}

/// Sampler helper: dense matrix with small nonzero entries.
template <DivisionRing S>
Matrix<S> random_matrix(Sampler& rng, int rows, int cols, long bound)
{
    Matrix<S> m(rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            m(i, j) = rng.scalar<S>(bound);
    return m;
}

} // namespace qbruhat
