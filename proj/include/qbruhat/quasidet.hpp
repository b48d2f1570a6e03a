#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "weyl.hpp"

namespace qbruhat {

/// |A|_{pq} = a_pq - r_p (A^{pq})^{-1} c_q, positions 1-based within A.
template <DivisionRing S>
S quasidet(const Matrix<S>& a, int p, int q)
{
    if (!a.square() || a.rows() == 0)
        throw ShapeMismatch("quasideterminant of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    const int n = a.rows();
    if (p < 1 || p > n || q < 1 || q > n)
        throw IndexOutOfRange("marked position (" + std::to_string(p) + "," + std::to_string(q) + ")");
    if (n == 1)
        return a(1, 1);
    // Eliminate every column but q using rows other than p; what is left at
    // (p, q) is a_pq - r_p (A^{pq})^{-1} c_q. Row operations act from the left.
    Matrix<S> m = a;
    std::vector<int> free_rows;
    for (int r = 1; r <= n; ++r)
        if (r != p)
            free_rows.push_back(r);
    std::size_t used = 0;
    for (int col = 1; col <= n; ++col) {
        if (col == q)
            continue;
        std::size_t pick = used;
        while (pick < free_rows.size() && is_zero(m(free_rows[pick], col)))
            ++pick;
        if (pick == free_rows.size())
            throw NotGeneric("A^{" + std::to_string(p) + "," + std::to_string(q) + "} singular in " + a.str());
        std::swap(free_rows[used], free_rows[pick]);
        const int pivot = free_rows[used++];
        const S pinv = inverse(m(pivot, col));
        auto clear = [&](int r) {
            if (is_zero(m(r, col)))
                return;
            S f = m(r, col) * pinv;
            for (int c = 1; c <= n; ++c)
                if (c != col && !is_zero(m(pivot, c)))
                    m(r, c) = m(r, c) - f * m(pivot, c);
            m(r, col) = S(0);
        };
        for (std::size_t k = used; k < free_rows.size(); ++k)
            clear(free_rows[k]);
        clear(p);
    }
    return m(p, q);
}

/// Same value through the expansion |A|_pq = a_pq - sum a_pj' |A^{pq}|^{-1}_{i'j'} a_i'q,
/// recursing on the smaller quasideterminants. Cross-check only.
template <DivisionRing S>
S quasidet_expansion(const Matrix<S>& a, int p, int q)
{
    const int n = a.rows();
    if (!a.square() || n == 0)
        throw ShapeMismatch("quasideterminant of non-square matrix");
    if (n == 1)
        return a(1, 1);
    Matrix<S> inner = minor_matrix(a, p, q);
    S acc(0);
    for (int ib = 1; ib < n; ++ib)
        for (int jb = 1; jb < n; ++jb) {
            int row = ib < p ? ib : ib + 1;
            int col = jb < q ? jb : jb + 1;
            S d = quasidet_expansion(inner, ib, jb);
            if (is_zero(d))
                throw NotGeneric("expansion term |A^{" + std::to_string(p) + "," + std::to_string(q) + "}|_{" +
                                 std::to_string(row) + "," + std::to_string(col) + "} is zero");
            acc = acc + a(p, col) * inverse(d) * a(row, q);
        }
    return a(p, q) - acc;
}

/// |x_{I,J}|_{i,j} with i, j given as labels in I, J.
template <DivisionRing S>
S quasidet_at(const Matrix<S>& x, const IndexSet& rows, const IndexSet& cols, int i, int j)
{
    if (rows.size() != cols.size())
        throw ShapeMismatch("|I| != |J|");
    return quasidet(submatrix(x, rows, cols), rows.position(i), cols.position(j));
}

/// (I, J, i, j) descriptor of a positive quasiminor.
struct MinorSpec {
    IndexSet rows;
    IndexSet cols;
    int i = 0;
    int j = 0;

    MinorSpec() = default;
    MinorSpec(IndexSet r, IndexSet c, int mark_row, int mark_col)
        : rows(std::move(r)), cols(std::move(c)), i(mark_row), j(mark_col)
    {
        if (rows.size() != cols.size())
            throw ShapeMismatch("minor spec with |I| = " + std::to_string(rows.size()) +
                                ", |J| = " + std::to_string(cols.size()));
        if (!rows.contains(i) || !cols.contains(j))
            throw IndexOutOfRange("marked position outside minor " + str());
    }

    /// Sign exponent d_i(I) + d_j(J).
    int sign_exponent() const { return rows.count_greater(i) + cols.count_greater(j); }

    std::string str() const
    {
        return "D^{" + std::to_string(i) + "," + std::to_string(j) + "}_{" + rows.str() + "," + cols.str() + "}";
    }
};

/// (-1)^{d_i(I)+d_j(J)} |x_{I,J}|_{i,j}.
template <DivisionRing S>
S positive_quasiminor(const Matrix<S>& x, const MinorSpec& m)
{
    S v;
    try {
        v = quasidet_at(x, m.rows, m.cols, m.i, m.j);
    }
    catch (const NotGeneric&) {
        throw NotGeneric(m.str());
    }
    return m.sign_exponent() % 2 == 0 ? v : -v;
}

/// Convenience overload taking the descriptor pieces directly.
template <DivisionRing S>
S positive_quasiminor(const Matrix<S>& x, const IndexSet& rows, const IndexSet& cols, int i, int j)
{
    return positive_quasiminor(x, MinorSpec(rows, cols, i, j));
}

/// Principal quasiminor |x_{[1,k],[1,k]}|_{k,k}.
template <DivisionRing S>
S principal_quasiminor(const Matrix<S>& x, int k)
{
    auto r = IndexSet::interval(1, k);
    return positive_quasiminor(x, MinorSpec(r, r, k, k));
}

/// (u, v, k) descriptor of the quasiminor Delta^k_{u,v}.
struct SnMinorSpec {
    Permutation u;
    Permutation v;
    int k = 0;

    /// I = u[1,k], J = v[1,k], i = u(k), j = v(k).
    MinorSpec to_minor_spec() const
    {
        if (u.size() != v.size())
            throw ShapeMismatch("u and v of different degree");
        if (k < 1 || k > u.size())
            throw IndexOutOfRange("level " + std::to_string(k));
        std::vector<int> rows, cols;
        for (int a = 1; a <= k; ++a) {
            rows.push_back(u(a));
            cols.push_back(v(a));
        }
        return MinorSpec(IndexSet::of(rows), IndexSet::of(cols), u(k), v(k));
    }

    std::string str() const { return "D^" + std::to_string(k) + "_{" + u.str() + "," + v.str() + "}"; }
};

/// Delta^k_{u,v}(x) through the (I, J, i, j) descriptor.
template <DivisionRing S>
S delta(const Matrix<S>& x, int k, const Permutation& u, const Permutation& v)
{
    return positive_quasiminor(x, SnMinorSpec{u, v, k}.to_minor_spec());
}

/// Delta^k(ubar^{-1} x vbar) with signed representatives.
template <DivisionRing S>
S delta_by_conjugation(const Matrix<S>& x, const SnMinorSpec& s)
{
    Matrix<S> c = inverse(representative<S>(s.u)) * x * representative<S>(s.v);
    try {
        return principal_quasiminor(c, s.k);
    }
    catch (const NotGeneric&) {
        throw NotGeneric(s.str());
    }
}

/// Delta^k_{u,v}(x) evaluated both ways; IdentityViolation if they differ.
template <DivisionRing S>
S quasiminor_indexed(const Matrix<S>& x, const SnMinorSpec& s)
{
    S direct = positive_quasiminor(x, s.to_minor_spec());
    S conj = delta_by_conjugation(x, s);
    if (!(direct == conj))
        throw IdentityViolation(s.str() + ": descriptor " + to_string(direct) + " vs conjugation " + to_string(conj));
    return direct;
}

namespace detail {

/// Evaluates f at the two smallest auxiliary indices where it is defined
/// and insists the values agree.
template <class S, class F>
S independent_of_aux(int count, const char* what, F&& f)
{
    std::optional<S> first;
    int first_at = 0;
    for (int s = 1; s <= count; ++s) {
        std::optional<S> v;
        try {
            v = f(s);
        }
        catch (const NotGeneric&) {
            continue;
        }
        catch (const ZeroInverse&) {
            continue;
        }
        if (!first) {
            first = std::move(v);
            first_at = s;
            continue;
        }
        if (!(*first == *v))
            throw IdentityViolation(std::string(what) + " differs between auxiliary indices " +
                                    std::to_string(first_at) + " and " + std::to_string(s));
        return *first;
    }
    if (!first)
        throw NotGeneric(std::string(what) + ": no auxiliary index gives defined quasideterminants");
    return *first;
}

inline std::vector<int> prepend(int head, const IndexSet& rest)
{
    std::vector<int> v{head};
    v.insert(v.end(), rest.begin(), rest.end());
    return v;
}

} // namespace detail

/// Left quasi-Plucker coordinate q^I_{ij}(A) of a k x n matrix.
template <DivisionRing S>
S quasi_plucker_left(const Matrix<S>& a, int i, int j, const IndexSet& others)
{
    const int k = a.rows();
    if (others.size() != k - 1)
        throw ShapeMismatch("|I| must be k-1 = " + std::to_string(k - 1));
    if (others.contains(i))
        throw IndexOutOfRange("i in I for left quasi-Plucker coordinate");
    std::vector<int> all_rows;
    for (int r = 1; r <= k; ++r)
        all_rows.push_back(r);
    auto ci = detail::prepend(i, others);
    auto cj = detail::prepend(j, others);
    Matrix<S> mi = select(a, all_rows, ci);
    Matrix<S> mj = select(a, all_rows, cj);
    return detail::independent_of_aux<S>(k, "left quasi-Plucker coordinate", [&](int s) {
        return inverse(quasidet(mi, s, 1)) * quasidet(mj, s, 1);
    });
}

/// Right quasi-Plucker coordinate r^I_{ij}(B) of an n x k matrix.
template <DivisionRing S>
S quasi_plucker_right(const Matrix<S>& b, int i, int j, const IndexSet& others)
{
    const int k = b.cols();
    if (others.size() != k - 1)
        throw ShapeMismatch("|I| must be k-1 = " + std::to_string(k - 1));
    if (others.contains(j))
        throw IndexOutOfRange("j in I for right quasi-Plucker coordinate");
    std::vector<int> all_cols;
    for (int c = 1; c <= k; ++c)
        all_cols.push_back(c);
    auto ri = detail::prepend(i, others);
    auto rj = detail::prepend(j, others);
    Matrix<S> mi = select(b, ri, all_cols);
    Matrix<S> mj = select(b, rj, all_cols);
    return detail::independent_of_aux<S>(k, "right quasi-Plucker coordinate", [&](int t) {
        return quasidet(mi, 1, t) * inverse(quasidet(mj, 1, t));
    });
}

/// Result of pivoting A on the block A_{I0,J0}.
template <DivisionRing S>
struct SylvesterReduction {
    Matrix<S> reduced;  // b_pq = |A_{I0+p, J0+q}|_{pq}
    IndexSet row_labels; // complement of I0, labels of reduced's rows
    IndexSet col_labels;

    /// |B|_{st} for original labels s, t.
    S quasidet_at(int s, int t) const
    {
        return quasidet(reduced, row_labels.position(s), col_labels.position(t));
    }
};

/// Builds B with b_pq = |A_{I0 u {p}, J0 u {q}}|_{pq}; then |A|_st = |B|_st.
template <DivisionRing S>
SylvesterReduction<S> sylvester_reduce(const Matrix<S>& a, const IndexSet& pivot_rows, const IndexSet& pivot_cols)
{
    if (!a.square())
        throw ShapeMismatch("Sylvester reduction of non-square matrix");
    if (pivot_rows.size() != pivot_cols.size())
        throw ShapeMismatch("pivot block is not square");
    if (!pivot_rows.empty()) {
        try {
            (void)inverse(submatrix(a, pivot_rows, pivot_cols));
        }
        catch (const NotGeneric&) {
            throw NotGeneric("pivot block " + pivot_rows.str() + "x" + pivot_cols.str() + " singular");
        }
    }
    const int n = a.rows();
    SylvesterReduction<S> r{Matrix<S>(n - pivot_rows.size(), n - pivot_cols.size()), pivot_rows.complement(n),
                            pivot_cols.complement(n)};
    for (int a_ = 1; a_ <= r.row_labels.size(); ++a_)
        for (int b_ = 1; b_ <= r.col_labels.size(); ++b_) {
            int p = r.row_labels[a_], q = r.col_labels[b_];
            r.reduced(a_, b_) = qbruhat::quasidet_at(a, pivot_rows | IndexSet{p}, pivot_cols | IndexSet{q}, p, q);
        }
    return r;
}

} // namespace qbruhat
