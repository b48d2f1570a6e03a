#pragma once

#include <array>
#include <string>

#include "quasidet.hpp"

namespace qbruhat {

/// Two independently evaluated sides of an identity.
template <DivisionRing S>
struct Equation {
    std::string name;
    S lhs;
    S rhs;

    bool holds() const { return lhs == rhs; }
    std::string str() const { return name + ": " + to_string(lhs) + (holds() ? " == " : " != ") + to_string(rhs); }
};

namespace detail {

template <DivisionRing S>
S quasidet_deleting(const Matrix<S>& a, int drop_row, int drop_col, int i, int j)
{
    const int n = a.rows();
    return quasidet_at(a, IndexSet::interval(1, n).without(drop_row), IndexSet::interval(1, n).without(drop_col), i, j);
}

inline void require_distinct(int a, int b, const char* what)
{
    if (a == b)
        throw IndexOutOfRange(std::string(what) + " must differ");
}

} // namespace detail

/// -|A|_ij |A^{il}|^{-1}_sj = |A|_il |A^{ij}|^{-1}_sl, for l != j and s != i.
template <DivisionRing S>
Equation<S> row_homological(const Matrix<S>& a, int i, int j, int l, int s)
{
    detail::require_distinct(l, j, "l and j");
    detail::require_distinct(s, i, "s and i");
    const int n = a.rows();
    S full = qbruhat::quasidet_at(a, IndexSet::interval(1, n), IndexSet::interval(1, n), i, j);
    S other = qbruhat::quasidet_at(a, IndexSet::interval(1, n), IndexSet::interval(1, n), i, l);
    return {"row homological (i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",l=" + std::to_string(l) +
                ",s=" + std::to_string(s) + ")",
            -full * inverse(detail::quasidet_deleting(a, i, l, s, j)),
            other * inverse(detail::quasidet_deleting(a, i, j, s, l))};
}

/// -|A^{kj}|^{-1}_it |A|_ij = |A^{ij}|^{-1}_kt |A|_kj, for k != i and t != j.
template <DivisionRing S>
Equation<S> column_homological(const Matrix<S>& a, int i, int j, int k, int t)
{
    detail::require_distinct(k, i, "k and i");
    detail::require_distinct(t, j, "t and j");
    const int n = a.rows();
    S full = qbruhat::quasidet_at(a, IndexSet::interval(1, n), IndexSet::interval(1, n), i, j);
    S other = qbruhat::quasidet_at(a, IndexSet::interval(1, n), IndexSet::interval(1, n), k, j);
    return {"column homological (i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",k=" + std::to_string(k) +
                ",t=" + std::to_string(t) + ")",
            -inverse(detail::quasidet_deleting(a, k, j, i, t)) * full,
            inverse(detail::quasidet_deleting(a, i, j, k, t)) * other};
}

/// True when l(u s_i) = l(u) + 1 and l(v s_i) = l(v) + 1.
inline bool dodgson_admissible(const Permutation& u, const Permutation& v, int i)
{
    auto si = Permutation::simple(i, u.size());
    return (u * si).length() == u.length() + 1 && (v * si).length() == v.length() + 1;
}

/// The five exchange identities between Delta^i and Delta^{i+1} at (u, v).
template <DivisionRing S>
std::array<Equation<S>, 5> dodgson_identities(const Matrix<S>& x, const Permutation& u, const Permutation& v, int i)
{
    if (!dodgson_admissible(u, v, i))
        throw InvalidWord("Dodgson identities need l(us_i) = l(u)+1 and l(vs_i) = l(v)+1");
    auto si = Permutation::simple(i, u.size());
    auto us = u * si, vs = v * si;
    auto d = [&](int k, const Permutation& a, const Permutation& b) { return delta(x, k, a, b); };
    S d_uv = d(i, u, v), d_usv = d(i, us, v), d_uvs = d(i, u, vs), d_usvs = d(i, us, vs);
    S e_uv = d(i + 1, u, v), e_usv = d(i + 1, us, v), e_uvs = d(i + 1, u, vs);
    std::string tag = " (u=" + u.str() + ",v=" + v.str() + ",i=" + std::to_string(i) + ")";
    return {{
        {"dodgson 1" + tag, d_usvs, d_usv * inverse(d_uv) * d_uvs + e_uv},
        {"dodgson 2" + tag, inverse(d_usv) * e_uv, inverse(d_uv) * e_usv},
        {"dodgson 3" + tag, e_uv * inverse(d_uvs), e_uvs * inverse(d_uv)},
        {"dodgson 4" + tag, e_uv * inverse(e_usv), d_usv * inverse(d_uv)},
        {"dodgson 5" + tag, inverse(e_uvs) * e_uv, inverse(d_uv) * d_uvs},
    }};
}

/// True when l(w s_i s_{i+1} s_i) = l(w) + 3.
inline bool plucker_admissible(const Permutation& w, int i)
{
    const int n = w.size();
    if (i < 1 || i > n - 2)
        return false;
    auto si = Permutation::simple(i, n), sj = Permutation::simple(i + 1, n);
    return (w * si * sj * si).length() == w.length() + 3;
}

/// Three-term relation varying the row permutation u.
template <DivisionRing S>
Equation<S> plucker_rows(const Matrix<S>& x, const Permutation& u, const Permutation& v, int i)
{
    if (!plucker_admissible(u, i))
        throw InvalidWord("row Plucker relation needs l(u s_i s_{i+1} s_i) = l(u)+3");
    auto si = Permutation::simple(i, u.size()), sj = Permutation::simple(i + 1, u.size());
    return {"plucker rows (u=" + u.str() + ",v=" + v.str() + ",i=" + std::to_string(i) + ")",
            delta(x, i + 1, u * sj, v),
            delta(x, i + 1, u * si * sj, v) +
                delta(x, i, u * sj * si, v) * inverse(delta(x, i, u * si, v)) * delta(x, i + 1, u, v)};
}

/// Three-term relation varying the column permutation v.
template <DivisionRing S>
Equation<S> plucker_cols(const Matrix<S>& x, const Permutation& u, const Permutation& v, int i)
{
    if (!plucker_admissible(v, i))
        throw InvalidWord("column Plucker relation needs l(v s_i s_{i+1} s_i) = l(v)+3");
    auto si = Permutation::simple(i, v.size()), sj = Permutation::simple(i + 1, v.size());
    return {"plucker cols (u=" + u.str() + ",v=" + v.str() + ",i=" + std::to_string(i) + ")",
            delta(x, i + 1, u, v * sj),
            delta(x, i + 1, u, v * si * sj) +
                delta(x, i + 1, u, v) * inverse(delta(x, i, u, v * si)) * delta(x, i, u, v * sj * si)};
}

} // namespace qbruhat
