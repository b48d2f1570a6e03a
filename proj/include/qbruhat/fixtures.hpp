#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "factorize.hpp"
#include "identities.hpp"

namespace qbruhat {

/// A worked factorization: the matrix built from named parameters and the
/// closed-form expressions that must give those parameters back.
template <DivisionRing S>
struct Fixture {
    std::string name;
    Matrix<S> x;
    std::vector<std::pair<std::string, S>> params;
    std::vector<Equation<S>> checks;

    bool all_hold() const
    {
        for (const auto& c : checks)
            if (!c.holds())
                return false;
        return true;
    }
};

/// Supplies the value of a named parameter (a fresh symbol or a sample).
template <DivisionRing S>
using ParamSource = std::function<S(const std::string&)>;

namespace detail {

template <DivisionRing S>
S entry(const Matrix<S>& x, int i, int j)
{
    return x.at(i, j);
}

/// |x_{rows,cols}|_{i,j} with the boxed entry given by labels.
template <DivisionRing S>
S boxed(const Matrix<S>& x, IndexSet rows, IndexSet cols, int i, int j)
{
    return quasidet_at(x, rows, cols, i, j);
}

} // namespace detail

/// Upper triangular 3x3 = diag(x11, x22, x33) x_1(t12) x_2(t13) x_1(t23).
template <DivisionRing S>
Fixture<S> borel_gl3_fixture(const ParamSource<S>& param)
{
    using detail::entry;
    Fixture<S> f{"borel-gl3", {}, {}, {}};
    std::vector<S> h{param("h1"), param("h2"), param("h3")};
    S t12 = param("t12"), t13 = param("t13"), t23 = param("t23");
    f.params = {{"t12", t12}, {"t13", t13}, {"t23", t23}};
    DoubleWord w({1, 2, 1}, 3);
    f.x = product_map(w, std::vector<S>{t12, t13, t23}, h);
    const auto& x = f.x;
    auto x11 = entry(x, 1, 1), x13 = entry(x, 1, 3), x22 = entry(x, 2, 2), x23 = entry(x, 2, 3);
    f.checks.push_back({"t13 = x22^-1 x23", t13, inverse(x22) * x23});
    f.checks.push_back({"t12 = x11^-1 x13 x23^-1 x22", t12, inverse(x11) * x13 * inverse(x23) * x22});
    f.checks.push_back({"t23 = x11^-1 |x12* x13; x22 x23|", t23,
                        inverse(x11) * detail::boxed(x, IndexSet{1, 2}, IndexSet{2, 3}, 1, 2)});
    f.checks.push_back({"x11 = h1", h[0], x11});
    f.checks.push_back({"x33 = h3", h[2], entry(x, 3, 3)});
    f.checks.push_back({"x12 = h1 (t12 + t23)", h[0] * (t12 + t23), entry(x, 1, 2)});
    f.checks.push_back({"x13 = h1 t12 t13", h[0] * t12 * t13, x13});
    return f;
}

/// 3x3 = h x_{-2}(t1) x_{-1}(t2) x_{-2}(t3) x_2(t4) x_1(t5) x_2(t6).
template <DivisionRing S>
Fixture<S> gl3_fixture(const ParamSource<S>& param, bool with_recovery = true)
{
    using detail::boxed;
    using detail::entry;
    Fixture<S> f{"gl3", {}, {}, {}};
    std::vector<S> h{param("h1"), param("h2"), param("h3")};
    std::vector<S> t;
    for (int k = 1; k <= 6; ++k)
        t.push_back(param("t" + std::to_string(k)));
    for (int k = 1; k <= 3; ++k)
        f.params.push_back({"h" + std::to_string(k), h[static_cast<std::size_t>(k - 1)]});
    for (int k = 1; k <= 6; ++k)
        f.params.push_back({"t" + std::to_string(k), t[static_cast<std::size_t>(k - 1)]});
    DoubleWord w({-2, -1, -2, 2, 1, 2}, 3);
    f.x = product_map(w, t, h);
    const auto& x = f.x;
    const IndexSet all{1, 2, 3}, top{1, 2}, bottom{2, 3};
    S full13 = boxed(x, all, all, 1, 3);
    S lower22 = boxed(x, bottom, IndexSet{1, 2}, 2, 2);
    f.checks.push_back({"h3 = x31", h[2], entry(x, 3, 1)});
    f.checks.push_back({"h2 = -|x21 x22*; x31 x32|", h[1], -lower22});
    f.checks.push_back({"h1 = |x|_13", h[0], full13});
    f.checks.push_back({"t6 = x12^-1 x13", t[5], inverse(entry(x, 1, 2)) * entry(x, 1, 3)});
    f.checks.push_back({"t5 = x11^-1 x12", t[4], inverse(entry(x, 1, 1)) * entry(x, 1, 2)});
    f.checks.push_back({"t4 = |x11 x12; x21 x22*|^-1 |x12 x13; x22 x23*|", t[3],
                        inverse(boxed(x, top, top, 2, 2)) * boxed(x, top, bottom, 2, 3)});
    f.checks.push_back({"t4 expanded", t[3],
                        inverse(entry(x, 2, 2) - entry(x, 2, 1) * inverse(entry(x, 1, 1)) * entry(x, 1, 2)) *
                            (entry(x, 2, 3) - entry(x, 2, 2) * inverse(entry(x, 1, 2)) * entry(x, 1, 3))});
    f.checks.push_back({"t1 = -x21^-1 |x21 x22*; x31 x32|", t[0], -inverse(entry(x, 2, 1)) * lower22});
    f.checks.push_back({"t2 = x11^-1 |x|_13", t[1], inverse(entry(x, 1, 1)) * full13});
    f.checks.push_back({"t3 = -|x11 x12*; x21 x22|^-1 |x|_13", t[2], -inverse(boxed(x, top, top, 1, 2)) * full13});
    if (with_recovery) {
        auto out = recover_params(x, w);
        for (int k = 1; k <= 3; ++k)
            f.checks.push_back({"recovered h" + std::to_string(k), h[static_cast<std::size_t>(k - 1)],
                                out.h[static_cast<std::size_t>(k - 1)]});
        for (int k = 1; k <= 6; ++k)
            f.checks.push_back({"recovered t" + std::to_string(k), t[static_cast<std::size_t>(k - 1)],
                                out.t[static_cast<std::size_t>(k - 1)]});
    }
    return f;
}

/// Unipotent 4x4 = x_1(t12) x_2(t13) x_3(t14) x_1(t23) x_2(t24) x_1(t34).
template <DivisionRing S>
Fixture<S> unipotent_gl4_fixture(const ParamSource<S>& param)
{
    using detail::boxed;
    using detail::entry;
    Fixture<S> f{"unipotent-gl4", {}, {}, {}};
    S t12 = param("t12"), t13 = param("t13"), t14 = param("t14"), t23 = param("t23"), t24 = param("t24"),
      t34 = param("t34");
    f.params = {{"t12", t12}, {"t13", t13}, {"t14", t14}, {"t23", t23}, {"t24", t24}, {"t34", t34}};
    std::vector<S> t{t12, t13, t14, t23, t24, t34};
    f.x = product_map(standard_unipotent_word(4), t);
    const auto& x = f.x;
    S inner = boxed(x, IndexSet{2, 3}, IndexSet{3, 4}, 2, 3);
    f.checks.push_back({"t14 = x34", t14, entry(x, 3, 4)});
    f.checks.push_back({"t13 = x24 x34^-1", t13, entry(x, 2, 4) * inverse(entry(x, 3, 4))});
    f.checks.push_back({"t12 = x14 x24^-1", t12, entry(x, 1, 4) * inverse(entry(x, 2, 4))});
    f.checks.push_back({"t24 = |x23* x24; 1 x34|", t24, inner});
    f.checks.push_back({"t24 expanded", t24, entry(x, 2, 3) - entry(x, 2, 4) * inverse(entry(x, 3, 4))});
    f.checks.push_back({"t23 = |x13* x14; x23 x24| |x23* x24; 1 x34|^-1", t23,
                        boxed(x, IndexSet{1, 2}, IndexSet{3, 4}, 1, 3) * inverse(inner)});
    f.checks.push_back({"t34 = |x12* x13 x14; 1 x23 x24; 0 1 x34|", t34,
                        boxed(x, IndexSet{1, 2, 3}, IndexSet{2, 3, 4}, 1, 2)});
    f.checks.push_back({"x12 = t12 + t23 + t34", t12 + t23 + t34, entry(x, 1, 2)});
    f.checks.push_back({"x13 = t12 t13 + t12 t24 + t23 t24", t12 * t13 + t12 * t24 + t23 * t24, entry(x, 1, 3)});
    f.checks.push_back({"x14 = t12 t13 t14", t12 * t13 * t14, entry(x, 1, 4)});
    f.checks.push_back({"x23 = t13 + t24", t13 + t24, entry(x, 2, 3)});
    f.checks.push_back({"x24 = t13 t14", t13 * t14, entry(x, 2, 4)});
    auto solved = solve_standard_unipotent(x);
    for (std::size_t k = 0; k < t.size(); ++k)
        f.checks.push_back({"solver " + f.params[k].first, t[k], solved[k]});
    return f;
}

/// 3x3 = h x_{-2}(tau22) x_{-1}(tau11) x_{-2}(tau12) x_+ with x_+ = x_1(a) x_2(b) x_1(c).
template <DivisionRing S>
Fixture<S> negative_standard_gl3_fixture(const ParamSource<S>& param, bool with_factorization = true)
{
    Fixture<S> f{"negative-standard-gl3", {}, {}, {}};
    std::vector<S> h{param("h1"), param("h2"), param("h3")};
    S tau11 = param("tau11"), tau12 = param("tau12"), tau22 = param("tau22");
    S a = param("a"), b = param("b"), c = param("c");
    f.params = {{"tau11", tau11}, {"tau12", tau12}, {"tau22", tau22}};
    DoubleWord w({-2, -1, -2, 1, 2, 1}, 3);
    f.x = product_map(w, std::vector<S>{tau22, tau11, tau12, a, b, c}, h);
    const auto& x = f.x;
    auto pq = [&](IndexSet r, IndexSet cc, int i, int j) { return positive_quasiminor(x, MinorSpec(r, cc, i, j)); };
    S top = pq(IndexSet{1, 2, 3}, IndexSet{1, 2, 3}, 1, 3);
    f.checks.push_back({"tau11 = x11^-1 D^{1,3}_{123,123}", tau11, inverse(x.at(1, 1)) * top});
    f.checks.push_back({"tau12 = D^{1,2}_{12,12}^-1 D^{1,3}_{123,123}", tau12,
                        inverse(pq(IndexSet{1, 2}, IndexSet{1, 2}, 1, 2)) * top});
    f.checks.push_back({"tau22 = x21^-1 D^{2,2}_{23,12}", tau22,
                        inverse(x.at(2, 1)) * pq(IndexSet{2, 3}, IndexSet{1, 2}, 2, 2)});
    f.checks.push_back({"h3 = x31", h[2], x.at(3, 1)});
    if (with_factorization) {
        auto r = factor_w0_v(x);
        for (int k = 1; k <= 3; ++k)
            f.checks.push_back({"factor h" + std::to_string(k), h[static_cast<std::size_t>(k - 1)],
                                r.h[static_cast<std::size_t>(k - 1)]});
        f.checks.push_back({"factor tau11", tau11, r.at(1, 1)});
        f.checks.push_back({"factor tau12", tau12, r.at(1, 2)});
        f.checks.push_back({"factor tau22", tau22, r.at(2, 2)});
    }
    return f;
}

} // namespace qbruhat
