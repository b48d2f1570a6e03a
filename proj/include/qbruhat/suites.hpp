#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cells.hpp"
#include "factorize.hpp"
#include "gauss.hpp"
#include "identities.hpp"
#include "matrix_io.hpp"

namespace qbruhat {

/// Outcome of one property suite run.
struct SuiteResult {
    std::string suite;
    int n = 0;
    int trials = 0;
    int passed = 0;
    int failed = 0;
    int exhausted = 0; // trials that stayed non-generic for the whole retry budget
    long checks = 0;
    std::optional<nlohmann::json> counterexample; // first failure, replayable

    bool ok() const { return failed == 0 && exhausted == 0; }
};

/// Uniformly random permutation of [1, n].
inline Permutation random_permutation(Sampler& rng, int n)
{
    auto all = Permutation::all(n);
    return all[rng.index(all.size())];
}

/// Random reduced words for u and v, randomly interleaved.
inline DoubleWord random_double_word(Sampler& rng, const Permutation& u, const Permutation& v)
{
    auto wus = u.all_reduced_words();
    auto wvs = v.all_reduced_words();
    const auto& wu = wus[rng.index(wus.size())];
    const auto& wv = wvs[rng.index(wvs.size())];
    const std::size_t m = wu.size() + wv.size();
    // choose which slots carry negative letters
    std::vector<bool> negative(m, false);
    std::vector<std::size_t> slots(m);
    for (std::size_t k = 0; k < m; ++k)
        slots[k] = k;
    for (std::size_t k = 0; k < wu.size(); ++k) {
        std::size_t pick = k + rng.index(m - k);
        std::swap(slots[k], slots[pick]);
        negative[slots[k]] = true;
    }
    std::vector<int> letters;
    std::size_t a = 0, b = 0;
    for (std::size_t k = 0; k < m; ++k)
        letters.push_back(negative[k] ? -wu[a++] : wv[b++]);
    return DoubleWord(std::move(letters), u.size());
}

template <DivisionRing S>
std::vector<S> random_scalars(Sampler& rng, std::size_t count, long bound)
{
    std::vector<S> v;
    for (std::size_t k = 0; k < count; ++k)
        v.push_back(rng.scalar<S>(bound));
    return v;
}

/// Thrown by a trial body when a property does not hold.
struct PropertyFailure {
    std::string detail;
    nlohmann::json witness;
};

namespace detail {

template <DivisionRing S>
void expect(const Equation<S>& e, long& checks, const Matrix<S>& x)
{
    ++checks;
    if (!e.holds())
        throw PropertyFailure{e.str(), {{"matrix", to_json(x)}}};
}

inline void expect_true(bool ok, const std::string& what, long& checks, nlohmann::json witness)
{
    ++checks;
    if (!ok)
        throw PropertyFailure{what, std::move(witness)};
}

} // namespace detail

/// One attempt of a property; throws NotGeneric/ZeroInverse to request a resample.
using TrialBody = std::function<void(Sampler&, long& checks)>;

/// Runs `trials` trials with per-trial seeds derived from `seed`; each trial
/// resamples up to `retry_budget` times on genericity failures.
inline SuiteResult run_trials(const std::string& name, int n, int trials, std::uint64_t seed, int retry_budget,
                              const TrialBody& body)
{
    SuiteResult r;
    r.suite = name;
    r.n = n;
    r.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        bool done = false;
        for (int attempt = 0; attempt <= retry_budget && !done; ++attempt) {
            std::uint64_t trial_seed = seed * 1000003ULL + static_cast<std::uint64_t>(trial) * 7919ULL +
                                       static_cast<std::uint64_t>(attempt);
            Sampler rng(trial_seed);
            long checks = 0;
            try {
                body(rng, checks);
                r.checks += checks;
                ++r.passed;
                done = true;
            }
            catch (const NotGeneric&) {
            }
            catch (const ZeroInverse&) {
            }
            catch (const PropertyFailure& f) {
                ++r.failed;
                if (!r.counterexample) {
                    nlohmann::json ce = f.witness;
                    ce["suite"] = name;
                    ce["n"] = n;
                    ce["seed"] = seed;
                    ce["trial"] = trial;
                    ce["attempt"] = attempt;
                    ce["trial_seed"] = trial_seed;
                    ce["detail"] = f.detail;
                    r.counterexample = ce;
                }
                done = true;
            }
            catch (const IdentityViolation& e) {
                ++r.failed;
                if (!r.counterexample)
                    r.counterexample = nlohmann::json{{"suite", name}, {"n", n},         {"seed", seed},
                                                      {"trial", trial}, {"attempt", attempt}, {"trial_seed", trial_seed},
                                                      {"detail", e.what()}};
                done = true;
            }
        }
        if (!done)
            ++r.exhausted;
    }
    return r;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"quasidet-identities", "dodgson",   "plucker",      "gauss",
                                                "twist-involution",    "roundtrip", "double-ratios"};
    return names;
}

/// Property bodies over rational quaternions.
inline TrialBody suite_body(const std::string& name, int n, long bound)
{
    using Q = Quaternion;
    using detail::expect;
    using detail::expect_true;
    if (name == "quasidet-identities")
        return [n, bound](Sampler& rng, long& checks) {
            auto a = random_matrix<Q>(rng, n, n, bound);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    int l = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n - 1)));
                    if (l >= j)
                        ++l;
                    int s = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n - 1)));
                    if (s >= i)
                        ++s;
                    expect(row_homological(a, i, j, l, s), checks, a);
                    expect(column_homological(a, i, j, s, l), checks, a);
                }
            // Sylvester with a random pivot block of size 1..n-2
            if (n >= 3) {
                int k = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n - 2)));
                std::vector<int> rows, cols;
                auto perm_r = random_permutation(rng, n), perm_c = random_permutation(rng, n);
                for (int a_ = 1; a_ <= k; ++a_) {
                    rows.push_back(perm_r(a_));
                    cols.push_back(perm_c(a_));
                }
                auto red = sylvester_reduce(a, IndexSet::of(rows), IndexSet::of(cols));
                for (int s : red.row_labels)
                    for (int t : red.col_labels)
                        expect(Equation<Q>{"sylvester (s=" + std::to_string(s) + ",t=" + std::to_string(t) + ")",
                                           quasidet(a, s, t), red.quasidet_at(s, t)},
                               checks, a);
            }
            if (n <= 3)
                for (int p = 1; p <= n; ++p)
                    for (int q = 1; q <= n; ++q)
                        expect(Equation<Q>{"expansion", quasidet(a, p, q), quasidet_expansion(a, p, q)}, checks, a);
        };
    if (name == "dodgson")
        return [n, bound](Sampler& rng, long& checks) {
            auto x = random_matrix<Q>(rng, n, n, bound);
            for (const auto& u : Permutation::all(n))
                for (const auto& v : Permutation::all(n))
                    for (int i = 1; i < n; ++i)
                        if (dodgson_admissible(u, v, i))
                            for (const auto& e : dodgson_identities(x, u, v, i))
                                expect(e, checks, x);
        };
    if (name == "plucker")
        return [n, bound](Sampler& rng, long& checks) {
            auto x = random_matrix<Q>(rng, n, n, bound);
            for (const auto& u : Permutation::all(n))
                for (const auto& v : Permutation::all(n))
                    for (int i = 1; i + 1 < n; ++i) {
                        if (plucker_admissible(u, i))
                            expect(plucker_rows(x, u, v, i), checks, x);
                        if (plucker_admissible(v, i))
                            expect(plucker_cols(x, u, v, i), checks, x);
                    }
        };
    if (name == "gauss")
        return [n, bound](Sampler& rng, long& checks) {
            auto x = random_matrix<Q>(rng, n, n, bound);
            auto a = ldu(x);
            auto b = ldu_by_elimination(x);
            nlohmann::json w{{"matrix", to_json(x)}};
            expect_true(a.product() == x, "quasi-Plucker LDU does not reconstruct x", checks, w);
            expect_true(a.lower == b.lower && a.diag == b.diag && a.upper == b.upper,
                        "quasi-Plucker and elimination LDU differ", checks, w);
            expect_true(is_lower_unitriangular(a.lower) && is_diagonal(a.diag) && is_upper_unitriangular(a.upper),
                        "LDU factor shapes", checks, w);
        };
    if (name == "twist-involution")
        return [n, bound](Sampler& rng, long& checks) {
            auto u = random_permutation(rng, n), v = random_permutation(rng, n);
            auto w = random_double_word(rng, u, v);
            auto x = product_map(w, random_scalars<Q>(rng, static_cast<std::size_t>(w.size()), bound));
            nlohmann::json wit{{"matrix", to_json(x)}, {"word", w.str()}};
            auto y = twist_reduced(x, u, v);
            expect_true(in_reduced_cell(y, v, u), "twist does not land in L^{v,u}", checks, wit);
            expect_true(twist_reduced(y, v, u) == x, "psi^{v,u} psi^{u,v} != id", checks, wit);
            auto h = Matrix<Q>::diagonal(random_scalars<Q>(rng, static_cast<std::size_t>(n), bound));
            auto g = h * x;
            expect_true(twist_general(g, u, v) == h * y, "psi(hx) != h psi(x)", checks, wit);
            expect_true(twist_general(twist_general(g, u, v), v, u) == g, "general twist is not inverted", checks, wit);
        };
    if (name == "roundtrip")
        return [n, bound](Sampler& rng, long& checks) {
            auto u = random_permutation(rng, n), v = random_permutation(rng, n);
            auto w = random_double_word(rng, u, v);
            auto t = random_scalars<Q>(rng, static_cast<std::size_t>(w.size()), bound);
            auto h = random_scalars<Q>(rng, static_cast<std::size_t>(n), bound);
            auto x = product_map(w, t, h);
            auto out = recover_params(x, w);
            expect_true(out.t == t && out.h == h, "recovered parameters differ", checks,
                        {{"matrix", to_json(x)}, {"word", w.str()}});
        };
    if (name == "double-ratios")
        return [n, bound](Sampler& rng, long& checks) {
            auto x = random_matrix<Q>(rng, n, n, bound);
            auto rep = verify_double_ratios(x);
            for (const auto& e : rep.checks)
                expect(e, checks, x);
        };
    throw Error("unknown suite '" + name + "'");
}

inline SuiteResult run_suite(const std::string& name, int n, int trials, std::uint64_t seed, long bound,
                             int retry_budget)
{
    if (n < 2)
        throw Error("suites need n >= 2");
    return run_trials(name, n, trials, seed, retry_budget, suite_body(name, n, bound));
}

} // namespace qbruhat
