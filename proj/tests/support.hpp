#pragma once

#include <qbruhat/qbruhat.hpp>
#include <qbruhat/suites.hpp>

#include <functional>
#include <string>

namespace support {

using namespace qbruhat;

inline RationalFunction symbol(const std::string& name) { return RationalFunction::variable(name); }

/// n x n matrix of fresh symbols letter11, letter12, ...
inline Matrix<RationalFunction> symbolic_matrix(int n, const std::string& letter)
{
    Matrix<RationalFunction> x(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            x(i, j) = symbol(letter + std::to_string(i) + std::to_string(j));
    return x;
}

/// Runs body with fresh samplers until it stops raising genericity errors.
/// Returns the number of successful trials (== trials unless the budget ran out).
inline int generic_trials(int trials, std::uint64_t seed, const std::function<void(Sampler&)>& body, int budget = 100)
{
    int ok = 0;
    for (int t = 0; t < trials; ++t)
        for (int attempt = 0; attempt <= budget; ++attempt) {
            Sampler rng(seed * 7919 + static_cast<std::uint64_t>(t) * 101 + static_cast<std::uint64_t>(attempt));
            try {
                body(rng);
                ++ok;
                break;
            }
            catch (const NotGeneric&) {
            }
            catch (const ZeroInverse&) {
            }
        }
    return ok;
}

} // namespace support
