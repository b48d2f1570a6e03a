#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <string>

#include "quaternion.hpp"
#include "rational.hpp"

namespace qbruhat {

/// Element of a division ring with exact equality.
///
/// Multiplication need not commute. `inverse` throws ZeroInverse on zero.
template <class S>
concept DivisionRing = std::regular<S> && std::constructible_from<S, int> &&
    requires(const S a, const S b) {
        { a + b } -> std::convertible_to<S>;
        { a - b } -> std::convertible_to<S>;
        { a * b } -> std::convertible_to<S>;
        { -a } -> std::convertible_to<S>;
        { inverse(a) } -> std::convertible_to<S>;
        { is_zero(a) } -> std::convertible_to<bool>;
        { to_string(a) } -> std::convertible_to<std::string>;
    };

static_assert(DivisionRing<Rational>);
static_assert(DivisionRing<Quaternion>);

/// Deterministic source of small-integer scalars for the test harness.
///
/// The bounded draw uses modular reduction of a mt19937_64 output so the
/// stream is identical across standard library implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [-bound, bound].
    long integer(long bound)
    {
        auto span = static_cast<std::uint64_t>(2 * bound + 1);
        return static_cast<long>(engine_() % span) - bound;
    }

    /// Uniform integer in [0, count).
    std::size_t index(std::size_t count) { return static_cast<std::size_t>(engine_() % count); }

    /// Nonzero rational with integer value in [-bound, bound].
    Rational rational(long bound)
    {
        for (;;) {
            long v = integer(bound);
            if (v != 0)
                return Rational(v);
        }
    }

    /// Quaternion with integer components in [-bound, bound], never zero.
    Quaternion quaternion(long bound)
    {
        for (;;) {
            Quaternion q(Rational(integer(bound)), Rational(integer(bound)), Rational(integer(bound)),
                         Rational(integer(bound)));
            if (!q.is_zero())
                return q;
        }
    }

    template <class S>
    S scalar(long bound);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
};

template <>
inline Rational Sampler::scalar<Rational>(long bound) { return rational(bound); }

template <>
inline Quaternion Sampler::scalar<Quaternion>(long bound) { return quaternion(bound); }

/// Same seed, same quaternion.
inline Quaternion sample_generic(std::uint64_t seed, long bound)
{
    if (bound < 1)
        throw Error("sample_generic: bound must be >= 1");
    Sampler s(seed);
    return s.quaternion(bound);
}

} // namespace qbruhat
