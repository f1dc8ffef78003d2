#pragma once

/**
 * @file rng.hpp
 * @brief Seeded sampling for randomized checks.
 *
 * All sampling goes through the std::mt19937_64 engine with hand-rolled
 * bounded draws, so a given seed yields the same stream on every platform
 * and every run; reports quoting sampled witnesses stay reproducible.
 */

#include <cstdint>
#include <random>

#include "oml/scalar.hpp"

namespace oml {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
    long long range(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    bool coin() { return (next() & 1u) != 0; }

    /// Small rational with numerator in [-bound, bound] and denominator
    /// in [1, bound].
    Rational rational(long long bound = 9) {
        return Rational(Int(range(-bound, bound)), Int(range(1, bound)));
    }

    /// Nonzero small rational.
    Rational nonzero_rational(long long bound = 9) {
        for (;;) {
            Rational q = rational(bound);
            if (q != 0) return q;
        }
    }

    Scalar scalar(const Field& f, long long bound = 9) {
        if (f.is_rationals()) return f.from_rational(rational(bound));
        return f.make(rational(bound), rational(bound));
    }

    Scalar nonzero_scalar(const Field& f, long long bound = 9) {
        for (;;) {
            Scalar s = scalar(f, bound);
            if (!s.is_zero()) return s;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace oml
