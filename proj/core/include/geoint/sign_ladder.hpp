#pragma once

#include "geoint/rational.hpp"

#include <cstdint>
#include <span>

namespace geoint {

// Working precision for certified sign evaluation. The floor defaults to
// 128 bits and may be overridden by the PRECISION_BITS environment variable.
struct PrecisionPolicy {
    unsigned start_bits = 128;
    unsigned max_bits = 1u << 16;

    static PrecisionPolicy from_environment();
};

// Certified sign of sum_i coeffs[i] * sqrt(radicands[i]) by MPFR interval
// arithmetic, doubling precision until the enclosure excludes zero.
// Radicands must be positive. Returns 0 only when every coefficient is zero;
// the caller guarantees that a nonzero coefficient vector has nonzero value
// (the square roots are linearly independent over Q).
// Throws PrecisionExhausted past policy.max_bits.
int certified_sign(std::span<const Rational> coeffs, std::span<const std::int64_t> radicands,
                   const PrecisionPolicy& policy = PrecisionPolicy::from_environment());

// Double-precision estimate of the same sum (not certified).
double approximate_value(std::span<const Rational> coeffs, std::span<const std::int64_t> radicands);

}  // namespace geoint
