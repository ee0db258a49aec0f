#pragma once

#include "geoint/fform.hpp"
#include "geoint/orbits.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace geoint {

// Sum of varsigma over the orbits of norm n. Zero for n <= 0.
std::int64_t elliptic_coeff(std::int64_t n, const FFormContext& ctx, EnumOptions opt = {});
// Zero unless n is a positive integer.
std::int64_t elliptic_coeff(const Rational& n, const FFormContext& ctx, EnumOptions opt = {});
std::int64_t theta_coeff(const FFormContext& ctx, const std::vector<OrbitRep>& orbits);

// c(beta) for totally positive beta with Tr beta <= trace_bound, keyed by
// beta and ordered by (Tr beta, irrational part).
std::map<QuadElem, std::int64_t> hilbert_coeffs(std::int64_t trace_bound, const FFormContext& ctx,
                                                EnumOptions opt = {});

enum class Method { theta, oracle, both };

struct CoeffRow {
    std::int64_t n = 0;
    std::optional<std::int64_t> theta;
    std::optional<std::int64_t> oracle;
    bool match = true;     // theta == calibration_sign * oracle (vacuous for one method)
    bool coprime = true;   // gcd(n, N * D_B) == 1
};

struct CoeffTable {
    std::vector<CoeffRow> rows;
    int calibration_sign = 1;
    bool all_match() const;
    // Mismatches restricted to rows coprime to the level.
    bool all_coprime_match() const;
};

// Computes both methods for 1 <= n <= n_max on `threads` workers (0 = hardware
// concurrency). The calibration sign is read off the first n where either
// method is nonzero; +1 when every coefficient vanishes.
CoeffTable report(const FFormContext& ctx, std::int64_t n_max, Method method = Method::both, EnumOptions opt = {},
                  unsigned threads = 0);

}  // namespace geoint
