#pragma once

#include "geoint/fform.hpp"
#include "geoint/order.hpp"
#include "geoint/quaternion.hpp"

#include <cstdint>
#include <vector>

namespace geoint {

// log of the totally positive units at the (+1) places of F1 and F2.
struct UnitLogData {
    double lambda1 = 0;
    double lambda2 = 0;
    explicit UnitLogData(const FFormContext& ctx);
    // Unit-lattice coordinates (t1, t2) of iota_L(b): g1 b shifts t1 by 1,
    // b g2 shifts t2 by 1. Floating-point estimate.
    std::array<double, 2> coordinates(const BiquadElem& x) const;
};

// Canonical representative of a ±1 × <g1> × <g2> orbit: unit coordinates in
// [0, 1) and first nonzero order coordinate positive.
struct OrbitRep {
    Quaternion b;
    IntVec4 key;  // order coordinates of b
    friend bool operator<(const OrbitRep& x, const OrbitRep& y) { return x.key < y.key; }
    friend bool operator==(const OrbitRep& x, const OrbitRep& y) { return x.key == y.key; }
};

struct EnumOptions {
    double box_scale = 1.0;
    double slack = 0.01;  // delta: margin in unit coordinates
};

// Exact floor of the unit coordinates of b. Requires b != 0 and q_F(b) >> 0.
std::array<std::int64_t, 2> unit_floor(const FFormContext& ctx, const Quaternion& b);

// g1^{-m1} b g2^{-m2}, sign-normalized. Requires b in O, b != 0, q_F(b) >> 0
// (std::domain_error otherwise).
OrbitRep canonicalize(const FFormContext& ctx, const Quaternion& b);

// g1^m b g2^k for any integers m, k.
Quaternion unit_translate(const FFormContext& ctx, const Quaternion& b, std::int64_t m, std::int64_t k);

// All b in O with nrd(b) = n and q_F(b) >> 0 inside the enumeration box, without
// canonicalization. Every orbit meets this set at least once.
std::vector<Quaternion> enumerate_raw(std::int64_t n, const FFormContext& ctx, EnumOptions opt = {});

// Distinct orbits of {b in O : nrd(b) = n, q_F(b) >> 0}, sorted by key. Empty for n <= 0.
std::vector<OrbitRep> enumerate_orbits(std::int64_t n, const FFormContext& ctx, EnumOptions opt = {});

// Same contract with every box bound multiplied by box_scale and the slack doubled.
std::vector<OrbitRep> enumerate_orbits_oracle(std::int64_t n, const FFormContext& ctx, double box_scale,
                                              double slack = EnumOptions{}.slack);

}  // namespace geoint
