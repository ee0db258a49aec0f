#pragma once

#include "geoint/rational.hpp"

#include <cstdint>
#include <vector>

namespace geoint {

// Place of Q: a prime p >= 2, or kInfinity.
inline constexpr std::int64_t kInfinity = 0;

// Local Hilbert symbol (a, b)_p in {+1, -1}; a, b nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, std::int64_t p);

struct Ramification {
    std::vector<std::int64_t> finite_primes;  // ascending
    bool at_infinity = false;
    std::int64_t discriminant = 1;            // product of finite ramified primes

    bool split() const { return finite_primes.empty() && !at_infinity; }
};

Ramification ramified_primes(const Rational& a, const Rational& b);

}  // namespace geoint
