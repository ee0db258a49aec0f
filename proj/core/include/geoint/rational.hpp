#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace geoint {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p" or "p/q" (optional sign, no decimals). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

std::int64_t to_int64(const Integer& z);

// Distinct prime factors of |n| by trial division; n != 0.
std::vector<std::int64_t> prime_factors(std::int64_t n);

bool is_squarefree(std::int64_t n);

// Writes r = c^2 * m with m a squarefree integer (sign of r carried by m).
struct SquareDecomposition {
    Rational root;       // c > 0
    std::int64_t squarefree;
};
SquareDecomposition square_decompose(const Rational& r);

}  // namespace geoint
