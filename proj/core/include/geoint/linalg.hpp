#pragma once

#include "geoint/rational.hpp"

#include <array>
#include <optional>

namespace geoint {

using RatVec4 = std::array<Rational, 4>;
using RatMat4 = std::array<RatVec4, 4>;  // row-major

RatMat4 identity4();
RatVec4 mat_vec(const RatMat4& m, const RatVec4& v);
RatMat4 mat_mul(const RatMat4& a, const RatMat4& b);
Rational determinant(const RatMat4& m);
// Gauss-Jordan inverse; nullopt when singular.
std::optional<RatMat4> inverse(const RatMat4& m);

}  // namespace geoint
