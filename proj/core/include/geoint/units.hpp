#pragma once

#include "geoint/quad.hpp"

#include <cstdint>

namespace geoint {

// Generator omega of the maximal order of Q(sqrt(D)): (1 + sqrt(D))/2 when
// D = 1 mod 4, sqrt(D) otherwise.
QuadElem max_order_generator(std::int64_t D);

// True when x lies in the order Z + f * O_max of Q(sqrt(D)).
bool in_order_of_conductor(const QuadElem& x, std::int64_t f);

// Fundamental unit (> 1 under sqrt(D) -> +sqrt(D)) of the maximal order,
// from the continued fraction expansion of omega.
QuadElem fundamental_unit(std::int64_t D);

// Generator > 1 of the totally positive units of the order of conductor f.
QuadElem fundamental_tp_unit(std::int64_t D, std::int64_t f = 1);

}  // namespace geoint
