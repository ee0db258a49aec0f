#pragma once

#include <iosfwd>

namespace geoint::cli {

// Archimedean grid checks at the given quadrature tolerance plus brute-force
// cross-checks of the exact arithmetic. Returns true when every check passes;
// throws ToleranceError when a quadrature cannot reach tol.
bool run_selftest(double tol, std::ostream& log);

}  // namespace geoint::cli
