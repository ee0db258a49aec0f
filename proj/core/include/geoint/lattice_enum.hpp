#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace geoint {

using RealMat4 = std::array<std::array<long double, 4>, 4>;

// Calls visit(v) for every integer vector v with v^T G v <= bound, G symmetric
// positive definite (Fincke-Pohst). Throws std::domain_error if G is not
// numerically positive definite. Enumeration runs in an LLL-reduced basis.
void fincke_pohst(const RealMat4& gram, long double bound,
                  const std::function<void(const std::array<std::int64_t, 4>&)>& visit);
// Same enumeration for the form v -> |A v|^2, given the factor A directly.
// Preferable when the Gram matrix would lose precision to cancellation.
void fincke_pohst_factor(const RealMat4& A, long double bound,
                         const std::function<void(const std::array<std::int64_t, 4>&)>& visit);

}  // namespace geoint
