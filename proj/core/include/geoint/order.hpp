#pragma once

#include "geoint/hilbert.hpp"
#include "geoint/linalg.hpp"
#include "geoint/quad.hpp"
#include "geoint/quaternion.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace geoint {

using IntVec4 = std::array<std::int64_t, 4>;
using IntMat4 = std::array<IntVec4, 4>;

// A Z-lattice of rank 4 in B verified to be an order: contains 1, closed
// under multiplication and conjugation, integral reduced discriminant.
// Instances only come out of verify().
class EichlerOrderLattice {
public:
    // Throws OrderError: "singular basis", "missing unity", "not a ring",
    // "not closed under conjugation", "non-integral discriminant".
    static EichlerOrderLattice verify(const QuatAlgebra& algebra, const std::array<Quaternion, 4>& basis);

    const QuatAlgebra& algebra() const { return algebra_; }
    const std::array<Quaternion, 4>& basis() const { return basis_; }
    // Columns are basis elements in (1, i, j, k) coordinates.
    const RatMat4& basis_matrix() const { return basis_matrix_; }
    const RatMat4& inverse_basis_matrix() const { return inverse_basis_matrix_; }
    const Integer& reduced_disc() const { return reduced_disc_; }

    RatVec4 rational_coordinates(const Quaternion& q) const;
    std::optional<IntVec4> coordinates(const Quaternion& q) const;
    bool contains(const Quaternion& q) const { return coordinates(q).has_value(); }
    Quaternion element(const IntVec4& coords) const;

    // Gram matrix of (x, y) -> trd(x conj(y)) on the basis; integral.
    const IntMat4& trace_gram() const { return trace_gram_; }

    // N = reduced_disc / D_B; throws OrderError when D_B does not divide.
    std::int64_t level(const Ramification& ram) const;

private:
    EichlerOrderLattice(QuatAlgebra algebra, std::array<Quaternion, 4> basis);

    QuatAlgebra algebra_;
    std::array<Quaternion, 4> basis_;
    RatMat4 basis_matrix_;
    RatMat4 inverse_basis_matrix_;
    IntMat4 trace_gram_{};
    Integer reduced_disc_;
};

Integer order_verify(const QuatAlgebra& algebra, const std::array<Quaternion, 4>& basis);
bool order_contains(const EichlerOrderLattice& order, const Quaternion& q);

// An algebra embedding Q(sqrt(D)) -> B, sqrt(D) -> w.
struct EmbeddingData {
    std::int64_t D = 0;
    Quaternion w;
    std::optional<std::int64_t> conductor;  // declared conductor of the pulled-back order

    // Throws ConfigError("embedding square mismatch") unless trd(w) = 0 and w^2 = D.
    void validate(const QuatAlgebra& algebra) const;
};

// a + b sqrt(D) -> a + b w.
Quaternion embed_elem(const EmbeddingData& e, const QuadElem& t);

// Conductor of {t : embed(t) in O}. Throws ConfigError("embedding not
// integral") if w is not in O and ConfigError("conductor mismatch") if a
// declared conductor disagrees.
std::int64_t optimal_conductor(const EichlerOrderLattice& order, const EmbeddingData& e);

}  // namespace geoint
