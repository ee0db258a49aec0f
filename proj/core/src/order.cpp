#include "geoint/order.hpp"

#include "geoint/errors.hpp"
#include "geoint/units.hpp"

#include <string>

namespace geoint {

EichlerOrderLattice::EichlerOrderLattice(QuatAlgebra algebra, std::array<Quaternion, 4> basis)
    : algebra_(std::move(algebra)), basis_(std::move(basis)) {}

EichlerOrderLattice EichlerOrderLattice::verify(const QuatAlgebra& algebra, const std::array<Quaternion, 4>& basis) {
    EichlerOrderLattice o(algebra, basis);
    for (int c = 0; c < 4; ++c) {
        RatVec4 v = basis[c].to_vec();
        for (int r = 0; r < 4; ++r) o.basis_matrix_[r][c] = v[r];
    }
    auto inv = inverse(o.basis_matrix_);
    if (!inv) throw OrderError("singular basis");
    o.inverse_basis_matrix_ = *inv;

    if (!o.contains(Quaternion::scalar(1))) throw OrderError("missing unity");
    for (const auto& e1 : basis)
        for (const auto& e2 : basis)
            if (!o.contains(algebra.mul(e1, e2)))
                throw OrderError("not a ring: " + e1.to_string() + " * " + e2.to_string() + " escapes the lattice");
    for (const auto& e : basis)
        if (!o.contains(QuatAlgebra::conj(e))) throw OrderError("not closed under conjugation");

    RatMat4 gram;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            gram[r][c] = QuatAlgebra::trd(algebra.mul(basis[r], QuatAlgebra::conj(basis[c])));
            if (!is_integer(gram[r][c])) throw OrderError("non-integral discriminant (non-integral trace form)");
            o.trace_gram_[r][c] = to_int64(gram[r][c].get_num());
        }
    Rational det = abs(determinant(gram));
    if (!is_integer(det)) throw OrderError("non-integral discriminant");
    Integer root;
    mpz_sqrt(root.get_mpz_t(), det.get_num().get_mpz_t());
    if (root * root != det.get_num() || root == 0) throw OrderError("non-integral discriminant");
    o.reduced_disc_ = root;
    return o;
}

RatVec4 EichlerOrderLattice::rational_coordinates(const Quaternion& q) const {
    return mat_vec(inverse_basis_matrix_, q.to_vec());
}

std::optional<IntVec4> EichlerOrderLattice::coordinates(const Quaternion& q) const {
    RatVec4 c = rational_coordinates(q);
    IntVec4 out{};
    for (int i = 0; i < 4; ++i) {
        if (!is_integer(c[i])) return std::nullopt;
        out[i] = to_int64(c[i].get_num());
    }
    return out;
}

Quaternion EichlerOrderLattice::element(const IntVec4& coords) const {
    Quaternion q;
    for (int i = 0; i < 4; ++i)
        if (coords[i] != 0) q += basis_[i] * Rational(static_cast<long>(coords[i]));
    return q;
}

std::int64_t EichlerOrderLattice::level(const Ramification& ram) const {
    Integer db = ram.discriminant;
    if (!mpz_divisible_p(reduced_disc_.get_mpz_t(), db.get_mpz_t()))
        throw OrderError("reduced discriminant " + reduced_disc_.get_str() + " not divisible by D_B = " +
                         db.get_str());
    return to_int64(reduced_disc_ / db);
}

Integer order_verify(const QuatAlgebra& algebra, const std::array<Quaternion, 4>& basis) {
    return EichlerOrderLattice::verify(algebra, basis).reduced_disc();
}

bool order_contains(const EichlerOrderLattice& order, const Quaternion& q) { return order.contains(q); }

void EmbeddingData::validate(const QuatAlgebra& algebra) const {
    if (D <= 1 || !is_squarefree(D)) throw ConfigError("embedding discriminant must be squarefree > 1");
    if (QuatAlgebra::trd(w) != 0 || algebra.mul(w, w) != Quaternion::scalar(D))
        throw ConfigError("embedding square mismatch: w^2 != " + std::to_string(D));
}

Quaternion embed_elem(const EmbeddingData& e, const QuadElem& t) {
    if (t.D() != e.D) throw std::invalid_argument("embed_elem: field mismatch");
    return Quaternion::scalar(t.a()) + e.w * t.b();
}

std::int64_t optimal_conductor(const EichlerOrderLattice& order, const EmbeddingData& e) {
    if (!order.contains(e.w)) throw ConfigError("embedding not integral: w is not in the order");
    // f = least positive integer with f * embed(omega) in O.
    RatVec4 c = order.rational_coordinates(embed_elem(e, max_order_generator(e.D)));
    Integer f = 1;
    for (const auto& x : c) mpz_lcm(f.get_mpz_t(), f.get_mpz_t(), x.get_den().get_mpz_t());
    std::int64_t cond = to_int64(f);
    if (e.conductor && *e.conductor != cond)
        throw ConfigError("conductor mismatch: declared " + std::to_string(*e.conductor) + ", computed " +
                          std::to_string(cond));
    return cond;
}

}  // namespace geoint
