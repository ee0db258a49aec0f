#pragma once

#include "geoint/biquad.hpp"
#include "geoint/hilbert.hpp"
#include "geoint/order.hpp"
#include "geoint/quad.hpp"
#include "geoint/quaternion.hpp"
#include "geoint/sign_ladder.hpp"

#include <cstdint>

namespace geoint {

// Derived data of a configuration (B, O, alpha_1, alpha_2): the L-module
// structure (x (x) y) . b = alpha_1(x) b alpha_2(y) on B, the F-valued form
// q_F with Tr_{F/Q} q_F = nrd, the isometry iota_L : B -> L and the sign
// varsigma. Immutable after construction.
class FFormContext {
public:
    // Throws ConfigError when an invariant fails: definite or split algebra,
    // non-coprime discriminants, embedding square mismatch, non-integral
    // embedding, conductor mismatch, "degenerate configuration" (the
    // L-basis 1, w1, w2, w1 w2 is singular).
    FFormContext(const EichlerOrderLattice& order, EmbeddingData emb1, EmbeddingData emb2,
                 int sign_convention = 1, PrecisionPolicy precision = PrecisionPolicy::from_environment());

    const QuatAlgebra& algebra() const { return order_.algebra(); }
    const EichlerOrderLattice& order() const { return order_; }
    const EmbeddingData& emb1() const { return emb1_; }
    const EmbeddingData& emb2() const { return emb2_; }
    const Ramification& ramification() const { return ramification_; }
    std::int64_t level() const { return level_; }
    std::int64_t D1() const { return emb1_.D; }
    std::int64_t D2() const { return emb2_.D; }
    std::int64_t D() const { return emb1_.D * emb2_.D; }
    std::int64_t conductor1() const { return f1_; }
    std::int64_t conductor2() const { return f2_; }
    int sign_convention() const { return sign_convention_; }
    const PrecisionPolicy& precision() const { return precision_; }

    // alpha = q_F(1).
    const QuadElem& alpha() const { return alpha_; }
    // Totally positive fundamental units of the pulled-back orders and their images.
    const QuadElem& u1() const { return u1_; }
    const QuadElem& u2() const { return u2_; }
    const Quaternion& g1() const { return g1_; }
    const Quaternion& g2() const { return g2_; }
    const Quaternion& g1_inv() const { return g1_inv_; }
    const Quaternion& g2_inv() const { return g2_inv_; }
    // Columns 1, w1, w2, w1 w2 in (1, i, j, k) coordinates.
    const RatMat4& module_basis() const { return M_; }

    Quaternion act_L(const BiquadElem& x, const Quaternion& b) const;
    // sqrt(D) . b = w1 b w2
    Quaternion act_sqrtD(const Quaternion& b) const { return algebra().mul(emb1_.w, b, emb2_.w); }

    // trd(b1 conj(b2)); pair_Q(b, b) = 2 nrd(b).
    Rational pair_Q(const Quaternion& b1, const Quaternion& b2) const;
    QuadElem pair_F(const Quaternion& b1, const Quaternion& b2) const;
    QuadElem q_F(const Quaternion& b) const;
    bool qF_totally_positive(const Quaternion& b) const { return totally_positive(q_F(b)); }

    // Unique x in L with x . 1 = b.
    BiquadElem iota_L(const Quaternion& b) const;

    // Product over the two places of F of the sign of iota_L(b) at the
    // extension with sqrt(D1) -> +sqrt(D1), times sign_convention.
    // Requires b != 0 and q_F(b) totally positive (std::domain_error otherwise).
    int varsigma(const Quaternion& b) const;
    int varsigma_unchecked(const BiquadElem& x) const;

    // Integer Gram matrices on the order basis: nrd(b) = c^T G c / 2 and
    // trd(w1 b w2 conj(b)) = c^T H c for b with order coordinates c.
    const IntMat4& nrd_gram() const { return order_.trace_gram(); }
    const IntMat4& twist_gram() const { return twist_gram_; }

    // Same configuration with both embeddings conjugated by u (nrd(u) = 1 in O).
    FFormContext conjugated(const Quaternion& u) const;
    // Same configuration with the two embeddings exchanged.
    FFormContext swapped() const;
    FFormContext with_sign_convention(int s) const;

private:
    EichlerOrderLattice order_;
    EmbeddingData emb1_;
    EmbeddingData emb2_;
    int sign_convention_;
    PrecisionPolicy precision_;
    Ramification ramification_;
    std::int64_t level_ = 1;
    std::int64_t f1_ = 1;
    std::int64_t f2_ = 1;
    Quaternion w12_;
    RatMat4 M_;
    RatMat4 M_inv_;
    QuadElem alpha_;
    QuadElem u1_;
    QuadElem u2_;
    Quaternion g1_, g2_, g1_inv_, g2_inv_;
    IntMat4 twist_gram_{};
};

}  // namespace geoint
