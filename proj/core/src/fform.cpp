#include "geoint/fform.hpp"

#include "geoint/errors.hpp"
#include "geoint/units.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace geoint {

FFormContext::FFormContext(const EichlerOrderLattice& order, EmbeddingData emb1, EmbeddingData emb2,
                           int sign_convention, PrecisionPolicy precision)
    : order_(order),
      emb1_(std::move(emb1)),
      emb2_(std::move(emb2)),
      sign_convention_(sign_convention),
      precision_(precision),
      alpha_(QuadElem::rational(0, 2)),
      u1_(QuadElem::rational(1, 2)),
      u2_(QuadElem::rational(1, 2)) {
    if (sign_convention_ != 1 && sign_convention_ != -1) throw ConfigError("sign_convention must be +1 or -1");
    const QuatAlgebra& B = algebra();
    if (!B.indefinite()) throw ConfigError("algebra is definite (ramified at infinity)");
    ramification_ = ramified_primes(B.a(), B.b());
    if (ramification_.finite_primes.empty()) throw ConfigError("algebra is split (no ramified primes)");
    level_ = order_.level(ramification_);

    emb1_.validate(B);
    emb2_.validate(B);
    if (std::gcd(emb1_.D, emb2_.D) != 1)
        throw ConfigError("discriminants D1 = " + std::to_string(emb1_.D) + " and D2 = " + std::to_string(emb2_.D) +
                          " are not coprime");
    f1_ = optimal_conductor(order_, emb1_);
    f2_ = optimal_conductor(order_, emb2_);

    w12_ = B.mul(emb1_.w, emb2_.w);
    const std::array<Quaternion, 4> cols = {Quaternion::scalar(1), emb1_.w, emb2_.w, w12_};
    for (int c = 0; c < 4; ++c) {
        RatVec4 v = cols[c].to_vec();
        for (int r = 0; r < 4; ++r) M_[r][c] = v[r];
    }
    auto inv = inverse(M_);
    if (!inv) throw ConfigError("degenerate configuration: 1, w1, w2, w1*w2 are linearly dependent");
    M_inv_ = *inv;

    alpha_ = q_F(Quaternion::scalar(1));
    if (alpha_.trace() != 1) throw std::logic_error("Tr(alpha) != 1");

    u1_ = fundamental_tp_unit(emb1_.D, f1_);
    u2_ = fundamental_tp_unit(emb2_.D, f2_);
    g1_ = embed_elem(emb1_, u1_);
    g2_ = embed_elem(emb2_, u2_);
    g1_inv_ = embed_elem(emb1_, u1_.inverse());
    g2_inv_ = embed_elem(emb2_, u2_.inverse());
    if (!order_.contains(g1_) || !order_.contains(g2_) || !order_.contains(g1_inv_) || !order_.contains(g2_inv_))
        throw std::logic_error("unit images escape the order");

    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Rational h = QuatAlgebra::trd(
                B.mul(act_sqrtD(order_.basis()[r]), QuatAlgebra::conj(order_.basis()[c])));
            if (!is_integer(h)) throw std::logic_error("twisted trace form is not integral");
            twist_gram_[r][c] = to_int64(h.get_num());
        }
}

Quaternion FFormContext::act_L(const BiquadElem& x, const Quaternion& b) const {
    if (x.D1() != D1() || x.D2() != D2()) throw std::invalid_argument("act_L: field mismatch");
    const QuatAlgebra& B = algebra();
    Quaternion out = b * x[0];
    if (x[1] != 0) out += B.mul(emb1_.w, b) * x[1];
    if (x[2] != 0) out += B.mul(b, emb2_.w) * x[2];
    if (x[3] != 0) out += act_sqrtD(b) * x[3];
    return out;
}

Rational FFormContext::pair_Q(const Quaternion& b1, const Quaternion& b2) const {
    return QuatAlgebra::trd(algebra().mul(b1, QuatAlgebra::conj(b2)));
}

QuadElem FFormContext::pair_F(const Quaternion& b1, const Quaternion& b2) const {
    Rational u = pair_Q(b1, b2) / 2;
    Rational v = pair_Q(act_sqrtD(b1), b2) / (2 * D());
    return QuadElem(std::move(u), std::move(v), D());
}

QuadElem FFormContext::q_F(const Quaternion& b) const {
    QuadElem p = pair_F(b, b);
    return p * Rational(1, 2);
}

BiquadElem FFormContext::iota_L(const Quaternion& b) const {
    RatVec4 c = mat_vec(M_inv_, b.to_vec());
    return BiquadElem({c[0], c[1], c[2], c[3]}, D1(), D2());
}

int FFormContext::varsigma_unchecked(const BiquadElem& x) const {
    int s = x.sign_at(RealPlace{1, 1}, precision_) * x.sign_at(RealPlace{1, -1}, precision_);
    return s * sign_convention_;
}

int FFormContext::varsigma(const Quaternion& b) const {
    if (b.is_zero()) throw std::domain_error("varsigma: b must be nonzero");
    if (!qF_totally_positive(b)) throw std::domain_error("varsigma: q_F(b) is not totally positive");
    return varsigma_unchecked(iota_L(b));
}

FFormContext FFormContext::conjugated(const Quaternion& u) const {
    const QuatAlgebra& B = algebra();
    if (B.nrd(u) != 1 || !order_.contains(u)) throw std::invalid_argument("conjugated: u must be a norm-one order element");
    Quaternion u_inv = B.inverse(u);
    EmbeddingData e1 = emb1_, e2 = emb2_;
    e1.w = B.mul(u, emb1_.w, u_inv);
    e2.w = B.mul(u, emb2_.w, u_inv);
    return FFormContext(order_, e1, e2, sign_convention_, precision_);
}

FFormContext FFormContext::swapped() const {
    return FFormContext(order_, emb2_, emb1_, sign_convention_, precision_);
}

FFormContext FFormContext::with_sign_convention(int s) const {
    return FFormContext(order_, emb1_, emb2_, s, precision_);
}

}  // namespace geoint
