#include "geoint/biquad.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace geoint {

BiquadElem::BiquadElem(std::array<Rational, 4> c, std::int64_t D1, std::int64_t D2)
    : c_(std::move(c)), D1_(D1), D2_(D2) {
    if (D1_ <= 1 || D2_ <= 1) throw std::invalid_argument("BiquadElem: D1, D2 must exceed 1");
    if (std::gcd(D1_, D2_) != 1) throw std::invalid_argument("BiquadElem: D1, D2 must be coprime");
}

BiquadElem BiquadElem::one(std::int64_t D1, std::int64_t D2) { return BiquadElem({1, 0, 0, 0}, D1, D2); }

BiquadElem BiquadElem::from_F(const QuadElem& x, std::int64_t D1, std::int64_t D2) {
    if (x.D() != D1 * D2) throw std::invalid_argument("BiquadElem::from_F: field mismatch");
    return BiquadElem({x.a(), 0, 0, x.b()}, D1, D2);
}

void BiquadElem::check_same_field(const BiquadElem& o) const {
    if (o.D1_ != D1_ || o.D2_ != D2_) throw std::invalid_argument("BiquadElem: mixed fields");
}

bool BiquadElem::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

BiquadElem BiquadElem::eps() const { return BiquadElem({c_[0], -c_[1], -c_[2], c_[3]}, D1_, D2_); }
BiquadElem BiquadElem::tau2() const { return BiquadElem({c_[0], c_[1], -c_[2], -c_[3]}, D1_, D2_); }
BiquadElem BiquadElem::tau1() const { return BiquadElem({c_[0], -c_[1], c_[2], -c_[3]}, D1_, D2_); }

QuadElem BiquadElem::rel_trace() const { return QuadElem(2 * c_[0], 2 * c_[3], D()); }

QuadElem BiquadElem::rel_norm() const {
    BiquadElem p = *this * eps();
    if (!p.in_F()) throw std::logic_error("rel_norm left F");
    return QuadElem(p.c_[0], p.c_[3], D());
}

QuadElem BiquadElem::norm_to_F1() const {
    BiquadElem p = *this * tau2();
    if (p.c_[2] != 0 || p.c_[3] != 0) throw std::logic_error("norm_to_F1 left F1");
    return QuadElem(p.c_[0], p.c_[1], D1_);
}

QuadElem BiquadElem::norm_to_F2() const {
    BiquadElem p = *this * tau1();
    if (p.c_[1] != 0 || p.c_[3] != 0) throw std::logic_error("norm_to_F2 left F2");
    return QuadElem(p.c_[0], p.c_[2], D2_);
}

int BiquadElem::sign_at(RealPlace place, const PrecisionPolicy& policy) const {
    std::array<Rational, 4> signed_c = {c_[0], place.s1 * c_[1], place.s2 * c_[2], place.on_F() * c_[3]};
    std::array<std::int64_t, 4> rad = {1, D1_, D2_, D()};
    return certified_sign(signed_c, rad, policy);
}

double BiquadElem::value_at(RealPlace place) const {
    return c_[0].get_d() + place.s1 * c_[1].get_d() * std::sqrt(double(D1_)) +
           place.s2 * c_[2].get_d() * std::sqrt(double(D2_)) + place.on_F() * c_[3].get_d() * std::sqrt(double(D()));
}

BiquadElem BiquadElem::operator-() const { return BiquadElem({-c_[0], -c_[1], -c_[2], -c_[3]}, D1_, D2_); }

BiquadElem& BiquadElem::operator+=(const BiquadElem& o) {
    check_same_field(o);
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

BiquadElem& BiquadElem::operator-=(const BiquadElem& o) {
    check_same_field(o);
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

BiquadElem& BiquadElem::operator*=(const BiquadElem& o) {
    check_same_field(o);
    const auto& x = c_;
    const auto& y = o.c_;
    const std::int64_t D = D1_ * D2_;
    std::array<Rational, 4> r;
    r[0] = x[0] * y[0] + D1_ * x[1] * y[1] + D2_ * x[2] * y[2] + D * x[3] * y[3];
    r[1] = x[0] * y[1] + x[1] * y[0] + D2_ * (x[2] * y[3] + x[3] * y[2]);
    r[2] = x[0] * y[2] + x[2] * y[0] + D1_ * (x[1] * y[3] + x[3] * y[1]);
    r[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
    c_ = std::move(r);
    return *this;
}

BiquadElem& BiquadElem::operator*=(const Rational& r) {
    for (auto& c : c_) c *= r;
    return *this;
}

std::string BiquadElem::to_string() const {
    return geoint::to_string(c_[0]) + " + " + geoint::to_string(c_[1]) + "*sqrt(" + std::to_string(D1_) + ") + " +
           geoint::to_string(c_[2]) + "*sqrt(" + std::to_string(D2_) + ") + " + geoint::to_string(c_[3]) +
           "*sqrt(" + std::to_string(D()) + ")";
}

BiquadElem eps_involution(const BiquadElem& x) { return x.eps(); }
QuadElem rel_trace(const BiquadElem& x) { return x.rel_trace(); }
QuadElem rel_norm(const BiquadElem& x) { return x.rel_norm(); }

}  // namespace geoint
