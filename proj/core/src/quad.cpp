#include "geoint/quad.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace geoint {

QuadElem::QuadElem(Rational a, Rational b, std::int64_t D) : a_(std::move(a)), b_(std::move(b)), D_(D) {
    if (D_ <= 1) throw std::invalid_argument("QuadElem: D must exceed 1");
}

void QuadElem::check_same_field(const QuadElem& o) const {
    if (o.D_ != D_) throw std::invalid_argument("QuadElem: mixed fields");
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
    check_same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
    check_same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
    check_same_field(o);
    Rational na = a_ * o.a_ + b_ * o.b_ * D_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadElem& QuadElem::operator*=(const Rational& r) {
    a_ *= r;
    b_ *= r;
    return *this;
}

QuadElem QuadElem::inverse() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("QuadElem: inverse of zero");
    return QuadElem(a_ / n, -b_ / n, D_);
}

QuadElem QuadElem::pow(long e) const {
    QuadElem base = e >= 0 ? *this : inverse();
    unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    QuadElem out = QuadElem::rational(1, D_);
    while (k) {
        if (k & 1u) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

int QuadElem::sign_at(int s) const {
    int sa = sgn(a_);
    int sb = sgn(b_) * s;
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 D
    int cmp = sgn(a_ * a_ - b_ * b_ * D_);
    return cmp > 0 ? sa : (cmp < 0 ? sb : 0);
}

double QuadElem::value_at(int s) const {
    return a_.get_d() + s * b_.get_d() * std::sqrt(static_cast<double>(D_));
}

bool operator<(const QuadElem& x, const QuadElem& y) {
    if (x.D_ != y.D_) return x.D_ < y.D_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
}

std::string QuadElem::to_string() const {
    return geoint::to_string(a_) + " + " + geoint::to_string(b_) + "*sqrt(" + std::to_string(D_) + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadElem& x) { return os << x.to_string(); }

int quad_sign(const QuadElem& x, int s) { return x.sign_at(s); }

bool totally_positive(const QuadElem& x) { return x.sign_at(1) > 0 && x.sign_at(-1) > 0; }

}  // namespace geoint
