#include "geoint/quaternion.hpp"

#include <ostream>
#include <stdexcept>

namespace geoint {

Quaternion& Quaternion::operator+=(const Quaternion& o) {
    t += o.t;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
    t -= o.t;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
}

Quaternion& Quaternion::operator*=(const Rational& r) {
    t *= r;
    x *= r;
    y *= r;
    z *= r;
    return *this;
}

std::string Quaternion::to_string() const {
    return "[" + geoint::to_string(t) + ", " + geoint::to_string(x) + ", " + geoint::to_string(y) + ", " +
           geoint::to_string(z) + "]";
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.to_string(); }

QuatAlgebra::QuatAlgebra(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)), ab_(a_ * b_) {
    if (a_ == 0 || b_ == 0) throw std::invalid_argument("QuatAlgebra: structure constants must be nonzero");
}

Quaternion QuatAlgebra::mul(const Quaternion& p, const Quaternion& q) const {
    Quaternion r;
    r.t = p.t * q.t + a_ * p.x * q.x + b_ * p.y * q.y - ab_ * p.z * q.z;
    r.x = p.t * q.x + p.x * q.t - b_ * p.y * q.z + b_ * p.z * q.y;
    r.y = p.t * q.y + p.y * q.t + a_ * p.x * q.z - a_ * p.z * q.x;
    r.z = p.t * q.z + p.z * q.t + p.x * q.y - p.y * q.x;
    return r;
}

Rational QuatAlgebra::nrd(const Quaternion& p) const {
    return p.t * p.t - a_ * p.x * p.x - b_ * p.y * p.y + ab_ * p.z * p.z;
}

Quaternion QuatAlgebra::inverse(const Quaternion& p) const {
    Rational n = nrd(p);
    if (n == 0) throw std::domain_error("QuatAlgebra: element of reduced norm zero is not invertible");
    return conj(p) * (1 / n);
}

Quaternion QuatAlgebra::pow(const Quaternion& p, long e) const {
    Quaternion base = e >= 0 ? p : inverse(p);
    unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Quaternion out = Quaternion::scalar(1);
    while (k) {
        if (k & 1u) out = mul(out, base);
        base = mul(base, base);
        k >>= 1;
    }
    return out;
}

}  // namespace geoint
