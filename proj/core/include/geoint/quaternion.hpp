#pragma once

#include "geoint/linalg.hpp"
#include "geoint/rational.hpp"

#include <iosfwd>
#include <string>

namespace geoint {

// t + x i + y j + z k.
struct Quaternion {
    Rational t = 0, x = 0, y = 0, z = 0;

    static Quaternion scalar(Rational r) { return {std::move(r), 0, 0, 0}; }
    static Quaternion from_vec(const RatVec4& v) { return {v[0], v[1], v[2], v[3]}; }
    RatVec4 to_vec() const { return {t, x, y, z}; }

    bool is_zero() const { return t == 0 && x == 0 && y == 0 && z == 0; }

    Quaternion operator-() const { return {-t, -x, -y, -z}; }
    Quaternion& operator+=(const Quaternion& o);
    Quaternion& operator-=(const Quaternion& o);
    Quaternion& operator*=(const Rational& r);
    friend Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
    friend Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
    friend Quaternion operator*(Quaternion p, const Rational& r) { return p *= r; }
    friend Quaternion operator*(const Rational& r, Quaternion p) { return p *= r; }
    friend bool operator==(const Quaternion&, const Quaternion&) = default;

    std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

// B = (a, b | Q): i^2 = a, j^2 = b, ij = -ji = k.
class QuatAlgebra {
public:
    QuatAlgebra(Rational a, Rational b);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    Quaternion i() const { return {0, 1, 0, 0}; }
    Quaternion j() const { return {0, 0, 1, 0}; }
    Quaternion k() const { return {0, 0, 0, 1}; }

    Quaternion mul(const Quaternion& p, const Quaternion& q) const;
    Quaternion mul(const Quaternion& p, const Quaternion& q, const Quaternion& r) const { return mul(mul(p, q), r); }
    Quaternion pow(const Quaternion& p, long e) const;
    Quaternion inverse(const Quaternion& p) const;

    static Quaternion conj(const Quaternion& p) { return {p.t, -p.x, -p.y, -p.z}; }
    static Rational trd(const Quaternion& p) { return 2 * p.t; }
    Rational nrd(const Quaternion& p) const;

    bool indefinite() const { return a_ > 0 || b_ > 0; }

    friend bool operator==(const QuatAlgebra&, const QuatAlgebra&) = default;

private:
    Rational a_;
    Rational b_;
    Rational ab_;
};

}  // namespace geoint
