#pragma once

#include "geoint/quad.hpp"
#include "geoint/sign_ladder.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace geoint {

// Real embedding of L = Q(sqrt(D1), sqrt(D2)): sqrt(D1) -> s1*sqrt(D1),
// sqrt(D2) -> s2*sqrt(D2). Its restriction to F = Q(sqrt(D1 D2)) sends
// sqrt(D1 D2) to s1*s2*sqrt(D1 D2).
struct RealPlace {
    int s1 = 1;
    int s2 = 1;

    int on_F() const { return s1 * s2; }
    friend bool operator==(const RealPlace&, const RealPlace&) = default;
};

inline constexpr std::array<RealPlace, 4> kRealPlaces = {
    RealPlace{1, 1}, RealPlace{1, -1}, RealPlace{-1, 1}, RealPlace{-1, -1}};

// c0 + c1 sqrt(D1) + c2 sqrt(D2) + c3 sqrt(D1 D2), gcd(D1, D2) = 1.
class BiquadElem {
public:
    BiquadElem(std::array<Rational, 4> c, std::int64_t D1, std::int64_t D2);
    static BiquadElem one(std::int64_t D1, std::int64_t D2);

    const std::array<Rational, 4>& coeffs() const { return c_; }
    const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::int64_t D1() const { return D1_; }
    std::int64_t D2() const { return D2_; }
    std::int64_t D() const { return D1_ * D2_; }

    bool is_zero() const;
    bool in_F() const { return c_[1] == 0 && c_[2] == 0; }

    // Negates both square roots; fixed field is F.
    BiquadElem eps() const;
    // Negates sqrt(D2) only (the automorphism over F1).
    BiquadElem tau2() const;
    // Negates sqrt(D1) only (the automorphism over F2).
    BiquadElem tau1() const;

    QuadElem rel_trace() const;    // x + eps(x) in F
    QuadElem rel_norm() const;     // x * eps(x) in F
    QuadElem norm_to_F1() const;   // x * tau2(x) in F1
    QuadElem norm_to_F2() const;   // x * tau1(x) in F2

    // Certified sign of the image under a real place.
    int sign_at(RealPlace place, const PrecisionPolicy& policy = PrecisionPolicy::from_environment()) const;
    double value_at(RealPlace place) const;

    BiquadElem operator-() const;
    BiquadElem& operator+=(const BiquadElem& o);
    BiquadElem& operator-=(const BiquadElem& o);
    BiquadElem& operator*=(const BiquadElem& o);
    BiquadElem& operator*=(const Rational& r);
    friend BiquadElem operator+(BiquadElem x, const BiquadElem& y) { return x += y; }
    friend BiquadElem operator-(BiquadElem x, const BiquadElem& y) { return x -= y; }
    friend BiquadElem operator*(BiquadElem x, const BiquadElem& y) { return x *= y; }
    friend BiquadElem operator*(BiquadElem x, const Rational& r) { return x *= r; }
    friend bool operator==(const BiquadElem& x, const BiquadElem& y) {
        return x.D1_ == y.D1_ && x.D2_ == y.D2_ && x.c_ == y.c_;
    }

    // Lifts an element of F (over D = D1 D2) into L.
    static BiquadElem from_F(const QuadElem& x, std::int64_t D1, std::int64_t D2);

    std::string to_string() const;

private:
    void check_same_field(const BiquadElem& o) const;

    std::array<Rational, 4> c_;
    std::int64_t D1_;
    std::int64_t D2_;
};

BiquadElem eps_involution(const BiquadElem& x);
QuadElem rel_trace(const BiquadElem& x);
QuadElem rel_norm(const BiquadElem& x);

}  // namespace geoint
