#pragma once

#include "geoint/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace geoint {

// a + b*sqrt(D) in the real quadratic field Q(sqrt(D)), D > 1 squarefree.
class QuadElem {
public:
    QuadElem(Rational a, Rational b, std::int64_t D);
    static QuadElem rational(Rational a, std::int64_t D) { return QuadElem(std::move(a), 0, D); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::int64_t D() const { return D_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    QuadElem conj() const { return QuadElem(a_, -b_, D_); }
    Rational trace() const { return 2 * a_; }
    Rational norm() const { return a_ * a_ - b_ * b_ * D_; }
    QuadElem inverse() const;
    QuadElem pow(long e) const;

    // Exact sign of a + s*b*sqrt(D) for s = +1 or -1.
    int sign_at(int s) const;
    double value_at(int s) const;

    QuadElem operator-() const { return QuadElem(-a_, -b_, D_); }
    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator*=(const Rational& r);

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator*(QuadElem x, const Rational& r) { return x *= r; }
    friend QuadElem operator*(const Rational& r, QuadElem x) { return x *= r; }
    friend QuadElem operator/(const QuadElem& x, const QuadElem& y) { return x * y.inverse(); }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        return x.D_ == y.D_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    // Lexicographic on (a, b); a key order, not the real order.
    friend bool operator<(const QuadElem& x, const QuadElem& y);

    std::string to_string() const;

private:
    void check_same_field(const QuadElem& o) const;

    Rational a_;
    Rational b_;
    std::int64_t D_;
};

std::ostream& operator<<(std::ostream& os, const QuadElem& x);

int quad_sign(const QuadElem& x, int s);
bool totally_positive(const QuadElem& x);

}  // namespace geoint
