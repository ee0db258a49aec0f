#pragma once

#include "geoint/rational.hpp"
#include "geoint/sign_ladder.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace geoint {

// The real multiquadratic field Q(sqrt(p_1), ..., sqrt(p_k)) for distinct
// primes p_i. Basis elements are indexed by subsets S (bitmasks) and stand for
// sqrt(prod_{i in S} p_i); sqrt(S) * sqrt(T) = prod_{i in S & T} p_i * sqrt(S ^ T).
class MultiQuadField {
public:
    explicit MultiQuadField(std::vector<std::int64_t> primes);
    // Field generated by the square roots of the given nonzero integers' squarefree parts.
    static std::shared_ptr<const MultiQuadField> generated_by(const std::vector<std::int64_t>& radicands);

    const std::vector<std::int64_t>& primes() const { return primes_; }
    std::size_t dimension() const { return std::size_t{1} << primes_.size(); }
    std::int64_t radicand(std::size_t mask) const { return radicands_[mask]; }
    // Bitmask of the primes of a squarefree positive integer; throws if a prime is missing.
    std::size_t mask_of(std::int64_t squarefree) const;

private:
    std::vector<std::int64_t> primes_;
    std::vector<std::int64_t> radicands_;
};

class MultiQuadElem {
public:
    using FieldPtr = std::shared_ptr<const MultiQuadField>;

    // Zero of Q (the field with no generators).
    MultiQuadElem();
    explicit MultiQuadElem(FieldPtr field);
    static MultiQuadElem rational(FieldPtr field, const Rational& r);
    // c * sqrt(m) for an integer m > 0 (not necessarily squarefree).
    static MultiQuadElem sqrt_of(FieldPtr field, std::int64_t m, const Rational& c = 1);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;

    // Certified sign by the interval ladder; falls back to exact tower
    // recursion if the ladder gives up.
    int sign(const PrecisionPolicy& policy = PrecisionPolicy::from_environment()) const;
    // Sign by recursion through the tower Q(sqrt p_1) ⊂ ... ; no floating point.
    int exact_sign() const;
    double approx() const;

    // Negates sqrt(p_i).
    MultiQuadElem conj(std::size_t i) const;
    MultiQuadElem inverse() const;

    MultiQuadElem operator-() const;
    MultiQuadElem& operator+=(const MultiQuadElem& o);
    MultiQuadElem& operator-=(const MultiQuadElem& o);
    MultiQuadElem& operator*=(const MultiQuadElem& o);
    MultiQuadElem& operator*=(const Rational& r);
    friend MultiQuadElem operator+(MultiQuadElem x, const MultiQuadElem& y) { return x += y; }
    friend MultiQuadElem operator-(MultiQuadElem x, const MultiQuadElem& y) { return x -= y; }
    friend MultiQuadElem operator*(MultiQuadElem x, const MultiQuadElem& y) { return x *= y; }
    friend MultiQuadElem operator*(MultiQuadElem x, const Rational& r) { return x *= r; }
    friend MultiQuadElem operator/(const MultiQuadElem& x, const MultiQuadElem& y) { return x * y.inverse(); }
    friend bool operator==(const MultiQuadElem& x, const MultiQuadElem& y);

    std::string to_string() const;

private:
    void check_same_field(const MultiQuadElem& o) const;
    FieldPtr field_;
    std::vector<Rational> c_;
};

}  // namespace geoint
