#include "geoint/hilbert.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace geoint {

namespace {

// n = p^v * u with p not dividing u.
int valuation(Integer& n, std::int64_t p) {
    int v = 0;
    const unsigned long up = static_cast<unsigned long>(p);
    while (mpz_divisible_ui_p(n.get_mpz_t(), up)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), up);
        ++v;
    }
    return v;
}

int legendre(const Integer& u, std::int64_t p) {
    Integer pz = p;
    return mpz_legendre(u.get_mpz_t(), pz.get_mpz_t());
}

// Residue of an odd integer modulo 8 in [0, 8).
unsigned mod8(const Integer& u) { return static_cast<unsigned>(mpz_fdiv_ui(u.get_mpz_t(), 8)); }

int eps2(const Integer& u) { return ((mod8(u) - 1) / 2) % 2; }      // (u-1)/2 mod 2
int omega2(const Integer& u) {                                     // (u^2-1)/8 mod 2
    unsigned r = mod8(u);
    return (r == 3 || r == 5) ? 1 : 0;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, std::int64_t p) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    if (p == kInfinity) return (a < 0 && b < 0) ? -1 : 1;
    if (p < 2) throw std::invalid_argument("hilbert_symbol: invalid place");
    // Scale by squares of denominators: (a, b) = (a d^2, b e^2).
    Integer A = a.get_num() * a.get_den();
    Integer B = b.get_num() * b.get_den();
    int alpha = valuation(A, p);
    int beta = valuation(B, p);
    if (p == 2) {
        int e = eps2(A) * eps2(B) + alpha * omega2(B) + beta * omega2(A);
        return (e % 2) ? -1 : 1;
    }
    int sign = 1;
    // (-1)^{alpha beta eps(p)}
    if ((alpha * beta) % 2 == 1 && (p % 4) == 3) sign = -sign;
    if (beta % 2 == 1) sign *= legendre(A, p);
    if (alpha % 2 == 1) sign *= legendre(B, p);
    return sign;
}

Ramification ramified_primes(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("ramified_primes: arguments must be nonzero");
    std::set<std::int64_t> candidates = {2};
    for (const Integer* z : {&a.get_num(), &a.get_den(), &b.get_num(), &b.get_den()}) {
        Integer abs_z = abs(*z);
        if (abs_z == 1) continue;
        for (auto q : prime_factors(to_int64(abs_z))) candidates.insert(q);
    }
    Ramification r;
    for (auto p : candidates)
        if (hilbert_symbol(a, b, p) == -1) {
            r.finite_primes.push_back(p);
            r.discriminant *= p;
        }
    r.at_infinity = hilbert_symbol(a, b, kInfinity) == -1;
    return r;
}

}  // namespace geoint
