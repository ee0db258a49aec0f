#include "geoint/sign_ladder.hpp"

#include "geoint/errors.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace geoint {

namespace {

class Mpfr {
public:
    explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

// Encloses sum c_i sqrt(r_i) in [lo, hi]; returns the certified sign or 2 when
// the enclosure still contains zero.
int try_sign(std::span<const Rational> coeffs, std::span<const std::int64_t> radicands, mpfr_prec_t bits) {
    Mpfr lo(bits), hi(bits), clo(bits), chi(bits), slo(bits), shi(bits), tlo(bits), thi(bits);
    mpfr_set_zero(lo.get(), 1);
    mpfr_set_zero(hi.get(), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        int cs = sgn(coeffs[i]);
        if (cs == 0) continue;
        mpfr_set_q(clo.get(), coeffs[i].get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(chi.get(), coeffs[i].get_mpq_t(), MPFR_RNDU);
        if (radicands[i] == 1) {
            mpfr_set(tlo.get(), clo.get(), MPFR_RNDD);
            mpfr_set(thi.get(), chi.get(), MPFR_RNDU);
        } else {
            mpfr_sqrt_ui(slo.get(), static_cast<unsigned long>(radicands[i]), MPFR_RNDD);
            mpfr_sqrt_ui(shi.get(), static_cast<unsigned long>(radicands[i]), MPFR_RNDU);
            if (cs > 0) {
                mpfr_mul(tlo.get(), clo.get(), slo.get(), MPFR_RNDD);
                mpfr_mul(thi.get(), chi.get(), shi.get(), MPFR_RNDU);
            } else {
                mpfr_mul(tlo.get(), clo.get(), shi.get(), MPFR_RNDD);
                mpfr_mul(thi.get(), chi.get(), slo.get(), MPFR_RNDU);
            }
        }
        mpfr_add(lo.get(), lo.get(), tlo.get(), MPFR_RNDD);
        mpfr_add(hi.get(), hi.get(), thi.get(), MPFR_RNDU);
    }
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
    return 2;
}

}  // namespace

PrecisionPolicy PrecisionPolicy::from_environment() {
    static const unsigned floor_bits = [] {
        const char* env = std::getenv("PRECISION_BITS");
        if (!env || !*env) return 128u;
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (*end != '\0' || v < MPFR_PREC_MIN || v > (1ul << 16)) return 128u;
        return static_cast<unsigned>(v);
    }();
    PrecisionPolicy p;
    p.start_bits = floor_bits;
    return p;
}

int certified_sign(std::span<const Rational> coeffs, std::span<const std::int64_t> radicands,
                   const PrecisionPolicy& policy) {
    if (coeffs.size() != radicands.size()) throw std::invalid_argument("certified_sign: size mismatch");
    bool all_zero = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (radicands[i] <= 0) throw std::invalid_argument("certified_sign: radicand must be positive");
        if (coeffs[i] != 0) all_zero = false;
    }
    if (all_zero) return 0;
    for (unsigned bits = policy.start_bits; bits <= policy.max_bits; bits *= 2) {
        int s = try_sign(coeffs, radicands, static_cast<mpfr_prec_t>(bits));
        if (s != 2) return s;
    }
    throw PrecisionExhausted("sign not separated from zero at " + std::to_string(policy.max_bits) + " bits");
}

double approximate_value(std::span<const Rational> coeffs, std::span<const std::int64_t> radicands) {
    double s = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        s += coeffs[i].get_d() * std::sqrt(static_cast<double>(radicands[i]));
    return s;
}

}  // namespace geoint
