#include "geoint/units.hpp"

#include "geoint/errors.hpp"

#include <stdexcept>

namespace geoint {

namespace {

bool one_mod_four(std::int64_t D) { return ((D % 4) + 4) % 4 == 1; }

}  // namespace

QuadElem max_order_generator(std::int64_t D) {
    if (one_mod_four(D)) return QuadElem(Rational(1, 2), Rational(1, 2), D);
    return QuadElem(0, 1, D);
}

bool in_order_of_conductor(const QuadElem& x, std::int64_t f) {
    // x = u + v*omega with u, v integral and f | v.
    const std::int64_t D = x.D();
    Rational v, u;
    if (one_mod_four(D)) {
        v = 2 * x.b();
        u = x.a() - v / 2;
    } else {
        v = x.b();
        u = x.a();
    }
    if (!is_integer(u) || !is_integer(v)) return false;
    return mpz_divisible_ui_p(v.get_num().get_mpz_t(), static_cast<unsigned long>(f)) != 0;
}

QuadElem fundamental_unit(std::int64_t D) {
    if (D <= 1 || !is_squarefree(D)) throw std::invalid_argument("fundamental_unit: D must be squarefree > 1");
    // Continued fraction of theta = (P + sqrt(D)) / Q; convergents p/q.
    // The first convergent with Nm(p - q*omega) = +-1 gives the unit
    // p - q*conj(omega) > 1.
    const bool mod4 = one_mod_four(D);
    Integer P = mod4 ? 1 : 0;
    Integer Q = mod4 ? 2 : 1;
    const Integer Dz = D;
    Integer isqrt;
    mpz_sqrt(isqrt.get_mpz_t(), Dz.get_mpz_t());
    const QuadElem omega = max_order_generator(D);
    const QuadElem omega_conj = omega.conj();
    Integer p_prev = 0, p_cur = 1;  // p_{-2}, p_{-1}
    Integer q_prev = 1, q_cur = 0;  // q_{-2}, q_{-1}
    for (int iter = 0; iter < 100000; ++iter) {
        Integer a = (P + isqrt);
        mpz_fdiv_q(a.get_mpz_t(), a.get_mpz_t(), Q.get_mpz_t());
        Integer p_next = a * p_cur + p_prev;
        Integer q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
        QuadElem cand = QuadElem::rational(Rational(p_cur), D) - omega * Rational(q_cur);
        Rational n = cand.norm();
        if (n == 1 || n == -1) {
            QuadElem unit = QuadElem::rational(Rational(p_cur), D) - omega_conj * Rational(q_cur);
            if (unit.sign_at(1) < 0) unit = -unit;
            if (unit.value_at(1) < 1.0) unit = unit.inverse();
            return unit;
        }
        P = a * Q - P;
        Q = (Dz - P * P) / Q;
    }
    throw std::runtime_error("fundamental_unit: continued fraction did not terminate");
}

QuadElem fundamental_tp_unit(std::int64_t D, std::int64_t f) {
    if (f < 1) throw std::invalid_argument("fundamental_tp_unit: conductor must be >= 1");
    QuadElem eps = fundamental_unit(D);
    if (eps.norm() != 1) eps = eps * eps;
    QuadElem u = eps;
    for (int k = 1; k < 1000000; ++k) {
        if (in_order_of_conductor(u, f)) return u;
        u *= eps;
    }
    throw std::runtime_error("fundamental_tp_unit: no power in the order");
}

}  // namespace geoint
