#pragma once

#include "geoint/fform.hpp"

#include <complex>

namespace geoint {

// (x + y) exp(-pi (x^2 + y^2))
double phi_inf(double x, double y);
// sgn(x) exp(-2 pi x y) if x y > 0, else 0
double I_closed(double x, double y);
// Integral over t > 0 of phi_inf(x / t, t y) dt / t, by the trapezoid rule in
// s = log t with step halving until successive estimates differ by less than
// tol. Throws ToleranceError when refinement stalls. Requires tol > 0.
double I_quadrature(double x, double y, double tol);
// Coefficient of dt/t in the Kudla-Millson form: (x/t + y t) exp(-pi ((x/t)^2 + (y t)^2)).
double km_coeff(double x, double y, double t);

struct ArchVector {
    double x = 0;
    double y = 0;
};
// (sqrt|sa| x, sgn(sa) sqrt|sa| y); requires sa != 0.
ArchVector iota_sigma(double x, double y, double sa);

// Product over the places of F of exp(2 pi i q_sigma(b) tau_sigma) 1_{q_sigma(b) > 0}
// varsigma_sigma(b). tau1 goes with sqrt(D) -> +sqrt(D). Requires b != 0.
std::complex<double> fourier_term(const FFormContext& ctx, const Quaternion& b, std::complex<double> tau1,
                                  std::complex<double> tau2);
// The same product with each place's factor recomputed from the components of
// iota_L(b): phase exp(2 pi i q_sigma x_sigma) times the quadrature of the
// orbital integral at (iota_sigma(...) scaled by sqrt(y_sigma)).
std::complex<double> fourier_term_quadrature(const FFormContext& ctx, const Quaternion& b, std::complex<double> tau1,
                                             std::complex<double> tau2, double tol = 1e-12);

}  // namespace geoint
