#include "geoint/archimedean.hpp"

#include "geoint/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace geoint {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWindow = 12.0;
constexpr double kMaxWindow = 200.0;
constexpr int kMaxHalvings = 24;

}  // namespace

double phi_inf(double x, double y) { return (x + y) * std::exp(-kPi * (x * x + y * y)); }

double I_closed(double x, double y) {
    if (x * y <= 0) return 0.0;
    return (x > 0 ? 1.0 : -1.0) * std::exp(-2 * kPi * x * y);
}

double km_coeff(double x, double y, double t) {
    if (!(t > 0)) throw std::domain_error("km_coeff: t must be positive");
    const double u = x / t, v = y * t;
    return (u + v) * std::exp(-kPi * (u * u + v * v));
}

double I_quadrature(double x, double y, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("I_quadrature: tol must be positive");
    auto f = [&](double s) { return km_coeff(x, y, std::exp(s)); };
    // Widen the window until the integrand is negligible at both ends.
    double lo = -kWindow, hi = kWindow;
    const double tail = tol * 1e-3;
    while (std::fabs(f(lo)) > tail && lo > -kMaxWindow) lo -= kWindow;
    while (std::fabs(f(hi)) > tail && hi < kMaxWindow) hi += kWindow;
    if (std::fabs(f(lo)) > tail || std::fabs(f(hi)) > tail)
        throw ToleranceError("I_quadrature: integrand does not decay inside the window");

    double h = 0.5;
    auto n = static_cast<long>(std::ceil((hi - lo) / h));
    h = (hi - lo) / static_cast<double>(n);
    double sum = 0.5 * (f(lo) + f(hi)), mass = 0.5 * (std::fabs(f(lo)) + std::fabs(f(hi)));
    for (long k = 1; k < n; ++k) {
        double v = f(lo + static_cast<double>(k) * h);
        sum += v;
        mass += std::fabs(v);
    }
    double estimate = sum * h;
    for (int round = 0; round < kMaxHalvings; ++round) {
        for (long k = 0; k < n; ++k) {
            double v = f(lo + (static_cast<double>(k) + 0.5) * h);
            sum += v;
            mass += std::fabs(v);
        }
        n *= 2;
        h *= 0.5;
        double refined = sum * h;
        // Rounding in the sums bounds the attainable accuracy.
        double floor = 8 * std::numeric_limits<double>::epsilon() * mass * h;
        if (tol < floor) throw ToleranceError("I_quadrature: tolerance below attainable double precision");
        if (std::fabs(refined - estimate) < tol) return refined;
        estimate = refined;
    }
    throw ToleranceError("I_quadrature: step refinement stalled");
}

ArchVector iota_sigma(double x, double y, double sa) {
    if (sa == 0) throw std::domain_error("iota_sigma: sigma(alpha) must be nonzero");
    const double r = std::sqrt(std::fabs(sa));
    return {r * x, (sa > 0 ? 1.0 : -1.0) * r * y};
}

std::complex<double> fourier_term(const FFormContext& ctx, const Quaternion& b, std::complex<double> tau1,
                                  std::complex<double> tau2) {
    if (b.is_zero()) throw std::domain_error("fourier_term: b must be nonzero");
    const QuadElem q = ctx.q_F(b);
    if (!totally_positive(q)) return 0.0;
    const BiquadElem x = ctx.iota_L(b);
    const std::complex<double> I(0, 1);
    std::complex<double> out = static_cast<double>(ctx.sign_convention());
    const std::array<std::pair<RealPlace, std::complex<double>>, 2> places = {
        std::pair{RealPlace{1, 1}, tau1}, std::pair{RealPlace{1, -1}, tau2}};
    for (const auto& [place, tau] : places) {
        const double qs = q.value_at(place.on_F());
        out *= static_cast<double>(x.sign_at(place, ctx.precision())) * std::exp(2 * kPi * I * qs * tau);
    }
    return out;
}

std::complex<double> fourier_term_quadrature(const FFormContext& ctx, const Quaternion& b, std::complex<double> tau1,
                                             std::complex<double> tau2, double tol) {
    if (b.is_zero()) throw std::domain_error("fourier_term: b must be nonzero");
    const QuadElem q = ctx.q_F(b);
    const BiquadElem x = ctx.iota_L(b);
    const std::complex<double> I(0, 1);
    std::complex<double> out = static_cast<double>(ctx.sign_convention());
    // (distinguished extension, its partner, tau) for each place of F.
    const std::array<std::tuple<RealPlace, RealPlace, std::complex<double>>, 2> places = {
        std::tuple{RealPlace{1, 1}, RealPlace{-1, -1}, tau1}, std::tuple{RealPlace{1, -1}, RealPlace{-1, 1}, tau2}};
    for (const auto& [first, second, tau] : places) {
        const double qs = q.value_at(first.on_F());
        const double sa = ctx.alpha().value_at(first.on_F());
        const double sy = std::sqrt(tau.imag());
        const ArchVector v = iota_sigma(x.value_at(first), x.value_at(second), sa);
        out *= std::exp(2 * kPi * I * qs * tau.real()) * I_quadrature(sy * v.x, sy * v.y, tol);
    }
    return out;
}

}  // namespace geoint
