#include "selftest.hpp"

#include "geoint/archimedean.hpp"
#include "geoint/multiquad.hpp"
#include "geoint/quad.hpp"
#include "geoint/units.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <ostream>
#include <random>
#include <sstream>

namespace geoint::cli {

namespace {

// Least totally positive unit > 1 of Z + f O_max by direct search over
// half-integral coordinates, bounded by the search radius.
std::optional<QuadElem> brute_force_tp_unit(std::int64_t D, std::int64_t f, long radius) {
    // (x + y sqrt(D)) / 2 with x^2 - D y^2 = 4; x > 0 forces total positivity.
    for (long y = 1; y <= radius; ++y) {
        Integer x2 = Integer(D) * y * y + 4;
        if (!mpz_perfect_square_p(x2.get_mpz_t())) continue;
        Integer x = sqrt(x2);
        Rational ux(x, 2), uy(y, 2);
        ux.canonicalize();
        uy.canonicalize();
        QuadElem u(ux, uy, D);
        if (in_order_of_conductor(u, f)) return u;
    }
    return std::nullopt;
}

}  // namespace

bool run_selftest(double tol, std::ostream& log) {
    bool ok = true;
    auto check = [&](bool pass, const std::string& what) {
        log << (pass ? "ok   " : "FAIL ") << what << "\n";
        ok = ok && pass;
    };

    const double grid[] = {-2, -1, -0.5, 0.25, 0.5, 1, 2};
    double worst = 0;
    for (double x : grid)
        for (double y : grid) worst = std::max(worst, std::fabs(I_quadrature(x, y, tol) - I_closed(x, y)));
    std::ostringstream what;
    what << "orbital integral quadrature vs closed form on the grid (max error " << std::scientific << worst << ")";
    check(worst < std::max(tol, 1e-12), what.str());

    double km_worst = 0;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(-2, 2), pos(0.2, 3);
    for (int i = 0; i < 100; ++i) {
        double x = uni(rng), y = uni(rng), t = pos(rng), l = pos(rng);
        km_worst = std::max(km_worst, std::fabs(km_coeff(x, y, l * t) - km_coeff(x / l, l * y, t)));
    }
    check(km_worst < 1e-12, "Kudla-Millson coefficient scaling identity");

    for (std::int64_t D : {2, 3, 5, 6, 7, 10, 13, 14, 15, 17})
        for (std::int64_t f : {1, 2, 3}) {
            constexpr long radius = 200000;
            auto expected = brute_force_tp_unit(D, f, radius);
            QuadElem got = fundamental_tp_unit(D, f);
            bool pass = expected ? got == *expected : got.b() * 2 > radius;
            check(pass, "fundamental totally positive unit D=" + std::to_string(D) + " f=" + std::to_string(f) + " -> " +
                            got.to_string());
        }

    auto field = MultiQuadField::generated_by({2, 3, 5, 7});
    std::uniform_int_distribution<int> small(-6, 6);
    int disagreements = 0;
    for (int i = 0; i < 300; ++i) {
        MultiQuadElem acc(field);
        for (std::size_t m = 0; m < field->dimension(); ++m)
            if (small(rng) % 3 == 0) acc += MultiQuadElem::sqrt_of(field, field->radicand(m), Rational(small(rng)));
        if (acc.sign() != acc.exact_sign()) ++disagreements;
    }
    check(disagreements == 0, "interval-ladder sign vs exact tower sign on 300 random elements");
    return ok;
}

}  // namespace geoint::cli
