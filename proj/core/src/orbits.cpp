#include "geoint/orbits.hpp"

#include "geoint/lattice_enum.hpp"

#include <cmath>
#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace geoint {

UnitLogData::UnitLogData(const FFormContext& ctx)
    : lambda1(std::log(ctx.u1().value_at(1))), lambda2(std::log(ctx.u2().value_at(1))) {}

std::array<double, 2> UnitLogData::coordinates(const BiquadElem& x) const {
    std::array<double, 4> L{};
    for (std::size_t p = 0; p < 4; ++p) L[p] = std::log(std::fabs(x.value_at(kRealPlaces[p])));
    double d1 = L[0] - L[3];
    double d2 = L[1] - L[2];
    return {(d1 + d2) / (4 * lambda1), (d1 - d2) / (4 * lambda2)};
}

namespace {

long double to_long_double(const Rational& r) {
    if (r.get_num().fits_slong_p() && r.get_den().fits_slong_p())
        return static_cast<long double>(r.get_num().get_si()) / static_cast<long double>(r.get_den().get_si());
    return r.get_d();
}

// Exact floor of log|N^+ / N^-| / (4 log u) for N != 0 in Q(sqrt(D)) and u > 1
// a unit of norm 1: the largest m with u^{4m} |Nm N| <= (N^+)^2.
std::int64_t exact_floor(const QuadElem& N, const QuadElem& u, double estimate) {
    if (!std::isfinite(estimate)) estimate = 0;
    const QuadElem N2 = N * N;
    const Rational absnorm = abs(N.norm());
    auto at_most = [&](std::int64_t m) {  // u^{4m} |Nm N| <= N^2 at the + place
        return (N2 - u.pow(4 * m) * absnorm).sign_at(1) >= 0;
    };
    auto m = static_cast<std::int64_t>(std::floor(estimate));
    while (!at_most(m)) --m;
    while (at_most(m + 1)) ++m;
    return m;
}

IntVec4 sign_normalized(IntVec4 c) {
    for (std::int64_t v : c) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : c) w = -w;
        break;
    }
    return c;
}

}  // namespace

std::array<std::int64_t, 2> unit_floor(const FFormContext& ctx, const Quaternion& b) {
    if (b.is_zero()) throw std::domain_error("unit_floor: b must be nonzero");
    BiquadElem x = ctx.iota_L(b);
    UnitLogData logs(ctx);
    auto t = logs.coordinates(x);
    return {exact_floor(x.norm_to_F1(), ctx.u1(), t[0]), exact_floor(x.norm_to_F2(), ctx.u2(), t[1])};
}

Quaternion unit_translate(const FFormContext& ctx, const Quaternion& b, std::int64_t m, std::int64_t k) {
    const QuatAlgebra& B = ctx.algebra();
    Quaternion left = m >= 0 ? B.pow(ctx.g1(), m) : B.pow(ctx.g1_inv(), -m);
    Quaternion right = k >= 0 ? B.pow(ctx.g2(), k) : B.pow(ctx.g2_inv(), -k);
    return B.mul(left, b, right);
}

OrbitRep canonicalize(const FFormContext& ctx, const Quaternion& b) {
    if (!ctx.qF_totally_positive(b)) throw std::domain_error("canonicalize: q_F(b) is not totally positive");
    auto m = unit_floor(ctx, b);
    Quaternion c = unit_translate(ctx, b, -m[0], -m[1]);
    auto coords = ctx.order().coordinates(c);
    if (!coords) throw std::domain_error("canonicalize: b is not in the order");
    IntVec4 key = sign_normalized(*coords);
    if (key != *coords) c = -c;
    return OrbitRep{c, key};
}

std::vector<Quaternion> enumerate_raw(std::int64_t n, const FFormContext& ctx, EnumOptions opt) {
    std::vector<Quaternion> out;
    if (n <= 0) return out;
    if (!(opt.box_scale >= 1.0) || !(opt.slack >= 0.0)) throw std::invalid_argument("enumerate: bad box options");

    // Real images of iota_L(b) at the four places as linear forms in order coordinates.
    const long double sD1 = std::sqrt(static_cast<long double>(ctx.D1()));
    const long double sD2 = std::sqrt(static_cast<long double>(ctx.D2()));
    RatMat4 coord_to_L = mat_mul(*inverse(ctx.module_basis()), ctx.order().basis_matrix());
    RealMat4 T{};
    for (std::size_t p = 0; p < 4; ++p) {
        const RealPlace pl = kRealPlaces[p];
        const std::array<long double, 4> e = {1.0L, pl.s1 * sD1, pl.s2 * sD2, pl.s1 * pl.s2 * sD1 * sD2};
        for (int c = 0; c < 4; ++c) {
            long double s = 0;
            for (int r = 0; r < 4; ++r) s += e[static_cast<std::size_t>(r)] * to_long_double(coord_to_L[r][c]);
            T[p][static_cast<std::size_t>(c)] = s;
        }
    }

    // With y_p the image of iota_L(b) at place p, q_sigma = sigma(alpha) y_{++} y_{--}
    // and q_sigma' = sigma'(alpha) y_{+-} y_{-+} are positive with sum n. Put
    // d1 = log|y_{++} / y_{--}| and d2 = log|y_{+-} / y_{-+}|. Unit coordinates
    // in [-slack, 1 + slack] confine (d1, d2) to a rectangle, which is cut into
    // slices; on a slice centred at (c1, c2) with half-widths (h1, h2)
    //   |sigma(alpha)| (y_{++}^2 e^{-c1} + y_{--}^2 e^{c1})
    //     + |sigma'(alpha)| (y_{+-}^2 e^{-c2} + y_{-+}^2 e^{c2}) <= 2 n cosh(max(h1, h2)).
    UnitLogData logs(ctx);
    const double l1 = logs.lambda1, l2 = logs.lambda2, d = opt.slack;
    const double sa = std::fabs(ctx.alpha().value_at(1));
    const double sa2 = std::fabs(ctx.alpha().value_at(-1));
    const double lo1 = -2 * (l1 + l2) * d, hi1 = 2 * (l1 + l2) * (1 + d);
    const double lo2 = -2 * l1 * d - 2 * l2 * (1 + d), hi2 = 2 * l1 * (1 + d) + 2 * l2 * d;
    constexpr double kSliceWidth = 2.0;
    const int k1 = std::max(1, static_cast<int>(std::ceil((hi1 - lo1) / kSliceWidth)));
    const int k2 = std::max(1, static_cast<int>(std::ceil((hi2 - lo2) / kSliceWidth)));
    const double w1 = (hi1 - lo1) / k1, w2 = (hi2 - lo2) / k2;
    const long double bound =
        2.0L * n * std::cosh(std::max(w1, w2) / 2) * opt.box_scale * opt.box_scale * (1 + 1e-9L);

    const IntMat4& G = ctx.nrd_gram();
    const IntMat4& H = ctx.twist_gram();
    __extension__ using i128 = __int128;
    const i128 limit = i128{4} * ctx.D() * n * n;
    auto form = [](const IntMat4& A, const IntVec4& v) {
        i128 s = 0;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) s += i128{A[r][c]} * v[r] * v[c];
        return s;
    };
    std::set<IntVec4> accepted;
    for (int i = 0; i < k1; ++i)
        for (int j = 0; j < k2; ++j) {
            const double c1 = lo1 + (i + 0.5) * w1, c2 = lo2 + (j + 0.5) * w2;
            const std::array<long double, 4> weight = {sa * std::exp(-c1), sa2 * std::exp(-c2), sa2 * std::exp(c2),
                                                       sa * std::exp(c1)};
            RealMat4 factor{};
            for (std::size_t p = 0; p < 4; ++p)
                for (std::size_t c = 0; c < 4; ++c) factor[p][c] = std::sqrt(weight[p]) * T[p][c];
            fincke_pohst_factor(factor, bound, [&](const IntVec4& v) {
                if (form(G, v) != 2 * n) return;
                i128 t = form(H, v);
                if (t * t >= limit) return;
                accepted.insert(v);
            });
        }
    for (const IntVec4& v : accepted) out.push_back(ctx.order().element(v));
    return out;
}

std::vector<OrbitRep> enumerate_orbits(std::int64_t n, const FFormContext& ctx, EnumOptions opt) {
    std::map<IntVec4, OrbitRep> seen;
    for (const Quaternion& b : enumerate_raw(n, ctx, opt)) {
        OrbitRep r = canonicalize(ctx, b);
        seen.emplace(r.key, std::move(r));
    }
    std::vector<OrbitRep> out;
    out.reserve(seen.size());
    for (auto& [k, r] : seen) out.push_back(std::move(r));
    return out;
}

std::vector<OrbitRep> enumerate_orbits_oracle(std::int64_t n, const FFormContext& ctx, double box_scale,
                                              double slack) {
    return enumerate_orbits(n, ctx, EnumOptions{box_scale, 2 * slack});
}

}  // namespace geoint
