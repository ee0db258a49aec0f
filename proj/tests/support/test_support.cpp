#include "test_support.hpp"

#include "geoint/units.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace geoint::testing {

std::string config_path(const std::string& name) { return std::string(GEOINT_CONFIG_DIR) + "/" + name + ".json"; }

FFormContext load_context(const std::string& name) { return build_context(load_config(config_path(name))); }

Quaternion random_order_element(const EichlerOrderLattice& order, std::mt19937_64& rng, std::int64_t radius) {
    std::uniform_int_distribution<std::int64_t> dist(-radius, radius);
    IntVec4 c{};
    for (auto& v : c) v = dist(rng);
    return order.element(c);
}

namespace {

Rational small_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

}  // namespace

BiquadElem random_biquad(std::int64_t D1, std::int64_t D2, std::mt19937_64& rng) {
    return BiquadElem({small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng)}, D1, D2);
}

QuadElem random_quad(std::int64_t D, std::mt19937_64& rng) { return QuadElem(small_rational(rng), small_rational(rng), D); }

int brute_hilbert(std::int64_t a, std::int64_t b, std::int64_t p) {
    if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("brute_hilbert: p must be 2, 3 or 5");
    const std::int64_t m = p == 2 ? 32 : p * p * p;
    auto mod = [m](std::int64_t v) { return ((v % m) + m) % m; };
    std::vector<bool> sq_unit(static_cast<std::size_t>(m)), sq_any(static_cast<std::size_t>(m));
    for (std::int64_t z = 0; z < m; ++z) {
        auto r = static_cast<std::size_t>(z * z % m);
        sq_any[r] = true;
        if (z % p != 0) sq_unit[r] = true;
    }
    for (std::int64_t x = 0; x < m; ++x) {
        for (std::int64_t y = 0; y < m; ++y) {
            auto r = static_cast<std::size_t>(mod(a * x * x + b * y * y));
            bool xy_unit = x % p != 0 || y % p != 0;
            if (xy_unit ? sq_any[r] : sq_unit[r]) return 1;
        }
    }
    return -1;
}

QuadElem brute_tp_unit(std::int64_t D, std::int64_t f) {
    for (std::int64_t y = 1; y < 100000000; ++y) {
        __extension__ using i128 = __int128;
        i128 x2 = 4 + static_cast<i128>(D) * y * y;
        auto x = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x2)));
        while (static_cast<i128>(x) * x > x2) --x;
        while (static_cast<i128>(x + 1) * (x + 1) <= x2) ++x;
        if (static_cast<i128>(x) * x != x2) continue;
        // u = (x + y sqrt D) / 2
        bool member = false;
        if (D % 4 == 1) {
            // u = (x - y)/2 + y (1 + sqrt D)/2
            member = (x - y) % 2 == 0 && y % f == 0;
        } else {
            member = x % 2 == 0 && y % 2 == 0 && (y / 2) % f == 0;
        }
        if (!member) continue;
        Rational rx(x, 2), ry(y, 2);
        rx.canonicalize();
        ry.canonicalize();
        return QuadElem(rx, ry, D);
    }
    throw std::runtime_error("brute_tp_unit: search bound exceeded");
}

std::vector<Quaternion> norm_one_elements(const EichlerOrderLattice& order, std::int64_t radius) {
    std::vector<Quaternion> out;
    const auto& alg = order.algebra();
    IntVec4 c{};
    for (c[0] = -radius; c[0] <= radius; ++c[0])
        for (c[1] = -radius; c[1] <= radius; ++c[1])
            for (c[2] = -radius; c[2] <= radius; ++c[2])
                for (c[3] = -radius; c[3] <= radius; ++c[3]) {
                    Quaternion q = order.element(c);
                    if (alg.nrd(q) != 1) continue;
                    if (q == Quaternion::scalar(1) || q == Quaternion::scalar(-1)) continue;
                    out.push_back(q);
                }
    return out;
}

namespace {

using LD = long double;
struct FMat {
    LD p, q, r, s;
    FMat operator*(const FMat& o) const {
        return {p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r, r * o.q + s * o.s};
    }
    LD det() const { return p * s - q * r; }
};

// i -> diag(sqrt a, -sqrt a), j -> [[0, b], [1, 0]] when a > 0; roles of i and j
// exchanged when only b > 0.
FMat float_split(const QuatAlgebra& alg, const Quaternion& h) {
    LD a = alg.a().get_d(), b = alg.b().get_d();
    LD t = h.t.get_d(), x = h.x.get_d(), y = h.y.get_d(), z = h.z.get_d();
    FMat I, J, K;
    if (a > 0) {
        LD r = std::sqrt(a);
        I = {r, 0, 0, -r};
        J = {0, b, 1, 0};
    } else {
        LD r = std::sqrt(b);
        I = {0, a, 1, 0};
        J = {r, 0, 0, -r};
    }
    K = I * J;
    return {t + x * I.p + y * J.p + z * K.p, x * I.q + y * J.q + z * K.q, x * I.r + y * J.r + z * K.r,
            t + x * I.s + y * J.s + z * K.s};
}

struct FAxis {
    LD rep, att;  // Cayley angles in (-pi, pi]
};

std::optional<FAxis> float_axis(const FMat& g) {
    LD scale = std::fabs(g.p) + std::fabs(g.q) + std::fabs(g.r) + std::fabs(g.s);
    if (std::fabs(g.r) < 1e-12L * scale) return std::nullopt;
    LD disc = (g.s - g.p) * (g.s - g.p) + 4 * g.r * g.q;
    if (disc <= 0) return std::nullopt;
    LD sq = std::sqrt(disc);
    LD t1 = ((g.p - g.s) + sq) / (2 * g.r);
    LD t2 = ((g.p - g.s) - sq) / (2 * g.r);
    LD d1 = g.r * t1 + g.s;
    bool t1_att = d1 * d1 > g.det();
    LD att = t1_att ? t1 : t2, rep = t1_att ? t2 : t1;
    return FAxis{2 * std::atan(rep), 2 * std::atan(att)};
}

// Position of angle x on the circle measured counterclockwise from base, in [0, 2 pi).
LD arc_from(LD base, LD x) {
    LD d = std::fmod(x - base, 2 * std::numbers::pi_v<LD>);
    return d < 0 ? d + 2 * std::numbers::pi_v<LD> : d;
}

}  // namespace

std::optional<int> float_crossing(const FFormContext& ctx, const Quaternion& b) {
    const auto& alg = ctx.algebra();
    FMat g1 = float_split(alg, ctx.g1());
    FMat h = float_split(alg, alg.mul(b, ctx.g2(), alg.inverse(b)));
    auto A1 = float_axis(g1);
    auto A2 = float_axis(h);
    if (!A1 || !A2) return std::nullopt;
    LD r2 = arc_from(A1->rep, A2->rep), a1 = arc_from(A1->rep, A1->att), a2 = arc_from(A1->rep, A2->att);
    const LD tiny = 1e-9L;
    for (LD v : {r2, a1, a2})
        if (v < tiny || 2 * std::numbers::pi_v<LD> - v < tiny) return std::nullopt;
    if (std::fabs(r2 - a1) < tiny || std::fabs(a2 - a1) < tiny || std::fabs(r2 - a2) < tiny) return std::nullopt;
    bool r2_inside = r2 < a1, a2_inside = a2 < a1;
    if (r2_inside == a2_inside) return 0;
    return r2_inside ? 1 : -1;
}

std::map<std::int64_t, std::int64_t> newform_coefficients(const EllipticCurve& E, std::int64_t n_max) {
    auto is_prime = [](std::int64_t n) {
        if (n < 2) return false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    std::map<std::int64_t, std::int64_t> ap;
    for (std::int64_t p = 2; p <= n_max; ++p) {
        if (!is_prime(p) || E.conductor % p == 0) continue;
        std::int64_t count = 1;  // point at infinity
        for (std::int64_t x = 0; x < p; ++x)
            for (std::int64_t y = 0; y < p; ++y) {
                std::int64_t lhs = y * y + E.a1 * x * y + E.a3 * y;
                std::int64_t rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
                if (((lhs - rhs) % p + p) % p == 0) ++count;
            }
        ap[p] = p + 1 - count;
    }
    std::map<std::int64_t, std::int64_t> a{{1, 1}};
    for (std::int64_t n = 2; n <= n_max; ++n) {
        if (std::gcd(n, E.conductor) != 1) continue;
        std::int64_t p = 2;
        while (n % p != 0) ++p;
        std::int64_t pk = 1;
        while (n % (pk * p) == 0) pk *= p;
        std::int64_t m = n / pk;
        std::int64_t apk;
        if (pk == p) {
            apk = ap.at(p);
        } else {
            apk = ap.at(p) * a.at(pk / p) - p * a.at(pk / (p * p));
        }
        a[n] = m == 1 ? apk : apk * a.at(m);
    }
    return a;
}

}  // namespace geoint::testing
