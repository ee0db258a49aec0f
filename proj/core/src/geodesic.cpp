#include "geoint/geodesic.hpp"

#include "geoint/errors.hpp"

#include <stdexcept>

namespace geoint {

namespace {

MultiQuadElem lift(const MultiQuadElem::FieldPtr& field, const Rational& r) {
    return MultiQuadElem::rational(field, r);
}

}  // namespace

OrientedGeodesic axis_of_hyperbolic(const Mat2& g, const MultiQuadElem& sqrt_disc, const PrecisionPolicy& policy) {
    const auto& field = g.a.field();
    if (sqrt_disc.sign(policy) <= 0) throw std::domain_error("axis: not hyperbolic");
    MultiQuadElem det = g.det();
    if (g.c.is_zero()) {
        // Fixed points ∞ and b / (d - a); ∞ attracts iff |a| > |d|.
        BoundaryPoint inf = BoundaryPoint::infinity(field);
        BoundaryPoint fin = BoundaryPoint::finite(g.b / (g.d - g.a));
        if ((g.a * g.a - g.d * g.d).sign(policy) > 0) return {fin, inf};
        return {inf, fin};
    }
    MultiQuadElem half_inv_c = (g.c * Rational(2)).inverse();
    MultiQuadElem p = (g.a - g.d + sqrt_disc) * half_inv_c;
    MultiQuadElem q = (g.a - g.d - sqrt_disc) * half_inv_c;
    // Multiplier at a fixed point t is det / (c t + d)^2.
    MultiQuadElem cp = g.c * p + g.d;
    if ((cp * cp - det).sign(policy) > 0) return {BoundaryPoint::finite(q), BoundaryPoint::finite(p)};
    return {BoundaryPoint::finite(p), BoundaryPoint::finite(q)};
}

BoundaryPoint mobius_image(const Mat2& g, const BoundaryPoint& p) {
    const auto& field = g.a.field();
    if (p.infinite) {
        if (g.c.is_zero()) return BoundaryPoint::infinity(field);
        return BoundaryPoint::finite(g.a / g.c);
    }
    MultiQuadElem den = g.c * p.value + g.d;
    if (den.is_zero()) return BoundaryPoint::infinity(field);
    return BoundaryPoint::finite((g.a * p.value + g.b) / den);
}

OrientedGeodesic mobius_image(const Mat2& g, const OrientedGeodesic& G, const PrecisionPolicy& policy) {
    if (g.det().sign(policy) <= 0) throw std::invalid_argument("mobius_image: det must be positive");
    return {mobius_image(g, G.rep), mobius_image(g, G.att)};
}

int orient(const BoundaryPoint& x, const BoundaryPoint& y, const BoundaryPoint& z, const PrecisionPolicy& policy) {
    int infinite = int(x.infinite) + int(y.infinite) + int(z.infinite);
    if (infinite > 1) return 0;
    // Cyclic rotation preserves the orientation; put ∞ last, then
    // orient(x, y, ∞) = sgn(y - x).
    if (x.infinite) return orient(y, z, x, policy);
    if (y.infinite) return orient(z, x, y, policy);
    if (z.infinite) return (y.value - x.value).sign(policy);
    return (x.value - y.value).sign(policy) * (y.value - z.value).sign(policy) * (z.value - x.value).sign(policy);
}

int crossing_sign(const OrientedGeodesic& G1, const OrientedGeodesic& G2, const PrecisionPolicy& policy) {
    if (G1.rep == G2.rep || G1.rep == G2.att || G1.att == G2.rep || G1.att == G2.att)
        throw NonTransversal("geodesics share an endpoint");
    int o1 = orient(G1.rep, G2.rep, G1.att, policy);
    int o2 = orient(G1.rep, G2.att, G1.att, policy);
    return o1 == o2 ? 0 : o1;
}

GeodesicOracle::GeodesicOracle(const FFormContext& ctx)
    : ctx_(&ctx) {
    const QuatAlgebra& B = ctx.algebra();
    splits_i_ = B.a() > 0;
    const Rational& s = splits_i_ ? B.a() : B.b();
    SquareDecomposition sd = square_decompose(s);
    field_ = MultiQuadField::generated_by({sd.squarefree, ctx.D1(), ctx.D2()});
    sqrt_s_ = MultiQuadElem::sqrt_of(field_, sd.squarefree, sd.root);
    axis1_ = axis(ctx.emb1(), ctx.u1());
    axis2_ = axis(ctx.emb2(), ctx.u2());
}

Mat2 GeodesicOracle::split_matrix(const Quaternion& q) const {
    const QuatAlgebra& B = ctx_->algebra();
    auto r = [&](const Rational& v) { return lift(field_, v); };
    if (splits_i_) {
        // i -> diag(√a, -√a), j -> [[0, b], [1, 0]], k -> [[0, b√a], [-√a, 0]]
        return {r(q.t) + sqrt_s_ * q.x, r(q.y * B.b()) + sqrt_s_ * (q.z * B.b()), r(q.y) - sqrt_s_ * q.z,
                r(q.t) - sqrt_s_ * q.x};
    }
    // j -> diag(√b, -√b), i -> [[0, a], [1, 0]], k -> [[0, -a√b], [√b, 0]]
    return {r(q.t) + sqrt_s_ * q.y, r(q.x * B.a()) - sqrt_s_ * (q.z * B.a()), r(q.x) + sqrt_s_ * q.z,
            r(q.t) - sqrt_s_ * q.y};
}

OrientedGeodesic GeodesicOracle::axis(const EmbeddingData& e, const QuadElem& u) const {
    Mat2 g = split_matrix(embed_elem(e, u));
    // (a - d)^2 + 4bc = tr^2 - 4 det = 4 u_b^2 D for u = u_a + u_b sqrt(D) of norm 1.
    MultiQuadElem sqrt_disc = MultiQuadElem::sqrt_of(field_, e.D, abs(u.b()) * 2);
    return axis_of_hyperbolic(g, sqrt_disc, ctx_->precision());
}

int GeodesicOracle::crossing(const Quaternion& b) const {
    return crossing_sign(axis1_, mobius_image(split_matrix(b), axis2_, ctx_->precision()), ctx_->precision());
}

std::int64_t oracle_coeff(std::int64_t n, const GeodesicOracle& oracle, const std::vector<OrbitRep>& orbits) {
    if (n <= 0) return 0;
    std::int64_t total = 0;
    for (const OrbitRep& o : orbits) total += oracle.crossing(o.b);
    return total;
}

std::int64_t oracle_coeff(std::int64_t n, const FFormContext& ctx, EnumOptions opt) {
    if (n <= 0) return 0;
    GeodesicOracle oracle(ctx);
    return oracle_coeff(n, oracle, enumerate_orbits(n, ctx, opt));
}

TermwiseReport termwise_compare(std::int64_t n, const FFormContext& ctx, std::int64_t scan_radius, EnumOptions opt) {
    TermwiseReport rep;
    rep.n = n;
    if (n <= 0) return rep;
    GeodesicOracle oracle(ctx);
    for (OrbitRep& o : enumerate_orbits(n, ctx, opt)) {
        TermwiseRow row{o, ctx.varsigma(o.b), oracle.crossing(o.b)};
        if (row.varsigma == row.crossing) ++rep.agreements;
        rep.rows.push_back(std::move(row));
    }
    const IntMat4& G = ctx.nrd_gram();
    const std::int64_t R = scan_radius;
    IntVec4 v{};
    for (v[0] = -R; v[0] <= R; ++v[0])
        for (v[1] = -R; v[1] <= R; ++v[1])
            for (v[2] = -R; v[2] <= R; ++v[2])
                for (v[3] = -R; v[3] <= R; ++v[3]) {
                    Integer s = 0;
                    for (std::size_t r = 0; r < 4; ++r)
                        for (std::size_t c = 0; c < 4; ++c) s += Integer(static_cast<long>(G[r][c])) * v[r] * v[c];
                    if (s != 2 * n) continue;
                    Quaternion b = ctx.order().element(v);
                    if (ctx.qF_totally_positive(b)) continue;
                    ++rep.scanned_nonpositive;
                    if (oracle.crossing(b) != 0) ++rep.nonpositive_crossings;
                }
    return rep;
}

}  // namespace geoint
