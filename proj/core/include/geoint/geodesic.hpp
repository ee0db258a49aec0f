#pragma once

#include "geoint/fform.hpp"
#include "geoint/multiquad.hpp"
#include "geoint/orbits.hpp"

#include <cstdint>
#include <vector>

namespace geoint {

// [[a, b], [c, d]] over a real multiquadratic field.
struct Mat2 {
    MultiQuadElem a, b, c, d;
    MultiQuadElem det() const { return a * d - b * c; }
    MultiQuadElem trace() const { return a + d; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

// A point of R ∪ {∞}.
struct BoundaryPoint {
    bool infinite = false;
    MultiQuadElem value;  // zero when infinite
    static BoundaryPoint infinity(const MultiQuadElem::FieldPtr& field) { return {true, MultiQuadElem(field)}; }
    static BoundaryPoint finite(MultiQuadElem v) { return {false, std::move(v)}; }
    friend bool operator==(const BoundaryPoint& x, const BoundaryPoint& y) {
        return x.infinite == y.infinite && (x.infinite || x.value == y.value);
    }
};

struct OrientedGeodesic {
    BoundaryPoint rep;  // repelling endpoint
    BoundaryPoint att;  // attracting endpoint
};

// Fixed points of a hyperbolic g, oriented repelling -> attracting.
// sqrt_disc must be the positive square root of (a - d)^2 + 4bc.
OrientedGeodesic axis_of_hyperbolic(const Mat2& g, const MultiQuadElem& sqrt_disc,
                                    const PrecisionPolicy& policy = PrecisionPolicy::from_environment());

// Endpoint-wise Möbius action; requires det(g) > 0.
BoundaryPoint mobius_image(const Mat2& g, const BoundaryPoint& p);
OrientedGeodesic mobius_image(const Mat2& g, const OrientedGeodesic& G,
                              const PrecisionPolicy& policy = PrecisionPolicy::from_environment());

// Sign of (x - y)(y - z)(z - x), extended to ∞ by continuity.
int orient(const BoundaryPoint& x, const BoundaryPoint& y, const BoundaryPoint& z,
           const PrecisionPolicy& policy = PrecisionPolicy::from_environment());

// 0 if the endpoint pairs do not interlace, else +1 when (rep1, rep2, att1, att2)
// is positively cyclically ordered. Throws NonTransversal on a shared endpoint.
int crossing_sign(const OrientedGeodesic& G1, const OrientedGeodesic& G2,
                  const PrecisionPolicy& policy = PrecisionPolicy::from_environment());

// Geometric side: a splitting B ⊗ R = M_2(R) defined over Q(sqrt(s)) for the
// positive structure constant s, and the two oriented axes.
class GeodesicOracle {
public:
    explicit GeodesicOracle(const FFormContext& ctx);

    const MultiQuadElem::FieldPtr& field() const { return field_; }
    // True when i is diagonalized (a > 0), false when j is (only b > 0).
    bool splits_i() const { return splits_i_; }
    Mat2 split_matrix(const Quaternion& q) const;
    // Axis of the unit u (> 1 at the + place, norm 1) of the embedding e.
    OrientedGeodesic axis(const EmbeddingData& e, const QuadElem& u) const;
    const OrientedGeodesic& axis1() const { return axis1_; }
    const OrientedGeodesic& axis2() const { return axis2_; }

    // crossing_sign(axis1, split(b) . axis2); requires nrd(b) > 0.
    int crossing(const Quaternion& b) const;

private:
    const FFormContext* ctx_;
    MultiQuadElem::FieldPtr field_;
    bool splits_i_ = true;
    MultiQuadElem sqrt_s_;
    OrientedGeodesic axis1_;
    OrientedGeodesic axis2_;
};

// Sum of crossing signs over enumerate_orbits(n). Zero for n <= 0.
std::int64_t oracle_coeff(std::int64_t n, const FFormContext& ctx, EnumOptions opt = {});
std::int64_t oracle_coeff(std::int64_t n, const GeodesicOracle& oracle, const std::vector<OrbitRep>& orbits);

struct TermwiseRow {
    OrbitRep orbit;
    int varsigma = 0;
    int crossing = 0;
};

struct TermwiseReport {
    std::int64_t n = 0;
    std::vector<TermwiseRow> rows;
    std::size_t agreements = 0;
    // Box scan over order coordinates in [-radius, radius]^4 of b with
    // nrd(b) = n and q_F(b) not totally positive.
    std::size_t scanned_nonpositive = 0;
    std::size_t nonpositive_crossings = 0;
};

TermwiseReport termwise_compare(std::int64_t n, const FFormContext& ctx, std::int64_t scan_radius = 3,
                                EnumOptions opt = {});

}  // namespace geoint
