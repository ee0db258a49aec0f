#include "geoint/lattice_enum.hpp"
#include "geoint/orbits.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

namespace geoint {
namespace {

using testing::load_context;

class OrbitsTest : public ::testing::TestWithParam<std::string> {
protected:
    OrbitsTest() : ctx(load_context(GetParam())) {}
    FFormContext ctx;
};

TEST_P(OrbitsTest, EmptyForNonPositiveNorm) {
    EXPECT_TRUE(enumerate_orbits(0, ctx).empty());
    EXPECT_TRUE(enumerate_orbits(-3, ctx).empty());
}

TEST_P(OrbitsTest, RepresentativesAreValidAndCanonical) {
    const auto& B = ctx.algebra();
    for (std::int64_t n = 1; n <= 20; ++n) {
        auto orbits = enumerate_orbits(n, ctx);
        std::set<IntVec4> keys;
        for (const auto& o : orbits) {
            EXPECT_EQ(B.nrd(o.b), n);
            EXPECT_TRUE(ctx.qF_totally_positive(o.b));
            EXPECT_EQ(ctx.order().coordinates(o.b), o.key);
            EXPECT_EQ(canonicalize(ctx, o.b), o);
            auto fl = unit_floor(ctx, o.b);
            EXPECT_EQ(fl[0], 0);
            EXPECT_EQ(fl[1], 0);
            EXPECT_TRUE(keys.insert(o.key).second);
        }
    }
}

TEST_P(OrbitsTest, CanonicalizeIsOrbitConstant) {
    std::mt19937_64 rng(201);
    std::uniform_int_distribution<std::int64_t> shift(-4, 4);
    for (std::int64_t n = 1; n <= 15; ++n) {
        for (const auto& o : enumerate_orbits(n, ctx)) {
            for (int it = 0; it < 5; ++it) {
                std::int64_t m = shift(rng), k = shift(rng);
                Quaternion t = unit_translate(ctx, o.b, m, k);
                if (it % 2) t = -t;
                EXPECT_EQ(canonicalize(ctx, t), o);
                auto fl = unit_floor(ctx, unit_translate(ctx, o.b, m, k));
                EXPECT_EQ(fl[0], m);
                EXPECT_EQ(fl[1], k);
            }
        }
    }
}

TEST_P(OrbitsTest, NoTwoRepresentativesShareAnOrbit) {
    for (std::int64_t n = 1; n <= 12; ++n) {
        auto orbits = enumerate_orbits(n, ctx);
        std::set<IntVec4> keys;
        for (const auto& o : orbits) keys.insert(o.key);
        for (const auto& o : orbits) {
            for (std::int64_t m = -3; m <= 3; ++m)
                for (std::int64_t k = -3; k <= 3; ++k) {
                    if (m == 0 && k == 0) continue;
                    for (int s : {1, -1}) {
                        Quaternion t = unit_translate(ctx, o.b, m, k) * Rational(s);
                        auto c = ctx.order().coordinates(t);
                        ASSERT_TRUE(c.has_value());
                        EXPECT_EQ(keys.count(*c), 0u) << "n=" << n;
                    }
                }
        }
    }
}

TEST_P(OrbitsTest, LargerBoxFindsSameOrbits) {
    for (std::int64_t n = 1; n <= 12; ++n)
        EXPECT_EQ(enumerate_orbits_oracle(n, ctx, 2.0), enumerate_orbits(n, ctx)) << "n=" << n;
}

TEST_P(OrbitsTest, RawEnumerationCoversEveryOrbit) {
    for (std::int64_t n = 1; n <= 12; ++n) {
        auto raw = enumerate_raw(n, ctx, {2.0, 0.02});
        std::set<OrbitRep> from_raw;
        for (const auto& b : raw) from_raw.insert(canonicalize(ctx, b));
        auto orbits = enumerate_orbits(n, ctx);
        EXPECT_EQ(std::vector<OrbitRep>(from_raw.begin(), from_raw.end()), orbits);
        EXPECT_GE(raw.size(), orbits.size());
    }
}

// Every element of a naive coordinate box with the right norm and positivity
// canonicalizes into the enumerated set.
TEST_P(OrbitsTest, NaiveBoxScanIsCovered) {
    const auto& B = ctx.algebra();
    const std::int64_t R = 5, n_max = 12;
    std::vector<std::set<OrbitRep>> sets(n_max + 1);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        auto o = enumerate_orbits(n, ctx);
        sets[n].insert(o.begin(), o.end());
    }
    IntVec4 c{};
    std::size_t hits = 0;
    for (c[0] = -R; c[0] <= R; ++c[0])
        for (c[1] = -R; c[1] <= R; ++c[1])
            for (c[2] = -R; c[2] <= R; ++c[2])
                for (c[3] = -R; c[3] <= R; ++c[3]) {
                    Quaternion b = ctx.order().element(c);
                    Rational n = B.nrd(b);
                    if (n < 1 || n > n_max || !ctx.qF_totally_positive(b)) continue;
                    ++hits;
                    EXPECT_EQ(sets[n.get_num().get_si()].count(canonicalize(ctx, b)), 1u) << b;
                }
    EXPECT_GT(hits, 0u);
}

TEST_P(OrbitsTest, CanonicalizeRejectsInvalidInput) {
    EXPECT_THROW(canonicalize(ctx, Quaternion{}), std::domain_error);
}

INSTANTIATE_TEST_SUITE_P(Bundled, OrbitsTest, ::testing::ValuesIn(testing::bundled_configs()));

TEST(FinckePohst, CountsPointsOfIdentityForm) {
    RealMat4 id{};
    for (int i = 0; i < 4; ++i) id[i][i] = 1;
    std::size_t count = 0;
    fincke_pohst(id, 1.0L, [&](const std::array<std::int64_t, 4>&) { ++count; });
    EXPECT_EQ(count, 9u);  // zero plus 8 unit vectors
    count = 0;
    fincke_pohst(id, 2.0L, [&](const std::array<std::int64_t, 4>&) { ++count; });
    EXPECT_EQ(count, 33u);  // r_4(0) + r_4(1) + r_4(2) = 1 + 8 + 24
}

TEST(FinckePohst, MatchesBruteForceOnSkewForm) {
    RealMat4 g = {{{4, 1, 0, 1}, {1, 3, 1, 0}, {0, 1, 5, 2}, {1, 0, 2, 6}}};
    auto value = [&](const std::array<std::int64_t, 4>& v) {
        long double s = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s += g[i][j] * v[i] * v[j];
        return s;
    };
    std::set<std::array<std::int64_t, 4>> fp, brute;
    fincke_pohst(g, 20.0L, [&](const std::array<std::int64_t, 4>& v) {
        if (value(v) <= 20.0L) fp.insert(v);
    });
    std::array<std::int64_t, 4> v{};
    for (v[0] = -6; v[0] <= 6; ++v[0])
        for (v[1] = -6; v[1] <= 6; ++v[1])
            for (v[2] = -6; v[2] <= 6; ++v[2])
                for (v[3] = -6; v[3] <= 6; ++v[3])
                    if (value(v) <= 20.0L) brute.insert(v);
    EXPECT_EQ(fp, brute);
}

// A diagonal form seen through a large unimodular change of basis: the point
// sets must correspond under the change of basis.
TEST(FinckePohst, SkewedBasisMatchesReducedForm) {
    const std::array<std::array<std::int64_t, 4>, 4> U = {{{1, 7, 30, -41}, {0, 1, 5, 13}, {0, 0, 1, 9}, {0, 0, 0, 1}}};
    const long double d[4] = {1, 2, 3, 5};
    RealMat4 factor{};
    for (int p = 0; p < 4; ++p)
        for (int c = 0; c < 4; ++c) factor[p][c] = std::sqrt(d[p]) * static_cast<long double>(U[p][c]);
    RealMat4 gram{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int p = 0; p < 4; ++p) gram[r][c] += factor[p][r] * factor[p][c];
    auto image = [&](const std::array<std::int64_t, 4>& v) {
        std::array<std::int64_t, 4> w{};
        for (int p = 0; p < 4; ++p)
            for (int c = 0; c < 4; ++c) w[p] += U[p][c] * v[c];
        return w;
    };
    std::set<std::array<std::int64_t, 4>> expected, via_gram, via_factor;
    std::array<std::int64_t, 4> w{};
    for (w[0] = -4; w[0] <= 4; ++w[0])
        for (w[1] = -3; w[1] <= 3; ++w[1])
            for (w[2] = -3; w[2] <= 3; ++w[2])
                for (w[3] = -2; w[3] <= 2; ++w[3])
                    if (w[0] * w[0] + 2 * w[1] * w[1] + 3 * w[2] * w[2] + 5 * w[3] * w[3] <= 12) expected.insert(w);
    auto collect = [&](std::set<std::array<std::int64_t, 4>>& out) {
        return [&](const std::array<std::int64_t, 4>& v) {
            auto im = image(v);
            if (im[0] * im[0] + 2 * im[1] * im[1] + 3 * im[2] * im[2] + 5 * im[3] * im[3] <= 12) out.insert(im);
        };
    };
    fincke_pohst(gram, 12.0L, collect(via_gram));
    fincke_pohst_factor(factor, 12.0L, collect(via_factor));
    EXPECT_EQ(via_gram, expected);
    EXPECT_EQ(via_factor, expected);
}

TEST(FinckePohst, RejectsIndefiniteForm) {
    RealMat4 g{};
    g[0][0] = 1;
    g[1][1] = -1;
    g[2][2] = 1;
    g[3][3] = 1;
    EXPECT_THROW(fincke_pohst(g, 1.0L, [](const std::array<std::int64_t, 4>&) {}), std::domain_error);
}

}  // namespace
}  // namespace geoint
