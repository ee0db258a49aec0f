#include "geoint/lattice_enum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geoint {

namespace {

using IntMat = std::array<std::array<std::int64_t, 4>, 4>;
using Vec4 = std::array<long double, 4>;

long double dot(const Vec4& x, const Vec4& y) {
    long double s = 0;
    for (int i = 0; i < 4; ++i) s += x[i] * y[i];
    return s;
}

// Columns of A U.
std::array<Vec4, 4> basis_vectors(const RealMat4& A, const IntMat& U) {
    std::array<Vec4, 4> b{};
    for (int k = 0; k < 4; ++k)
        for (int p = 0; p < 4; ++p) {
            long double s = 0;
            for (int c = 0; c < 4; ++c) s += A[p][c] * static_cast<long double>(U[c][k]);
            b[k][p] = s;
        }
    return b;
}

// LLL reduction (delta = 0.99) of the lattice spanned by the columns of A.
// Returns the unimodular U whose columns are the reduced coordinates.
IntMat lll_reduce(const RealMat4& A) {
    IntMat U{};
    for (int i = 0; i < 4; ++i) U[i][i] = 1;
    int k = 1;
    for (int guard = 0; k < 4 && guard < 10000; ++guard) {
        auto b = basis_vectors(A, U);
        std::array<Vec4, 4> bstar{};
        std::array<std::array<long double, 4>, 4> mu{};
        std::array<long double, 4> norm2{};
        for (int i = 0; i < 4; ++i) {
            bstar[i] = b[i];
            for (int j = 0; j < i; ++j) {
                mu[i][j] = dot(bstar[i], bstar[j]) / norm2[j];
                for (int p = 0; p < 4; ++p) bstar[i][p] -= mu[i][j] * bstar[j][p];
            }
            norm2[i] = dot(bstar[i], bstar[i]);
            if (!(norm2[i] > 0)) throw std::domain_error("fincke_pohst: form is not positive definite");
        }
        bool reduced = false;
        for (int j = k - 1; j >= 0; --j) {
            auto r = static_cast<std::int64_t>(std::llround(mu[k][j]));
            if (r == 0) continue;
            for (int row = 0; row < 4; ++row) U[row][k] -= r * U[row][j];
            reduced = true;
            break;
        }
        if (reduced) continue;
        if (norm2[k] < (0.99L - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
            for (int row = 0; row < 4; ++row) std::swap(U[row][k], U[row][k - 1]);
            k = std::max(k - 1, 1);
        } else {
            ++k;
        }
    }
    return U;
}

}  // namespace

void fincke_pohst(const RealMat4& gram, long double bound,
                  const std::function<void(const std::array<std::int64_t, 4>&)>& visit) {
    // Cholesky: gram = R^T R with R upper triangular.
    RealMat4 R{};
    for (int i = 0; i < 4; ++i) {
        long double d = gram[i][i];
        for (int k = 0; k < i; ++k) d -= R[k][i] * R[k][i];
        if (!(d > 0)) throw std::domain_error("fincke_pohst: form is not positive definite");
        R[i][i] = std::sqrt(d);
        for (int j = i + 1; j < 4; ++j) {
            long double s = gram[i][j];
            for (int k = 0; k < i; ++k) s -= R[k][i] * R[k][j];
            R[i][j] = s / R[i][i];
        }
    }
    fincke_pohst_factor(R, bound, visit);
}

void fincke_pohst_factor(const RealMat4& A, long double bound,
                         const std::function<void(const std::array<std::int64_t, 4>&)>& visit) {
    constexpr int n = 4;
    // Enumerate in an LLL-reduced basis; skewed bases inflate the search tree.
    const IntMat U = lll_reduce(A);
    const auto b = basis_vectors(A, U);
    // Q(w) = sum_i q[i][i] (w_i + sum_{j>i} q[i][j] w_j)^2 in reduced coordinates
    RealMat4 q{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q[i][j] = dot(b[i], b[j]);
    for (int i = 0; i < n; ++i) {
        if (!(q[i][i] > 0)) throw std::domain_error("fincke_pohst: form is not positive definite");
        for (int j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
    std::array<std::int64_t, 4> v{};
    std::array<std::int64_t, 4> original{};
    std::array<long double, 4> remaining{};
    const long double slack = 1e-12L * (1 + bound);

    std::function<void(int)> descend = [&](int i) {
        long double center = 0;
        for (int j = i + 1; j < n; ++j) center -= q[i][j] * static_cast<long double>(v[j]);
        long double r = remaining[i] + slack;
        if (r < 0) return;
        long double half = std::sqrt(r / q[i][i]);
        auto lo = static_cast<std::int64_t>(std::ceil(center - half));
        auto hi = static_cast<std::int64_t>(std::floor(center + half));
        for (std::int64_t x = lo; x <= hi; ++x) {
            v[i] = x;
            long double d = static_cast<long double>(x) - center;
            long double rest = remaining[i] - q[i][i] * d * d;
            if (i > 0) {
                remaining[i - 1] = rest;
                descend(i - 1);
            } else if (rest >= -slack) {
                for (int row = 0; row < n; ++row) {
                    original[row] = 0;
                    for (int col = 0; col < n; ++col) original[row] += U[row][col] * v[col];
                }
                visit(original);
            }
        }
        v[i] = 0;
    };
    remaining[n - 1] = bound;
    descend(n - 1);
}

}  // namespace geoint
