#include "geoint/linalg.hpp"

#include <utility>

namespace geoint {

RatMat4 identity4() {
    RatMat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = (i == j) ? 1 : 0;
    return m;
}

RatVec4 mat_vec(const RatMat4& m, const RatVec4& v) {
    RatVec4 out;
    for (int i = 0; i < 4; ++i) {
        Rational s = 0;
        for (int j = 0; j < 4; ++j) s += m[i][j] * v[j];
        out[i] = s;
    }
    return out;
}

RatMat4 mat_mul(const RatMat4& a, const RatMat4& b) {
    RatMat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rational s = 0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            out[i][j] = s;
        }
    return out;
}

Rational determinant(const RatMat4& m) {
    RatMat4 a = m;
    Rational det = 1;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < 4; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

std::optional<RatMat4> inverse(const RatMat4& m) {
    RatMat4 a = m;
    RatMat4 inv = identity4();
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r)
            if (a[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = a[col][col];
        for (int c = 0; c < 4; ++c) {
            a[col][c] /= p;
            inv[col][c] /= p;
        }
        for (int r = 0; r < 4; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int c = 0; c < 4; ++c) {
                a[r][c] -= f * a[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

}  // namespace geoint
