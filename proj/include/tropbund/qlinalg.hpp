#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropbund/rational.hpp"

namespace tropbund {

using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

/// One solution of A x = b over Q by Gaussian elimination, free variables set
/// to zero. Returns nullopt when the system is inconsistent.
inline std::optional<QVec> q_solve(QMat a, QVec b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Q inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && a[i][c] != 0) {
                Q f = a[i][c];
                for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
                b[i] -= f * b[r];
            }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    QVec x(cols, Q(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return x;
}

inline std::size_t q_rank(QMat a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (a[i][c] != 0) {
                Q f = a[i][c] / a[r][c];
                for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            }
        ++r;
    }
    return r;
}

}  // namespace tropbund
