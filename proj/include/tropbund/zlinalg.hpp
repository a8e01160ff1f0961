#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropbund/rational.hpp"

namespace tropbund {

using ZVec = std::vector<Z>;
using ZMat = std::vector<ZVec>;  // row-major

inline ZMat z_identity(std::size_t n) {
    ZMat m(n, ZVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline ZVec z_mat_vec(const ZMat& a, const ZVec& x) {
    ZVec r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

inline ZMat z_mat_mul(const ZMat& a, const ZMat& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ZMat r(n, ZVec(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    return r;
}

/// Smith normal form: U*A*V = D with U, V unimodular and D diagonal with
/// d_1 | d_2 | ... | d_r, d_i > 0.
struct SmithForm {
    ZMat u, d, v;
    std::size_t rank = 0;
    std::vector<Z> invariants;  // the nonzero diagonal entries
};

inline SmithForm smith_normal_form(ZMat a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    SmithForm sf;
    sf.u = z_identity(rows);
    sf.v = z_identity(cols);
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(sf.u[i], sf.u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(sf.v[r][i], sf.v[r][j]);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Z& c) {
        for (std::size_t j = 0; j < cols; ++j) a[dst][j] += c * a[src][j];
        for (std::size_t j = 0; j < rows; ++j) sf.u[dst][j] += c * sf.u[src][j];
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Z& c) {
        for (std::size_t i = 0; i < rows; ++i) a[i][dst] += c * a[i][src];
        for (std::size_t i = 0; i < cols; ++i) sf.v[i][dst] += c * sf.v[i][src];
    };
    auto negate_row = [&](std::size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : sf.u[i]) x = -x;
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find a nonzero pivot of minimal absolute value
        std::size_t pi = t, pj = t;
        bool found = false;
        Z best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (!found || abs(a[i][j]) < best)) {
                    best = abs(a[i][j]);
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        if (a[t][t] < 0) negate_row(t);

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i)
            if (a[i][t] != 0) {
                Z q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                add_row(i, t, -q);
                if (a[i][t] != 0) clean = false;
            }
        for (std::size_t j = t + 1; j < cols; ++j)
            if (a[t][j] != 0) {
                Z q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                add_col(j, t, -q);
                if (a[t][j] != 0) clean = false;
            }
        if (!clean) continue;  // remainders became new smaller pivot candidates
        // pivot must divide every remaining entry for the divisibility chain
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    add_row(t, i, 1);
                    divides_all = false;
                }
        if (!divides_all) continue;
        ++t;
    }
    sf.rank = t;
    for (std::size_t i = 0; i < t; ++i) sf.invariants.push_back(a[i][i]);
    sf.d = std::move(a);
    return sf;
}

/// Basis of the integer kernel {x : A x = 0}.
inline std::vector<ZVec> z_kernel(const ZMat& a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    if (a.empty()) {
        std::vector<ZVec> basis;
        for (std::size_t j = 0; j < cols; ++j) {
            ZVec e(cols, 0);
            e[j] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    SmithForm sf = smith_normal_form(a);
    std::vector<ZVec> basis;
    for (std::size_t j = sf.rank; j < cols; ++j) {
        ZVec v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = sf.v[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One integer solution of A x = b, if any.
inline std::optional<ZVec> z_solve(const ZMat& a, const ZVec& b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    SmithForm sf = smith_normal_form(a);
    ZVec c = z_mat_vec(sf.u, b);
    ZVec z(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        if (i < sf.rank) {
            if (c[i] % sf.invariants[i] != 0) return std::nullopt;
            if (i < cols) z[i] = c[i] / sf.invariants[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return z_mat_vec(sf.v, z);
}

/// The abelian group Z^n / <columns of gens>, with a coordinate map for
/// computing the class of an ambient vector.
class ZQuotient {
  public:
    /// gens: each entry one generator of the subgroup, in ambient coordinates.
    ZQuotient(std::size_t ambient, const std::vector<ZVec>& gens) : ambient_(ambient) {
        ZMat b(ambient, ZVec(gens.size(), 0));
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (std::size_t i = 0; i < ambient; ++i) b[i][j] = gens[j][i];
        if (gens.empty()) b.assign(ambient, ZVec(1, 0));
        sf_ = smith_normal_form(std::move(b));
        for (const Z& d : sf_.invariants)
            if (d != 1) torsion_.push_back(d);
        free_rank_ = ambient_ - sf_.rank;
    }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Z>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }

    /// Class of x: torsion coordinates (mod d_i, for d_i > 1) then free coordinates.
    ZVec cls(const ZVec& x) const {
        ZVec y = z_mat_vec(sf_.u, x);
        ZVec out;
        for (std::size_t i = 0; i < sf_.rank; ++i)
            if (sf_.invariants[i] != 1) {
                Z r;
                mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), sf_.invariants[i].get_mpz_t());
                out.push_back(r);
            }
        for (std::size_t i = sf_.rank; i < ambient_; ++i) out.push_back(y[i]);
        return out;
    }

  private:
    std::size_t ambient_;
    SmithForm sf_;
    std::vector<Z> torsion_;
    std::size_t free_rank_ = 0;
};

}  // namespace tropbund
