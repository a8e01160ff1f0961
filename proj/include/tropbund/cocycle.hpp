#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tropbund/perm.hpp"
#include "tropbund/qlinalg.hpp"
#include "tropbund/scheme.hpp"
#include "tropbund/zlinalg.hpp"

namespace tropbund {

/// Unit of a base-changed toric chart: divisible scalar part (additive
/// notation for the tropical units) plus a character-lattice monomial part.
struct Unit {
    Q qpart = 0;
    ZVec lat;  // in the ambient Z^d character lattice

    friend Unit operator+(const Unit& a, const Unit& b) {
        Unit r{a.qpart + b.qpart, a.lat};
        for (std::size_t i = 0; i < r.lat.size(); ++i) r.lat[i] += b.lat[i];
        return r;
    }
    friend Unit operator-(const Unit& a) {
        Unit r{-a.qpart, a.lat};
        for (auto& x : r.lat) x = -x;
        return r;
    }
    friend Unit operator-(const Unit& a, const Unit& b) { return a + (-b); }
    bool operator==(const Unit& o) const { return qpart == o.qpart && lat == o.lat; }
    bool is_zero() const {
        if (qpart != 0) return false;
        for (const auto& x : lat)
            if (x != 0) return false;
        return true;
    }
};

inline Unit zero_unit(int d) { return Unit{Q(0), ZVec(d, Z(0))}; }

/// Cover data for Čech computations on a base-changed toric scheme: unit
/// lattices of charts and pairwise overlaps (row-basis matrices in Z^d).
struct ToricCover {
    MonoidScheme scheme;
    BaseSemifield base = BaseSemifield::tropicalQ;
    std::vector<std::vector<ZVec>> chart_units;  // per chart
    std::vector<std::vector<ZVec>> pair_units;   // per nerve pair (i<j)

    int dim() const { return scheme.fan.rank; }
    std::size_t n_charts() const { return scheme.n_charts(); }
    const std::vector<std::pair<int, int>>& pairs() const { return scheme.pairs; }
    const std::vector<std::tuple<int, int, int>>& triples() const { return scheme.triples; }
};

inline ToricCover make_cover(const Fan& fan, BaseSemifield base = BaseSemifield::tropicalQ) {
    ToricCover c;
    c.scheme = build_scheme(fan);
    c.base = base;
    for (const auto& cone : fan.cones) c.chart_units.push_back(monoid_units(fan, cone));
    for (const auto& rays : c.scheme.overlap_rays) c.pair_units.push_back(monoid_units(fan, rays));
    return c;
}

/// membership of v in the sublattice spanned by basis (as rows)
inline bool lattice_contains(const std::vector<ZVec>& basis, const ZVec& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    std::size_t d = v.size();
    ZMat cols(d, ZVec(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) cols[i][j] = basis[j][i];
    return z_solve(cols, v).has_value();
}

inline std::optional<ZVec> lattice_coords(const std::vector<ZVec>& basis, const ZVec& v) {
    std::size_t d = v.size();
    ZMat cols(d, ZVec(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) cols[i][j] = basis[j][i];
    return z_solve(cols, v);
}

/// Transition value on one overlap, in diagonal-times-permutation form.
struct GlnVal {
    Perm perm{0};
    std::vector<Unit> diag;  // indexed by row

    static GlnVal id(int n, int d) { return GlnVal{Perm(n), std::vector<Unit>(static_cast<std::size_t>(n), zero_unit(d))}; }
};

inline GlnVal glnval_compose(const GlnVal& a, const GlnVal& b) {
    std::size_t n = a.diag.size();
    GlnVal r{a.perm * b.perm, a.diag};
    Perm ainv = a.perm.inverse();
    for (std::size_t k = 0; k < n; ++k) r.diag[k] = a.diag[k] + b.diag[ainv(k)];
    return r;
}

inline GlnVal glnval_inverse(const GlnVal& a) {
    std::size_t n = a.diag.size();
    GlnVal r{a.perm.inverse(), a.diag};
    for (std::size_t k = 0; k < n; ++k) r.diag[r.perm(k)] = -a.diag[k];
    return r;
}

/// Čech 1-cocycle with GL_n values over a toric cover; values stored for
/// pairs i<j, the opposite orientation is the inverse.
struct CechCocycle {
    int rank = 1;
    std::vector<GlnVal> vals;  // indexed like cover.pairs()

    GlnVal theta(const ToricCover& c, int i, int j) const {
        if (i == j) return GlnVal::id(rank, c.dim());
        if (i < j) return vals[static_cast<std::size_t>(c.scheme.pair_index(i, j))];
        return glnval_inverse(vals[static_cast<std::size_t>(c.scheme.pair_index(j, i))]);
    }
};

inline CechCocycle trivial_cocycle(const ToricCover& c, int rank) {
    CechCocycle t;
    t.rank = rank;
    t.vals.assign(c.pairs().size(), GlnVal::id(rank, c.dim()));
    return t;
}

/// Defined-on-nerve, unit-lattice membership, and the triple identities.
inline bool validate_cocycle(const ToricCover& c, const CechCocycle& x) {
    if (x.vals.size() != c.pairs().size())
        throw std::invalid_argument("validate_cocycle: value count does not match nerve");
    for (std::size_t p = 0; p < x.vals.size(); ++p) {
        if (static_cast<int>(x.vals[p].diag.size()) != x.rank) return false;
        for (const auto& u : x.vals[p].diag) {
            if (!lattice_contains(c.pair_units[p], u.lat)) return false;
            if (c.base == BaseSemifield::boolean && u.qpart != 0) return false;
        }
    }
    for (auto [i, j, k] : c.triples()) {
        GlnVal lhs = x.theta(c, i, k);
        GlnVal rhs = glnval_compose(x.theta(c, i, j), x.theta(c, j, k));
        if (!(lhs.perm == rhs.perm)) return false;
        for (int r = 0; r < x.rank; ++r)
            if (!(lhs.diag[r] == rhs.diag[r])) return false;
    }
    return true;
}

inline CechCocycle direct_sum(const ToricCover& c, const CechCocycle& a, const CechCocycle& b) {
    if (a.vals.size() != b.vals.size()) throw std::invalid_argument("direct_sum: cover mismatch");
    CechCocycle r;
    r.rank = a.rank + b.rank;
    for (std::size_t p = 0; p < a.vals.size(); ++p) {
        std::vector<int> img;
        for (int i = 0; i < a.rank; ++i) img.push_back(a.vals[p].perm(i));
        for (int i = 0; i < b.rank; ++i) img.push_back(a.rank + b.vals[p].perm(i));
        GlnVal v{Perm(img), a.vals[p].diag};
        for (const auto& u : b.vals[p].diag) v.diag.push_back(u);
        r.vals.push_back(std::move(v));
    }
    return r;
}

/// Pic group law on rank-1 cocycles.
inline CechCocycle tensor_lines(const ToricCover& c, const CechCocycle& a, const CechCocycle& b) {
    if (a.rank != 1 || b.rank != 1) throw std::invalid_argument("tensor_lines: rank must be 1");
    if (a.vals.size() != b.vals.size()) throw std::invalid_argument("tensor_lines: cover mismatch");
    CechCocycle r = a;
    for (std::size_t p = 0; p < r.vals.size(); ++p) r.vals[p].diag[0] = a.vals[p].diag[0] + b.vals[p].diag[0];
    (void)c;
    return r;
}

inline CechCocycle line_inverse(const CechCocycle& a) {
    CechCocycle r = a;
    for (auto& v : r.vals) v.diag[0] = -v.diag[0];
    return r;
}

/// Permutation component, overlapwise.
struct PermCocycle {
    int rank = 1;
    std::vector<Perm> vals;
};

inline PermCocycle perm_part(const CechCocycle& x) {
    PermCocycle p;
    p.rank = x.rank;
    for (const auto& v : x.vals) p.vals.push_back(v.perm);
    return p;
}

inline bool validate_perm_cocycle(const ToricCover& c, const PermCocycle& p) {
    auto theta = [&](int i, int j) {
        if (i == j) return Perm(p.rank);
        if (i < j) return p.vals[static_cast<std::size_t>(c.scheme.pair_index(i, j))];
        return p.vals[static_cast<std::size_t>(c.scheme.pair_index(j, i))].inverse();
    };
    for (auto [i, j, k] : c.triples())
        if (!(theta(i, k) == theta(i, j) * theta(j, k))) return false;
    return true;
}

}  // namespace tropbund
