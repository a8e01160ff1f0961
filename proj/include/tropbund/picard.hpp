#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tropbund/cocycle.hpp"

namespace tropbund {

namespace detail {
struct PairOffsets {
    std::vector<std::size_t> off;
    std::size_t total = 0;
};
inline PairOffsets pair_offsets(const ToricCover& c) {
    PairOffsets o;
    for (const auto& pu : c.pair_units) {
        o.off.push_back(o.total);
        o.total += pu.size();
    }
    return o;
}

/// flatten the lattice parts of a line cocycle into overlap-basis coordinates
inline ZVec line_coords(const ToricCover& c, const CechCocycle& x) {
    auto o = pair_offsets(c);
    ZVec v(o.total, Z(0));
    for (std::size_t p = 0; p < c.pairs().size(); ++p) {
        auto coords = lattice_coords(c.pair_units[p], x.vals[p].diag[0].lat);
        if (!coords) throw std::invalid_argument("cocycle value outside overlap unit lattice");
        for (std::size_t b = 0; b < coords->size(); ++b) v[o.off[p] + b] = (*coords)[b];
    }
    return v;
}

/// cocycle-condition matrix over pair coordinates (d rows per nerve triple)
inline ZMat z1_matrix(const ToricCover& c) {
    auto o = pair_offsets(c);
    int d = c.dim();
    ZMat a;
    for (auto [i, j, k] : c.triples()) {
        std::size_t pik = static_cast<std::size_t>(c.scheme.pair_index(i, k));
        std::size_t pij = static_cast<std::size_t>(c.scheme.pair_index(i, j));
        std::size_t pjk = static_cast<std::size_t>(c.scheme.pair_index(j, k));
        for (int r = 0; r < d; ++r) {
            ZVec row(o.total, Z(0));
            for (std::size_t b = 0; b < c.pair_units[pik].size(); ++b) row[o.off[pik] + b] += c.pair_units[pik][b][r];
            for (std::size_t b = 0; b < c.pair_units[pij].size(); ++b) row[o.off[pij] + b] -= c.pair_units[pij][b][r];
            for (std::size_t b = 0; b < c.pair_units[pjk].size(); ++b) row[o.off[pjk] + b] -= c.pair_units[pjk][b][r];
            a.push_back(std::move(row));
        }
    }
    return a;
}

/// coboundary of one chart-unit basis vector, in pair coordinates
inline ZVec coboundary_coords(const ToricCover& c, int chart, const ZVec& u) {
    auto o = pair_offsets(c);
    ZVec v(o.total, Z(0));
    for (std::size_t p = 0; p < c.pairs().size(); ++p) {
        auto [i, j] = c.pairs()[p];
        if (i != chart && j != chart) continue;
        ZVec w(u);
        if (j == chart)
            for (auto& x : w) x = -x;
        auto coords = lattice_coords(c.pair_units[p], w);
        if (!coords) throw std::logic_error("chart unit not contained in overlap units");
        for (std::size_t b = 0; b < coords->size(); ++b) v[o.off[p] + b] = (*coords)[b];
    }
    return v;
}
}  // namespace detail

struct PicardResult {
    std::size_t z1_rank = 0;
    std::vector<ZVec> z1_basis;     // vectors in pair coordinates
    ZQuotient h1{0, {}};            // lattice part of Pic
    int divisible_rank = 0;         // rank of the divisible-part H^1 (0 on these covers)
    std::vector<CechCocycle> generators;  // one line cocycle per free generator
};

inline CechCocycle line_from_coords(const ToricCover& c, const ZVec& coords) {
    auto o = detail::pair_offsets(c);
    CechCocycle x = trivial_cocycle(c, 1);
    for (std::size_t p = 0; p < c.pairs().size(); ++p) {
        ZVec lat(static_cast<std::size_t>(c.dim()), Z(0));
        for (std::size_t b = 0; b < c.pair_units[p].size(); ++b)
            for (int r = 0; r < c.dim(); ++r) lat[static_cast<std::size_t>(r)] += coords[o.off[p] + b] * c.pair_units[p][b][r];
        x.vals[p].diag[0].lat = lat;
    }
    return x;
}

/// H^1 of the cover with unit coefficients: Smith normal form on the lattice
/// part, rational rank count on the divisible part.
inline PicardResult picard_group(const ToricCover& c) {
    PicardResult res;
    auto o = detail::pair_offsets(c);
    // lattice part
    if (c.triples().empty()) {
        for (std::size_t i = 0; i < o.total; ++i) {
            ZVec e(o.total, Z(0));
            e[i] = 1;
            res.z1_basis.push_back(e);
        }
    } else {
        res.z1_basis = z_kernel(detail::z1_matrix(c));
    }
    res.z1_rank = res.z1_basis.size();
    // express coboundary generators in Z1 coordinates
    ZMat kcols(o.total, ZVec(res.z1_rank, Z(0)));
    for (std::size_t j = 0; j < res.z1_rank; ++j)
        for (std::size_t i = 0; i < o.total; ++i) kcols[i][j] = res.z1_basis[j][i];
    std::vector<ZVec> bgens;
    for (std::size_t chart = 0; chart < c.n_charts(); ++chart)
        for (const auto& u : c.chart_units[chart]) {
            ZVec b = detail::coboundary_coords(c, static_cast<int>(chart), u);
            auto x = z_solve(kcols, b);
            if (!x) throw std::logic_error("coboundary not a cocycle");
            bgens.push_back(*x);
        }
    res.h1 = ZQuotient(res.z1_rank, bgens);
    // divisible part: one scalar per pair, same equations, over Q
    if (c.base == BaseSemifield::tropicalQ && !c.pairs().empty()) {
        std::size_t np = c.pairs().size();
        QMat aq;
        for (auto [i, j, k] : c.triples()) {
            QVec row(np, Q(0));
            row[static_cast<std::size_t>(c.scheme.pair_index(i, k))] += 1;
            row[static_cast<std::size_t>(c.scheme.pair_index(i, j))] -= 1;
            row[static_cast<std::size_t>(c.scheme.pair_index(j, k))] -= 1;
            aq.push_back(std::move(row));
        }
        std::size_t z1q = np - (aq.empty() ? 0 : q_rank(aq));
        QMat bq;  // coboundary map: one variable per chart
        for (std::size_t p = 0; p < np; ++p) {
            QVec row(c.n_charts(), Q(0));
            row[static_cast<std::size_t>(c.pairs()[p].first)] = 1;
            row[static_cast<std::size_t>(c.pairs()[p].second)] = -1;
            bq.push_back(std::move(row));
        }
        res.divisible_rank = static_cast<int>(z1q - q_rank(bq));
    }
    // generator cocycles for the free part: preimages of free generators.
    // With no torsion (the corpus), free coordinates are u-rows beyond the
    // relation rank; lift standard basis vectors through the Smith transform.
    if (res.h1.free_rank() > 0) {
        for (std::size_t g = 0; g < static_cast<std::size_t>(res.h1.free_rank()); ++g) {
            // find a Z1 basis combination whose class has g-th free coord 1, others 0
            // search small combinations of the z1 basis
            bool found = false;
            for (std::size_t j = 0; j < res.z1_rank && !found; ++j) {
                ZVec e(res.z1_rank, Z(0));
                e[j] = 1;
                auto cls = res.h1.cls(e);
                std::size_t tors = res.h1.torsion().size();
                bool ok = true;
                for (std::size_t tcoord = 0; tcoord < tors; ++tcoord)
                    if (cls[tcoord] != 0) ok = false;
                for (std::size_t fcoord = 0; fcoord < static_cast<std::size_t>(res.h1.free_rank()); ++fcoord) {
                    Z want = (fcoord == g) ? Z(1) : Z(0);
                    Z got = cls[tors + fcoord];
                    if (got != want && got != -want) ok = false;
                }
                if (ok) {
                    ZVec coords(o.total, Z(0));
                    for (std::size_t i = 0; i < o.total; ++i) coords[i] = res.z1_basis[j][i];
                    res.generators.push_back(line_from_coords(c, coords));
                    found = true;
                }
            }
            if (!found) res.generators.push_back(trivial_cocycle(c, 1));  // conservative fallback
        }
    }
    return res;
}

/// Pic class of a line cocycle: torsion coordinates then free coordinates.
/// Requires the divisible part to be a coboundary (always, on these covers).
inline std::vector<Z> line_class(const ToricCover& c, const PicardResult& pic,
                                 const CechCocycle& x) {
    auto o = detail::pair_offsets(c);
    ZVec coords = detail::line_coords(c, x);
    ZMat kcols(o.total, ZVec(pic.z1_rank, Z(0)));
    for (std::size_t j = 0; j < pic.z1_rank; ++j)
        for (std::size_t i = 0; i < o.total; ++i) kcols[i][j] = pic.z1_basis[j][i];
    auto k = z_solve(kcols, coords);
    if (!k) throw std::invalid_argument("line_class: not a cocycle");
    // divisible part must be a coboundary: q_i - q_j = qpart_ij solvable
    if (c.base == BaseSemifield::tropicalQ) {
        QMat a;
        QVec rhs;
        for (std::size_t p = 0; p < c.pairs().size(); ++p) {
            QVec row(c.n_charts(), Q(0));
            row[static_cast<std::size_t>(c.pairs()[p].first)] = 1;
            row[static_cast<std::size_t>(c.pairs()[p].second)] = -1;
            a.push_back(std::move(row));
            rhs.push_back(x.vals[p].diag[0].qpart);
        }
        if (!a.empty() && !q_solve(a, rhs))
            throw std::invalid_argument("line_class: divisible part not a coboundary");
    }
    return pic.h1.cls(*k);
}

struct EquivalenceWitness {
    bool equivalent = false;
    std::vector<Unit> cochain;  // one unit per chart when equivalent
};

/// Exact affine-lattice solve for line cocycles: c'_ij - c_ij = u_i - u_j
/// with u_i in the chart unit group.
inline EquivalenceWitness line_equivalent(const ToricCover& c, const CechCocycle& a,
                                          const CechCocycle& b) {
    if (a.vals.size() != b.vals.size()) throw std::invalid_argument("line_equivalent: cover mismatch");
    // chart-unit variable offsets
    std::vector<std::size_t> off;
    std::size_t total = 0;
    for (const auto& cu : c.chart_units) {
        off.push_back(total);
        total += cu.size();
    }
    int d = c.dim();
    ZMat m;
    ZVec rhs;
    for (std::size_t p = 0; p < c.pairs().size(); ++p) {
        auto [i, j] = c.pairs()[p];
        Unit delta = b.vals[p].diag[0] - a.vals[p].diag[0];
        for (int r = 0; r < d; ++r) {
            ZVec row(total, Z(0));
            for (std::size_t t = 0; t < c.chart_units[static_cast<std::size_t>(i)].size(); ++t)
                row[off[static_cast<std::size_t>(i)] + t] += c.chart_units[static_cast<std::size_t>(i)][t][r];
            for (std::size_t t = 0; t < c.chart_units[static_cast<std::size_t>(j)].size(); ++t)
                row[off[static_cast<std::size_t>(j)] + t] -= c.chart_units[static_cast<std::size_t>(j)][t][r];
            m.push_back(std::move(row));
            rhs.push_back(delta.lat[static_cast<std::size_t>(r)]);
        }
    }
    EquivalenceWitness w;
    std::optional<ZVec> sol;
    if (total == 0) {
        bool all0 = true;
        for (const auto& x : rhs)
            if (x != 0) all0 = false;
        if (all0) sol = ZVec{};
    } else {
        sol = z_solve(m, rhs);
    }
    if (!sol) return w;
    // divisible part
    QVec qsol(c.n_charts(), Q(0));
    if (c.base == BaseSemifield::tropicalQ && !c.pairs().empty()) {
        QMat aq;
        QVec rq;
        for (std::size_t p = 0; p < c.pairs().size(); ++p) {
            QVec row(c.n_charts(), Q(0));
            row[static_cast<std::size_t>(c.pairs()[p].first)] = 1;
            row[static_cast<std::size_t>(c.pairs()[p].second)] = -1;
            aq.push_back(std::move(row));
            rq.push_back(b.vals[p].diag[0].qpart - a.vals[p].diag[0].qpart);
        }
        auto qs = q_solve(aq, rq);
        if (!qs) return w;
        qsol = *qs;
    }
    w.equivalent = true;
    for (std::size_t chart = 0; chart < c.n_charts(); ++chart) {
        Unit u = zero_unit(d);
        u.qpart = qsol[chart];
        for (std::size_t t = 0; t < c.chart_units[chart].size(); ++t)
            for (int r = 0; r < d; ++r)
                u.lat[static_cast<std::size_t>(r)] += (*sol)[off[chart] + t] * c.chart_units[chart][t][r];
        w.cochain.push_back(u);
    }
    return w;
}

/// Trivialize the perm part by the star spanning tree at chart 0 and return
/// the diagonal line cocycles as an unordered multiset (sorted canonically).
inline std::vector<CechCocycle> decompose_into_lines(const ToricCover& c, const CechCocycle& x) {
    if (c.n_charts() > 1 && c.pairs().size() != c.n_charts() * (c.n_charts() - 1) / 2)
        throw std::invalid_argument("decompose_into_lines: nerve not a full simplex");
    int n = x.rank, d = c.dim();
    // phi_i = (perm part of theta_{0i})^{-1}; conjugation kills the perm part
    std::vector<Perm> phi;
    for (std::size_t i = 0; i < c.n_charts(); ++i)
        phi.push_back(i == 0 ? Perm(n) : x.theta(c, 0, static_cast<int>(i)).perm.inverse());
    std::vector<std::vector<Unit>> diags(static_cast<std::size_t>(n),
                                         std::vector<Unit>());
    CechCocycle conj;
    conj.rank = n;
    for (std::size_t p = 0; p < c.pairs().size(); ++p) {
        auto [i, j] = c.pairs()[p];
        GlnVal fi{phi[static_cast<std::size_t>(i)].inverse(), std::vector<Unit>(static_cast<std::size_t>(n), zero_unit(d))};
        GlnVal fj{phi[static_cast<std::size_t>(j)], std::vector<Unit>(static_cast<std::size_t>(n), zero_unit(d))};
        GlnVal v = glnval_compose(glnval_compose(fi, x.vals[p]), fj);
        if (!v.perm.is_identity())
            throw std::invalid_argument("decompose_into_lines: perm part is not a coboundary");
        conj.vals.push_back(v);
    }
    std::vector<CechCocycle> lines;
    for (int r = 0; r < n; ++r) {
        CechCocycle l = trivial_cocycle(c, 1);
        for (std::size_t p = 0; p < c.pairs().size(); ++p) l.vals[p].diag[0] = conj.vals[p].diag[static_cast<std::size_t>(r)];
        lines.push_back(std::move(l));
    }
    return lines;
}

/// multiset of Pic classes of the line summands, sorted for comparison
inline std::vector<std::vector<Z>> line_class_multiset(const ToricCover& c,
                                                       const PicardResult& pic,
                                                       const CechCocycle& x) {
    std::vector<std::vector<Z>> classes;
    for (const auto& l : decompose_into_lines(c, x)) classes.push_back(line_class(c, pic, l));
    std::sort(classes.begin(), classes.end());
    return classes;
}

/// GL_n cocycle equivalence via Theorem-A style reduction to line classes.
inline bool cocycle_equivalent(const ToricCover& c, const PicardResult& pic,
                               const CechCocycle& a, const CechCocycle& b) {
    if (a.rank != b.rank) return false;
    if (a.rank == 1) return line_equivalent(c, a, b).equivalent;
    return line_class_multiset(c, pic, a) == line_class_multiset(c, pic, b);
}

/// Forward: include monomial (lattice-only) data into the tropical units.
/// The input must have zero divisible parts; returns a copy.
inline CechCocycle base_change_forward(const CechCocycle& monoid_cocycle) {
    for (const auto& v : monoid_cocycle.vals)
        for (const auto& u : v.diag)
            if (u.qpart != 0) throw std::invalid_argument("base_change_forward: nonzero scalar part");
    return monoid_cocycle;
}

/// Backward: normalize the divisible part away by a coboundary (solvable on
/// these covers since the nerve is a simplex), keep the lattice part.
inline CechCocycle base_change_backward(const ToricCover& c, const CechCocycle& x) {
    if (x.rank != 1) throw std::invalid_argument("base_change_backward: rank-1 only; decompose first");
    QMat a;
    QVec rhs;
    for (std::size_t p = 0; p < c.pairs().size(); ++p) {
        QVec row(c.n_charts(), Q(0));
        row[static_cast<std::size_t>(c.pairs()[p].first)] = 1;
        row[static_cast<std::size_t>(c.pairs()[p].second)] = -1;
        a.push_back(std::move(row));
        rhs.push_back(x.vals[p].diag[0].qpart);
    }
    if (!a.empty()) {
        auto s = q_solve(a, rhs);
        if (!s) throw std::invalid_argument("base_change_backward: divisible part not a coboundary");
    }
    CechCocycle r = x;
    for (auto& v : r.vals) v.diag[0].qpart = 0;
    return r;
}

/// Vect_n(X) as unordered n-tuples of Pic classes: representatives with free
/// coordinates bounded by `box`, plus the count.
struct VectClassification {
    int rank_n;
    std::vector<std::vector<std::vector<Z>>> representatives;  // sorted n-tuples of classes
};

inline VectClassification classify_vect_n(const PicardResult& pic, int n, long box = 1) {
    VectClassification v;
    v.rank_n = n;
    // enumerate Pic elements in the box (free part only; corpus has no torsion)
    std::size_t r = pic.h1.free_rank();
    std::vector<std::vector<Z>> elems;
    std::vector<long> cur(r, -box);
    for (bool done = r == 0; !done;) {
        std::vector<Z> e;
        for (long x : cur) e.push_back(Z(x));
        elems.push_back(e);
        std::size_t i = 0;
        while (i < r && cur[i] == box) cur[i++] = -box;
        if (i == r) break;
        ++cur[i];
    }
    if (r == 0) elems.push_back({});
    // unordered n-tuples
    std::vector<std::vector<Z>> tuple;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (tuple.size() == static_cast<std::size_t>(n)) {
            v.representatives.push_back(tuple);
            return;
        }
        for (std::size_t i = from; i < elems.size(); ++i) {
            tuple.push_back(elems[i]);
            self(self, i);
            tuple.pop_back();
        }
    };
    rec(rec, 0);
    return v;
}

}  // namespace tropbund
