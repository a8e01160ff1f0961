#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tropbund/perm.hpp"
#include "tropbund/qlinalg.hpp"

namespace tropbund {

/// Simplicial complex of dimension <= 2, covered by open vertex stars.
/// Star overlaps are nonempty exactly along edges; each overlap carries
/// sample points: the edge midpoint plus the barycenter of every incident
/// triangle. Piecewise-linear data is recorded at these sample points.
struct FiniteComplex {
    int nv = 0;
    std::vector<std::pair<int, int>> edges;        // i < j
    std::vector<std::array<int, 3>> triangles;     // i < j < k

    int edge_index(int i, int j) const {
        if (i > j) std::swap(i, j);
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (edges[e] == std::make_pair(i, j)) return static_cast<int>(e);
        return -1;
    }

    /// triangle indices containing edge e; the sample points of overlap e are
    /// [midpoint, barycenter of tris_of_edge(e)[0], ...]
    std::vector<int> tris_of_edge(int e) const {
        auto [i, j] = edges[static_cast<std::size_t>(e)];
        std::vector<int> r;
        for (std::size_t t = 0; t < triangles.size(); ++t) {
            const auto& tr = triangles[t];
            int hit = 0;
            for (int v : tr)
                if (v == i || v == j) ++hit;
            if (hit == 2) r.push_back(static_cast<int>(t));
        }
        return r;
    }

    std::size_t sample_count(int e) const { return 1 + tris_of_edge(e).size(); }

    std::size_t barycenter_sample(int e, int tri) const {
        auto ts = tris_of_edge(e);
        for (std::size_t s = 0; s < ts.size(); ++s)
            if (ts[s] == tri) return 1 + s;
        throw std::invalid_argument("triangle does not contain edge");
    }

    bool validate() const {
        for (auto [i, j] : edges)
            if (!(0 <= i && i < j && j < nv)) return false;
        for (const auto& t : triangles) {
            if (!(0 <= t[0] && t[0] < t[1] && t[1] < t[2] && t[2] < nv)) return false;
            if (edge_index(t[0], t[1]) < 0 || edge_index(t[1], t[2]) < 0 || edge_index(t[0], t[2]) < 0)
                return false;
        }
        return true;
    }

    bool is_connected() const {
        if (nv == 0) return true;
        std::vector<int> seen(static_cast<std::size_t>(nv), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (auto [i, j] : edges) {
                int w = (i == v) ? j : (j == v) ? i : -1;
                if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++cnt;
                    q.push(w);
                }
            }
        }
        return cnt == nv;
    }

    /// first Betti number of the underlying graph (cycle rank), ignoring 2-cells
    int graph_cycle_rank() const { return static_cast<int>(edges.size()) - nv + 1; }
};

inline FiniteComplex circle_complex(int m = 4) {
    FiniteComplex c;
    c.nv = m;
    for (int v = 0; v < m; ++v) {
        int a = v, b = (v + 1) % m;
        if (a > b) std::swap(a, b);
        c.edges.emplace_back(a, b);
    }
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

inline FiniteComplex path_complex(int m = 4) {
    FiniteComplex c;
    c.nv = m;
    for (int v = 0; v + 1 < m; ++v) c.edges.emplace_back(v, v + 1);
    return c;
}

/// two vertices joined by three length-2 paths (cycle rank 2)
inline FiniteComplex theta_complex() {
    FiniteComplex c;
    c.nv = 5;
    c.edges = {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
    return c;
}

/// two triangles sharing vertex 0 (cycle rank 2)
inline FiniteComplex wedge_complex() {
    FiniteComplex c;
    c.nv = 5;
    c.edges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}};
    return c;
}

/// a single filled 2-simplex (simply connected)
inline FiniteComplex disc_complex() {
    FiniteComplex c;
    c.nv = 3;
    c.edges = {{0, 1}, {0, 2}, {1, 2}};
    c.triangles = {{{0, 1, 2}}};
    return c;
}

/// Transition value on one star overlap: permutation times a diagonal of
/// real-valued functions, sampled on the overlap's sample points.
struct TopVal {
    Perm perm{0};
    std::vector<QVec> pl;  // pl[row][sample]

    static TopVal id(int n, std::size_t samples) {
        return TopVal{Perm(static_cast<std::size_t>(n)), std::vector<QVec>(static_cast<std::size_t>(n), QVec(samples, Q(0)))};
    }
};

inline TopVal topval_inverse(const TopVal& a) {
    TopVal r{a.perm.inverse(), a.pl};
    for (std::size_t k = 0; k < a.pl.size(); ++k) {
        r.pl[static_cast<std::size_t>(r.perm(static_cast<int>(k)))] = a.pl[k];
        for (auto& x : r.pl[static_cast<std::size_t>(r.perm(static_cast<int>(k)))]) x = -x;
    }
    return r;
}

struct TopCocycle {
    int rank = 1;
    std::vector<TopVal> vals;  // indexed by edge, oriented low -> high vertex

    TopVal theta(const FiniteComplex& x, int i, int j) const {
        int e = x.edge_index(i, j);
        if (e < 0) throw std::invalid_argument("theta: vertices not adjacent");
        if (i < j) return vals[static_cast<std::size_t>(e)];
        return topval_inverse(vals[static_cast<std::size_t>(e)]);
    }
};

inline TopCocycle trivial_top_cocycle(const FiniteComplex& x, int rank) {
    TopCocycle c;
    c.rank = rank;
    for (std::size_t e = 0; e < x.edges.size(); ++e)
        c.vals.push_back(TopVal::id(rank, x.sample_count(static_cast<int>(e))));
    return c;
}

/// Cocycle identities hold automatically on graphs (no triple overlaps);
/// on each filled triangle they are checked at the barycenter.
inline bool validate_top_cocycle(const FiniteComplex& x, const TopCocycle& c) {
    if (c.vals.size() != x.edges.size())
        throw std::invalid_argument("validate_top_cocycle: value count does not match edges");
    for (std::size_t e = 0; e < c.vals.size(); ++e) {
        if (static_cast<int>(c.vals[e].pl.size()) != c.rank) return false;
        for (const auto& row : c.vals[e].pl)
            if (row.size() != x.sample_count(static_cast<int>(e))) return false;
    }
    for (std::size_t t = 0; t < x.triangles.size(); ++t) {
        auto [i, j, k] = std::tuple{x.triangles[t][0], x.triangles[t][1], x.triangles[t][2]};
        TopVal ij = c.theta(x, i, j), jk = c.theta(x, j, k), ik = c.theta(x, i, k);
        if (!(ik.perm == ij.perm * jk.perm)) return false;
        std::size_t sij = x.barycenter_sample(x.edge_index(i, j), static_cast<int>(t));
        std::size_t sjk = x.barycenter_sample(x.edge_index(j, k), static_cast<int>(t));
        std::size_t sik = x.barycenter_sample(x.edge_index(i, k), static_cast<int>(t));
        Perm inv = ij.perm.inverse();
        for (int r = 0; r < c.rank; ++r) {
            Q rhs = ij.pl[static_cast<std::size_t>(r)][sij] +
                    jk.pl[static_cast<std::size_t>(inv(r))][sjk];
            if (ik.pl[static_cast<std::size_t>(r)][sik] != rhs) return false;
        }
    }
    return true;
}

/// n-fold covering space defined by the permutation part: sheets over each
/// star, glued along overlaps.
struct CoveringComplex {
    int sheets = 1;
    int n_components = 0;
    std::vector<int> component;  // component[v * sheets + s]

    int comp(int v, int s) const { return component[static_cast<std::size_t>(v * sheets + s)]; }
};

inline CoveringComplex covering_from_perm(const FiniteComplex& x, const TopCocycle& c) {
    if (!validate_top_cocycle(x, c)) throw std::invalid_argument("covering_from_perm: invalid cocycle");
    int n = c.rank;
    std::size_t total = static_cast<std::size_t>(x.nv * n);
    std::vector<int> parent(total);
    for (std::size_t i = 0; i < total; ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        auto [i, j] = x.edges[e];
        for (int s = 0; s < n; ++s) {
            // sheet s over U_j meets sheet sigma_ij(s) over U_i
            int si = c.vals[e].perm(s);
            int a = find(i * n + si), b = find(j * n + s);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    }
    CoveringComplex r;
    r.sheets = n;
    std::map<int, int> relabel;
    for (std::size_t i = 0; i < total; ++i) {
        int root = find(static_cast<int>(i));
        auto it = relabel.find(root);
        if (it == relabel.end()) it = relabel.emplace(root, static_cast<int>(relabel.size())).first;
        r.component.push_back(it->second);
    }
    r.n_components = static_cast<int>(relabel.size());
    return r;
}

/// the section of the covering correspondence: include S_n data with zero
/// real parts
inline TopCocycle split_section(const FiniteComplex& x, const std::vector<Perm>& perms, int rank) {
    if (perms.size() != x.edges.size()) throw std::invalid_argument("split_section: perm count mismatch");
    TopCocycle c = trivial_top_cocycle(x, rank);
    for (std::size_t e = 0; e < perms.size(); ++e) c.vals[e].perm = perms[e];
    return c;
}

inline std::vector<Perm> top_perm_part(const TopCocycle& c) {
    std::vector<Perm> p;
    for (const auto& v : c.vals) p.push_back(v.perm);
    return p;
}

namespace detail {
/// variable indexing for 0-cochains: one unknown per (vertex, physical
/// sample point in its star, row)
struct StarVars {
    std::map<std::pair<int, int>, std::size_t> mid;   // (vertex, edge) -> base var
    std::map<std::pair<int, int>, std::size_t> bary;  // (vertex, triangle) -> base var
    std::size_t per_row = 0;

    explicit StarVars(const FiniteComplex& x) {
        for (std::size_t e = 0; e < x.edges.size(); ++e) {
            auto [i, j] = x.edges[e];
            mid[{i, static_cast<int>(e)}] = per_row++;
            mid[{j, static_cast<int>(e)}] = per_row++;
        }
        for (std::size_t t = 0; t < x.triangles.size(); ++t)
            for (int v : x.triangles[t]) bary[{v, static_cast<int>(t)}] = per_row++;
    }
};
}  // namespace detail

/// 0-cochain of real-valued diagonal data: value(row, vertex, edge, sample)
struct RCochain {
    detail::StarVars vars;
    std::vector<QVec> rows;  // rows[r][var]

    RCochain(const FiniteComplex& x, int rank) : vars(x), rows(static_cast<std::size_t>(rank), QVec(vars.per_row, Q(0))) {}

    Q at(const FiniteComplex& x, int row, int vertex, int edge, std::size_t sample) const {
        std::size_t var;
        if (sample == 0) {
            var = vars.mid.at({vertex, edge});
        } else {
            int tri = x.tris_of_edge(edge)[sample - 1];
            var = vars.bary.at({vertex, tri});
        }
        return rows[static_cast<std::size_t>(row)][var];
    }
};

/// Exact solve of a_ij = phi_i - phi_j at every overlap sample point, with
/// one PL unknown per vertex-star sample point. On valid cocycles a solution
/// exists; inconsistency certifies an invalid input.
inline std::optional<RCochain> solve_r_coboundary(const FiniteComplex& x, const TopCocycle& c) {
    for (const auto& v : c.vals)
        if (!v.perm.is_identity()) throw std::invalid_argument("solve_r_coboundary: perm part must be trivial");
    detail::StarVars vars(x);
    RCochain out(x, c.rank);
    for (int r = 0; r < c.rank; ++r) {
        QMat m;
        QVec rhs;
        for (std::size_t e = 0; e < x.edges.size(); ++e) {
            auto [i, j] = x.edges[e];
            auto tris = x.tris_of_edge(static_cast<int>(e));
            for (std::size_t s = 0; s < x.sample_count(static_cast<int>(e)); ++s) {
                QVec row(vars.per_row, Q(0));
                if (s == 0) {
                    row[vars.mid.at({i, static_cast<int>(e)})] += 1;
                    row[vars.mid.at({j, static_cast<int>(e)})] -= 1;
                } else {
                    row[vars.bary.at({i, tris[s - 1]})] += 1;
                    row[vars.bary.at({j, tris[s - 1]})] -= 1;
                }
                m.push_back(std::move(row));
                rhs.push_back(c.vals[e].pl[static_cast<std::size_t>(r)][s]);
            }
        }
        auto sol = q_solve(m, rhs);
        if (!sol) return std::nullopt;
        out.rows[static_cast<std::size_t>(r)] = *sol;
    }
    return out;
}

namespace detail {
/// conjugate one overlap value by vertex perms: tau_i * val * tau_j^{-1}
inline TopVal conj_topval(const Perm& ti, const TopVal& v, const Perm& tj) {
    TopVal r{ti * v.perm * tj.inverse(), v.pl};
    Perm tinv = ti.inverse();
    for (std::size_t k = 0; k < v.pl.size(); ++k) r.pl[k] = v.pl[static_cast<std::size_t>(tinv(static_cast<int>(k)))];
    return r;
}

/// spanning-tree normalization: vertex perms tau with tau_i * theta_ij *
/// tau_j^{-1} = identity perm on tree edges
inline std::vector<Perm> tree_gauge(const FiniteComplex& x, const TopCocycle& c) {
    int n = c.rank;
    std::vector<Perm> tau(static_cast<std::size_t>(x.nv), Perm(static_cast<std::size_t>(n)));
    std::vector<int> seen(static_cast<std::size_t>(x.nv), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [i, j] : x.edges) {
            int w = (i == v) ? j : (j == v) ? i : -1;
            if (w < 0 || seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            // want tau_v * theta_vw * tau_w^{-1} = id
            tau[static_cast<std::size_t>(w)] = tau[static_cast<std::size_t>(v)] * c.theta(x, v, w).perm;
            q.push(w);
        }
    }
    return tau;
}

inline TopCocycle apply_gauge(const FiniteComplex& x, const TopCocycle& c, const std::vector<Perm>& tau) {
    TopCocycle r = c;
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        auto [i, j] = x.edges[e];
        r.vals[e] = conj_topval(tau[static_cast<std::size_t>(i)], c.vals[e], tau[static_cast<std::size_t>(j)]);
    }
    return r;
}

/// Diagonal gauge solve with matching (possibly nontrivial) perm parts:
/// phi_i[r] - phi_j[sigma_e^{-1}(r)] = b.pl[r] - a.pl[r] at each sample.
inline bool diagonal_gauge_solvable(const FiniteComplex& x, const TopCocycle& a, const TopCocycle& b) {
    detail::StarVars vars(x);
    std::size_t nvars = vars.per_row * static_cast<std::size_t>(a.rank);
    auto var = [&](std::size_t base, int row) { return base + vars.per_row * static_cast<std::size_t>(row); };
    QMat m;
    QVec rhs;
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        auto [i, j] = x.edges[e];
        if (!(a.vals[e].perm == b.vals[e].perm)) return false;
        Perm inv = a.vals[e].perm.inverse();
        auto tris = x.tris_of_edge(static_cast<int>(e));
        for (std::size_t s = 0; s < x.sample_count(static_cast<int>(e)); ++s) {
            for (int r = 0; r < a.rank; ++r) {
                QVec row(nvars, Q(0));
                std::size_t bi = (s == 0) ? vars.mid.at({i, static_cast<int>(e)}) : vars.bary.at({i, tris[s - 1]});
                std::size_t bj = (s == 0) ? vars.mid.at({j, static_cast<int>(e)}) : vars.bary.at({j, tris[s - 1]});
                row[var(bi, r)] += 1;
                row[var(bj, inv(r))] -= 1;
                m.push_back(std::move(row));
                rhs.push_back(b.vals[e].pl[static_cast<std::size_t>(r)][s] - a.vals[e].pl[static_cast<std::size_t>(r)][s]);
            }
        }
    }
    return q_solve(m, rhs).has_value();
}
}  // namespace detail

struct TrivialityResult {
    bool trivial = false;
    std::string certificate;
};

/// Theorem-C criterion on a connected complex: the bundle is trivial iff
/// its covering is trivial; the residual real part is always solvable.
inline TrivialityResult is_trivial_bundle(const FiniteComplex& x, const TopCocycle& c) {
    if (!x.is_connected()) throw std::invalid_argument("is_trivial_bundle: complex must be connected");
    if (!validate_top_cocycle(x, c)) throw std::invalid_argument("is_trivial_bundle: invalid cocycle");
    auto tau = detail::tree_gauge(x, c);
    TopCocycle g = detail::apply_gauge(x, c, tau);
    for (std::size_t e = 0; e < g.vals.size(); ++e)
        if (!g.vals[e].perm.is_identity()) {
            auto cov = covering_from_perm(x, c);
            return {false, "nontrivial covering: " + std::to_string(cov.n_components) + " of " +
                               std::to_string(c.rank) + " components"};
        }
    auto phi = solve_r_coboundary(x, g);
    if (!phi) return {false, "real part is not a coboundary (invalid cocycle)"};
    return {true, "trivializing cochain found"};
}

/// Equivalence = covering isomorphism plus a residual real coboundary solve:
/// after spanning-tree normalization the remaining gauge is one constant
/// permutation composed with vertex-wise diagonal functions.
inline bool top_equivalent(const FiniteComplex& x, const TopCocycle& a, const TopCocycle& b) {
    if (a.rank != b.rank) return false;
    if (!validate_top_cocycle(x, a) || !validate_top_cocycle(x, b))
        throw std::invalid_argument("top_equivalent: invalid cocycle");
    if (!x.is_connected()) throw std::invalid_argument("top_equivalent: complex must be connected");
    TopCocycle an = detail::apply_gauge(x, a, detail::tree_gauge(x, a));
    TopCocycle bn = detail::apply_gauge(x, b, detail::tree_gauge(x, b));
    for (const auto& tau : Perm::all(static_cast<std::size_t>(a.rank))) {
        std::vector<Perm> constgauge(static_cast<std::size_t>(x.nv), tau);
        TopCocycle at = detail::apply_gauge(x, an, constgauge);
        bool perms_match = true;
        for (std::size_t e = 0; e < at.vals.size(); ++e)
            if (!(at.vals[e].perm == bn.vals[e].perm)) perms_match = false;
        if (!perms_match) continue;
        if (detail::diagonal_gauge_solvable(x, at, bn)) return true;
    }
    return false;
}

}  // namespace tropbund
