#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropbund/fan.hpp"
#include "tropbund/zlinalg.hpp"

namespace tropbund {

enum class Cancellativity { yes, no, unknown_at_bound };

/// Finitely presented commutative monoid with an absorbing zero adjoined.
/// Toric charts additionally carry the lattice embedding of their generators,
/// which certifies cancellativity.
struct MonoidPresentation {
    std::vector<std::string> gen_names;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> relations;  // exponent words
    std::optional<std::vector<ZVec>> lattice_gens;  // embedding into Z^d, if toric
    int lattice_rank = 0;

    std::size_t ngens() const { return gen_names.size(); }
};

/// Cancellativity: a lattice embedding certifies yes. Otherwise each relation
/// u ~ v is reduced by the common factor; if the reduced pair is not itself a
/// stated relation (or trivial), cancellation fails on it. Relations that
/// reduce to other relations within the bound leave the question open.
inline Cancellativity is_cancellative(const MonoidPresentation& m) {
    if (m.lattice_gens) return Cancellativity::yes;  // embeds in a group
    bool open = false;
    for (const auto& [u, v] : m.relations) {
        std::vector<int> ru(u), rv(v);
        bool reduced = false;
        for (std::size_t i = 0; i < ru.size(); ++i) {
            int c = std::min(ru[i], rv[i]);
            if (c > 0) reduced = true;
            ru[i] -= c;
            rv[i] -= c;
        }
        if (!reduced) continue;
        if (ru == rv) continue;
        bool derivable = false;
        for (const auto& [a, b] : m.relations)
            if ((a == ru && b == rv) || (a == rv && b == ru)) derivable = true;
        if (!derivable) return Cancellativity::no;
        open = true;
    }
    return open ? Cancellativity::unknown_at_bound : Cancellativity::yes;
}

namespace detail {
/// lattice points of the dual cone inside the [-b, b]^d box
inline void box_points(int d, int b, const std::vector<ZVec>& rays, std::vector<ZVec>& out) {
    std::vector<int> cur(d, -b);
    for (;;) {
        ZVec u(d);
        bool zero = true;
        for (int i = 0; i < d; ++i) {
            u[i] = cur[i];
            if (cur[i]) zero = false;
        }
        if (!zero) {
            bool in = true;
            for (const auto& r : rays) {
                Z dot(0);
                for (int i = 0; i < d; ++i) dot += u[i] * r[i];
                if (dot < 0) {
                    in = false;
                    break;
                }
            }
            if (in) out.push_back(u);
        }
        int i = 0;
        while (i < d && cur[i] == b) cur[i++] = -b;
        if (i == d) break;
        ++cur[i];
    }
}
}  // namespace detail

struct DualMonoidResult {
    MonoidPresentation monoid;
    std::vector<ZVec> hilbert_basis;
    /// certification: every dual-cone lattice point in the sample box is a
    /// nonnegative integer combination of the basis
    bool complete_at_bound = false;
};

/// Generators of S_sigma = sigma-dual cap Z^d: irreducible lattice points of
/// the dual cone found by bounded box enumeration, relations from the integer
/// kernel of the generator matrix.
inline DualMonoidResult dual_monoid(const Fan& fan, const std::vector<int>& cone_rays,
                                    int box = 3) {
    int d = fan.rank;
    if (d > 3) throw std::invalid_argument("dual_monoid: rank exceeds bound");
    std::vector<ZVec> rays;
    for (int r : cone_rays) rays.push_back(fan.rays[r]);
    std::vector<ZVec> pts;
    detail::box_points(d, box, rays, pts);
    // irreducible: not a sum of two strictly shorter points of the set (the
    // length condition keeps unit directions, where every element decomposes
    // through longer ones, as generators)
    auto norm1 = [d](const ZVec& v) {
        Z s(0);
        for (int i = 0; i < d; ++i) s += abs(v[i]);
        return s;
    };
    std::set<ZVec> pset(pts.begin(), pts.end());
    std::vector<ZVec> basis;
    for (const auto& u : pts) {
        bool irred = true;
        Z nu = norm1(u);
        for (const auto& a : pts) {
            if (norm1(a) >= nu) continue;
            ZVec b(u);
            for (int i = 0; i < d; ++i) b[i] -= a[i];
            if (norm1(b) < nu && pset.count(b)) {
                irred = false;
                break;
            }
        }
        if (irred) basis.push_back(u);
    }
    DualMonoidResult res;
    res.hilbert_basis = basis;
    // certification: greedy decomposition of every box point over the basis
    res.complete_at_bound = true;
    for (const auto& u : pts) {
        ZVec rem(u);
        bool progress = true;
        auto is_zero = [&] {
            for (const auto& x : rem)
                if (x != 0) return false;
            return true;
        };
        while (!is_zero() && progress) {
            progress = false;
            for (const auto& g : basis) {
                // subtract g if the remainder stays in the dual cone and gets
                // strictly shorter (termination in the presence of units)
                ZVec cand(rem);
                Z nr(0), nc(0);
                for (int i = 0; i < d; ++i) {
                    nr += abs(rem[i]);
                    cand[i] -= g[i];
                    nc += abs(cand[i]);
                }
                if (nc >= nr) continue;
                bool in = true;
                for (const auto& r : rays) {
                    Z dot(0);
                    for (int i = 0; i < d; ++i) dot += cand[i] * r[i];
                    if (dot < 0) in = false;
                }
                if (in) {
                    rem = cand;
                    progress = true;
                    break;
                }
            }
        }
        if (!is_zero()) res.complete_at_bound = false;
    }
    // presentation
    MonoidPresentation& m = res.monoid;
    m.lattice_rank = d;
    m.lattice_gens = basis;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::string nm = "u" + std::to_string(i);
        m.gen_names.push_back(nm);
    }
    if (!basis.empty()) {
        // binomial kernel of the generator matrix (columns = generators)
        ZMat a(d, ZVec(basis.size()));
        for (int i = 0; i < d; ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) a[i][j] = basis[j][i];
        for (const auto& k : z_kernel(a)) {
            std::vector<int> pos(basis.size(), 0), neg(basis.size(), 0);
            for (std::size_t j = 0; j < basis.size(); ++j) {
                long v = static_cast<long>(k[j].get_si());
                if (v > 0) pos[j] = static_cast<int>(v);
                if (v < 0) neg[j] = static_cast<int>(-v);
            }
            m.relations.emplace_back(pos, neg);
        }
    }
    return res;
}

/// Unit group of a toric chart monoid: the sublattice orthogonal to the cone
/// rays, returned as a basis of Z-vectors in the ambient lattice.
inline std::vector<ZVec> monoid_units(const Fan& fan, const std::vector<int>& cone_rays) {
    int d = fan.rank;
    if (cone_rays.empty()) {
        std::vector<ZVec> b;
        for (int i = 0; i < d; ++i) {
            ZVec e(d, Z(0));
            e[i] = 1;
            b.push_back(e);
        }
        return b;
    }
    ZMat a;
    for (int r : cone_rays) a.push_back(fan.rays[r]);
    return z_kernel(a);
}

/// Unit group of an abstract cancellative presentation: generators g with an
/// inverse among bounded words. For lattice-embedded monoids this reduces to
/// the orthogonal-lattice computation above.
struct UnitGroupDesc {
    bool has_divisible_part = false;  // the scalar units of the base semifield
    std::vector<ZVec> lattice_basis;  // monomial units
    int lattice_rank() const { return static_cast<int>(lattice_basis.size()); }
};

}  // namespace tropbund
