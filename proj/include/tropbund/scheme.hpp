#pragma once

#include <string>
#include <vector>

#include "tropbund/monoid.hpp"

namespace tropbund {

/// Toric monoid scheme: one chart per maximal cone, overlap data per chart
/// pair from the common face. The nerve of a cover of a toric variety by
/// torus-containing charts is the full simplex: every intersection contains
/// the dense torus and is nonempty and connected.
struct MonoidScheme {
    Fan fan;
    std::vector<DualMonoidResult> charts;
    // overlap (i,j), i<j: dual monoid of the shared face
    std::vector<std::vector<int>> overlap_rays;       // shared ray indices per pair
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::tuple<int, int, int>> triples;

    std::size_t n_charts() const { return charts.size(); }
    int pair_index(int i, int j) const {
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (pairs[k] == std::make_pair(i, j)) return static_cast<int>(k);
        throw std::invalid_argument("pair not in nerve");
    }
};

inline MonoidScheme build_scheme(const Fan& fan, int box = 3) {
    MonoidScheme x;
    x.fan = fan;
    int n = static_cast<int>(fan.cones.size());
    for (int i = 0; i < n; ++i) x.charts.push_back(dual_monoid(fan, fan.cones[i], box));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            x.pairs.emplace_back(i, j);
            x.overlap_rays.push_back(fan.shared_rays(i, j));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) x.triples.emplace_back(i, j, k);
    return x;
}

/// Every chart and finite chart intersection must have a cancellative
/// coordinate monoid.
inline Cancellativity check_cover_condition(const MonoidScheme& x) {
    bool open = false;
    for (const auto& c : x.charts) {
        auto v = is_cancellative(c.monoid);
        if (v == Cancellativity::no) return v;
        if (v == Cancellativity::unknown_at_bound) open = true;
    }
    for (const auto& rays : x.overlap_rays) {
        auto overlap = dual_monoid(x.fan, rays);
        auto v = is_cancellative(overlap.monoid);
        if (v == Cancellativity::no) return v;
        if (v == Cancellativity::unknown_at_bound) open = true;
    }
    return open ? Cancellativity::unknown_at_bound : Cancellativity::yes;
}

enum class BaseSemifield { boolean, tropicalQ };

/// Chart-level base change: S_sigma becomes the monoid semiring k[S_sigma].
struct SemiringChart {
    BaseSemifield base;
    MonoidPresentation monoid;
    std::string describe() const {
        std::string b = base == BaseSemifield::boolean ? "B" : "T_Q";
        std::string gens;
        for (std::size_t i = 0; i < monoid.gen_names.size(); ++i)
            gens += (i ? "," : "") + monoid.gen_names[i];
        return b + "[" + gens + "]" + (monoid.relations.empty() ? "" : "/(relations)");
    }
};

struct SemiringScheme {
    MonoidScheme underlying;
    BaseSemifield base;
    std::vector<SemiringChart> charts;
};

inline SemiringScheme base_change(const MonoidScheme& x, BaseSemifield k) {
    SemiringScheme s;
    s.underlying = x;
    s.base = k;
    for (const auto& c : x.charts) s.charts.push_back({k, c.monoid});
    return s;
}

/// Units of k[M] for an idempotent semifield k and cancellative M:
/// K^x times M^x — divisible scalar part (trivial for B) plus the unit
/// lattice of the monoid.
inline UnitGroupDesc units_of_monoid_semiring(BaseSemifield k, const Fan& fan,
                                              const std::vector<int>& cone_rays) {
    UnitGroupDesc u;
    u.has_divisible_part = (k == BaseSemifield::tropicalQ);
    u.lattice_basis = monoid_units(fan, cone_rays);
    return u;
}

}  // namespace tropbund
