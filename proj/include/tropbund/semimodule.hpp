#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tropbund/finite_semiring.hpp"

namespace tropbund {

/// Finite module over a finite semiring, by explicit tables. Elements are
/// indices; zero element is index stored in `zero`.
struct FiniteSemimodule {
    const FiniteSemiring* r = nullptr;
    std::size_t size = 0;
    std::vector<std::vector<int>> add_t;            // size x size
    std::vector<std::vector<int>> act_t;            // |r| x size
    int zero = 0;
    std::vector<std::vector<int>> coords;           // optional: free coordinates of each element

    int add(int x, int y) const { return add_t[x][y]; }
    int act(int s, int x) const { return act_t[s][x]; }

    void validate() const {
        auto fail = [](const char* m) { throw std::invalid_argument(std::string("FiniteSemimodule: ") + m); };
        int n = static_cast<int>(size);
        for (int x = 0; x < n; ++x) {
            if (add(zero, x) != x) fail("zero not neutral");
            if (act(r->zero, x) != zero) fail("0 scalar not annihilating");
            if (act(r->one, x) != x) fail("1 scalar not identity");
            for (int y = 0; y < n; ++y) {
                if (add(x, y) != add(y, x)) fail("add not commutative");
                for (int z = 0; z < n; ++z)
                    if (add(add(x, y), z) != add(x, add(y, z))) fail("add not associative");
            }
        }
        for (int s = 0; s < static_cast<int>(r->size); ++s)
            for (int t = 0; t < static_cast<int>(r->size); ++t)
                for (int x = 0; x < n; ++x) {
                    if (act(r->mul(s, t), x) != act(s, act(t, x))) fail("action not associative");
                    if (act(r->add(s, t), x) != add(act(s, x), act(t, x))) fail("not distributive over scalar add");
                    for (int y = 0; y < n; ++y)
                        if (act(s, add(x, y)) != add(act(s, x), act(s, y))) fail("not distributive over add");
                }
    }
};

/// Free module R^k; element index encodes coordinates in base |R|.
inline FiniteSemimodule free_module(const FiniteSemiring& r, std::size_t k) {
    FiniteSemimodule m;
    m.r = &r;
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) n *= r.size;
    m.size = n;
    auto decode = [&](std::size_t e) {
        std::vector<int> v(k);
        for (std::size_t i = 0; i < k; ++i) {
            v[i] = static_cast<int>(e % r.size);
            e /= r.size;
        }
        return v;
    };
    auto encode = [&](const std::vector<int>& v) {
        std::size_t e = 0;
        for (std::size_t i = k; i-- > 0;) e = e * r.size + static_cast<std::size_t>(v[i]);
        return static_cast<int>(e);
    };
    m.add_t.assign(n, std::vector<int>(n));
    m.act_t.assign(r.size, std::vector<int>(n));
    for (std::size_t x = 0; x < n; ++x) {
        auto vx = decode(x);
        m.coords.push_back(vx);
        for (std::size_t y = 0; y < n; ++y) {
            auto vy = decode(y);
            std::vector<int> s(k);
            for (std::size_t i = 0; i < k; ++i) s[i] = r.add(vx[i], vy[i]);
            m.add_t[x][y] = encode(s);
        }
        for (std::size_t sc = 0; sc < r.size; ++sc) {
            std::vector<int> s(k);
            for (std::size_t i = 0; i < k; ++i) s[i] = r.mul(static_cast<int>(sc), vx[i]);
            m.act_t[sc][x] = encode(s);
        }
    }
    m.zero = encode(std::vector<int>(k, r.zero));
    return m;
}

/// basis vector e_i of a free module built by free_module
inline int free_unit_vector(const FiniteSemimodule& m, std::size_t k, std::size_t i) {
    std::size_t e = 1;
    for (std::size_t j = 0; j < i; ++j) e *= m.r->size;
    return static_cast<int>(e * static_cast<std::size_t>(m.r->one));
}

/// Quotient by the module congruence generated by the given pairs: closed
/// under translation and the scalar action, to a fixpoint.
inline FiniteSemimodule quotient_module(const FiniteSemimodule& m,
                                        const std::vector<std::pair<int, int>>& pairs) {
    int n = static_cast<int>(m.size);
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        uf[a] = b;
        return true;
    };
    for (auto [a, b] : pairs) unite(a, b);
    for (bool grew = true; grew;) {
        grew = false;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (find(x) != find(y)) continue;
                for (int z = 0; z < n; ++z)
                    if (unite(m.add(x, z), m.add(y, z))) grew = true;
                for (int s = 0; s < static_cast<int>(m.r->size); ++s)
                    if (unite(m.act(s, x), m.act(s, y))) grew = true;
            }
    }
    std::vector<int> rep_of(n, -1), reps;
    for (int x = 0; x < n; ++x) {
        int r0 = find(x);
        if (rep_of[r0] < 0) {
            rep_of[r0] = static_cast<int>(reps.size());
            reps.push_back(r0);
        }
    }
    FiniteSemimodule q;
    q.r = m.r;
    q.size = reps.size();
    q.add_t.assign(q.size, std::vector<int>(q.size));
    q.act_t.assign(m.r->size, std::vector<int>(q.size));
    for (std::size_t i = 0; i < q.size; ++i) {
        for (std::size_t j = 0; j < q.size; ++j) q.add_t[i][j] = rep_of[find(m.add(reps[i], reps[j]))];
        for (std::size_t s = 0; s < m.r->size; ++s) q.act_t[s][i] = rep_of[find(m.act(static_cast<int>(s), reps[i]))];
    }
    q.zero = rep_of[find(m.zero)];
    // remember which quotient class each original element fell into
    q.coords.assign(1, std::vector<int>(n));
    for (int x = 0; x < n; ++x) q.coords[0][static_cast<std::size_t>(x)] = rep_of[find(x)];
    return q;
}

/// Linear combination sum_i c_i * v_i.
inline int combine(const FiniteSemimodule& m, const std::vector<int>& coeffs,
                   const std::vector<int>& vecs) {
    int acc = m.zero;
    for (std::size_t i = 0; i < vecs.size(); ++i) acc = m.add(acc, m.act(coeffs[i], vecs[i]));
    return acc;
}

/// Exhaustive: no two distinct coefficient tuples give the same combination.
inline bool is_linearly_independent(const FiniteSemimodule& m, const std::vector<int>& vecs) {
    for (int v : vecs)
        if (v < 0 || v >= static_cast<int>(m.size))
            throw std::invalid_argument("is_linearly_independent: vector outside module");
    std::size_t k = vecs.size(), nr = m.r->size;
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= nr;
    std::map<int, std::vector<int>> seen;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> c(k);
        std::size_t t = code;
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = static_cast<int>(t % nr);
            t /= nr;
        }
        int val = combine(m, c, vecs);
        auto it = seen.find(val);
        if (it != seen.end() && it->second != c) return false;
        seen.emplace(val, std::move(c));
    }
    return true;
}

inline bool spans(const FiniteSemimodule& m, const std::vector<int>& vecs) {
    std::size_t k = vecs.size(), nr = m.r->size;
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= nr;
    std::set<int> hit;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<int> c(k);
        std::size_t t = code;
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = static_cast<int>(t % nr);
            t /= nr;
        }
        hit.insert(combine(m, c, vecs));
    }
    return hit.size() == m.size;
}

/// Join-irreducible nonzero elements (for idempotent addition these are the
/// candidate basis over the Boolean semiring).
inline std::vector<int> atoms(const FiniteSemimodule& m) {
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(m.size); ++x) {
        if (x == m.zero) continue;
        bool irred = true;
        for (int y = 0; y < static_cast<int>(m.size) && irred; ++y)
            for (int z = 0; z < static_cast<int>(m.size) && irred; ++z)
                if (m.add(y, z) == x && y != x && z != x) irred = false;
        if (irred) out.push_back(x);
    }
    return out;
}

struct BasisResult {
    bool free = false;
    std::vector<int> basis;      // element indices, empty if not free
    std::string certificate;     // human-readable reason when not free
};

/// Search for a linearly independent generating set, smallest size first.
inline BasisResult find_basis(const FiniteSemimodule& m, std::size_t max_size = 5) {
    BasisResult res;
    if (m.size == 1) {
        res.free = true;
        return res;
    }
    // atoms first: over idempotent semirings a basis must generate the atoms
    auto at = atoms(m);
    if (spans(m, at) && is_linearly_independent(m, at)) {
        res.free = true;
        res.basis = at;
        return res;
    }
    std::vector<int> nz;
    for (int x = 0; x < static_cast<int>(m.size); ++x)
        if (x != m.zero) nz.push_back(x);
    for (std::size_t k = 1; k <= std::min(max_size, nz.size()); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::vector<int> cand(k);
            for (std::size_t i = 0; i < k; ++i) cand[i] = nz[idx[i]];
            if (spans(m, cand) && is_linearly_independent(m, cand)) {
                res.free = true;
                res.basis = cand;
                return res;
            }
            // next combination
            std::size_t i = k;
            while (i-- > 0) {
                if (idx[i] + (k - i) < nz.size()) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = static_cast<std::size_t>(-1);
                    break;
                }
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
    }
    res.free = false;
    res.certificate = "no independent generating subset of size <= " +
                      std::to_string(std::min(max_size, nz.size())) + " among " +
                      std::to_string(nz.size()) + " nonzero elements";
    return res;
}

/// All homomorphisms of R-modules M -> N, by backtracking over a generating
/// list of M's elements (here: all elements, with additive/action pruning).
inline std::vector<std::vector<int>> all_homs(const FiniteSemimodule& mm,
                                              const FiniteSemimodule& nn,
                                              unsigned long cap = 2000000) {
    std::vector<std::vector<int>> out;
    std::vector<int> img(mm.size, -1);
    img[mm.zero] = nn.zero;
    unsigned long visited = 0;
    auto consistent = [&](int x) {
        for (int y = 0; y < static_cast<int>(mm.size); ++y) {
            if (img[y] < 0) continue;
            int s = mm.add(x, y);
            if (img[s] >= 0 && img[s] != nn.add(img[x], img[y])) return false;
        }
        for (int sc = 0; sc < static_cast<int>(mm.r->size); ++sc) {
            int s = mm.act(sc, x);
            if (img[s] >= 0 && img[s] != nn.act(sc, img[x])) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int x) -> void {
        while (x < static_cast<int>(mm.size) && img[x] >= 0) ++x;
        if (x == static_cast<int>(mm.size)) {
            out.push_back(img);
            return;
        }
        for (int v = 0; v < static_cast<int>(nn.size); ++v) {
            if (++visited > cap) throw std::runtime_error("all_homs: search budget exceeded");
            img[x] = v;
            if (consistent(x)) self(self, x + 1);
            img[x] = -1;
        }
    };
    rec(rec, 0);
    return out;
}

inline bool is_surjective_map(const std::vector<int>& f, std::size_t target_size) {
    std::set<int> img(f.begin(), f.end());
    return img.size() == target_size;
}

struct ProjectivityReport {
    bool all_lift = true;
    bool all_unique = true;
};

/// For each surjection f: N ->> M and map g: P -> M, search for a lift
/// h: P -> N with f o h = g. Reports whether all instances lift and whether
/// every found lift was unique.
inline ProjectivityReport check_projectivity_witness(
    const FiniteSemimodule& p, const FiniteSemimodule& n, const FiniteSemimodule& mtarget,
    const std::vector<int>& f, const std::vector<int>& g) {
    if (!is_surjective_map(f, mtarget.size))
        throw std::invalid_argument("check_projectivity_witness: f not surjective");
    ProjectivityReport rep;
    auto homs = all_homs(p, n);
    int count = 0;
    for (const auto& h : homs) {
        bool lifts = true;
        for (std::size_t x = 0; x < p.size; ++x)
            if (f[static_cast<std::size_t>(h[x])] != g[x]) {
                lifts = false;
                break;
            }
        if (lifts) ++count;
    }
    rep.all_lift = count >= 1;
    rep.all_unique = count == 1;
    return rep;
}

/// No module isomorphism r^m = r^n for m != n (cardinality shortcut, then
/// exhaustive bijective-homomorphism search).
inline bool dup_witness(const FiniteSemiring& r, std::size_t m, std::size_t n) {
    if (m == n) return false;  // identity isomorphism exists
    auto a = free_module(r, m), b = free_module(r, n);
    if (a.size != b.size) return true;
    for (const auto& h : all_homs(a, b))
        if (is_surjective_map(h, b.size)) {
            // bijective hom; check the inverse map is a hom
            std::vector<int> inv(b.size);
            for (std::size_t x = 0; x < a.size; ++x) inv[static_cast<std::size_t>(h[x])] = static_cast<int>(x);
            bool ok = true;
            for (std::size_t x = 0; x < b.size && ok; ++x)
                for (std::size_t y = 0; y < b.size && ok; ++y)
                    if (inv[b.add_t[x][y]] != a.add(inv[x], inv[y])) ok = false;
            if (ok) return false;
        }
    return true;
}

/// Diagonal split of a free basis under a pair of endomorphisms (matrices
/// acting on R^k) with EF = 0 and E + F = id.
struct SummandSplit {
    std::vector<std::size_t> in_first;   // indices i with E(e_i) != 0
    std::vector<std::size_t> in_second;
};

inline SummandSplit summand_basis_split(const FiniteSemiring& r, std::size_t k,
                                        const std::vector<std::vector<int>>& e,
                                        const std::vector<std::vector<int>>& f) {
    auto mat_vec = [&](const std::vector<std::vector<int>>& a, const std::vector<int>& v) {
        std::vector<int> out(k, r.zero);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) out[i] = r.add(out[i], r.mul(a[i][j], v[j]));
        return out;
    };
    // verify the endomorphism-pair axioms on all of R^k
    auto fm = free_module(r, k);
    for (std::size_t x = 0; x < fm.size; ++x) {
        const auto& v = fm.coords[x];
        auto ev = mat_vec(e, v), fv = mat_vec(f, v);
        auto efv = mat_vec(e, fv);
        std::vector<int> sum(k), zero(k, r.zero);
        for (std::size_t i = 0; i < k; ++i) sum[i] = r.add(ev[i], fv[i]);
        if (efv != zero || sum != v)
            throw std::invalid_argument("summand_basis_split: pair fails idempotent axioms");
    }
    SummandSplit s;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int> ei(k, r.zero);
        ei[i] = r.one;
        auto img = mat_vec(e, ei);
        bool zero = true, diagonal = true;
        for (std::size_t j = 0; j < k; ++j)
            if (img[j] != r.zero) {
                zero = false;
                if (j != i) diagonal = false;
            }
        if (!diagonal) throw std::invalid_argument("summand_basis_split: projection not diagonal");
        (zero ? s.in_second : s.in_first).push_back(i);
    }
    return s;
}

}  // namespace tropbund
