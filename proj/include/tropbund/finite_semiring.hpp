#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropbund {

/// A commutative semiring given by explicit addition/multiplication tables.
/// Elements are indices 0..size-1.
struct FiniteSemiring {
    std::size_t size = 0;
    std::vector<std::vector<int>> add_t, mul_t;
    int zero = 0, one = 1;
    std::vector<std::string> names;

    int add(int a, int b) const { return add_t[a][b]; }
    int mul(int a, int b) const { return mul_t[a][b]; }
    int pow(int a, unsigned k) const {
        int r = one;
        while (k--) r = mul(r, a);
        return r;
    }
    const std::string& name(int a) const { return names[a]; }

    /// Exhaustive axiom check: commutativity, associativity, identities,
    /// absorption, distributivity.
    void validate() const {
        auto fail = [](const char* m) { throw std::invalid_argument(std::string("FiniteSemiring: ") + m); };
        int n = static_cast<int>(size);
        if (add_t.size() != size || mul_t.size() != size) fail("table shape");
        for (int a = 0; a < n; ++a) {
            if (add(zero, a) != a) fail("zero not neutral");
            if (mul(one, a) != a) fail("one not neutral");
            if (mul(zero, a) != zero) fail("zero not absorbing");
            for (int b = 0; b < n; ++b) {
                if (add(a, b) != add(b, a)) fail("add not commutative");
                if (mul(a, b) != mul(b, a)) fail("mul not commutative");
                for (int c = 0; c < n; ++c) {
                    if (add(add(a, b), c) != add(a, add(b, c))) fail("add not associative");
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("mul not associative");
                    if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("not distributive");
                }
            }
        }
    }

    bool is_zero_sum_free() const {
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b)
                if (add_t[a][b] == zero && !(static_cast<int>(a) == zero && static_cast<int>(b) == zero))
                    return false;
        return true;
    }

    bool is_unit(int a) const {
        for (std::size_t b = 0; b < size; ++b)
            if (mul(a, static_cast<int>(b)) == one) return true;
        return false;
    }
    std::optional<int> unit_inverse(int a) const {
        for (std::size_t b = 0; b < size; ++b)
            if (mul(a, static_cast<int>(b)) == one) return static_cast<int>(b);
        return std::nullopt;
    }
    std::vector<int> units() const {
        std::vector<int> u;
        for (std::size_t a = 0; a < size; ++a)
            if (is_unit(static_cast<int>(a))) u.push_back(static_cast<int>(a));
        return u;
    }
};

struct IdempotentPair {
    int e, f;
    bool trivial;  // e,f in {0,1}
};

/// All pairs (e,f) with ef = 0, e+f = 1.
inline std::vector<IdempotentPair> idempotent_pairs(const FiniteSemiring& r) {
    std::vector<IdempotentPair> out;
    for (int e = 0; e < static_cast<int>(r.size); ++e)
        for (int f = 0; f < static_cast<int>(r.size); ++f)
            if (r.mul(e, f) == r.zero && r.add(e, f) == r.one) {
                bool triv = (e == r.zero || e == r.one) && (f == r.zero || f == r.one);
                out.push_back({e, f, triv});
            }
    return out;
}

inline bool only_trivial_idempotent_pairs(const FiniteSemiring& r) {
    for (const auto& p : idempotent_pairs(r))
        if (!p.trivial) return false;
    return true;
}

inline bool is_ideal(const FiniteSemiring& r, const std::set<int>& i) {
    if (!i.count(r.zero)) return false;
    for (int a : i) {
        for (int b : i)
            if (!i.count(r.add(a, b))) return false;
        for (int x = 0; x < static_cast<int>(r.size); ++x)
            if (!i.count(r.mul(a, x))) return false;
    }
    return true;
}

/// Saturated: x in I and x+y in I imply y in I.
inline bool is_saturated_ideal(const FiniteSemiring& r, const std::set<int>& i) {
    if (!is_ideal(r, i)) return false;
    for (int x : i)
        for (int y = 0; y < static_cast<int>(r.size); ++y)
            if (i.count(r.add(x, y)) && !i.count(y)) return false;
    return true;
}

inline bool is_prime_ideal(const FiniteSemiring& r, const std::set<int>& i) {
    if (!is_ideal(r, i) || i.count(r.one)) return false;
    for (int a = 0; a < static_cast<int>(r.size); ++a)
        for (int b = 0; b < static_cast<int>(r.size); ++b)
            if (i.count(r.mul(a, b)) && !i.count(a) && !i.count(b)) return false;
    return true;
}

/// {a | a^n = 0 for some n <= |R|}.
inline std::set<int> nilradical(const FiniteSemiring& r) {
    std::set<int> n;
    for (int a = 0; a < static_cast<int>(r.size); ++a) {
        int p = r.one;
        for (std::size_t k = 1; k <= r.size; ++k) {
            p = r.mul(p, a);
            if (p == r.zero) {
                n.insert(a);
                break;
            }
        }
    }
    return n;
}

struct SpecResult {
    std::vector<std::set<int>> primes;
    std::vector<bool> saturated;  // parallel to primes
    bool connected = true;
    bool irreducible = true;
};

/// All prime ideals by subset enumeration, plus Zariski connectedness and
/// irreducibility of the finite spectrum. Intended for small tables.
inline SpecResult spec_primes(const FiniteSemiring& r) {
    SpecResult res;
    int n = static_cast<int>(r.size);
    if (n > 20) throw std::invalid_argument("spec_primes: table too large");
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::set<int> i;
        for (int a = 0; a < n; ++a)
            if (mask & (1ul << a)) i.insert(a);
        if (is_prime_ideal(r, i)) {
            res.saturated.push_back(is_saturated_ideal(r, i));
            res.primes.push_back(std::move(i));
        }
    }
    std::size_t np = res.primes.size();
    // closed sets: V(S) over all S subseteq R
    std::set<std::vector<bool>> closed;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<bool> c(np, false);
        for (std::size_t p = 0; p < np; ++p) {
            bool contains = true;
            for (int a = 0; a < n && contains; ++a)
                if (mask & (1ul << a)) contains = res.primes[p].count(a) > 0;
            c[p] = contains;
        }
        closed.insert(std::move(c));
    }
    auto count = [](const std::vector<bool>& v) {
        return std::count(v.begin(), v.end(), true);
    };
    for (const auto& c1 : closed)
        for (const auto& c2 : closed) {
            bool disjoint = true, cover = true;
            for (std::size_t p = 0; p < np; ++p) {
                if (c1[p] && c2[p]) disjoint = false;
                if (!c1[p] && !c2[p]) cover = false;
            }
            if (cover && count(c1) && count(c2)) {
                if (disjoint) res.connected = false;
                if (count(c1) < static_cast<long>(np) && count(c2) < static_cast<long>(np))
                    res.irreducible = false;
            }
        }
    if (np == 0) res.irreducible = false;
    return res;
}

/// Quotient by the Bourne congruence of an ideal: a ~ b iff a+n1 = b+n2 for
/// some n1, n2 in I.
class QuotientByIdeal {
  public:
    QuotientByIdeal(const FiniteSemiring& r, const std::set<int>& ideal) : r_(r) {
        int n = static_cast<int>(r.size);
        cls_.assign(n, -1);
        for (int a = 0; a < n; ++a) {
            if (cls_[a] >= 0) continue;
            int c = static_cast<int>(reps_.size());
            reps_.push_back(a);
            cls_[a] = c;
            for (int b = a + 1; b < n; ++b)
                if (cls_[b] < 0 && congruent(r, ideal, a, b)) cls_[b] = c;
        }
    }
    bool same(int a, int b) const { return cls_[a] == cls_[b]; }
    int cls(int a) const { return cls_[a]; }
    std::size_t size() const { return reps_.size(); }

  private:
    static bool congruent(const FiniteSemiring& r, const std::set<int>& ideal, int a, int b) {
        for (int n1 : ideal)
            for (int n2 : ideal)
                if (r.add(a, n1) == r.add(b, n2)) return true;
        return false;
    }
    const FiniteSemiring& r_;
    std::vector<int> cls_;
    std::vector<int> reps_;
};

/// Lift a pair that is idempotent modulo the nilradical to an actual
/// idempotent pair, congruent to the input mod N. Bounded search over the
/// power k and unit u, per the finite setting.
inline std::optional<IdempotentPair> lift_idempotent_pair(const FiniteSemiring& r, int e, int f) {
    std::set<int> nil = nilradical(r);
    QuotientByIdeal q(r, nil);
    if (!nil.count(r.mul(e, f)) || !q.same(r.add(e, f), r.one)) return std::nullopt;
    for (std::size_t k = 1; k <= r.size + 1; ++k) {
        int ek = r.pow(e, static_cast<unsigned>(k));
        int fk = r.pow(f, static_cast<unsigned>(k));
        if (r.mul(ek, fk) != r.zero) continue;
        for (int u = 0; u < static_cast<int>(r.size); ++u) {
            int ue = r.mul(u, ek), uf = r.mul(u, fk);
            if (r.add(ue, uf) != r.one) continue;
            if (r.mul(ue, uf) != r.zero) continue;
            if (!q.same(ue, e) || !q.same(uf, f)) continue;
            bool triv = (ue == r.zero || ue == r.one) && (uf == r.zero || uf == r.one);
            return IdempotentPair{ue, uf, triv};
        }
    }
    // the (u e^k, u f^k) form can miss lifts when a non-saturated prime
    // collapses the quotient; finite tables allow an exhaustive fallback
    for (int a = 0; a < static_cast<int>(r.size); ++a)
        for (int b = 0; b < static_cast<int>(r.size); ++b) {
            if (r.mul(a, b) != r.zero || r.add(a, b) != r.one) continue;
            if (!q.same(a, e) || !q.same(b, f)) continue;
            bool triv = (a == r.zero || a == r.one) && (b == r.zero || b == r.one);
            return IdempotentPair{a, b, triv};
        }
    return std::nullopt;
}

/// Localization at a multiplicative subset, by table quotienting on fractions
/// with cross-multiplication equivalence: (a,s) ~ (b,t) iff q·a·t = q·b·s for
/// some q in S.
inline FiniteSemiring localize(const FiniteSemiring& r, const std::set<int>& mult) {
    std::set<int> s(mult);
    s.insert(r.one);
    // close under multiplication
    for (bool grew = true; grew;) {
        grew = false;
        for (int a : std::set<int>(s))
            for (int b : std::set<int>(s))
                if (!s.count(r.mul(a, b))) {
                    s.insert(r.mul(a, b));
                    grew = true;
                }
    }
    std::vector<int> svec(s.begin(), s.end());
    auto equiv = [&](std::pair<int, int> x, std::pair<int, int> y) {
        for (int q : svec)
            if (r.mul(q, r.mul(x.first, y.second)) == r.mul(q, r.mul(y.first, x.second))) return true;
        return false;
    };
    std::vector<std::pair<int, int>> fracs;  // (numerator, denominator)
    std::vector<int> cls;
    std::map<std::pair<int, int>, int> idx;
    std::vector<std::pair<int, int>> reps;
    for (int a = 0; a < static_cast<int>(r.size); ++a)
        for (int d : svec) {
            std::pair<int, int> fr{a, d};
            int c = -1;
            for (std::size_t j = 0; j < reps.size(); ++j)
                if (equiv(fr, reps[j])) {
                    c = static_cast<int>(j);
                    break;
                }
            if (c < 0) {
                c = static_cast<int>(reps.size());
                reps.push_back(fr);
            }
            idx[fr] = c;
        }
    FiniteSemiring loc;
    loc.size = reps.size();
    loc.add_t.assign(loc.size, std::vector<int>(loc.size));
    loc.mul_t.assign(loc.size, std::vector<int>(loc.size));
    auto cls_of = [&](std::pair<int, int> fr) {
        auto it = idx.find(fr);
        if (it != idx.end()) return it->second;
        for (std::size_t j = 0; j < reps.size(); ++j)
            if (equiv(fr, reps[j])) return static_cast<int>(j);
        throw std::logic_error("localize: class not found");
    };
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            auto [a, sden] = reps[i];
            auto [b, tden] = reps[j];
            loc.add_t[i][j] = cls_of({r.add(r.mul(a, tden), r.mul(b, sden)), r.mul(sden, tden)});
            loc.mul_t[i][j] = cls_of({r.mul(a, b), r.mul(sden, tden)});
        }
    loc.zero = cls_of({r.zero, r.one});
    loc.one = cls_of({r.one, r.one});
    for (auto& [a, d] : reps)
        loc.names.push_back((r.names.empty() ? std::to_string(a) : r.name(a)) + "/" +
                            (r.names.empty() ? std::to_string(d) : r.name(d)));
    return loc;
}

// ---------------------------------------------------------------------------
// stock tables

inline FiniteSemiring boolean_semiring() {
    FiniteSemiring b;
    b.size = 2;
    b.add_t = {{0, 1}, {1, 1}};
    b.mul_t = {{0, 0}, {0, 1}};
    b.zero = 0;
    b.one = 1;
    b.names = {"0", "1"};
    return b;
}

/// Z/2 presented as a table (the standard non-zero-sum-free example).
inline FiniteSemiring z2_ring() {
    FiniteSemiring r;
    r.size = 2;
    r.add_t = {{0, 1}, {1, 0}};
    r.mul_t = {{0, 0}, {0, 1}};
    r.names = {"0", "1"};
    return r;
}

/// B[x]/<x^2=x>: elements a+bx with a,b in B. Order: 0, 1, x, 1+x.
inline FiniteSemiring boolean_x2_eq_x() {
    auto enc = [](int a, int b) { return a == 0 ? (b == 0 ? 0 : 2) : (b == 0 ? 1 : 3); };
    auto ca = [](int e) { return e == 1 || e == 3 ? 1 : 0; };
    auto cb = [](int e) { return e >= 2 ? 1 : 0; };
    FiniteSemiring r;
    r.size = 4;
    r.add_t.assign(4, std::vector<int>(4));
    r.mul_t.assign(4, std::vector<int>(4));
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            r.add_t[u][v] = enc(ca(u) | ca(v), cb(u) | cb(v));
            // (a+bx)(c+dx) = ac + (ad+bc+bd)x  using x^2 = x
            int a = ca(u), b = cb(u), c = ca(v), d = cb(v);
            r.mul_t[u][v] = enc(a & c, (a & d) | (b & c) | (b & d));
        }
    r.names = {"0", "1", "x", "1+x"};
    return r;
}

/// B[e]/<e^2=0, 1+e=1>: elements {0, 1, e}.
inline FiniteSemiring boolean_dual_number() {
    FiniteSemiring r;
    r.size = 3;
    // order: 0, 1, e
    r.add_t = {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}};
    r.mul_t = {{0, 0, 0}, {0, 1, 2}, {0, 2, 0}};
    r.names = {"0", "1", "e"};
    return r;
}

/// N saturating at cap: {0,...,cap} with truncated addition/multiplication.
inline FiniteSemiring nat_capped(int cap) {
    FiniteSemiring r;
    r.size = static_cast<std::size_t>(cap) + 1;
    r.add_t.assign(r.size, std::vector<int>(r.size));
    r.mul_t.assign(r.size, std::vector<int>(r.size));
    for (int a = 0; a <= cap; ++a)
        for (int b = 0; b <= cap; ++b) {
            r.add_t[a][b] = std::min(a + b, cap);
            r.mul_t[a][b] = std::min(a * b, cap);
        }
    for (int a = 0; a <= cap; ++a) r.names.push_back(std::to_string(a));
    return r;
}

/// Total-order chain 0 < 1 < ... < k-1 with add = max, mul = min.
inline FiniteSemiring chain_semiring(int k) {
    FiniteSemiring r;
    r.size = static_cast<std::size_t>(k);
    r.add_t.assign(r.size, std::vector<int>(r.size));
    r.mul_t.assign(r.size, std::vector<int>(r.size));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            r.add_t[a][b] = std::max(a, b);
            r.mul_t[a][b] = std::min(a, b);
        }
    r.zero = 0;
    r.one = k - 1;
    for (int a = 0; a < k; ++a) r.names.push_back(std::to_string(a));
    return r;
}

inline FiniteSemiring product_semiring(const FiniteSemiring& a, const FiniteSemiring& b) {
    FiniteSemiring r;
    r.size = a.size * b.size;
    auto enc = [&](int x, int y) { return x * static_cast<int>(b.size) + y; };
    r.add_t.assign(r.size, std::vector<int>(r.size));
    r.mul_t.assign(r.size, std::vector<int>(r.size));
    for (std::size_t i = 0; i < r.size; ++i)
        for (std::size_t j = 0; j < r.size; ++j) {
            int x1 = static_cast<int>(i) / static_cast<int>(b.size), y1 = static_cast<int>(i) % static_cast<int>(b.size);
            int x2 = static_cast<int>(j) / static_cast<int>(b.size), y2 = static_cast<int>(j) % static_cast<int>(b.size);
            r.add_t[i][j] = enc(a.add(x1, x2), b.add(y1, y2));
            r.mul_t[i][j] = enc(a.mul(x1, x2), b.mul(y1, y2));
        }
    r.zero = enc(a.zero, b.zero);
    r.one = enc(a.one, b.one);
    for (std::size_t x = 0; x < a.size; ++x)
        for (std::size_t y = 0; y < b.size; ++y)
            r.names.push_back("(" + (a.names.empty() ? std::to_string(x) : a.names[x]) + "," +
                              (b.names.empty() ? std::to_string(y) : b.names[y]) + ")");
    return r;
}

/// All semiring tables on {0,...,n-1} with zero = 0 and one = 1 (one = 0 for
/// n = 1); every semiring of size <= 4 appears up to relabeling.
inline std::vector<FiniteSemiring> all_semirings_upto(int max_n) {
    std::vector<FiniteSemiring> out;
    for (int n = 1; n <= max_n; ++n) {
        // enumerate commutative additive monoids with identity 0
        std::vector<std::vector<std::vector<int>>> adds;
        std::vector<int> free_pairs;  // flattened (i,j), 1 <= i <= j
        for (int i = 1; i < n; ++i)
            for (int j = i; j < n; ++j) free_pairs.push_back(i * n + j);
        std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) t[0][i] = t[i][0] = i;
        auto assoc3 = [&](const std::vector<std::vector<int>>& tab) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (tab[tab[a][b]][c] != tab[a][tab[b][c]]) return false;
            return true;
        };
        std::size_t total = 1;
        for (std::size_t k = 0; k < free_pairs.size(); ++k) total *= static_cast<std::size_t>(n);
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (int p : free_pairs) {
                int v = static_cast<int>(c % n);
                c /= n;
                t[p / n][p % n] = t[p % n][p / n] = v;
            }
            if (assoc3(t)) adds.push_back(t);
        }
        // for each additive monoid, enumerate multiplications
        for (const auto& addt : adds) {
            std::vector<int> mfree;
            for (int i = 2; i < n; ++i)
                for (int j = i; j < n; ++j) mfree.push_back(i * n + j);
            std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
            for (int i = 0; i < n; ++i) {
                m[0][i] = m[i][0] = 0;
                if (n > 1) m[1][i] = m[i][1] = i;
            }
            std::size_t mtotal = 1;
            for (std::size_t k = 0; k < mfree.size(); ++k) mtotal *= static_cast<std::size_t>(n);
            for (std::size_t code = 0; code < mtotal; ++code) {
                std::size_t c = code;
                for (int p : mfree) {
                    int v = static_cast<int>(c % n);
                    c /= n;
                    m[p / n][p % n] = m[p % n][p / n] = v;
                }
                bool ok = true;
                for (int a = 0; a < n && ok; ++a)
                    for (int b = 0; b < n && ok; ++b) {
                        for (int d = 0; d < n && ok; ++d) {
                            if (m[m[a][b]][d] != m[a][m[b][d]]) ok = false;
                            if (m[a][addt[b][d]] != addt[m[a][b]][m[a][d]]) ok = false;
                        }
                    }
                if (!ok) continue;
                FiniteSemiring r;
                r.size = static_cast<std::size_t>(n);
                r.add_t = addt;
                r.mul_t = m;
                r.zero = 0;
                r.one = n > 1 ? 1 : 0;
                for (int i = 0; i < n; ++i) r.names.push_back(std::to_string(i));
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

}  // namespace tropbund
