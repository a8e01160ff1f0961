#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tropbund/trop_poly.hpp"

namespace tropbund {

/// Generating pairs of a semiring congruence on a polynomial semiring.
struct CongruencePresentation {
    std::size_t nvars = 0;
    std::vector<std::pair<TropPoly, TropPoly>> pairs;
};

/// Bend relations: for each generator f with monomials m_1..m_k the pairs
/// (f, f with m_i removed). A single-monomial f pairs with 0.
inline CongruencePresentation bend_congruence(const std::vector<TropPoly>& gens) {
    CongruencePresentation c;
    if (!gens.empty()) c.nvars = gens[0].nvars();
    for (const auto& f : gens) {
        for (const auto& [m, coef] : f.terms()) c.pairs.emplace_back(f, f.without(m));
    }
    return c;
}

enum class EqDecision { equal, distinct, unknown_at_bound };

/// Confluent rewriting on the commutative monoid of monomials, for
/// congruences generated by monomial identifications m ~ m'. Rules are
/// oriented by (degree, lex); completion adds critical pairs from
/// componentwise-max overlaps.
class MonomialRewrite {
  public:
    /// Returns nullopt if completion does not stabilize within max_rules.
    static std::optional<MonomialRewrite> build(std::size_t nvars,
                                                const std::vector<std::pair<Mono, Mono>>& idents,
                                                std::size_t max_rules = 64) {
        MonomialRewrite rw;
        rw.nvars_ = nvars;
        for (auto [a, b] : idents) rw.add_rule(a, b);
        for (bool grew = true; grew;) {
            grew = false;
            auto rules = rw.rules_;
            for (std::size_t i = 0; i < rules.size(); ++i)
                for (std::size_t j = i; j < rules.size(); ++j) {
                    Mono o = mono_lcm(rules[i].first, rules[j].first);
                    Mono a = rw.normal_form(mono_mul(mono_quot(o, rules[i].first), rules[i].second));
                    Mono b = rw.normal_form(mono_mul(mono_quot(o, rules[j].first), rules[j].second));
                    if (a != b) {
                        rw.add_rule(a, b);
                        grew = true;
                    }
                }
            if (rw.rules_.size() > max_rules) return std::nullopt;
        }
        return rw;
    }

    Mono normal_form(Mono m) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& [l, r] : rules_)
                if (mono_divides(l, m)) {
                    m = mono_mul(mono_quot(m, l), r);
                    changed = true;
                }
        }
        return m;
    }

    TropPoly normal_form(const TropPoly& p) const {
        TropPoly out(p.nvars());
        for (const auto& [m, c] : p.terms())
            out = add(out, TropPoly::monomial(p.nvars(), normal_form(m), c));
        return out;
    }

    const std::vector<std::pair<Mono, Mono>>& rules() const { return rules_; }

  private:
    void add_rule(Mono a, Mono b) {
        a = normal_form(a);
        b = normal_form(b);
        if (a == b) return;
        if (mono_deglex_less(a, b)) std::swap(a, b);
        rules_.emplace_back(std::move(a), std::move(b));
    }
    std::size_t nvars_ = 0;
    std::vector<std::pair<Mono, Mono>> rules_;  // l -> r, l > r in deglex
};

namespace detail {
struct UnionFind {
    std::vector<int> p;
    int add() {
        p.push_back(static_cast<int>(p.size()));
        return p.back();
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace detail

/// Equality in the quotient of a polynomial semiring by a congruence.
/// If every generating pair identifies two monomials with a common unit
/// coefficient, decisions are exact via confluent rewriting; otherwise a
/// bounded congruence closure is run and `unknown_at_bound` is a possible
/// verdict.
class QuotientContext {
  public:
    explicit QuotientContext(CongruencePresentation pres) : pres_(std::move(pres)) {
        std::vector<std::pair<Mono, Mono>> idents;
        bool monomial_ident = true;
        for (const auto& [a, b] : pres_.pairs) {
            if (a.is_monomial() && b.is_monomial() &&
                a.terms().begin()->second == b.terms().begin()->second) {
                idents.emplace_back(a.terms().begin()->first, b.terms().begin()->first);
            } else {
                monomial_ident = false;
            }
        }
        if (monomial_ident) exact_ = MonomialRewrite::build(pres_.nvars, idents);
    }

    bool is_exact() const { return exact_.has_value(); }

    EqDecision eq(const TropPoly& a, const TropPoly& b, int degree_bound = 6) const {
        if (a.nvars() != pres_.nvars || b.nvars() != pres_.nvars)
            throw std::invalid_argument("eq_mod_congruence: variable mismatch");
        if (exact_)
            return exact_->normal_form(a) == exact_->normal_form(b) ? EqDecision::equal
                                                                    : EqDecision::distinct;
        if (pres_.pairs.empty()) return a == b ? EqDecision::equal : EqDecision::distinct;
        return bounded_closure(a, b, degree_bound);
    }

  private:
    /// Bounded closure: starting from the generating pairs, repeatedly derive
    /// (u*m, v*m) for monomials m up to the degree bound and (u+w, v+w) for
    /// already-seen polynomials w, collapsing classes by union-find; stop at a
    /// fixpoint or a size cap.
    EqDecision bounded_closure(const TropPoly& a, const TropPoly& b, int bound) const {
        std::size_t nv = pres_.nvars;
        detail::UnionFind uf;
        std::map<TropPoly, int> id;
        std::vector<TropPoly> polys;
        auto node = [&](const TropPoly& p) {
            auto it = id.find(p);
            if (it != id.end()) return it->second;
            int n = uf.add();
            id.emplace(p, n);
            polys.push_back(p);
            return n;
        };
        std::vector<std::pair<int, int>> pairs;
        auto add_pair = [&](const TropPoly& u, const TropPoly& v) {
            int x = node(u), y = node(v);
            if (uf.find(x) != uf.find(y)) {
                uf.unite(x, y);
                pairs.emplace_back(x, y);
                return true;
            }
            return false;
        };
        node(a);
        node(b);
        for (const auto& [u, v] : pres_.pairs) add_pair(u, v);
        std::vector<Mono> monos = monomials_up_to(nv, bound);
        const std::size_t cap = 20000;
        for (bool grew = true; grew && polys.size() < cap;) {
            grew = false;
            auto snapshot = pairs;
            for (auto [x, y] : snapshot) {
                const TropPoly u = polys[x], v = polys[y];
                for (const auto& m : monos) {
                    if (mono_deg(m) == 0) continue;
                    TropPoly mm = TropPoly::monomial(nv, m);
                    if (add_pair(mul(u, mm), mul(v, mm))) grew = true;
                    if (polys.size() >= cap) break;
                }
                std::size_t nw = polys.size();
                for (std::size_t w = 0; w < nw && polys.size() < cap; ++w) {
                    if (add_pair(add(u, polys[w]), add(v, polys[w]))) grew = true;
                }
                if (uf.find(id[a]) == uf.find(id[b])) return EqDecision::equal;
            }
        }
        return uf.find(id[a]) == uf.find(id[b]) ? EqDecision::equal : EqDecision::unknown_at_bound;
    }

    static std::vector<Mono> monomials_up_to(std::size_t nv, int bound) {
        std::vector<Mono> out;
        Mono cur(nv, 0);
        // iterate exponent vectors with total degree <= bound
        auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
            if (i == nv) {
                out.push_back(cur);
                return;
            }
            for (int e = 0; e <= rem; ++e) {
                cur[i] = e;
                self(self, i + 1, rem - e);
            }
            cur[i] = 0;
        };
        rec(rec, 0, bound);
        return out;
    }

    CongruencePresentation pres_;
    std::optional<MonomialRewrite> exact_;
};

}  // namespace tropbund
