#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tropbund/cocycle.hpp"
#include "tropbund/kalgebra.hpp"

namespace tropbund {

/// Finitely generated O_K-submodule of a supported K-algebra, kept in a
/// triangular canonical form: generators with strictly increasing leading
/// monomials, each leading coefficient of maximal valuation for its monomial,
/// scaled to leading rational coefficient 1.
struct OKSubmodule {
    NormalFormAlgebra alg;
    std::vector<AlgElem> gens;  // canonical after canonicalize()
};

namespace detail {
inline std::optional<AlgKey> leading_key(const AlgElem& e) {
    if (e.is_zero()) return std::nullopt;
    return e.terms.begin()->first;  // smallest key in the map order
}
/// nu(c) <= 0, i.e. c lies in O_K
inline bool in_ok(const PuiseuxScalar& c) {
    if (c.is_zero()) return true;
    return ps_order(c) >= 0;
}
/// Non-negative-exponent part of a scalar. Exact when the denominator is a
/// t-monomial (finite expansion); otherwise a truncated series, which is
/// still a valid O_K element and only affects normalization quality.
inline PuiseuxScalar ok_part(const PuiseuxScalar& q) {
    PuiseuxScalar r = ps_zero();
    if (q.is_zero()) return r;
    const auto dord = static_cast<std::size_t>(qp::ord(q.den));
    if (q.den.size() == dord + 1) {
        const Q d = q.den.back();
        for (std::size_t i = dord; i < q.num.size(); ++i) {
            if (q.num[i] == 0) continue;
            Q e(static_cast<long>(i - dord), q.N);
            e.canonicalize();
            r = r + ps_monomial(q.num[i] / d, e);
        }
        return r;
    }
    for (const auto& [e, c] : ps_series(q, Q(8)))
        if (e >= 0) r = r + ps_monomial(c, e);
    return r;
}
/// One reduction step at the shared leading key: returns w*g - (lc_g/mon_p)*p
/// where p's leading coefficient factors as mon_p * w with w a valuation-0
/// unit. Multiplying g by the unit w preserves the O_K-module generated and
/// keeps every coefficient free of non-monomial denominators, so degrees
/// stay bounded. Requires ord(lc_g) >= ord(lc_p), i.e. lc_g/lc_p in O_K.
inline AlgElem reduce_leading(const AlgElem& g, const AlgElem& p) {
    const PuiseuxScalar& lcg = g.terms.begin()->second;
    const PuiseuxScalar& lcp = p.terms.begin()->second;
    PuiseuxScalar mon = ps_leading_monomial(lcp);
    PuiseuxScalar w = lcp / mon;
    return ae_sub(ae_scale(g, w), ae_scale(p, lcg / mon));
}
}  // namespace detail

inline OKSubmodule submodule(const NormalFormAlgebra& a, std::vector<AlgElem> gens) {
    OKSubmodule m;
    m.alg = a;
    for (auto& g : gens)
        if (!g.is_zero()) m.gens.push_back(std::move(g));
    return m;
}

/// Valuation-pivot triangularization. At each leading monomial the pivot is
/// a generator whose leading coefficient has maximal valuation; the others
/// are O_K-divisible by it and get reduced. Each pivot is rescaled by a
/// rational so its leading coefficient has leading rational coefficient 1.
inline void submodule_canonicalize(OKSubmodule& m) {
    std::vector<AlgElem> work = m.gens;
    std::vector<AlgElem> pivots;
    while (true) {
        // drop zeros, find the smallest leading key present
        std::vector<AlgElem> live;
        for (auto& g : work)
            if (!g.is_zero()) live.push_back(std::move(g));
        if (live.empty()) break;
        std::size_t best = 0;
        for (std::size_t i = 1; i < live.size(); ++i) {
            auto ki = *detail::leading_key(live[i]);
            auto kb = *detail::leading_key(live[best]);
            if (ki < kb) {
                best = i;
            } else if (ki == kb) {
                // maximal valuation = minimal order
                if (ps_order(live[i].terms.begin()->second) < ps_order(live[best].terms.begin()->second)) best = i;
            }
        }
        AlgElem pivot = live[best];
        AlgKey pk = *detail::leading_key(pivot);
        const Q pord = ps_order(pivot.terms.begin()->second);
        std::vector<AlgElem> rest;
        for (std::size_t i = 0; i < live.size(); ++i) {
            if (i == best) continue;
            AlgElem g = live[i];
            auto lk = detail::leading_key(g);
            if (lk && *lk == pk) {
                if (ps_order(g.terms.begin()->second) < pord)
                    throw std::logic_error("pivot not of maximal valuation");
                g = detail::reduce_leading(g, pivot);
            }
            if (!g.is_zero()) rest.push_back(std::move(g));
        }
        // rational rescale, an O_K^x generator change
        Q lead = ps_leading_monomial(pivot.terms.begin()->second).num.back();
        if (lead != 1) pivot = ae_scale(pivot, ps_rational(Q(1) / lead));
        pivots.push_back(std::move(pivot));
        work = std::move(rest);
    }
    m.gens = std::move(pivots);
}

/// Exact O_K-membership: greedy reduction against the canonical pivots.
/// Each step multiplies the remainder by a valuation-0 unit, which does not
/// affect membership, and strictly increases its leading key.
inline bool submodule_member(const OKSubmodule& m, const AlgElem& e0) {
    AlgElem e = e0;
    bool progress = true;
    while (!e.is_zero() && progress) {
        progress = false;
        AlgKey lk = *detail::leading_key(e);
        for (const auto& p : m.gens) {
            auto pk = detail::leading_key(p);
            if (!pk || !(*pk == lk)) continue;
            if (ps_order(e.terms.begin()->second) < ps_order(p.terms.begin()->second)) return false;
            e = detail::reduce_leading(e, p);
            progress = true;
            break;
        }
    }
    return e.is_zero();
}

inline bool submodule_equal(const OKSubmodule& a, const OKSubmodule& b) {
    if (a.alg.kind != b.alg.kind) return false;
    for (const auto& g : a.gens)
        if (!submodule_member(b, g)) return false;
    for (const auto& g : b.gens)
        if (!submodule_member(a, g)) return false;
    return true;
}

inline OKSubmodule submodule_sum(const OKSubmodule& a, const OKSubmodule& b) {
    if (a.alg.kind != b.alg.kind) throw std::invalid_argument("submodule_sum: algebra mismatch");
    std::vector<AlgElem> g = a.gens;
    g.insert(g.end(), b.gens.begin(), b.gens.end());
    OKSubmodule r = submodule(a.alg, std::move(g));
    submodule_canonicalize(r);
    return r;
}

inline OKSubmodule submodule_product(const OKSubmodule& a, const OKSubmodule& b) {
    if (a.alg.kind != b.alg.kind) throw std::invalid_argument("submodule_product: algebra mismatch");
    std::vector<AlgElem> g;
    for (const auto& x : a.gens)
        for (const auto& y : b.gens) g.push_back(ae_mul(a.alg, x, y));
    OKSubmodule r = submodule(a.alg, std::move(g));
    submodule_canonicalize(r);
    return r;
}

inline OKSubmodule principal(const NormalFormAlgebra& a, const AlgElem& f) {
    OKSubmodule r = submodule(a, {f});
    submodule_canonicalize(r);
    return r;
}

inline std::string submodule_str(const OKSubmodule& m) {
    std::string s = "<";
    for (std::size_t i = 0; i < m.gens.size(); ++i) {
        if (i) s += ", ";
        s += ae_str(m.alg, m.gens[i]);
    }
    return s + "> in " + m.alg.name();
}

// ---- localization S_fg(K[x])_<x> ~ S_fg(K[x^{+-}]) ----

/// pushforward along K[x] -> K[x^{+-}]
inline OKSubmodule laurent_pushforward(const OKSubmodule& n) {
    if (n.alg.kind != AlgebraKind::poly_line) throw std::invalid_argument("laurent_pushforward: K[x] only");
    NormalFormAlgebra lau{AlgebraKind::laurent_line};
    OKSubmodule r = submodule(lau, n.gens);
    submodule_canonicalize(r);
    return r;
}

/// psi(N / <x>^n) = <1/x>^n . pushforward(N)
inline OKSubmodule localization_psi(const OKSubmodule& n, long pow) {
    OKSubmodule p = laurent_pushforward(n);
    std::vector<AlgElem> g;
    for (const auto& e : p.gens) g.push_back(ae_shift(p.alg, e, -pow));
    OKSubmodule r = submodule(p.alg, std::move(g));
    submodule_canonicalize(r);
    return r;
}

/// injectivity witness per the localization lemma: pushforwards agree
/// iff x^n N = x^n N' for some n (searched up to the bound)
inline std::optional<long> localization_injectivity_witness(const OKSubmodule& n1, const OKSubmodule& n2,
                                                            long bound = 24) {
    for (long k = 0; k <= bound; ++k) {
        std::vector<AlgElem> g1, g2;
        for (const auto& e : n1.gens) g1.push_back(ae_shift(n1.alg, e, k));
        for (const auto& e : n2.gens) g2.push_back(ae_shift(n2.alg, e, k));
        OKSubmodule a = submodule(n1.alg, std::move(g1)), b = submodule(n2.alg, std::move(g2));
        submodule_canonicalize(a);
        submodule_canonicalize(b);
        if (submodule_equal(a, b)) return k;
    }
    return std::nullopt;
}

/// surjectivity on a principal Laurent module: a preimage (N, n) with
/// psi(N/<x>^n) = <g>
inline std::pair<OKSubmodule, long> localization_preimage(const AlgElem& g) {
    long minexp = 0;
    for (const auto& [k, c] : g.terms) minexp = std::min(minexp, k[0]);
    NormalFormAlgebra poly{AlgebraKind::poly_line};
    NormalFormAlgebra lau{AlgebraKind::laurent_line};
    AlgElem lifted = ae_shift(lau, g, -minexp);
    AlgElem in_poly;
    in_poly.terms.insert(lifted.terms.begin(), lifted.terms.end());
    return {principal(poly, in_poly), -minexp};
}

// ---- basic opens: D(f) subset D(g), two independent routes ----

struct BasicOpenReport {
    bool algebra_side = false;    // radical(g) divides f
    bool submodule_side = false;  // g divides f^n for some n <= deg g
    bool consistent() const { return algebra_side == submodule_side; }
};

inline BasicOpenReport basic_open_correspondence(const AlgElem& f, const AlgElem& g) {
    KPoly pf = kp::from_elem(f), pg = kp::from_elem(g);
    BasicOpenReport rep;
    if (kp::is_zero(pg)) {
        rep.algebra_side = kp::is_zero(pf);
        rep.submodule_side = kp::is_zero(pf);
        return rep;
    }
    if (kp::is_zero(pf)) {
        // D(0) is empty, contained in everything
        rep.algebra_side = rep.submodule_side = true;
        return rep;
    }
    rep.algebra_side = kp::divides(kp::radical(pg), pf);
    KPoly fn{ps_rational(Q(1))};
    for (std::size_t n = 1; n <= pg.size(); ++n) {
        fn = kp::mul(fn, pf);
        if (kp::divides(pg, fn)) {
            rep.submodule_side = true;
            break;
        }
    }
    return rep;
}

// ---- invertible submodules and the Picard transport ----

/// Implements the invertible-submodule theorem's proof: with n . n_inv = <1>
/// checked, pick a nonzero f in n, express each generator as c_i f via
/// evaluation at x = 1, and return c_1 f for the maximal-valuation c_1.
/// The result is verified to be a unit generating n.
inline AlgElem principal_unit_generator(const OKSubmodule& n_in, const OKSubmodule& n_inv) {
    OKSubmodule n = n_in;
    submodule_canonicalize(n);
    auto prod = submodule_product(n, n_inv);
    NormalFormAlgebra a = n.alg;
    if (!submodule_equal(prod, principal(a, ae_one(a))))
        throw std::invalid_argument("principal_unit_generator: n * n_inv != <1>");
    if (n.gens.empty()) throw std::invalid_argument("principal_unit_generator: zero module");
    const AlgElem& f = n.gens.front();
    PuiseuxScalar f1 = ae_eval_one(f);
    if (f1.is_zero()) throw std::invalid_argument("principal_unit_generator: evaluation point degenerate");
    AlgElem bestu;
    TropQ bestv = TropQ::neg_inf();
    for (const auto& g : n.gens) {
        PuiseuxScalar c = ae_eval_one(g) / f1;
        if (!ae_eq(g, ae_scale(f, c))) throw std::invalid_argument("principal_unit_generator: not principal");
        TropQ v = valuation(c);
        if (bestu.is_zero() || !(trop_add(v, bestv) == bestv)) {
            bestu = ae_scale(f, c);
            bestv = v;
        }
    }
    if (!ae_is_unit(a, bestu)) throw std::invalid_argument("principal_unit_generator: generator is not a unit");
    if (!submodule_equal(n, principal(a, bestu)))
        throw std::logic_error("principal_unit_generator: generator does not generate");
    return bestu;
}

/// forward transport eta: unit a |-> <a>; its kernel is O_K^x
inline OKSubmodule transport_forward(const NormalFormAlgebra& a, const AlgElem& u) {
    if (!ae_is_unit(a, u)) throw std::invalid_argument("transport_forward: not a unit");
    return principal(a, u);
}

/// backward transport: principal unit generator, normalized so the pivot
/// coefficient has valuation 0 and leading rational coefficient 1
inline AlgElem transport_backward(const OKSubmodule& n, const OKSubmodule& n_inv) {
    AlgElem u = principal_unit_generator(n, n_inv);
    PuiseuxScalar c = u.terms.begin()->second;
    // strip the O_K^x ambiguity: keep only the t-power of the coefficient
    PuiseuxScalar norm = ps_monomial(Q(1), ps_order(c));
    return ae_term(u.terms.begin()->first, norm);
}

/// u and v differ by the transport kernel O_K^x
inline bool same_unit_class(const NormalFormAlgebra& a, const AlgElem& u, const AlgElem& v) {
    AlgElem q = ae_mul(a, u, ae_unit_inverse(a, v));
    if (!ae_is_unit(a, q)) return false;
    const auto& [k, c] = *q.terms.begin();
    for (long e : k)
        if (e != 0) return false;
    return !c.is_zero() && ps_order(c) == 0;
}

// ---- lifting tropical line data to classical unit cocycles ----

/// restriction of a tropical line-cocycle value to a monomial submodule of
/// K[x^{+-}]: the unit (q, m) in T^x x Z becomes <t^{-q} x^m>
/// (valuation of t^{-q} is q, matching the tropical value)
inline OKSubmodule restrict_line_value(const Unit& u) {
    NormalFormAlgebra lau{AlgebraKind::laurent_line};
    if (u.lat.size() != 1) throw std::invalid_argument("restrict_line_value: rank-1 lattice expected");
    AlgKey k{static_cast<long>(u.lat[0].get_si())};
    return principal(lau, ae_term(k, ps_monomial(Q(1), -u.qpart)));
}

/// saturated lifting map tau_s on one transition value: principal unit
/// generator of the (invertible) monomial submodule
inline AlgElem lift_line_value(const OKSubmodule& n) {
    if (n.gens.size() != 1 || n.gens.front().terms.size() != 1)
        throw std::invalid_argument("lift_line_value: not an invertible monomial submodule");
    const auto& [k, c] = *n.gens.front().terms.begin();
    AlgKey ki(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) ki[i] = -k[i];
    OKSubmodule inv = principal(n.alg, ae_term(ki, ps_inverse(c)));
    return transport_backward(n, inv);
}

/// the unsaturated route tau: restriction first, then tau_s
inline AlgElem lift_line_value_unsaturated(const Unit& u) { return lift_line_value(restrict_line_value(u)); }

}  // namespace tropbund
