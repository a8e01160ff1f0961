#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tropbund/congruence.hpp"
#include "tropbund/monoid.hpp"
#include "tropbund/puiseux.hpp"

namespace tropbund {

/// a K-linear combination of monoid monomials declared to be zero
struct AlgebraRelation {
    std::vector<std::pair<PuiseuxScalar, Mono>> terms;
};

/// K-algebra presented as K[M]/(relations) for a finitely generated
/// commutative monoid M; the monoid is required to inject into the algebra,
/// which is spot-checked rather than proved.
struct LabelledAlgebra {
    MonoidPresentation monoid;
    std::vector<AlgebraRelation> relations;

    std::size_t nvars() const { return monoid.ngens(); }
};

inline LabelledAlgebra free_algebra(std::vector<std::string> vars) {
    LabelledAlgebra a;
    a.monoid.gen_names = std::move(vars);
    return a;
}

/// An algebra relation with exactly two terms k1 m1 + k2 m2 = 0 and k1 = -k2
/// identifies m1 with m2; the injectivity requirement then demands m1 ~ m2
/// already in M. Relations with three or more terms cannot identify
/// monomials over a field, so the two-term scan is the whole check.
inline bool spot_check_monoid_injectivity(const LabelledAlgebra& a, int bound = 6) {
    CongruencePresentation mpres;
    mpres.nvars = static_cast<int>(a.nvars());
    for (const auto& [u, v] : a.monoid.relations)
        mpres.pairs.emplace_back(TropPoly::monomial(a.nvars(), u), TropPoly::monomial(a.nvars(), v));
    QuotientContext ctx(mpres);
    for (const auto& r : a.relations) {
        if (r.terms.size() != 2) continue;
        const auto& [k1, m1] = r.terms[0];
        const auto& [k2, m2] = r.terms[1];
        if (m1 == m2 || !(k1 + k2).is_zero()) continue;
        if (ctx.eq(TropPoly::monomial(a.nvars(), m1), TropPoly::monomial(a.nvars(), m2), bound) !=
            EqDecision::equal)
            return false;
    }
    return true;
}

/// tropicalized relation: coefficient-wise valuation
inline TropPoly tropicalize_relation(const AlgebraRelation& r, std::size_t nvars) {
    TropPoly f(nvars);
    for (const auto& [k, m] : r.terms) f = add(f, TropPoly::monomial(nvars, m, valuation(k)));
    return f;
}

struct TropPresentation {
    int nvars = 0;
    CongruencePresentation congruence;  // bend pairs plus monoid identifications
    std::vector<TropPoly> bend_generators;
};

/// Trop(A) = T_Q[M] / (bend congruence of the tropicalized relations),
/// with the monoid relations carried along as monomial identifications.
inline TropPresentation trop_algebra(const LabelledAlgebra& a) {
    TropPresentation t;
    t.nvars = static_cast<int>(a.nvars());
    for (const auto& r : a.relations) t.bend_generators.push_back(tropicalize_relation(r, a.nvars()));
    t.congruence = bend_congruence(t.bend_generators);
    t.congruence.nvars = t.nvars;
    for (const auto& [u, v] : a.monoid.relations)
        t.congruence.pairs.emplace_back(TropPoly::monomial(a.nvars(), u), TropPoly::monomial(a.nvars(), v));
    return t;
}

/// assignment of target values to the monoid generators, extended
/// multiplicatively to all monomials and by nu on scalars
struct MonomialValuationWitness {
    std::vector<TropQ> gen_values;

    TropQ monomial_value(const Mono& m) const {
        TropQ v = TropQ::one();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) v = trop_mul(v, gen_values[i]);
        return v;
    }
    TropQ term_value(const PuiseuxScalar& k, const Mono& m) const {
        return trop_mul(valuation(k), monomial_value(m));
    }
};

enum class WVerdict { valid, violated, valid_at_bound };

struct WValuationReport {
    WVerdict verdict = WVerdict::valid;
    std::string witness;
};

namespace detail {
/// dominance condition on one relation: each term's value is bounded by the
/// max of the others (the tropical max is attained at least twice)
inline std::optional<std::string> dominance_violation(const MonomialValuationWitness& w,
                                                      const AlgebraRelation& r) {
    std::vector<TropQ> vals;
    for (const auto& [k, m] : r.terms) vals.push_back(w.term_value(k, m));
    for (std::size_t i = 0; i < vals.size(); ++i) {
        TropQ rest = TropQ::neg_inf();
        for (std::size_t j = 0; j < vals.size(); ++j)
            if (j != i) rest = trop_add(rest, vals[j]);
        if (!(trop_add(vals[i], rest) == rest)) {
            std::ostringstream os;
            os << "term " << i << " has value " << vals[i].str() << " exceeding the rest (" << rest.str() << ")";
            return os.str();
        }
    }
    return std::nullopt;
}
}  // namespace detail

/// Checks the dominance condition on the declared relations, on their
/// monomial multiples, and on pairwise scaled sums up to the closure bound;
/// well-definedness on M is checked against the monoid relations.
inline WValuationReport check_monomial_valuation(const LabelledAlgebra& a,
                                                 const MonomialValuationWitness& w,
                                                 int closure_bound = 6) {
    WValuationReport rep;
    if (w.gen_values.size() != a.nvars()) {
        rep.verdict = WVerdict::violated;
        rep.witness = "generator count mismatch";
        return rep;
    }
    for (const auto& [u, v] : a.monoid.relations) {
        if (!(w.monomial_value(u) == w.monomial_value(v))) {
            rep.verdict = WVerdict::violated;
            rep.witness = "not constant on a monoid relation class";
            return rep;
        }
    }
    auto check = [&](const AlgebraRelation& r, const std::string& where) {
        auto bad = detail::dominance_violation(w, r);
        if (bad) {
            rep.verdict = WVerdict::violated;
            rep.witness = where + ": " + *bad;
        }
        return !bad;
    };
    for (std::size_t i = 0; i < a.relations.size(); ++i)
        if (!check(a.relations[i], "relation " + std::to_string(i))) return rep;
    // derived relations: scaled sums r_i + t^e * r_j within the bound
    // (dominance is invariant under monomial multiples, so those are free)
    for (std::size_t i = 0; i < a.relations.size(); ++i)
        for (std::size_t j = 0; j < a.relations.size(); ++j)
            for (int e = -closure_bound; e <= closure_bound; ++e) {
                AlgebraRelation sum = a.relations[i];
                for (const auto& [k, m] : a.relations[j].terms)
                    sum.terms.emplace_back(k * ps_monomial(Q(1), Q(e)), m);
                if (!check(sum, "derived from relations " + std::to_string(i) + "," + std::to_string(j)))
                    return rep;
            }
    if (is_cancellative(a.monoid) == Cancellativity::unknown_at_bound) rep.verdict = WVerdict::valid_at_bound;
    return rep;
}

/// the universal valuation sends k * m to nu(k) (.) [m] in Trop(A)
inline TropPoly universal_valuation(const LabelledAlgebra& a, const PuiseuxScalar& k, const Mono& m) {
    if (m.size() != a.nvars()) throw std::invalid_argument("universal_valuation: monomial arity mismatch");
    return TropPoly::monomial(a.nvars(), m, valuation(k));
}

/// Evaluate a tropical polynomial at the witness values; this is the
/// homomorphism induced by w, so f(w_univ(k m)) = w(k m) is the
/// factorization property.
inline TropQ evaluate_at_witness(const TropPoly& f, const MonomialValuationWitness& w) {
    TropQ v = TropQ::neg_inf();
    for (const auto& [m, c] : f.terms()) v = trop_add(v, trop_mul(c, w.monomial_value(m)));
    return v;
}

inline bool factorization_check(const LabelledAlgebra& a, const MonomialValuationWitness& w,
                                const std::vector<std::pair<PuiseuxScalar, Mono>>& samples) {
    for (const auto& [k, m] : samples) {
        TropQ lhs = evaluate_at_witness(universal_valuation(a, k, m), w);
        if (!(lhs == w.term_value(k, m))) return false;
    }
    return true;
}

}  // namespace tropbund
