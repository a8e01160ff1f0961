#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropbund/puiseux.hpp"

namespace tropbund {

/// Supported K-algebras with unique monomial normal forms:
///   poly_line    K[x]                monomials x^k, k >= 0
///   laurent_line K[x^{+-}]           monomials x^k, k in Z
///   cusp         K[x,y]/(x^2 - y^3)  monomials x^a y^b, a in {0,1}, b >= 0
enum class AlgebraKind { poly_line, laurent_line, cusp };

using AlgKey = std::vector<long>;  // exponent vector of a normal-form monomial

struct NormalFormAlgebra {
    AlgebraKind kind = AlgebraKind::poly_line;

    std::size_t arity() const { return kind == AlgebraKind::cusp ? 2 : 1; }

    bool key_ok(const AlgKey& k) const {
        if (k.size() != arity()) return false;
        switch (kind) {
            case AlgebraKind::poly_line: return k[0] >= 0;
            case AlgebraKind::laurent_line: return true;
            case AlgebraKind::cusp: return k[0] >= 0 && k[0] <= 1 && k[1] >= 0;
        }
        return false;
    }

    /// product of two normal-form monomials, rewritten to normal form
    AlgKey mul_keys(const AlgKey& a, const AlgKey& b) const {
        AlgKey r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        if (kind == AlgebraKind::cusp)
            while (r[0] >= 2) {
                r[0] -= 2;
                r[1] += 3;
            }
        return r;
    }

    /// normal-form monomials invertible in the algebra
    bool key_invertible(const AlgKey& k) const {
        switch (kind) {
            case AlgebraKind::poly_line: return k[0] == 0;
            case AlgebraKind::laurent_line: return true;
            case AlgebraKind::cusp: return k[0] == 0 && k[1] == 0;
        }
        return false;
    }

    std::string name() const {
        switch (kind) {
            case AlgebraKind::poly_line: return "K[x]";
            case AlgebraKind::laurent_line: return "K[x^+-]";
            case AlgebraKind::cusp: return "K[x,y]/(x^2-y^3)";
        }
        return "?";
    }
};

/// element in monomial normal form: finitely many key -> coefficient terms
struct AlgElem {
    std::map<AlgKey, PuiseuxScalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const AlgKey& k, const PuiseuxScalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

inline AlgElem ae_zero() { return {}; }
inline AlgElem ae_term(const AlgKey& k, const PuiseuxScalar& c) {
    AlgElem e;
    e.add_term(k, c);
    return e;
}
inline AlgElem ae_one(const NormalFormAlgebra& a) {
    return ae_term(AlgKey(a.arity(), 0), ps_rational(Q(1)));
}

inline AlgElem ae_add(const AlgElem& x, const AlgElem& y) {
    AlgElem r = x;
    for (const auto& [k, c] : y.terms) r.add_term(k, c);
    return r;
}
inline AlgElem ae_neg(const AlgElem& x) {
    AlgElem r;
    for (const auto& [k, c] : x.terms) r.terms.emplace(k, -c);
    return r;
}
inline AlgElem ae_sub(const AlgElem& x, const AlgElem& y) { return ae_add(x, ae_neg(y)); }
inline AlgElem ae_scale(const AlgElem& x, const PuiseuxScalar& c) {
    AlgElem r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : x.terms) r.add_term(k, v * c);
    return r;
}
inline AlgElem ae_mul(const NormalFormAlgebra& a, const AlgElem& x, const AlgElem& y) {
    AlgElem r;
    for (const auto& [kx, cx] : x.terms)
        for (const auto& [ky, cy] : y.terms) r.add_term(a.mul_keys(kx, ky), cx * cy);
    return r;
}
inline bool ae_eq(const AlgElem& x, const AlgElem& y) {
    if (x.terms.size() != y.terms.size()) return false;
    auto it = y.terms.begin();
    for (const auto& [k, c] : x.terms) {
        if (it->first != k || it->second != c) return false;
        ++it;
    }
    return true;
}

/// a * x^m (valid in every instance when m >= 0; in the Laurent instance for all m)
inline AlgElem ae_shift(const NormalFormAlgebra& a, const AlgElem& x, long m) {
    AlgKey k(a.arity(), 0);
    k[0] = m;
    return ae_mul(a, x, ae_term(k, ps_rational(Q(1))));
}

/// element is a unit of the algebra: a single term on an invertible monomial
inline bool ae_is_unit(const NormalFormAlgebra& a, const AlgElem& x) {
    return x.terms.size() == 1 && a.key_invertible(x.terms.begin()->first);
}
inline AlgElem ae_unit_inverse(const NormalFormAlgebra& a, const AlgElem& x) {
    if (!ae_is_unit(a, x)) throw std::invalid_argument("ae_unit_inverse: not a unit");
    const auto& [k, c] = *x.terms.begin();
    AlgKey ki(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) ki[i] = -k[i];
    return ae_term(ki, ps_inverse(c));
}

/// evaluation at the rational point x = 1 (all variables = 1)
inline PuiseuxScalar ae_eval_one(const AlgElem& x) {
    PuiseuxScalar s = ps_zero();
    for (const auto& [k, c] : x.terms) s = s + c;
    return s;
}

inline std::string ae_str(const NormalFormAlgebra& a, const AlgElem& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [k, c] : x.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + ps_str(c) + ")";
        const char* vars[2] = {"x", "y"};
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            s += "*";
            s += vars[i];
            if (k[i] != 1) s += "^" + std::to_string(k[i]);
        }
    }
    return s;
}

// ---- dense univariate polynomials over K, for radical/divisibility tests ----

using KPoly = std::vector<PuiseuxScalar>;  // coefficient of x^i at index i

namespace kp {
inline void trim(KPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline KPoly from_elem(const AlgElem& e) {
    KPoly p;
    for (const auto& [k, c] : e.terms) {
        if (k.size() != 1 || k[0] < 0) throw std::invalid_argument("kp::from_elem: not in K[x]");
        if (p.size() <= static_cast<std::size_t>(k[0])) p.resize(static_cast<std::size_t>(k[0]) + 1);
        p[static_cast<std::size_t>(k[0])] = c;
    }
    return p;
}
inline bool is_zero(const KPoly& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}
inline KPoly mul(const KPoly& a, const KPoly& b) {
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    trim(r);
    return r;
}
/// euclidean division over the field K
inline std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
    if (b.empty()) throw std::invalid_argument("kp::divmod: division by zero");
    KPoly r = a, q;
    trim(r);
    while (r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        PuiseuxScalar c = r.back() / b.back();
        if (q.size() <= shift) q.resize(shift + 1);
        q[shift] = q[shift] + c;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] = r[i + shift] - c * b[i];
        trim(r);
    }
    trim(q);
    return {q, r};
}
inline bool divides(const KPoly& b, const KPoly& a) { return divmod(a, b).second.empty(); }
inline KPoly gcd(KPoly a, KPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        PuiseuxScalar lead = a.back();
        for (auto& c : a) c = c / lead;  // monic normalization
    }
    return a;
}
inline KPoly derivative(const KPoly& p) {
    KPoly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * ps_rational(Q(static_cast<long>(i))));
    trim(r);
    return r;
}
/// squarefree part: p / gcd(p, p')
inline KPoly radical(const KPoly& p) {
    if (p.empty()) return {};
    auto g = gcd(p, derivative(p));
    if (g.empty() || g.size() == 1) {
        KPoly r = p;
        PuiseuxScalar lead = r.back();
        for (auto& c : r) c = c / lead;
        return r;
    }
    auto r = divmod(p, g).first;
    if (!r.empty()) {
        PuiseuxScalar lead = r.back();
        for (auto& c : r) c = c / lead;
    }
    return r;
}
}  // namespace kp

}  // namespace tropbund
