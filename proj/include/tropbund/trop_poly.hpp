#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropbund/rational.hpp"

namespace tropbund {

/// Exponent vector of a monomial; nonnegative entries.
using Mono = std::vector<int>;

inline int mono_deg(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}
inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}
/// componentwise max (least common multiple of monomials)
inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = std::max(r[i], b[i]);
    return r;
}
inline bool mono_divides(const Mono& a, const Mono& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline Mono mono_quot(const Mono& b, const Mono& a) {
    Mono r(b);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= a[i];
    return r;
}
/// graded lexicographic order
inline bool mono_deglex_less(const Mono& a, const Mono& b) {
    int da = mono_deg(a), db = mono_deg(b);
    if (da != db) return da < db;
    return a < b;
}

/// Polynomial over the rational max-plus semifield: finitely many terms
/// exponent-vector -> coefficient. Terms with coefficient -inf are dropped.
/// Boolean-coefficient polynomials are the special case where every
/// coefficient equals the multiplicative unit 0.
class TropPoly {
  public:
    TropPoly() = default;
    explicit TropPoly(std::size_t nvars) : nvars_(nvars) {}

    static TropPoly monomial(std::size_t nvars, Mono m, TropQ c = TropQ::one()) {
        TropPoly p(nvars);
        if (m.size() != nvars) throw std::invalid_argument("monomial: arity mismatch");
        if (!c.is_neg_inf()) p.terms_[std::move(m)] = c;
        return p;
    }
    static TropPoly constant(std::size_t nvars, TropQ c) {
        return monomial(nvars, Mono(nvars, 0), c);
    }
    static TropPoly variable(std::size_t nvars, std::size_t i) {
        Mono m(nvars, 0);
        m[i] = 1;
        return monomial(nvars, m);
    }

    std::size_t nvars() const { return nvars_; }
    const std::map<Mono, TropQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    friend TropPoly add(const TropPoly& a, const TropPoly& b) {
        a.check_arity(b);
        TropPoly r(a);
        for (const auto& [m, c] : b.terms_) {
            auto it = r.terms_.find(m);
            if (it == r.terms_.end())
                r.terms_[m] = c;
            else
                it->second = add(it->second, c);
        }
        return r;
    }
    friend TropPoly mul(const TropPoly& a, const TropPoly& b) {
        a.check_arity(b);
        TropPoly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono m = mono_mul(ma, mb);
                TropQ c = mul(ca, cb);
                auto it = r.terms_.find(m);
                if (it == r.terms_.end())
                    r.terms_[m] = c;
                else
                    it->second = add(it->second, c);
            }
        return r;
    }

    bool operator==(const TropPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const TropPoly& o) const { return !(*this == o); }
    bool operator<(const TropPoly& o) const {
        if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
        auto key = [](const std::map<Mono, TropQ>& t) {
            std::vector<std::pair<Mono, Q>> v;
            for (auto& [m, c] : t) v.emplace_back(m, c.is_neg_inf() ? Q(0) : c.value());
            return v;
        };
        return key(terms_) < key(o.terms_);
    }

    /// drop the term at monomial m (for bend relations)
    TropPoly without(const Mono& m) const {
        TropPoly r(*this);
        r.terms_.erase(m);
        return r;
    }

    std::string str(const std::vector<std::string>& vars) const {
        if (terms_.empty()) return "-inf";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            bool unit = c == TropQ::one();
            if (!unit || mono_deg(m) == 0) os << c.str();
            bool any = !unit || mono_deg(m) == 0;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i] > 0) {
                    if (any) os << "*";
                    any = true;
                    os << vars[i];
                    if (m[i] > 1) os << "^" << m[i];
                }
        }
        return os.str();
    }

  private:
    void check_arity(const TropPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("TropPoly: arity mismatch");
    }
    std::size_t nvars_ = 0;
    std::map<Mono, TropQ> terms_;
};

}  // namespace tropbund
