#pragma once

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tropbund/rational.hpp"

namespace tropbund {

/// dense polynomial over Q, coefficient of s^i at index i
using QPoly = std::vector<Q>;

namespace qp {
inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline bool is_zero(const QPoly& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}
inline QPoly add(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), Q(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}
inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Q(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}
inline QPoly scale(const QPoly& a, const Q& c) {
    QPoly r = a;
    for (auto& x : r) x *= c;
    trim(r);
    return r;
}
inline long ord(const QPoly& p) {  // -1 for zero
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) return static_cast<long>(i);
    return -1;
}
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (is_zero(b)) throw std::invalid_argument("qp::divmod: zero divisor");
    QPoly r = a, q;
    trim(r);
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, Q(0));
    const Q lead = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        Q c = r.back() / lead;
        std::size_t sh = r.size() - b.size();
        q[sh] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[sh + i] -= c * b[i];
        trim(r);
    }
    trim(q);
    return {q, r};
}
/// rescale so the coefficients form a primitive integer vector; this keeps
/// the Euclidean remainder sequence from blowing up in bit size
inline void make_primitive(QPoly& p) {
    if (p.empty()) return;
    mpz_class g = 0, l = 1;
    for (const auto& c : p) {
        g = ::gcd(g, mpz_class(c.get_num()));
        l = ::lcm(l, mpz_class(c.get_den()));
    }
    if (g == 0) return;
    Q f(l, g);
    f.canonicalize();
    for (auto& c : p) c *= f;
}
/// remainder with per-step primitive rescaling; the scale factor is
/// irrelevant to gcd computation and this keeps coefficient bits linear
inline QPoly rem_primitive(QPoly r, const QPoly& b) {
    const Q lead = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        Q c = r.back() / lead;
        std::size_t sh = r.size() - b.size();
        for (std::size_t i = 0; i + 1 < b.size(); ++i) r[sh + i] -= c * b[i];
        r.pop_back();
        trim(r);
        make_primitive(r);
    }
    return r;
}
/// monic gcd over Q[s] via a primitive remainder sequence
inline QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    make_primitive(a);
    make_primitive(b);
    while (!is_zero(b)) {
        QPoly r = rem_primitive(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Q lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}
/// stretch exponents by factor k: s^i -> s^(k i)
inline QPoly stretch(const QPoly& p, long k) {
    if (k == 1) return p;
    QPoly r(p.empty() ? 0 : (p.size() - 1) * static_cast<std::size_t>(k) + 1, Q(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i * static_cast<std::size_t>(k)] = p[i];
    trim(r);
    return r;
}
}  // namespace qp

/// Element of K = union over N of Q(t^{1/N}), stored as num/den in s = t^{1/N}.
struct PuiseuxScalar {
    long N = 1;
    QPoly num{};        // empty = 0
    QPoly den{Q(1)};

    void normalize() {
        qp::trim(num);
        qp::trim(den);
        if (qp::is_zero(den)) throw std::invalid_argument("PuiseuxScalar: zero denominator");
        if (num.empty()) {
            N = 1;
            den = {Q(1)};
            return;
        }
        // cancel common polynomial factors so fractions stay reduced
        if (den.size() > 1) {
            QPoly g = qp::gcd(num, den);
            if (g.size() > 1) {
                num = qp::divmod(num, g).first;
                den = qp::divmod(den, g).first;
            }
        }
        // compress the ramification index when all exponents share a factor
        long g = N;
        for (std::size_t i = 0; i < num.size() && g > 1; ++i)
            if (num[i] != 0) g = std::gcd(g, static_cast<long>(i) == 0 ? g : static_cast<long>(i));
        for (std::size_t i = 0; i < den.size() && g > 1; ++i)
            if (den[i] != 0) g = std::gcd(g, static_cast<long>(i) == 0 ? g : static_cast<long>(i));
        if (g > 1 && N % g == 0) {
            QPoly nn((num.size() - 1) / static_cast<std::size_t>(g) + 1, Q(0));
            for (std::size_t i = 0; i < num.size(); ++i)
                if (num[i] != 0) nn[i / static_cast<std::size_t>(g)] = num[i];
            QPoly nd((den.size() - 1) / static_cast<std::size_t>(g) + 1, Q(0));
            for (std::size_t i = 0; i < den.size(); ++i)
                if (den[i] != 0) nd[i / static_cast<std::size_t>(g)] = den[i];
            num = std::move(nn);
            den = std::move(nd);
            N /= g;
        }
        // normalize leading denominator coefficient to 1
        long d0 = qp::ord(den);
        Q lead = den[static_cast<std::size_t>(d0)];
        if (lead != 1) {
            for (auto& c : den) c /= lead;
            for (auto& c : num) c /= lead;
        }
    }

    bool is_zero() const { return qp::is_zero(num); }
};

inline PuiseuxScalar ps_zero() { return PuiseuxScalar{}; }

inline PuiseuxScalar ps_rational(const Q& c) {
    PuiseuxScalar r;
    if (c != 0) r.num = {c};
    return r;
}
/// c * t^(a/b)
inline PuiseuxScalar ps_monomial(const Q& c, const Q& texp_in) {
    PuiseuxScalar r;
    if (c == 0) return r;
    Q texp = texp_in;
    texp.canonicalize();
    long b = static_cast<long>(texp.get_den().get_si());
    long a = static_cast<long>(texp.get_num().get_si());
    r.N = b;
    if (a >= 0) {
        r.num.assign(static_cast<std::size_t>(a) + 1, Q(0));
        r.num[static_cast<std::size_t>(a)] = c;
    } else {
        r.num = {c};
        r.den.assign(static_cast<std::size_t>(-a) + 1, Q(0));
        r.den[static_cast<std::size_t>(-a)] = Q(1);
    }
    r.normalize();
    return r;
}

namespace detail {
inline std::pair<PuiseuxScalar, PuiseuxScalar> ps_common(const PuiseuxScalar& a, const PuiseuxScalar& b) {
    long n = std::lcm(a.N, b.N);
    PuiseuxScalar x = a, y = b;
    x.num = qp::stretch(a.num, n / a.N);
    x.den = qp::stretch(a.den, n / a.N);
    x.N = n;
    y.num = qp::stretch(b.num, n / b.N);
    y.den = qp::stretch(b.den, n / b.N);
    y.N = n;
    return {x, y};
}
}  // namespace detail

inline PuiseuxScalar operator+(const PuiseuxScalar& a, const PuiseuxScalar& b) {
    auto [x, y] = detail::ps_common(a, b);
    PuiseuxScalar r;
    r.N = x.N;
    r.num = qp::add(qp::mul(x.num, y.den), qp::mul(y.num, x.den));
    r.den = qp::mul(x.den, y.den);
    r.normalize();
    return r;
}
inline PuiseuxScalar operator-(const PuiseuxScalar& a) {
    PuiseuxScalar r = a;
    for (auto& c : r.num) c = -c;
    return r;
}
inline PuiseuxScalar operator-(const PuiseuxScalar& a, const PuiseuxScalar& b) { return a + (-b); }
inline PuiseuxScalar operator*(const PuiseuxScalar& a, const PuiseuxScalar& b) {
    auto [x, y] = detail::ps_common(a, b);
    PuiseuxScalar r;
    r.N = x.N;
    r.num = qp::mul(x.num, y.num);
    r.den = qp::mul(x.den, y.den);
    r.normalize();
    return r;
}
inline PuiseuxScalar ps_inverse(const PuiseuxScalar& a) {
    if (a.is_zero()) throw std::invalid_argument("ps_inverse: division by zero");
    PuiseuxScalar r;
    r.N = a.N;
    r.num = a.den;
    r.den = a.num;
    r.normalize();
    return r;
}
inline PuiseuxScalar operator/(const PuiseuxScalar& a, const PuiseuxScalar& b) { return a * ps_inverse(b); }
inline bool operator==(const PuiseuxScalar& a, const PuiseuxScalar& b) {
    auto [x, y] = detail::ps_common(a, b);
    return qp::mul(x.num, y.den) == qp::mul(y.num, x.den);
}
inline bool operator!=(const PuiseuxScalar& a, const PuiseuxScalar& b) { return !(a == b); }

/// order of vanishing at t = 0, as a rational; requires a nonzero input
inline Q ps_order(const PuiseuxScalar& a) {
    if (a.is_zero()) throw std::invalid_argument("ps_order: zero has no finite order");
    Q o(qp::ord(a.num) - qp::ord(a.den), a.N);
    o.canonicalize();
    return o;
}

/// lowest-exponent monomial c t^e of a nonzero scalar; a / ps_leading_monomial(a)
/// is a valuation-0 unit with constant term 1
inline PuiseuxScalar ps_leading_monomial(const PuiseuxScalar& a) {
    if (a.is_zero()) throw std::invalid_argument("ps_leading_monomial: zero input");
    Q c = a.num[static_cast<std::size_t>(qp::ord(a.num))] / a.den[static_cast<std::size_t>(qp::ord(a.den))];
    return ps_monomial(c, ps_order(a));
}

/// the valuation nu = -ord : K -> Q u {-inf}; max-plus compatible, O_K = {nu <= 0}
inline TropQ valuation(const PuiseuxScalar& a) {
    if (a.is_zero()) return TropQ::neg_inf();
    return TropQ(-ps_order(a));
}

/// value of the fractional ideal generated by gens: max of valuations
inline TropQ fractional_ideal_value(const std::vector<PuiseuxScalar>& gens) {
    TropQ v = TropQ::neg_inf();
    for (const auto& g : gens) v = trop_add(v, valuation(g));
    return v;
}

/// Laurent-Puiseux series coefficients of a: pairs (exponent of t, coeff),
/// for exponents <= upto, in increasing order.
inline std::vector<std::pair<Q, Q>> ps_series(const PuiseuxScalar& a, const Q& upto) {
    std::vector<std::pair<Q, Q>> out;
    if (a.is_zero()) return out;
    long m = qp::ord(a.den);
    // den = s^m * u with u(0) = 1 (normalized); invert u as a power series
    long lead_exp = qp::ord(a.num) - m;
    // number of series terms needed: exponents lead_exp/N .. upto
    Q span = upto * a.N - Q(lead_exp);
    if (span < 0) return out;
    long terms = static_cast<long>(span.get_num().get_si() / span.get_den().get_si()) + 1;
    QPoly u(a.den.begin() + m, a.den.end());
    QPoly uinv(static_cast<std::size_t>(terms), Q(0));
    uinv[0] = Q(1) / u[0];
    for (long k = 1; k < terms; ++k) {
        Q s(0);
        for (long i = 1; i <= k && i < static_cast<long>(u.size()); ++i)
            s += u[static_cast<std::size_t>(i)] * uinv[static_cast<std::size_t>(k - i)];
        uinv[static_cast<std::size_t>(k)] = -s / u[0];
    }
    QPoly series = qp::mul(a.num, uinv);
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (series[i] == 0) continue;
        Q e = Q(static_cast<long>(i) - m, a.N);
        e.canonicalize();
        if (e > upto) break;
        out.emplace_back(e, series[i]);
    }
    return out;
}

inline std::string ps_str(const PuiseuxScalar& a) {
    if (a.is_zero()) return "0";
    std::string s;
    auto term = [&](const Q& e, const Q& c) {
        if (!s.empty()) s += c >= 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Q ac = c >= 0 ? c : Q(-c);
        bool unit_exp = e == 0;
        if (ac != 1 || unit_exp) s += ac.get_str();
        if (!unit_exp) {
            if (ac != 1) s += "*";
            s += "t";
            if (e != 1) s += "^(" + e.get_str() + ")";
        }
    };
    if (qp::ord(a.den) == static_cast<long>(a.den.size()) - 1) {
        // denominator is a monomial: exact finite expansion
        long m = qp::ord(a.den);
        for (std::size_t i = 0; i < a.num.size(); ++i)
            if (a.num[i] != 0) {
                Q e(static_cast<long>(i) - m, a.N);
                e.canonicalize();
                term(e, a.num[i]);
            }
        return s;
    }
    return "(" + std::to_string(a.num.size()) + "-term)/(" + std::to_string(a.den.size()) + "-term) in t^(1/" +
           std::to_string(a.N) + ")";
}

/// Parse sums of terms: "3", "-1/2", "t", "2*t^3", "t^(-1/2)", "5/3*t^(7/2)".
inline PuiseuxScalar parse_puiseux(const std::string& input) {
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("parse_puiseux: empty input");
    PuiseuxScalar acc = ps_zero();
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) throw std::invalid_argument("parse_puiseux: dangling sign");
        auto read_rational = [&]() -> Q {
            std::size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
            if (j == i) throw std::invalid_argument("parse_puiseux: expected number at " + std::to_string(i));
            Q q(s.substr(i, j - i));
            q.canonicalize();
            i = j;
            return q;
        };
        Q coef(1);
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = read_rational();
            if (i < s.size() && s[i] == '*') ++i;
        }
        Q texp(0);
        if (i < s.size() && s[i] == 't') {
            ++i;
            texp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool paren = i < s.size() && s[i] == '(';
                if (paren) ++i;
                int esign = 1;
                if (i < s.size() && s[i] == '-') {
                    esign = -1;
                    ++i;
                }
                texp = read_rational() * esign;
                if (paren) {
                    if (i >= s.size() || s[i] != ')') throw std::invalid_argument("parse_puiseux: missing ')'");
                    ++i;
                }
            }
        }
        acc = acc + ps_monomial(coef * sign, texp);
        any = true;
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw std::invalid_argument("parse_puiseux: unexpected character at " + std::to_string(i));
    }
    if (!any) throw std::invalid_argument("parse_puiseux: no terms");
    return acc;
}

}  // namespace tropbund
