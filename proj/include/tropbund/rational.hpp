#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace tropbund {

using Q = mpq_class;
using Z = mpz_class;

/// Element of the rational tropical semifield: Q together with -infinity.
/// Addition is max, multiplication is +, zero is -infinity, one is 0.
class TropQ {
  public:
    TropQ() : finite_(false) {}  // -infinity
    TropQ(Q v) : finite_(true), v_(std::move(v)) {}
    TropQ(long v) : finite_(true), v_(v) {}

    static TropQ neg_inf() { return TropQ(); }
    static TropQ zero() { return TropQ(); }
    static TropQ one() { return TropQ(Q(0)); }

    bool is_neg_inf() const { return !finite_; }
    bool is_zero() const { return !finite_; }

    const Q& value() const {
        if (!finite_) throw std::logic_error("TropQ: value of -infinity");
        return v_;
    }

    friend TropQ add(const TropQ& a, const TropQ& b) {
        if (a.is_neg_inf()) return b;
        if (b.is_neg_inf()) return a;
        return TropQ(a.v_ >= b.v_ ? a.v_ : b.v_);
    }
    friend TropQ mul(const TropQ& a, const TropQ& b) {
        if (a.is_neg_inf() || b.is_neg_inf()) return TropQ();
        return TropQ(a.v_ + b.v_);
    }
    /// Multiplicative inverse; every finite value is a unit.
    TropQ inv() const {
        if (!finite_) throw std::domain_error("TropQ: inverse of -infinity");
        return TropQ(-v_);
    }

    friend bool operator==(const TropQ& a, const TropQ& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend bool operator!=(const TropQ& a, const TropQ& b) { return !(a == b); }
    /// Total order with -infinity smallest; this is also the semiring's
    /// canonical partial order (a <= b iff a+b = b).
    friend bool operator<(const TropQ& a, const TropQ& b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const TropQ& a, const TropQ& b) { return a < b || a == b; }

    std::string str() const {
        return finite_ ? v_.get_str() : std::string("-inf");
    }

  private:
    bool finite_;
    Q v_;
};

inline TropQ trop_add(const TropQ& a, const TropQ& b) { return add(a, b); }
inline TropQ trop_mul(const TropQ& a, const TropQ& b) { return mul(a, b); }

inline std::string q_str(const Q& q) { return q.get_str(); }

}  // namespace tropbund
