#pragma once

#include <optional>
#include <vector>

#include "tropbund/finite_semiring.hpp"
#include "tropbund/rational.hpp"

namespace tropbund {

/// Rational max-plus semifield as a scalar domain for matrices/cocycles.
struct TropSR {
    using Elem = TropQ;
    static constexpr bool finite = false;
    Elem zero() const { return TropQ::neg_inf(); }
    Elem one() const { return TropQ::one(); }
    Elem add(const Elem& a, const Elem& b) const { return trop_add(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return trop_mul(a, b); }
    bool is_zero(const Elem& a) const { return a.is_neg_inf(); }
    // every nonzero element is a unit
    std::optional<Elem> unit_inv(const Elem& a) const {
        if (a.is_neg_inf()) return std::nullopt;
        return a.inv();
    }
    // zero-sum free with only trivial idempotent pairs (idempotent totally
    // ordered semifield), so the structural inversion path applies
    bool structural_gl() const { return true; }
};

/// Finite-table semiring as a scalar domain; elements are table indices.
struct TableSR {
    using Elem = int;
    static constexpr bool finite = true;
    const FiniteSemiring* r = nullptr;
    Elem zero() const { return r->zero; }
    Elem one() const { return r->one; }
    Elem add(Elem a, Elem b) const { return r->add(a, b); }
    Elem mul(Elem a, Elem b) const { return r->mul(a, b); }
    bool is_zero(Elem a) const { return a == r->zero; }
    std::optional<Elem> unit_inv(Elem a) const { return r->unit_inverse(a); }
    std::vector<Elem> elements() const {
        std::vector<Elem> v(r->size);
        for (std::size_t i = 0; i < r->size; ++i) v[i] = static_cast<int>(i);
        return v;
    }
    bool structural_gl() const { return r->is_zero_sum_free() && only_trivial_idempotent_pairs(*r); }
};

}  // namespace tropbund
