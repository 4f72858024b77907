#pragma once

#include <vector>

#include "gatree/errors.hpp"
#include "gatree/laurent.hpp"
#include "gatree/rational.hpp"

namespace gatree {

// Minimal exact-field interface shared by the two coefficient types: exact
// rationals (a fixed fiber) and Laurent series (a moving family).
template <class F>
struct FieldOps;

template <>
struct FieldOps<Rat> {
    static Rat one() { return 1; }
    static bool is_zero(const Rat& a) { return a == 0; }
    // Rationals invert exactly; the order argument is ignored.
    static Rat invert(const Rat& a, Exp) {
        if (a == 0) throw DivisionByZero("rational division by zero");
        return Rat(1) / a;
    }
};

template <>
struct FieldOps<LaurentSeries> {
    static LaurentSeries one() { return LaurentSeries::one(); }
    static bool is_zero(const LaurentSeries& a) { return a.is_exactly_zero(); }
    static LaurentSeries invert(const LaurentSeries& a, Exp order) { return a.invert(order); }
};

// An element (t, x) of the one-parameter family of groups on the affine line
// with law x ⋆ y = x + y + t·x·y: additive at t = 0, multiplicative (via
// u = 1 + t·x) at t ≠ 0. The locus 1 + t·x = 0 is removed.
template <class F>
struct GroupElement {
    F t;
    F x;

    GroupElement(F t_, F x_) : t(std::move(t_)), x(std::move(x_)) {
        if (FieldOps<F>::is_zero(FieldOps<F>::one() + t * x))
            throw std::domain_error("group element violates 1 + t*x != 0");
    }
};

template <class F>
GroupElement<F> identity(const F& t) {
    return GroupElement<F>(t, F(FieldOps<F>::one() - FieldOps<F>::one()));
}

template <class F>
GroupElement<F> star(const GroupElement<F>& g, const GroupElement<F>& h) {
    if (!(g.t == h.t)) throw MismatchedParameter("star over different parameter values");
    return GroupElement<F>(g.t, g.x + h.x + g.t * g.x * h.x);
}

// y = -x / (1 + t*x). Exact over the rationals; over Laurent series the
// division is carried to `order` correct terms (exact when 1 + t*x is an
// exact monomial).
template <class F>
GroupElement<F> inverse(const GroupElement<F>& g, Exp order = 16) {
    F u = FieldOps<F>::one() + g.t * g.x;
    return GroupElement<F>(g.t, -g.x * FieldOps<F>::invert(u, order));
}

// u = 1 + t*x; a homomorphism to the multiplicative group when t != 0.
template <class F>
F to_multiplicative(const GroupElement<F>& g) {
    return FieldOps<F>::one() + g.t * g.x;
}

// The action on a coordinate: x ↦ x + a·(1 + t·x) with a = g.x.
template <class F>
F act_on_mark(const GroupElement<F>& g, const F& x_mark) {
    return x_mark + g.x * (FieldOps<F>::one() + g.t * x_mark);
}

// Whether the ⋆-product of the sequence is the identity.
template <class F>
bool is_in_product_subgroup(const std::vector<GroupElement<F>>& gs) {
    if (gs.empty()) return true;
    GroupElement<F> acc = gs.front();
    for (std::size_t i = 1; i < gs.size(); ++i) acc = star(acc, gs[i]);
    return FieldOps<F>::is_zero(acc.x);
}

}  // namespace gatree
