#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gatree/errors.hpp"
#include "gatree/rational.hpp"

namespace gatree {

// Exponents are machine integers; overflow in exponent arithmetic is a hard
// error (std::overflow_error), never silent wraparound.
using Exp = long long;

// Sentinel valuation of the exact zero series.
inline constexpr Exp VAL_INF = INT64_MAX;

Exp checked_add_exp(Exp a, Exp b);

// A Laurent series in t over the rationals with explicit precision tracking.
//
// Representation: a finite map exponent -> nonzero rational coefficient plus
// an optional truncation bound. If the bound is absent the element is exact
// (a genuine Laurent polynomial). If the bound is k, coefficients at
// exponents < k are exactly known and stored; nothing is known from t^k on.
class LaurentSeries {
  public:
    LaurentSeries() = default;  // exact zero

    static LaurentSeries zero() { return LaurentSeries(); }
    static LaurentSeries one() { return monomial(1, 0); }
    static LaurentSeries t() { return monomial(1, 1); }
    static LaurentSeries constant(const Rat& c) { return monomial(c, 0); }
    static LaurentSeries monomial(const Rat& c, Exp k);
    static LaurentSeries make(std::map<Exp, Rat> coeffs,
                              std::optional<Exp> trunc = std::nullopt);

    bool is_exact() const { return !trunc_.has_value(); }
    std::optional<Exp> truncation() const { return trunc_; }
    // True only for the exact zero element.
    bool is_exactly_zero() const { return coeffs_.empty() && is_exact(); }
    // No stored terms (exact zero, or a truncated element whose known part
    // vanishes and which may hide nonzero terms beyond the window).
    bool known_part_zero() const { return coeffs_.empty(); }

    // Least exponent with nonzero coefficient. VAL_INF for the exact zero
    // element. Throws IndeterminateValuation if the known part is zero but
    // the element is truncated.
    Exp valuation() const;
    // Coefficient at the valuation. Same errors as valuation(); the exact
    // zero element has no leading coefficient (throws DivisionByZero).
    Rat leading_coefficient() const;
    // Exact coefficient at exponent k. Throws BeyondPrecision when k lies at
    // or beyond the truncation bound.
    Rat coefficient_at(Exp k) const;

    // Forget everything from exponent k on; truncation becomes min(old, k).
    LaurentSeries truncated(Exp k) const;
    // Multiply by t^k (exactness preserved).
    LaurentSeries shifted(Exp k) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    // Multiplicative inverse, correct to `order_terms` coefficients starting
    // at the leading one. Exact when the element is an exact monomial.
    // Throws DivisionByZero on the exact zero element, IndeterminateValuation
    // when the known part is zero but truncated.
    LaurentSeries invert(Exp order_terms) const;

    // Representation equality: identical known coefficients and identical
    // truncation state.
    bool operator==(const LaurentSeries& o) const {
        return coeffs_ == o.coeffs_ && trunc_ == o.trunc_;
    }
    bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

    // Text form like "t^-1 + 2 + 3/2*t^2" (ascending exponents). The known
    // part only; "0" when it vanishes.
    std::string to_string() const;
    // Inverse of to_string; whitespace-insensitive. Throws
    // std::invalid_argument on malformed input. The result is exact.
    static LaurentSeries parse(const std::string& s);

    const std::map<Exp, Rat>& terms() const { return coeffs_; }

  private:
    std::map<Exp, Rat> coeffs_;
    std::optional<Exp> trunc_;
    void normalize();
    // Greatest lower bound on the valuation usable for truncation
    // bookkeeping: least stored exponent, else the truncation bound.
    Exp val_lower_bound() const;
};

}  // namespace gatree
