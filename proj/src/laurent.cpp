#include "gatree/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace gatree {

Exp checked_add_exp(Exp a, Exp b) {
    Exp r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

void LaurentSeries::normalize() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0 || (trunc_ && it->first >= *trunc_))
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

LaurentSeries LaurentSeries::monomial(const Rat& c, Exp k) {
    LaurentSeries s;
    if (c != 0) s.coeffs_[k] = c;
    return s;
}

LaurentSeries LaurentSeries::make(std::map<Exp, Rat> coeffs, std::optional<Exp> trunc) {
    LaurentSeries s;
    s.coeffs_ = std::move(coeffs);
    s.trunc_ = trunc;
    s.normalize();
    return s;
}

Exp LaurentSeries::valuation() const {
    if (!coeffs_.empty()) return coeffs_.begin()->first;
    if (is_exact()) return VAL_INF;
    throw IndeterminateValuation("valuation indeterminate: known part zero, truncated at t^" +
                                 std::to_string(*trunc_));
}

Rat LaurentSeries::leading_coefficient() const {
    if (!coeffs_.empty()) return coeffs_.begin()->second;
    if (is_exact()) throw DivisionByZero("zero series has no leading coefficient");
    throw IndeterminateValuation("leading coefficient indeterminate");
}

Rat LaurentSeries::coefficient_at(Exp k) const {
    if (trunc_ && k >= *trunc_)
        throw BeyondPrecision("coefficient at t^" + std::to_string(k) +
                              " beyond truncation t^" + std::to_string(*trunc_));
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

LaurentSeries LaurentSeries::truncated(Exp k) const {
    LaurentSeries s = *this;
    s.trunc_ = trunc_ ? std::min(*trunc_, k) : k;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::shifted(Exp k) const {
    LaurentSeries s;
    for (const auto& [e, c] : coeffs_) s.coeffs_[checked_add_exp(e, k)] = c;
    if (trunc_) s.trunc_ = checked_add_exp(*trunc_, k);
    return s;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s = *this;
    for (auto& [e, c] : s.coeffs_) c = -c;
    return s;
}

static std::optional<Exp> min_trunc(const std::optional<Exp>& a, const std::optional<Exp>& b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    std::map<Exp, Rat> c = a.coeffs_;
    for (const auto& [e, v] : b.coeffs_) c[e] += v;
    return LaurentSeries::make(std::move(c), min_trunc(a.trunc_, b.trunc_));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

Exp LaurentSeries::val_lower_bound() const {
    if (!coeffs_.empty()) return coeffs_.begin()->first;
    if (trunc_) return *trunc_;
    return VAL_INF;  // exact zero
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    // The exact zero annihilates regardless of the partner's precision.
    if (a.is_exactly_zero() || b.is_exactly_zero()) return LaurentSeries::zero();
    // Truncation window: a is known below ta, so a*b is known below
    // ta + val(b), and symmetrically. Valuations enter only as lower bounds,
    // so a truncated-but-known-zero factor is handled conservatively.
    std::optional<Exp> trunc;
    if (a.trunc_) trunc = min_trunc(trunc, checked_add_exp(*a.trunc_, b.val_lower_bound()));
    if (b.trunc_) trunc = min_trunc(trunc, checked_add_exp(*b.trunc_, a.val_lower_bound()));
    std::map<Exp, Rat> c;
    for (const auto& [ea, va] : a.coeffs_)
        for (const auto& [eb, vb] : b.coeffs_) {
            Exp e = checked_add_exp(ea, eb);
            if (!trunc || e < *trunc) c[e] += va * vb;
        }
    return LaurentSeries::make(std::move(c), trunc);
}

LaurentSeries LaurentSeries::invert(Exp order_terms) const {
    if (is_exactly_zero()) throw DivisionByZero("cannot invert the zero series");
    Exp v = valuation();  // throws IndeterminateValuation if unknown
    Rat c = coeffs_.begin()->second;
    // r := this / (c t^v) - 1 has positive valuation (or is zero).
    LaurentSeries r = (*this * monomial(1 / c, -v)) - one();
    if (order_terms < 1) order_terms = 1;
    // Number of correct coefficients of the inverse, limited by our own
    // precision: coefficients of r are known for exponents < trunc - v.
    Exp nterms = order_terms;
    if (trunc_) nterms = std::min(nterms, checked_add_exp(*trunc_, -v));
    if (r.is_exactly_zero())  // exact monomial: inverse is exact
        return monomial(1 / c, -v);
    // Coefficients b_k of (1+r)^{-1} via b_0 = 1, b_k = -sum r_j b_{k-j}.
    std::map<Exp, Rat> b;
    b[0] = 1;
    for (Exp k = 1; k < nterms; ++k) {
        Rat acc = 0;
        for (const auto& [j, rj] : r.coeffs_) {
            if (j > k) break;
            auto it = b.find(k - j);
            if (it != b.end()) acc += rj * it->second;
        }
        if (acc != 0) b[k] = -acc;
    }
    std::map<Exp, Rat> out;
    for (const auto& [k, bk] : b) out[checked_add_exp(k, -v)] = bk / c;
    return make(std::move(out), checked_add_exp(nterms, -v));
}

std::string LaurentSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        Rat mag = abs(c);
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string tp;
        if (k == 1)
            tp = "t";
        else if (k != 0)
            tp = "t^" + std::to_string(k);
        if (k == 0)
            os << rat_to_string(mag);
        else if (mag == 1)
            os << tp;
        else
            os << rat_to_string(mag) << "*" << tp;
    }
    return os.str();
}

LaurentSeries LaurentSeries::parse(const std::string& input) {
    std::string s;
    for (char ch : input)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty series");
    std::map<Exp, Rat> acc;
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
            if (i >= s.size()) throw std::invalid_argument("dangling sign in series");
        }
        // Optional rational coefficient.
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        Rat coeff = 1;
        bool have_coeff = j > i;
        if (have_coeff) {
            coeff = rat_from_string(s.substr(i, j - i));
            i = j;
        }
        Exp expn = 0;
        bool have_t = false;
        if (i < s.size() && (s[i] == '*' || s[i] == 't')) {
            if (s[i] == '*') {
                if (!have_coeff) throw std::invalid_argument("stray '*' in series");
                ++i;
                if (i >= s.size() || s[i] != 't') throw std::invalid_argument("expected t after '*'");
            }
            // now s[i] == 't'
            ++i;
            have_t = true;
            expn = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t k = i;
                if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
                std::size_t d = k;
                while (d < s.size() && std::isdigit(static_cast<unsigned char>(s[d]))) ++d;
                if (d == k) throw std::invalid_argument("missing exponent after '^'");
                errno = 0;
                expn = std::strtoll(s.substr(i, d - i).c_str(), nullptr, 10);
                if (errno == ERANGE) throw std::overflow_error("exponent overflow in series text");
                i = d;
            }
        }
        if (!have_coeff && !have_t) throw std::invalid_argument("bad term in series: " + s.substr(i));
        acc[expn] += sign * coeff;
        any = true;
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw std::invalid_argument("unexpected character in series: " + std::string(1, s[i]));
    }
    if (!any) throw std::invalid_argument("empty series");
    return make(std::move(acc));
}

}  // namespace gatree
