#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gatree {

// Exact rational numbers. All arithmetic in the library is exact; no
// floating point is used anywhere in a mathematical path.
using Rat = mpq_class;

// Canonical text form: "p" or "p/q" with q > 0 and gcd(p,q)=1.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Parse "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
// on anything else, including q = 0.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::size_t i = 0;
    if (s[i] == '-' || s[i] == '+') ++i;
    bool digits = false, slash = false, denom_digits = false, denom_zero = true;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (slash || !digits) throw std::invalid_argument("bad rational: " + s);
            slash = true;
        } else if (c >= '0' && c <= '9') {
            if (slash) {
                denom_digits = true;
                if (c != '0') denom_zero = false;
            } else {
                digits = true;
            }
        } else {
            throw std::invalid_argument("bad rational: " + s);
        }
    }
    if (!digits || (slash && !denom_digits)) throw std::invalid_argument("bad rational: " + s);
    if (slash && denom_zero) throw std::invalid_argument("zero denominator: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace gatree
