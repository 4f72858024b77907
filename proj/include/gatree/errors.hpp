#pragma once

#include <stdexcept>
#include <string>

namespace gatree {

// Valuation requested on a series whose known part is zero but which is
// truncated, so the true valuation may lie beyond the precision window.
struct IndeterminateValuation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inversion of the exact zero series.
struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient requested at an exponent at or beyond the truncation bound.
struct BeyondPrecision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Group operation combining elements over different parameter values.
struct MismatchedParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural violation in a tree (marks on a trunk, empty tree, missing
// positions, zero speed, duplicate attachment positions, bad mark index set).
struct MalformedTree : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mark value outside the allowed domain (e.g. multiplicative coordinate
// exactly zero).
struct InvalidMark : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A curve location that does not resolve to a point of the curve.
struct InvalidLocation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Attempt to forget the only remaining mark.
struct LastMark : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration request beyond the supported size bound.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gatree
