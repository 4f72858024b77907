#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "gatree/errors.hpp"
#include "gatree/laurent.hpp"
#include "gatree/trees.hpp"

namespace gatree {

// Marks x_1..x_n moving in the one-parameter family whose vector field is
// (1+tx) d/dx with x_infinity = infinity. Every u_i := 1 + t*x_i must be a
// unit (marks stay away from the second fixed point -1/t). `precision` is
// the truncation budget callers should grow when inexact inputs make some
// valuation indeterminate; exact inputs never consult it.
struct MovingConfiguration {
    int n = 0;
    std::vector<LaurentSeries> marks;
    Exp precision = 16;
};

// A rescaling frame (center b, scale s) in which one limit component becomes
// visible. The classifier is alpha = valuation(1 + t*b): the frame carries a
// trunk (the field dies there) iff alpha > s, and a nontrivial action iff
// alpha == s. The test only needs the coefficients of 1 + t*b up to t^s, so
// it is robust at the threshold even for truncated centers.
struct Window {
    LaurentSeries center;
    Exp scale = 0;

    bool is_trunk() const;
};

// (b, s) and (b', s') describe the same frame iff s == s' and
// valuation(b - b') >= s.
bool windows_equivalent(const Window& a, const Window& b);

// Which member of a mark group represents it as a window center. The limit
// is independent of the choice (centers of one group are equivalent); tests
// exercise both policies.
enum class CenterPolicy { MinIndex, MaxIndex };

// Default truncation budget: 4 plus the spread between the largest u-scale
// and the smallest pairwise-difference valuation of the marks.
Exp default_precision(const std::vector<LaurentSeries>& marks);

// Chart change from multiplicative coordinates: x_i = (u_i - 1) / t.
// precision 0 means "derive via default_precision". Throws InvalidMark when
// some u_i is exactly zero.
MovingConfiguration from_multiplicative(const std::vector<LaurentSeries>& u, Exp precision = 0);

// The stable limit tree at t -> 0, computed by the valuation-window
// clustering; the result is returned in canonical point form. Throws
// InvalidMark if some 1 + t*x_i is exactly zero; IndeterminateValuation or
// BeyondPrecision when truncated inputs cannot settle a classification.
GaTree stable_limit(const MovingConfiguration& cfg, CenterPolicy policy = CenterPolicy::MinIndex);

// canonical_type of stable_limit.
StratumType limit_type(const MovingConfiguration& cfg);

// limit_type wrapped in the retry policy for inexact inputs: on an
// indeterminate classification the precision budget doubles, at most three
// times, before the error surfaces.
StratumType robust_limit_type(MovingConfiguration cfg);

inline const std::vector<std::uint64_t> kDefaultSampleSeeds = {1, 2, 3, 4, 5};
inline constexpr int kDefaultExponentBound = 3;
inline constexpr int kDefaultPerturbationDepth = 2;

// Sample degenerations of an ordered-partition stratum: for every strictly
// decreasing exponent assignment e_1 > ... > e_r = 0 to the blocks (gaps up
// to exponent_bound) and every seed, mark values are drawn as
//   u_i = t^{e_block(i)} * (c + c_{i,1} t + ... + c_{i,depth} t^depth),
// where marks of a block share or split their unit constants c over all
// coincidence patterns of the block (random distinct nonzero values per
// class), and the attained set of limit types is returned.
std::set<StratumType> degenerate_stratum_sample(const StratumType& s, int exponent_bound, int depth,
                                                const std::vector<std::uint64_t>& seeds);

}  // namespace gatree
