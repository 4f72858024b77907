#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gatree/trees.hpp"

namespace gatree {

inline constexpr int kDefaultEnumerationBound = 8;

struct CatalogEntry {
    StratumType type;
    int dim = 0;
    long long chi = 0;
    EPolynomial epoly;
};

struct StrataCatalog {
    StratumType::Space space = StratumType::Space::P;
    int n = 0;
    std::vector<CatalogEntry> entries;
    long long total_chi = 0;
    EPolynomial total_epoly;
};

// Visit every stable stratum type exactly once, in a fixed deterministic
// order, without materializing the catalog. Throws BoundExceeded unless
// 1 <= n <= bound.
void for_each_type(StratumType::Space space, int n, const std::function<void(const StratumType&)>& fn,
                   int bound = kDefaultEnumerationBound);

StrataCatalog enumerate_types(StratumType::Space space, int n, int bound = kDefaultEnumerationBound);

long long total_chi(StratumType::Space space, int n, int bound = kDefaultEnumerationBound);
EPolynomial total_epoly(StratumType::Space space, int n, int bound = kDefaultEnumerationBound);

// (sum over strata S at level n of chi(S) * (component_count(S) + 1),
//  total_chi at level n+1): equal by multiplicativity of chi over the
// stratified universal curve. Requires n+1 within the bound.
std::pair<long long, long long> universal_curve_chi_check(StratumType::Space space, int n,
                                                          int bound = kDefaultEnumerationBound);

// Number of ordered set partitions of {1..n}.
long long fubini_count(int n);

struct PermutohedronStats {
    long long vertices = 0;
    std::vector<long long> f_vector;  // (vertices, edges)
    long long lattice_points = 0;
};

// Statistics of the convex hull of all permutations of (1..n), computed by
// exact certificate checks over the point set. Requires 2 <= n <= 6.
PermutohedronStats permutohedron_stats(int n);

std::string catalog_to_csv(const StrataCatalog& cat);
std::string catalog_to_json(const StrataCatalog& cat);

}  // namespace gatree
