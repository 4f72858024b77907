#include "gatree/enumerate.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace gatree {

// ---------------------------------------------------------------------------
// Set partitions (restricted growth strings) of {0..n-1}.
// ---------------------------------------------------------------------------

static void set_partitions_rec(int i, int n, int maxseen, std::vector<int>& rgs,
                               const std::function<void(const std::vector<int>&, int)>& fn) {
    if (i == n) {
        fn(rgs, maxseen + 1);
        return;
    }
    for (int c = 0; c <= maxseen + 1; ++c) {
        rgs[i] = c;
        set_partitions_rec(i + 1, n, std::max(maxseen, c), rgs, fn);
    }
}

// fn receives the restricted growth string and the number of parts.
static void set_partitions(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> rgs(n, 0);
    if (n == 0) return;
    set_partitions_rec(1, n, 0, rgs, fn);
}

// ---------------------------------------------------------------------------
// P side: trees of trunks over a fixed family of leaf blocks. Every internal
// vertex has >= 2 children; leaves are the blocks. The recursion enumerates,
// for a set S of block ids, all shapes whose root is a trunk: pick a set
// partition of S into >= 2 parts, then for each part either the lone leaf
// (singleton part) or recursively any trunk-rooted shape over that part.
// ---------------------------------------------------------------------------

namespace {

struct PBuilder {
    const std::vector<std::vector<int>>* blocks = nullptr;  // marks per block, sorted
    std::function<void(TypeNode&&)> emit;

    TypeNode leaf_node(int block) const {
        TypeNode t;
        t.leaf = true;
        t.marks = (*blocks)[block];
        return t;
    }

    static TypeNode trunk_node(std::vector<TypeNode> children) {
        TypeNode t;
        t.leaf = false;
        t.children = std::move(children);
        std::sort(t.children.begin(), t.children.end(),
                  [](const TypeNode& a, const TypeNode& b) { return type_compare(a, b) < 0; });
        return t;
    }

    void trunk_trees(const std::vector<int>& ids, const std::function<void(TypeNode&&)>& fn) {
        int k = (int)ids.size();
        set_partitions(k, [&](const std::vector<int>& rgs, int parts) {
            if (parts < 2) return;
            std::vector<std::vector<int>> part_ids(parts);
            for (int i = 0; i < k; ++i) part_ids[rgs[i]].push_back(ids[i]);
            std::vector<TypeNode> acc;
            fill_parts(part_ids, 0, acc, fn);
        });
    }

    void fill_parts(const std::vector<std::vector<int>>& parts, size_t idx,
                    std::vector<TypeNode>& acc, const std::function<void(TypeNode&&)>& fn) {
        if (idx == parts.size()) {
            std::vector<TypeNode> children = acc;
            fn(trunk_node(std::move(children)));
            return;
        }
        if (parts[idx].size() == 1) {
            acc.push_back(leaf_node(parts[idx][0]));
            fill_parts(parts, idx + 1, acc, fn);
            acc.pop_back();
        } else {
            trunk_trees(parts[idx], [&](TypeNode&& sub) {
                acc.push_back(std::move(sub));
                fill_parts(parts, idx + 1, acc, fn);
                acc.pop_back();
            });
        }
    }
};

}  // namespace

static void for_each_p_type(int n, const std::function<void(const StratumType&)>& fn) {
    // The irreducible type: one leaf carrying everything.
    StratumType s;
    s.space = StratumType::Space::P;
    s.n = n;
    s.shape.leaf = true;
    for (int i = 1; i <= n; ++i) s.shape.marks.push_back(i);
    fn(s);
    if (n < 2) return;
    // Reducible types: a partition of the marks into k >= 2 leaf blocks and
    // a trunk tree over the blocks.
    set_partitions(n, [&](const std::vector<int>& rgs, int parts) {
        if (parts < 2) return;
        std::vector<std::vector<int>> blocks(parts);
        for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(i + 1);
        PBuilder b;
        b.blocks = &blocks;
        std::vector<int> ids(parts);
        std::iota(ids.begin(), ids.end(), 0);
        b.trunk_trees(ids, [&](TypeNode&& shape) {
            StratumType t;
            t.space = StratumType::Space::P;
            t.n = n;
            t.shape = std::move(shape);
            fn(t);
        });
    });
}

// ---------------------------------------------------------------------------
// L side: ordered set partitions, 0-side block first.
// ---------------------------------------------------------------------------

static void ordered_partitions_rec(std::vector<int>& pool, std::vector<std::vector<int>>& acc,
                                   const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    if (pool.empty()) {
        fn(acc);
        return;
    }
    // Choose the next block as any nonempty subset of the pool, iterated in
    // ascending bitmask order for determinism.
    int k = (int)pool.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> block, rest;
        for (int i = 0; i < k; ++i)
            ((mask >> i) & 1 ? block : rest).push_back(pool[i]);
        acc.push_back(block);
        ordered_partitions_rec(rest, acc, fn);
        acc.pop_back();
    }
}

static void for_each_l_type(int n, const std::function<void(const StratumType&)>& fn) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<std::vector<int>> acc;
    ordered_partitions_rec(pool, acc, [&](const std::vector<std::vector<int>>& blocks) {
        StratumType t;
        t.space = StratumType::Space::L;
        t.n = n;
        t.blocks = blocks;
        fn(t);
    });
}

// ---------------------------------------------------------------------------
// Public enumeration API.
// ---------------------------------------------------------------------------

void for_each_type(StratumType::Space space, int n,
                   const std::function<void(const StratumType&)>& fn, int bound) {
    if (n < 1 || n > bound)
        throw BoundExceeded("n = " + std::to_string(n) + " outside [1, " + std::to_string(bound) +
                            "]");
    if (space == StratumType::Space::P)
        for_each_p_type(n, fn);
    else
        for_each_l_type(n, fn);
}

StrataCatalog enumerate_types(StratumType::Space space, int n, int bound) {
    StrataCatalog cat;
    cat.space = space;
    cat.n = n;
    cat.total_epoly = EPolynomial::zero();
    std::unordered_set<std::string> seen;
    for_each_type(space, n, [&](const StratumType& s) {
        CatalogEntry e;
        e.type = s;
        e.dim = dimension(s);
        e.chi = chi_stratum(s);
        e.epoly = epoly_stratum(s);
        if (!seen.insert(s.to_string()).second)
            throw MalformedTree("duplicate type generated: " + s.to_string());
        cat.total_chi += e.chi;
        cat.total_epoly += e.epoly;
        cat.entries.push_back(std::move(e));
    }, bound);
    return cat;
}

long long total_chi(StratumType::Space space, int n, int bound) {
    long long acc = 0;
    for_each_type(space, n, [&](const StratumType& s) { acc += chi_stratum(s); }, bound);
    return acc;
}

EPolynomial total_epoly(StratumType::Space space, int n, int bound) {
    EPolynomial acc;
    for_each_type(space, n, [&](const StratumType& s) { acc += epoly_stratum(s); }, bound);
    return acc;
}

std::pair<long long, long long> universal_curve_chi_check(StratumType::Space space, int n,
                                                          int bound) {
    if (n + 1 > bound)
        throw BoundExceeded("universal curve check needs n+1 = " + std::to_string(n + 1) +
                            " within bound " + std::to_string(bound));
    long long lhs = 0;
    for_each_type(space, n, [&](const StratumType& s) {
        lhs += chi_stratum(s) * (component_count(s) + 1);
    }, bound);
    return {lhs, total_chi(space, n + 1, bound)};
}

long long fubini_count(int n) {
    if (n < 1) throw BoundExceeded("fubini_count needs n >= 1");
    // a(m) = sum over the size k of the 0-side block of C(m,k) * a(m-k).
    std::vector<long long> a(n + 1, 0);
    a[0] = 1;
    for (int m = 1; m <= n; ++m) {
        // binomials C(m, k)
        std::vector<long long> c(m + 1, 1);
        for (int i = 1; i <= m; ++i)
            for (int j = i - 1; j >= 1; --j) c[j] = c[j] + c[j - 1];
        long long acc = 0;
        for (int k = 1; k <= m; ++k) {
            long long term;
            if (__builtin_mul_overflow(c[k], a[m - k], &term) ||
                __builtin_add_overflow(acc, term, &acc))
                throw std::overflow_error("fubini_count overflow");
            (void)term;
        }
        a[m] = acc;
    }
    return a[n];
}

// ---------------------------------------------------------------------------
// Permutohedron statistics by exact certificates over the vertex set.
// ---------------------------------------------------------------------------

PermutohedronStats permutohedron_stats(int n) {
    if (n < 2 || n > 6) throw BoundExceeded("permutohedron statistics support 2 <= n <= 6");
    std::vector<std::vector<int>> pts;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    std::vector<int> perm = base;
    do {
        pts.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto dot = [n](const std::vector<int>& a, const std::vector<int>& b) {
        long long s = 0;
        for (int i = 0; i < n; ++i) s += (long long)a[i] * b[i];
        return s;
    };

    PermutohedronStats st;

    // Vertex certificates: the functional <p, .> is strictly maximized at p
    // itself (rearrangement inequality). Every certified point is a vertex
    // of the hull, and hull vertices can only be points of the set.
    for (const auto& p : pts) {
        bool strict = true;
        long long self = dot(p, p);
        for (const auto& q : pts)
            if (&q != &p && dot(p, q) >= self) {
                strict = false;
                break;
            }
        if (strict) ++st.vertices;
    }

    // Edge certificates: [p,q] is an edge iff some functional attains its
    // maximum over the point set exactly on {p,q}; the midpoint functional
    // c = p + q works exactly when it is one. The maximum of <c, sigma> over
    // all permutations sigma and its number of maximizers follow from
    // sorting c: maximizers permute positions freely within tie groups of c.
    long long edges = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            std::vector<int> c(n);
            for (int k = 0; k < n; ++k) c[k] = pts[i][k] + pts[j][k];
            std::vector<int> sorted_c = c;
            std::sort(sorted_c.begin(), sorted_c.end());
            long long best = 0;
            for (int k = 0; k < n; ++k) best += (long long)sorted_c[k] * (k + 1);
            long long mult = 1;
            for (int k = 0; k < n;) {
                int r = k;
                while (r < n && sorted_c[r] == sorted_c[k]) ++r;
                for (int f = 2; f <= r - k; ++f) mult *= f;
                k = r;
            }
            if (mult == 2 && dot(c, pts[i]) == best && dot(c, pts[j]) == best) ++edges;
        }
    st.f_vector = {st.vertices, edges};

    // Lattice points: integer points of the box whose coordinate vector is
    // majorized by (1..n) — ascending partial sums at least 1, 1+2, ... with
    // total equality.
    long long total = (long long)n * (n + 1) / 2;
    std::vector<int> x(n, 1);
    long long count = 0;
    while (true) {
        long long sum = std::accumulate(x.begin(), x.end(), 0LL);
        if (sum == total) {
            std::vector<int> y = x;
            std::sort(y.begin(), y.end());
            bool ok = true;
            long long pref = 0;
            for (int k = 0; k < n; ++k) {
                pref += y[k];
                if (pref < (long long)(k + 1) * (k + 2) / 2) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++count;
        }
        int i = 0;
        while (i < n && x[i] == n) x[i++] = 1;
        if (i == n) break;
        ++x[i];
    }
    st.lattice_points = count;
    return st;
}

// ---------------------------------------------------------------------------
// Exports.
// ---------------------------------------------------------------------------

static std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string catalog_to_csv(const StrataCatalog& cat) {
    std::ostringstream os;
    os << "type,dimension,chi,epoly\n";
    for (const auto& e : cat.entries)
        os << csv_quote(e.type.to_string()) << "," << e.dim << "," << e.chi << ","
           << csv_quote(e.epoly.to_string()) << "\n";
    return os.str();
}

std::string catalog_to_json(const StrataCatalog& cat) {
    nlohmann::json j;
    j["space"] = cat.space == StratumType::Space::P ? "P" : "L";
    j["n"] = cat.n;
    nlohmann::json strata = nlohmann::json::array();
    for (const auto& e : cat.entries) {
        nlohmann::json s;
        s["type"] = e.type.to_string();
        s["dimension"] = e.dim;
        s["chi"] = e.chi;
        s["epoly"] = e.epoly.to_string();
        strata.push_back(std::move(s));
    }
    j["strata"] = std::move(strata);
    j["totals"] = {{"chi", cat.total_chi},
                   {"epoly", cat.total_epoly.to_string()},
                   {"count", cat.entries.size()}};
    return j.dump(2);
}

}  // namespace gatree
