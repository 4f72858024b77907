#include "gatree/limit.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <random>

namespace gatree {

namespace {

// Decide valuation(d) >= bound from known coefficients only; throws when the
// truncation window cannot certify the answer. Exact zero counts as +infinity.
bool val_at_least(const LaurentSeries& d, Exp bound) {
    for (const auto& [e, c] : d.terms())
        if (e < bound) return false;
    if (!d.is_exact() && d.truncation() < bound)
        throw IndeterminateValuation("comparison needs coefficients below t^" +
                                     std::to_string(bound));
    return true;
}

}  // namespace

bool Window::is_trunk() const {
    LaurentSeries w = LaurentSeries::one() + LaurentSeries::t() * center;
    for (const auto& [e, c] : w.terms())
        if (e <= scale) return false;  // alpha <= scale: the field acts in this frame
    if (!w.is_exact() && w.truncation() <= scale)
        throw IndeterminateValuation("window classification needs coefficients up to t^" +
                                     std::to_string(scale));
    return true;
}

bool windows_equivalent(const Window& a, const Window& b) {
    if (a.scale != b.scale) return false;
    return val_at_least(a.center - b.center, a.scale);
}

Exp default_precision(const std::vector<LaurentSeries>& marks) {
    const LaurentSeries t = LaurentSeries::t(), one = LaurentSeries::one();
    Exp maxscale = 0, minpair = 0;
    for (const auto& x : marks) {
        LaurentSeries u = one + t * x;
        if (u.is_exactly_zero()) continue;  // surfaces as InvalidMark downstream
        maxscale = std::max(maxscale, u.valuation());
    }
    for (size_t i = 0; i < marks.size(); ++i)
        for (size_t j = i + 1; j < marks.size(); ++j) {
            LaurentSeries d = marks[i] - marks[j];
            if (!d.is_exactly_zero()) minpair = std::min(minpair, d.valuation());
        }
    return std::max<Exp>(4, checked_add_exp(4, maxscale - minpair));
}

MovingConfiguration from_multiplicative(const std::vector<LaurentSeries>& u, Exp precision) {
    MovingConfiguration cfg;
    cfg.n = (int)u.size();
    cfg.marks.reserve(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i].is_exactly_zero())
            throw InvalidMark("mark " + std::to_string(i + 1) +
                              " is identically zero in the multiplicative chart");
        cfg.marks.push_back((u[i] - LaurentSeries::one()).shifted(-1));
    }
    cfg.precision = precision > 0 ? precision : default_precision(cfg.marks);
    return cfg;
}

namespace {

struct ClusterPoint {
    LaurentSeries x;  // a leaf center, or the sentinel -1/t
    int leaf = -1;    // index into the leaf array; -1 for the sentinel
};

}  // namespace

GaTree stable_limit(const MovingConfiguration& cfg, CenterPolicy policy) {
    if (cfg.n < 1 || (int)cfg.marks.size() != cfg.n)
        throw std::invalid_argument("configuration needs marks x_1..x_n with n >= 1");
    const LaurentSeries t = LaurentSeries::t(), one = LaurentSeries::one();
    std::vector<LaurentSeries> u;
    u.reserve(cfg.n);
    for (int i = 0; i < cfg.n; ++i) {
        u.push_back(one + t * cfg.marks[i]);
        if (u.back().is_exactly_zero())
            throw InvalidMark("mark " + std::to_string(i + 1) +
                              " sits at the second fixed point -1/t");
    }

    // Group marks into leaves: equal u-scale, difference no coarser than it.
    // Matching against the first member is enough: valuations are ultrametric,
    // so the relation is transitive at a fixed threshold.
    struct LeafGroup {
        Exp scale = 0;
        std::vector<int> members;  // ascending mark indices
    };
    std::vector<LeafGroup> groups;
    for (int i = 1; i <= cfg.n; ++i) {
        Exp a = u[i - 1].valuation();
        bool placed = false;
        for (auto& g : groups) {
            if (g.scale != a) continue;
            if (val_at_least(cfg.marks[i - 1] - cfg.marks[g.members.front() - 1], a)) {
                g.members.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({a, {i}});
    }

    // Leaf vertices: positions and speed are the t^scale-coefficients
    // relative to the chosen center (any member works; the canonical form
    // of the result is center-independent).
    struct LeafData {
        GaVertex vertex;
        LaurentSeries center;
    };
    std::vector<LeafData> leaves;
    for (const auto& g : groups) {
        int rep = policy == CenterPolicy::MinIndex ? g.members.front() : g.members.back();
        const LaurentSeries& b = cfg.marks[rep - 1];
        GaVertex v;
        v.kind = GaVertex::Kind::Leaf;
        v.speed = u[rep - 1].coefficient_at(g.scale);
        for (int i : g.members) v.marks[i] = (cfg.marks[i - 1] - b).coefficient_at(g.scale);
        leaves.push_back({std::move(v), b});
    }

    // Cluster the leaf centers together with the sentinel q = -1/t (the
    // second zero of the field). q shapes the skeleton toward the 0-side of
    // the picture but never becomes a node, mark, or special point.
    std::vector<ClusterPoint> pts;
    for (size_t l = 0; l < leaves.size(); ++l) pts.push_back({leaves[l].center, (int)l});
    pts.push_back({LaurentSeries::monomial(-1, -1), -1});

    auto center_of = [&](const std::vector<ClusterPoint>& cl) -> const ClusterPoint* {
        const ClusterPoint* best = nullptr;
        for (const auto& p : cl) {
            if (p.leaf < 0) continue;
            if (!best || (policy == CenterPolicy::MinIndex ? p.leaf < best->leaf
                                                           : p.leaf > best->leaf))
                best = &p;
        }
        return best;  // null iff the class is the sentinel alone
    };

    // Recursive window construction. Pairwise valuations of distinct points
    // are finite (distinct leaves have inequivalent centers, and a center at
    // the sentinel would have been an InvalidMark), so the branch scale s is
    // always attained and the classes at valuation > s are strictly finer.
    std::function<GaVertex(const std::vector<ClusterPoint>&)> build =
        [&](const std::vector<ClusterPoint>& c) -> GaVertex {
        Exp s = VAL_INF;
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j)
                s = std::min(s, (c[i].x - c[j].x).valuation());
        assert(s < VAL_INF);

        std::vector<std::vector<ClusterPoint>> classes;
        for (const auto& p : c) {
            bool placed = false;
            for (auto& cl : classes)
                if (val_at_least(p.x - cl.front().x, checked_add_exp(s, 1))) {
                    cl.push_back(p);
                    placed = true;
                    break;
                }
            if (!placed) classes.push_back({p});
        }

        const ClusterPoint* wc = center_of(c);
        assert(wc);  // every cluster we recurse into contains a leaf
        Window w{wc->x, s};
        // Branch frames always classify as trunks: the sentinel keeps every
        // pairwise scale strictly below each leaf's own u-valuation.
        bool trunk = w.is_trunk();
        assert(trunk);
        (void)trunk;

        GaVertex v;
        v.kind = GaVertex::Kind::Trunk;
        for (const auto& cl : classes) {
            const ClusterPoint* cc = center_of(cl);
            if (!cc) continue;  // ghost class: only the sentinel lives there
            Rat at = (cc->x - wc->x).coefficient_at(s);
            if (cl.size() == 1)
                v.children.emplace_back(at, leaves[cc->leaf].vertex);
            else
                v.children.emplace_back(at, build(cl));
        }
        return v;
    };

    GaTree tree;
    tree.n = cfg.n;
    tree.root = build(pts);
    stabilize(tree);
    return canonical_point_form(tree);
}

StratumType limit_type(const MovingConfiguration& cfg) {
    return canonical_type(stable_limit(cfg));
}

StratumType robust_limit_type(MovingConfiguration cfg) {
    for (int attempt = 0;; ++attempt) {
        try {
            return limit_type(cfg);
        } catch (const IndeterminateValuation&) {
            if (attempt >= 3) throw;
        } catch (const BeyondPrecision&) {
            if (attempt >= 3) throw;
        }
        cfg.precision = std::max<Exp>(8, checked_add_exp(cfg.precision, cfg.precision));
    }
}

// ---------------------------------------------------------------------------
// Degeneration sampling.
// ---------------------------------------------------------------------------

namespace {

// All set partitions of {0..k-1} as restricted-growth strings.
std::vector<std::vector<int>> block_partitions(int k) {
    std::vector<std::vector<int>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> rgs(k, 0);
    std::function<void(int, int)> rec = [&](int i, int maxseen) {
        if (i == k) {
            out.push_back(rgs);
            return;
        }
        for (int c = 0; c <= maxseen + 1; ++c) {
            rgs[i] = c;
            rec(i + 1, std::max(maxseen, c));
        }
    };
    rec(1, 0);
    return out;
}

// One sampling cell: a fixed exponent assignment and one seeded generator.
// Marks of a block share their unit constant exactly when the coincidence
// pattern puts them in one class; distinct classes get distinct nonzero
// constants, so the class structure (not the random values) determines which
// marks stay together in the limit.
void run_cell(const StratumType& s, const std::vector<Exp>& e, int depth, std::mt19937_64& rng,
              std::set<StratumType>& attained) {
    int r = (int)s.blocks.size();
    std::vector<std::vector<std::vector<int>>> per_block;
    long long total = 1;
    for (const auto& b : s.blocks) {
        per_block.push_back(block_partitions((int)b.size()));
        total *= (long long)per_block.back().size();
    }

    auto run_combo = [&](const std::vector<size_t>& choice) {
        std::vector<int> class_of(s.n + 1, -1);
        int nclasses = 0;
        for (int b = 0; b < r; ++b) {
            const auto& rgs = per_block[b][choice[b]];
            int base = nclasses, mx = -1;
            for (size_t pos = 0; pos < s.blocks[b].size(); ++pos) {
                class_of[s.blocks[b][pos]] = base + rgs[pos];
                mx = std::max(mx, rgs[pos]);
            }
            nclasses = base + mx + 1;
        }
        std::uniform_int_distribution<int> cd(-20, 20);
        std::vector<Rat> cval;
        std::vector<int> used;
        for (int cidx = 0; cidx < nclasses; ++cidx) {
            int v;
            do {
                v = cd(rng);
            } while (v == 0 || std::find(used.begin(), used.end(), v) != used.end());
            used.push_back(v);
            cval.push_back(Rat(v));
        }
        std::uniform_int_distribution<int> pd(-3, 3);
        std::vector<LaurentSeries> us(s.n);
        for (int b = 0; b < r; ++b)
            for (int i : s.blocks[b]) {
                std::map<Exp, Rat> m;
                m[e[b]] = cval[class_of[i]];
                for (int d = 1; d <= depth; ++d) m[checked_add_exp(e[b], d)] += Rat(pd(rng));
                us[i - 1] = LaurentSeries::make(std::move(m));
            }
        attained.insert(robust_limit_type(from_multiplicative(us)));
    };

    const long long kComboCap = 200;
    if (total <= kComboCap) {
        std::vector<size_t> idx(r, 0);
        while (true) {
            run_combo(idx);
            int b = 0;
            while (b < r && idx[b] + 1 == per_block[b].size()) idx[b++] = 0;
            if (b == r) break;
            ++idx[b];
        }
    } else {
        for (long long k = 0; k < kComboCap; ++k) {
            std::vector<size_t> choice(r);
            for (int b = 0; b < r; ++b)
                choice[b] =
                    std::uniform_int_distribution<size_t>(0, per_block[b].size() - 1)(rng);
            run_combo(choice);
        }
    }
}

}  // namespace

std::set<StratumType> degenerate_stratum_sample(const StratumType& s, int exponent_bound, int depth,
                                                const std::vector<std::uint64_t>& seeds) {
    if (s.space != StratumType::Space::L)
        throw std::invalid_argument("degeneration sampling starts from an ordered-partition stratum");
    validate_type(s);
    if (exponent_bound < 1) throw std::invalid_argument("exponent bound must be >= 1");
    if (depth < 0) throw std::invalid_argument("perturbation depth must be >= 0");
    if (seeds.empty()) throw std::invalid_argument("need at least one seed");

    int r = (int)s.blocks.size();
    // Exponent assignments: e_1 > ... > e_r = 0, consecutive gaps in
    // [1..exponent_bound]; the final 0 is a gauge choice (overall scaling of
    // the multiplicative coordinates is quotiented out).
    std::vector<std::vector<Exp>> patterns;
    std::vector<int> gaps(r - 1, 1);
    while (true) {
        std::vector<Exp> e(r);
        e[r - 1] = 0;
        for (int b = r - 2; b >= 0; --b) e[b] = e[b + 1] + gaps[b];
        patterns.push_back(std::move(e));
        size_t k = 0;
        while (k < gaps.size() && gaps[k] == exponent_bound) gaps[k++] = 1;
        if (k == gaps.size()) break;
        ++gaps[k];
    }

    std::set<StratumType> attained;
    for (size_t pi = 0; pi < patterns.size(); ++pi)
        for (std::uint64_t seed : seeds) {
            // Independent deterministic stream per (pattern, seed) cell; the
            // merge is order-independent, so cells could run in parallel.
            std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * (pi + 1)));
            run_cell(s, patterns[pi], depth, rng, attained);
        }
    return attained;
}

}  // namespace gatree
