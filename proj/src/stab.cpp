#include "gatree/stab.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gatree/errors.hpp"

namespace gatree {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Locations.
// ---------------------------------------------------------------------------

CurveLocation CurveLocation::at(std::vector<int> path, Rat z) {
    CurveLocation loc;
    loc.vertex_path = std::move(path);
    loc.kind = Kind::Finite;
    loc.coordinate = std::move(z);
    return loc;
}

CurveLocation CurveLocation::at_infinity(std::vector<int> path) {
    CurveLocation loc;
    loc.vertex_path = std::move(path);
    loc.kind = Kind::Infinity;
    return loc;
}

CurveLocation CurveLocation::at_node(std::vector<int> path, int child) {
    CurveLocation loc;
    loc.vertex_path = std::move(path);
    loc.kind = Kind::Node;
    loc.node_child = child;
    return loc;
}

std::string location_to_json(const CurveLocation& loc) {
    json j;
    j["vertex"] = loc.vertex_path;
    switch (loc.kind) {
        case CurveLocation::Kind::Finite:
            j["at"] = rat_to_string(loc.coordinate);
            break;
        case CurveLocation::Kind::Infinity:
            j["at"] = "infinity";
            break;
        case CurveLocation::Kind::Node:
            j["at"] = json{{"node", loc.node_child}};
            break;
    }
    return j.dump();
}

CurveLocation location_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("vertex") || !j.contains("at"))
        throw InvalidLocation("location JSON needs \"vertex\" and \"at\"");
    const json& path = j.at("vertex");
    if (!path.is_array()) throw InvalidLocation("\"vertex\" must be an array of child indices");
    CurveLocation loc;
    for (const auto& e : path) {
        if (!e.is_number_integer()) throw InvalidLocation("child indices must be integers");
        loc.vertex_path.push_back(e.get<int>());
    }
    const json& at = j.at("at");
    if (at.is_string()) {
        std::string s = at.get<std::string>();
        if (s == "infinity") {
            loc.kind = CurveLocation::Kind::Infinity;
        } else {
            loc.kind = CurveLocation::Kind::Finite;
            try {
                loc.coordinate = rat_from_string(s);
            } catch (const std::invalid_argument&) {
                throw InvalidLocation("bad coordinate '" + s + "'");
            }
        }
    } else if (at.is_number_integer()) {
        loc.kind = CurveLocation::Kind::Finite;
        loc.coordinate = Rat((long)at.get<long long>());
    } else if (at.is_object() && at.contains("node") && at.at("node").is_number_integer()) {
        loc.kind = CurveLocation::Kind::Node;
        loc.node_child = at.at("node").get<int>();
    } else {
        throw InvalidLocation("\"at\" must be a coordinate, \"infinity\", or {\"node\": k}");
    }
    return loc;
}

// ---------------------------------------------------------------------------
// Seed and coresidue.
// ---------------------------------------------------------------------------

FDRTPoint seed_curve(const Rat& t) {
    FDRTPoint p;
    p.t = t;
    p.n = 1;
    if (t == 0) {
        p.tree.n = 1;
        p.tree.root.kind = GaVertex::Kind::Leaf;
        p.tree.root.marks[1] = 1;
        p.tree.root.speed = 1;
    } else {
        ChainComp c;
        c.marks[1] = 1;
        c.fixed_point = Rat(-1) / t;
        p.chain.push_back(std::move(c));
    }
    return p;
}

Rat coresidue(const FDRTPoint& p) { return p.t; }

// ---------------------------------------------------------------------------
// Insertion.
// ---------------------------------------------------------------------------

namespace {

// Resolve a location on a t = 0 tree down to one of four geometric cases.
struct Resolved {
    enum class What { XInfinity, Node, TrunkPoint, LeafPoint };
    What what;
    GaVertex* vertex = nullptr;  // Node: the parent; *Point: the component
    std::size_t child = 0;       // Node only
    Rat z;                       // *Point only
};

GaVertex* walk_path(GaTree& tree, const std::vector<int>& path, GaVertex** parent_out,
                    std::size_t* index_out) {
    GaVertex* cur = &tree.root;
    GaVertex* parent = nullptr;
    std::size_t index = 0;
    for (int k : path) {
        if (cur->kind != GaVertex::Kind::Trunk || k < 0 ||
            (std::size_t)k >= cur->children.size())
            throw InvalidLocation("vertex path leaves the tree");
        parent = cur;
        index = (std::size_t)k;
        cur = &cur->children[index].second;
    }
    if (parent_out) *parent_out = parent;
    if (index_out) *index_out = index;
    return cur;
}

Resolved resolve_tree_location(GaTree& tree, const CurveLocation& loc) {
    GaVertex* parent = nullptr;
    std::size_t index = 0;
    GaVertex* v = walk_path(tree, loc.vertex_path, &parent, &index);
    Resolved r;
    switch (loc.kind) {
        case CurveLocation::Kind::Infinity:
            if (!parent) {
                r.what = Resolved::What::XInfinity;
            } else {
                // Infinity on a non-root component is its node to the parent.
                r.what = Resolved::What::Node;
                r.vertex = parent;
                r.child = index;
            }
            return r;
        case CurveLocation::Kind::Node:
            if (v->kind != GaVertex::Kind::Trunk || loc.node_child < 0 ||
                (std::size_t)loc.node_child >= v->children.size())
                throw InvalidLocation("no such node");
            r.what = Resolved::What::Node;
            r.vertex = v;
            r.child = (std::size_t)loc.node_child;
            return r;
        case CurveLocation::Kind::Finite:
            if (v->kind == GaVertex::Kind::Trunk) {
                for (std::size_t c = 0; c < v->children.size(); ++c) {
                    if (v->children[c].first == loc.coordinate) {
                        r.what = Resolved::What::Node;
                        r.vertex = v;
                        r.child = c;
                        return r;
                    }
                }
                r.what = Resolved::What::TrunkPoint;
            } else {
                r.what = Resolved::What::LeafPoint;
            }
            r.vertex = v;
            r.z = loc.coordinate;
            return r;
    }
    throw InvalidLocation("unrecognized location");
}

GaVertex mark_leaf(int m) {
    GaVertex leaf;
    leaf.kind = GaVertex::Kind::Leaf;
    leaf.marks[m] = 1;
    leaf.speed = 1;
    return leaf;
}

}  // namespace

FDRTPoint insert_mark(const FDRTPoint& p, const CurveLocation& loc) {
    validate_fdrt(p);
    FDRTPoint q = p;
    const int m = p.n + 1;
    q.n = m;

    if (q.t == 0) {
        q.tree.n = m;
        Resolved r = resolve_tree_location(q.tree, loc);
        switch (r.what) {
            case Resolved::What::XInfinity: {
                // Interpose a bubble above the root: it takes over x_infinity,
                // the old curve hangs at its 0. The field vanishes on the
                // bubble, so the mark immediately moves to a leaf of its own.
                GaVertex b;
                b.kind = GaVertex::Kind::Trunk;
                b.children.emplace_back(Rat(0), std::move(q.tree.root));
                b.children.emplace_back(Rat(1), mark_leaf(m));
                q.tree.root = std::move(b);
                break;
            }
            case Resolved::What::Node: {
                // Interpose a bubble at the node; the former child hangs at
                // its 0 and, as above, the mark ends on a leaf at 1.
                auto& slot = r.vertex->children[r.child];
                GaVertex b;
                b.kind = GaVertex::Kind::Trunk;
                b.children.emplace_back(Rat(0), std::move(slot.second));
                b.children.emplace_back(Rat(1), mark_leaf(m));
                slot.second = std::move(b);
                break;
            }
            case Resolved::What::TrunkPoint:
                // The field vanishes everywhere on a trunk: the mark lands on
                // a fresh translation leaf attached at the chosen point.
                r.vertex->children.emplace_back(r.z, mark_leaf(m));
                break;
            case Resolved::What::LeafPoint:
                // Translation acts freely at finite points: a plain mark.
                r.vertex->marks[m] = r.z;
                break;
        }
        validate_fdrt(q);
        return q;
    }

    // t != 0: the curve is a chain, every path step is the single child 0.
    for (int k : loc.vertex_path)
        if (k != 0) throw InvalidLocation("chain components have a single child");
    const std::size_t j = loc.vertex_path.size();
    if (j >= q.chain.size()) throw InvalidLocation("vertex path leaves the chain");

    ChainComp bubble;
    bubble.marks[m] = 1;
    bubble.fixed_point = 0;

    if (loc.kind == CurveLocation::Kind::Infinity) {
        if (j == 0) {
            // Bubble at x_infinity: it becomes the new top of the chain and
            // the old chain hangs at its finite fixed point.
            q.chain.insert(q.chain.begin(), std::move(bubble));
        } else {
            // Infinity on component j is the node toward component j-1.
            q.chain.insert(q.chain.begin() + (std::ptrdiff_t)j, std::move(bubble));
        }
    } else if (loc.kind == CurveLocation::Kind::Node) {
        if (loc.node_child != 0 || j + 1 >= q.chain.size())
            throw InvalidLocation("no such node");
        q.chain.insert(q.chain.begin() + (std::ptrdiff_t)j + 1, std::move(bubble));
    } else if (loc.coordinate == q.chain[j].fixed_point) {
        // At the finite fixed point the field vanishes. Whether it is a node
        // (a next component hangs there) or the smooth end of the chain, the
        // result is the same interposed bubble carrying the mark.
        q.chain.insert(q.chain.begin() + (std::ptrdiff_t)j + 1, std::move(bubble));
    } else {
        // The multiplicative flow moves every other point: a plain mark.
        q.chain[j].marks[m] = loc.coordinate;
    }
    validate_fdrt(q);
    return q;
}

// ---------------------------------------------------------------------------
// Forgetting.
// ---------------------------------------------------------------------------

namespace {

bool erase_mark_in_vertex(GaVertex& v, int i) {
    if (v.kind == GaVertex::Kind::Leaf) return v.marks.erase(i) > 0;
    for (auto& [at, c] : v.children) {
        (void)at;
        if (erase_mark_in_vertex(c, i)) return true;
    }
    return false;
}

void renumber_above(GaVertex& v, int i) {
    std::map<int, Rat> out;
    for (const auto& [k, pos] : v.marks) out[k > i ? k - 1 : k] = pos;
    v.marks = std::move(out);
    for (auto& [at, c] : v.children) {
        (void)at;
        renumber_above(c, i);
    }
}

}  // namespace

FDRTPoint forget_mark(const FDRTPoint& p, int i) {
    validate_fdrt(p);
    if (p.n <= 1) throw LastMark("cannot forget the only mark");
    if (i < 1 || i > p.n) throw InvalidMark("no mark " + std::to_string(i));
    FDRTPoint q = p;
    q.n = p.n - 1;

    if (q.t == 0) {
        q.tree.n = q.n;
        bool erased = erase_mark_in_vertex(q.tree.root, i);
        if (!erased) throw InvalidMark("no mark " + std::to_string(i));
        stabilize(q.tree);
        renumber_above(q.tree.root, i);
        validate_fdrt(q);
        return q;
    }

    bool erased = false;
    for (std::size_t c = 0; c < q.chain.size() && !erased; ++c) {
        if (q.chain[c].marks.erase(i) > 0) {
            erased = true;
            if (q.chain[c].marks.empty()) {
                // The component lost its last mark: contract it out of the
                // chain. Neighbors keep their own coordinates; when the top
                // component dies, x_infinity passes to the next one down.
                q.chain.erase(q.chain.begin() + (std::ptrdiff_t)c);
            }
        }
    }
    if (!erased) throw InvalidMark("no mark " + std::to_string(i));
    for (auto& comp : q.chain) {
        std::map<int, Rat> out;
        for (const auto& [k, pos] : comp.marks) out[k > i ? k - 1 : k] = pos;
        comp.marks = std::move(out);
    }
    validate_fdrt(q);
    return q;
}

}  // namespace gatree
