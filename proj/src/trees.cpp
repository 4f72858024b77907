#include "gatree/trees.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace gatree {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Structural validation and stability.
// ---------------------------------------------------------------------------

static void collect_marks(const GaVertex& v, std::vector<int>& out) {
    for (const auto& [i, pos] : v.marks) {
        (void)pos;
        out.push_back(i);
    }
    for (const auto& [at, c] : v.children) {
        (void)at;
        collect_marks(c, out);
    }
}

static void validate_vertex(const GaVertex& v) {
    if (v.kind == GaVertex::Kind::Trunk) {
        if (!v.marks.empty()) throw MalformedTree("marks on a trunk component");
        std::set<Rat> ats;
        for (const auto& [at, c] : v.children) {
            if (!ats.insert(at).second)
                throw MalformedTree("duplicate attachment position " + rat_to_string(at));
            validate_vertex(c);
        }
    } else {
        if (!v.children.empty()) throw MalformedTree("children on a leaf component");
        if (v.speed == 0) throw MalformedTree("leaf speed must be nonzero");
    }
}

void validate_structure(const GaTree& tree) {
    if (tree.n < 1) throw MalformedTree("tree carries no marks");
    validate_vertex(tree.root);
    std::vector<int> idx;
    collect_marks(tree.root, idx);
    std::sort(idx.begin(), idx.end());
    if ((int)idx.size() != tree.n) throw MalformedTree("mark count differs from n");
    for (int i = 0; i < tree.n; ++i)
        if (idx[i] != i + 1) throw MalformedTree("mark indices are not exactly {1..n}");
}

static bool stable_vertex(const GaVertex& v) {
    if (v.kind == GaVertex::Kind::Trunk) {
        // A trunk is markless; with its parent node (or x_infinity at the
        // root) it needs >= 2 children to meet the counting test.
        if (v.children.size() < 2) return false;
        for (const auto& [at, c] : v.children) {
            (void)at;
            if (!stable_vertex(c)) return false;
        }
        return true;
    }
    return !v.marks.empty();
}

bool is_stable(const GaTree& tree) {
    validate_structure(tree);
    return stable_vertex(tree.root);
}

// ---------------------------------------------------------------------------
// Types.
// ---------------------------------------------------------------------------

int type_compare(const TypeNode& a, const TypeNode& b) {
    // Trunks sort before leaves; then by mark list; then by child list.
    if (a.leaf != b.leaf) return a.leaf ? 1 : -1;
    if (a.leaf) {
        if (a.marks != b.marks) return a.marks < b.marks ? -1 : 1;
        return 0;
    }
    size_t k = std::min(a.children.size(), b.children.size());
    for (size_t i = 0; i < k; ++i)
        if (int c = type_compare(a.children[i], b.children[i]); c != 0) return c;
    if (a.children.size() != b.children.size())
        return a.children.size() < b.children.size() ? -1 : 1;
    return 0;
}

static TypeNode shape_of(const GaVertex& v) {
    TypeNode t;
    if (v.kind == GaVertex::Kind::Leaf) {
        t.leaf = true;
        for (const auto& [i, pos] : v.marks) {
            (void)pos;
            t.marks.push_back(i);
        }
        std::sort(t.marks.begin(), t.marks.end());
    } else {
        t.leaf = false;
        for (const auto& [at, c] : v.children) {
            (void)at;
            t.children.push_back(shape_of(c));
        }
        std::sort(t.children.begin(), t.children.end(),
                  [](const TypeNode& a, const TypeNode& b) { return type_compare(a, b) < 0; });
    }
    return t;
}

StratumType canonical_type(const GaTree& tree) {
    if (!is_stable(tree)) throw MalformedTree("canonical_type requires a stable tree");
    StratumType s;
    s.space = StratumType::Space::P;
    s.n = tree.n;
    s.shape = shape_of(tree.root);
    return s;
}

StratumType canonical_type(const FDRTPoint& p) {
    if (p.t == 0) return canonical_type(p.tree);
    if (!is_stable(p)) throw MalformedTree("canonical_type requires a stable point");
    StratumType s;
    s.space = StratumType::Space::L;
    s.n = p.n;
    // Chain components are stored x_infinity-side first; the ordered
    // partition reads from the 0-side.
    for (auto it = p.chain.rbegin(); it != p.chain.rend(); ++it) {
        std::vector<int> block;
        for (const auto& [i, pos] : it->marks) {
            (void)pos;
            block.push_back(i);
        }
        std::sort(block.begin(), block.end());
        s.blocks.push_back(std::move(block));
    }
    return s;
}

static void validate_shape(const TypeNode& t, bool root, std::vector<int>& idx) {
    if (t.leaf) {
        if (t.marks.empty()) throw MalformedTree("leaf without marks in type");
        if (!t.children.empty()) throw MalformedTree("leaf with children in type");
        idx.insert(idx.end(), t.marks.begin(), t.marks.end());
    } else {
        (void)root;
        if (!t.marks.empty()) throw MalformedTree("marks on a trunk in type");
        if (t.children.size() < 2) throw MalformedTree("trunk with fewer than 2 children in type");
        for (const auto& c : t.children) validate_shape(c, false, idx);
    }
}

void validate_type(const StratumType& s) {
    if (s.n < 1) throw MalformedTree("type with no marks");
    std::vector<int> idx;
    if (s.space == StratumType::Space::P) {
        validate_shape(s.shape, true, idx);
    } else {
        for (const auto& b : s.blocks) {
            if (b.empty()) throw MalformedTree("empty block in ordered partition");
            idx.insert(idx.end(), b.begin(), b.end());
        }
    }
    std::sort(idx.begin(), idx.end());
    if ((int)idx.size() != s.n) throw MalformedTree("type mark count differs from n");
    for (int i = 0; i < s.n; ++i)
        if (idx[i] != i + 1) throw MalformedTree("type marks are not exactly {1..n}");
}

static void print_marks(const std::vector<int>& marks, std::string& out) {
    out += "{";
    for (size_t i = 0; i < marks.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(marks[i]);
    }
    out += "}";
}

static void print_shape_child(const TypeNode& t, std::string& out) {
    if (t.leaf) {
        print_marks(t.marks, out);
    } else {
        out += "(";
        for (size_t i = 0; i < t.children.size(); ++i) {
            if (i) out += ",";
            print_shape_child(t.children[i], out);
        }
        out += ")";
    }
}

bool StratumType::operator<(const StratumType& o) const {
    if (space != o.space) return space < o.space;
    if (n != o.n) return n < o.n;
    if (space == Space::L) return blocks < o.blocks;
    return type_compare(shape, o.shape) < 0;
}

std::string StratumType::to_string() const {
    std::string out;
    if (space == Space::P) {
        if (shape.leaf) {
            out += "⟨";  // ⟨
            print_marks(shape.marks, out);
            out += "⟩";  // ⟩
        } else {
            out += "⟨∞: ";  // ⟨∞:
            for (size_t i = 0; i < shape.children.size(); ++i) {
                if (i) out += ",";
                print_shape_child(shape.children[i], out);
            }
            out += "⟩";
        }
    } else {
        out += "(";
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (b) out += " | ";
            for (size_t i = 0; i < blocks[b].size(); ++i) {
                if (i) out += ",";
                out += std::to_string(blocks[b][i]);
            }
        }
        out += ")";
    }
    return out;
}

StratumType StratumType::parse_l(int n, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw std::invalid_argument("ordered partition must be parenthesized: " + text);
    s = s.substr(1, s.size() - 2);
    StratumType st;
    st.space = Space::L;
    st.n = n;
    std::vector<int> block;
    std::string tok;
    auto flush_tok = [&]() {
        if (tok.empty()) throw std::invalid_argument("empty mark in ordered partition: " + text);
        for (char c : tok)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("bad mark '" + tok + "' in ordered partition");
        block.push_back(std::stoi(tok));
        tok.clear();
    };
    auto flush_block = [&]() {
        flush_tok();
        std::sort(block.begin(), block.end());
        st.blocks.push_back(block);
        block.clear();
    };
    for (char c : s) {
        if (c == ',')
            flush_tok();
        else if (c == '|')
            flush_block();
        else
            tok += c;
    }
    flush_block();
    try {
        validate_type(st);
    } catch (const MalformedTree& e) {
        throw std::invalid_argument(std::string("bad ordered partition: ") + e.what());
    }
    return st;
}

// ---------------------------------------------------------------------------
// FDRT validation.
// ---------------------------------------------------------------------------

void validate_fdrt(const FDRTPoint& p) {
    if (p.t == 0) {
        if (p.tree.n != p.n) throw MalformedTree("mark count mismatch");
        validate_structure(p.tree);
        return;
    }
    if (p.n < 1 || p.chain.empty()) throw MalformedTree("empty chain");
    std::vector<int> idx;
    for (const auto& comp : p.chain) {
        for (const auto& [i, pos] : comp.marks) {
            if (pos == comp.fixed_point)
                throw MalformedTree("mark " + std::to_string(i) + " sits at a fixed point");
            idx.push_back(i);
        }
    }
    std::sort(idx.begin(), idx.end());
    if ((int)idx.size() != p.n) throw MalformedTree("mark count differs from n");
    for (int i = 0; i < p.n; ++i)
        if (idx[i] != i + 1) throw MalformedTree("mark indices are not exactly {1..n}");
}

bool is_stable(const FDRTPoint& p) {
    validate_fdrt(p);
    if (p.t == 0) return stable_vertex(p.tree.root);
    for (const auto& comp : p.chain)
        if (comp.marks.empty()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Canonical point forms.
// ---------------------------------------------------------------------------

static GaVertex canon_vertex(const GaVertex& v) {
    GaVertex out;
    out.kind = v.kind;
    if (v.kind == GaVertex::Kind::Leaf) {
        // Translate the lowest-index mark to 0 and rescale the field to
        // speed 1: w = (z - p0) / speed.
        Rat p0 = v.marks.begin()->second;
        for (const auto& [i, pos] : v.marks) out.marks[i] = (pos - p0) / v.speed;
        out.speed = 1;
        return out;
    }
    struct Item {
        TypeNode label;
        Rat at;
        GaVertex child;
    };
    std::vector<Item> items;
    items.reserve(v.children.size());
    for (const auto& [at, c] : v.children) items.push_back({shape_of(c), at, canon_vertex(c)});
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return type_compare(a.label, b.label) < 0; });
    // Fix the Moebius transform by (parent, first child, second child) ->
    // (infinity, 0, 1). Distinct mark sets make the order strict, and
    // distinct attachment positions make the denominator nonzero.
    Rat a1 = items[0].at, a2 = items[1].at;
    for (auto& it : items)
        out.children.emplace_back((it.at - a1) / (a2 - a1), std::move(it.child));
    return out;
}

GaTree canonical_point_form(const GaTree& tree) {
    if (!is_stable(tree)) throw MalformedTree("canonical_point_form requires a stable tree");
    GaTree out;
    out.n = tree.n;
    out.root = canon_vertex(tree.root);
    return out;
}

FDRTPoint canonical_fdrt_form(const FDRTPoint& p) {
    if (p.t == 0) {
        FDRTPoint out;
        out.t = 0;
        out.n = p.n;
        out.tree = canonical_point_form(p.tree);
        return out;
    }
    if (!is_stable(p)) throw MalformedTree("canonical form requires a stable point");
    FDRTPoint out;
    out.t = p.t;
    out.n = p.n;
    for (const auto& comp : p.chain) {
        // Scaling fixes both fixed points (0-like and infinity); use it to
        // put the lowest-index mark at 1: w = (z - z0) / (m0 - z0).
        ChainComp c;
        c.fixed_point = 0;
        Rat z0 = comp.fixed_point;
        Rat m0 = comp.marks.begin()->second;
        for (const auto& [i, pos] : comp.marks) c.marks[i] = (pos - z0) / (m0 - z0);
        out.chain.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Per-type invariants.
// ---------------------------------------------------------------------------

static void walk_shape(const TypeNode& t, int& dim, long long& chi, EPolynomial& ep, int& comps) {
    ++comps;
    if (t.leaf) {
        int k = (int)t.marks.size();
        dim += k - 1;
        ep *= EPolynomial::monomial(1, k - 1);
        return;
    }
    // A trunk with c children has m = c + 1 special points: the children
    // plus either its parent node or x_infinity at the root.
    int m = (int)t.children.size() + 1;
    dim += m - 3;
    long long f = 1;
    for (int j = 2; j <= m - 2; ++j) ep *= EPolynomial::q_minus(j);
    for (int j = 1; j <= m - 3; ++j) f *= j;
    if ((m - 3) % 2 == 1) f = -f;
    chi *= f;
    for (const auto& c : t.children) walk_shape(c, dim, chi, ep, comps);
}

static void p_invariants(const StratumType& s, int& dim, long long& chi, EPolynomial& ep,
                         int& comps) {
    dim = 0;
    chi = 1;
    ep = EPolynomial::one();
    comps = 0;
    walk_shape(s.shape, dim, chi, ep, comps);
}

int dimension(const StratumType& s) {
    validate_type(s);
    if (s.space == StratumType::Space::L) return s.n - (int)s.blocks.size();
    int dim, comps;
    long long chi;
    EPolynomial ep;
    p_invariants(s, dim, chi, ep, comps);
    return dim;
}

EPolynomial epoly_stratum(const StratumType& s) {
    validate_type(s);
    if (s.space == StratumType::Space::L) {
        EPolynomial ep = EPolynomial::one();
        int e = s.n - (int)s.blocks.size();
        for (int i = 0; i < e; ++i) ep *= EPolynomial::q_minus(1);
        return ep;
    }
    int dim, comps;
    long long chi;
    EPolynomial ep;
    p_invariants(s, dim, chi, ep, comps);
    return ep;
}

long long chi_stratum(const StratumType& s) {
    validate_type(s);
    if (s.space == StratumType::Space::L) {
        for (const auto& b : s.blocks)
            if (b.size() != 1) return 0;
        return 1;
    }
    int dim, comps;
    long long chi;
    EPolynomial ep;
    p_invariants(s, dim, chi, ep, comps);
    return chi;
}

int component_count(const StratumType& s) {
    validate_type(s);
    if (s.space == StratumType::Space::L) return (int)s.blocks.size();
    int dim, comps;
    long long chi;
    EPolynomial ep;
    p_invariants(s, dim, chi, ep, comps);
    return comps;
}

// ---------------------------------------------------------------------------
// Contraction sweep.
// ---------------------------------------------------------------------------

static void sweep_vertex(GaVertex& v, bool& changed) {
    if (v.kind == GaVertex::Kind::Leaf) return;
    for (auto& [at, c] : v.children) {
        (void)at;
        sweep_vertex(c, changed);
    }
    std::vector<std::pair<Rat, GaVertex>> out;
    out.reserve(v.children.size());
    for (auto& [at, c] : v.children) {
        if (c.kind == GaVertex::Kind::Leaf) {
            if (c.marks.empty()) {
                changed = true;  // markless leaf: delete
                continue;
            }
            out.emplace_back(at, std::move(c));
        } else if (c.children.empty()) {
            changed = true;  // childless trunk: delete
        } else if (c.children.size() == 1) {
            // One-child trunk: splice; the grandchild inherits the trunk's
            // own attachment position on this component.
            changed = true;
            out.emplace_back(at, std::move(c.children[0].second));
        } else {
            out.emplace_back(at, std::move(c));
        }
    }
    v.children = std::move(out);
}

void stabilize(GaTree& tree) {
    bool changed = true;
    while (changed) {
        changed = false;
        sweep_vertex(tree.root, changed);
        if (tree.root.kind == GaVertex::Kind::Trunk) {
            if (tree.root.children.empty())
                throw MalformedTree("contraction removed every mark-carrying component");
            if (tree.root.children.size() == 1) {
                // The root trunk dies; its only child inherits x_infinity at
                // the child's own coordinate infinity (the former node).
                GaVertex c = std::move(tree.root.children[0].second);
                tree.root = std::move(c);
                changed = true;
            }
        } else if (tree.root.marks.empty()) {
            throw MalformedTree("contraction removed every mark");
        }
    }
}

// ---------------------------------------------------------------------------
// Mark relabeling.
// ---------------------------------------------------------------------------

static void relabel_vertex(GaVertex& v, const std::vector<int>& perm) {
    std::map<int, Rat> m;
    for (const auto& [i, pos] : v.marks) m[perm[i - 1]] = pos;
    v.marks = std::move(m);
    for (auto& [at, c] : v.children) {
        (void)at;
        relabel_vertex(c, perm);
    }
}

GaTree relabel_marks(const GaTree& tree, const std::vector<int>& perm) {
    if ((int)perm.size() != tree.n) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < tree.n; ++i)
        if (sorted[i] != i + 1) throw std::invalid_argument("not a permutation of {1..n}");
    GaTree out = tree;
    relabel_vertex(out.root, perm);
    return out;
}

// ---------------------------------------------------------------------------
// JSON.
// ---------------------------------------------------------------------------

static json vertex_to_json(const GaVertex& v) {
    json j;
    j["kind"] = v.kind == GaVertex::Kind::Trunk ? "trunk" : "leaf";
    json marks = json::array();
    json positions = json::object();
    for (const auto& [i, pos] : v.marks) {
        marks.push_back(i);
        positions[std::to_string(i)] = rat_to_string(pos);
    }
    j["marks"] = marks;
    if (v.kind == GaVertex::Kind::Leaf) {
        j["positions"] = positions;
        j["speed"] = rat_to_string(v.speed);
    } else {
        json kids = json::array();
        for (const auto& [at, c] : v.children) {
            json e;
            e["at"] = rat_to_string(at);
            e["vertex"] = vertex_to_json(c);
            kids.push_back(std::move(e));
        }
        j["children"] = kids;
    }
    return j;
}

std::string tree_to_json(const GaTree& tree, bool with_indent) {
    json j;
    j["n"] = tree.n;
    j["root"] = vertex_to_json(tree.root);
    return with_indent ? j.dump(2) : j.dump();
}

static Rat rat_from_json(const json& j, const std::string& what) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw std::invalid_argument("expected rational string for " + what);
}

static GaVertex vertex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("vertex must be an object with a kind");
    GaVertex v;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "trunk")
        v.kind = GaVertex::Kind::Trunk;
    else if (kind == "leaf")
        v.kind = GaVertex::Kind::Leaf;
    else
        throw std::invalid_argument("unknown vertex kind: " + kind);
    if (j.contains("marks")) {
        json positions = j.contains("positions") ? j.at("positions") : json(json::object());
        for (const auto& m : j.at("marks")) {
            int idx = m.get<int>();
            std::string key = std::to_string(idx);
            if (!positions.contains(key))
                throw MalformedTree("mark " + key + " has no position");
            v.marks[idx] = rat_from_json(positions.at(key), "position of mark " + key);
        }
    }
    if (j.contains("speed")) v.speed = rat_from_json(j.at("speed"), "speed");
    if (j.contains("children"))
        for (const auto& e : j.at("children"))
            v.children.emplace_back(rat_from_json(e.at("at"), "attachment"),
                                    vertex_from_json(e.at("vertex")));
    return v;
}

GaTree tree_from_json(const std::string& text) {
    json j = json::parse(text);
    GaTree t;
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw std::invalid_argument("tree JSON needs an integer n");
    t.n = j.at("n").get<int>();
    t.root = vertex_from_json(j.at("root"));
    validate_structure(t);
    return t;
}

static json chain_to_json(const std::vector<ChainComp>& chain, size_t i) {
    json j;
    j["kind"] = "mult";
    json marks = json::array();
    json positions = json::object();
    for (const auto& [m, pos] : chain[i].marks) {
        marks.push_back(m);
        positions[std::to_string(m)] = rat_to_string(pos);
    }
    j["marks"] = marks;
    j["positions"] = positions;
    j["fixed"] = rat_to_string(chain[i].fixed_point);
    if (i + 1 < chain.size()) {
        json e;
        e["at"] = rat_to_string(chain[i].fixed_point);
        e["vertex"] = chain_to_json(chain, i + 1);
        j["children"] = json::array({std::move(e)});
    } else {
        j["children"] = json::array();
    }
    return j;
}

std::string fdrt_to_json(const FDRTPoint& p, bool with_indent) {
    json j;
    j["t"] = rat_to_string(p.t);
    j["n"] = p.n;
    if (p.t == 0)
        j["root"] = vertex_to_json(p.tree.root);
    else
        j["root"] = chain_to_json(p.chain, 0);
    return with_indent ? j.dump(2) : j.dump();
}

FDRTPoint fdrt_from_json(const std::string& text) {
    json j = json::parse(text);
    FDRTPoint p;
    p.t = j.contains("t") ? rat_from_json(j.at("t"), "t") : Rat(0);
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw std::invalid_argument("point JSON needs an integer n");
    p.n = j.at("n").get<int>();
    if (p.t == 0) {
        p.tree.n = p.n;
        p.tree.root = vertex_from_json(j.at("root"));
        validate_fdrt(p);
        return p;
    }
    json cur = j.at("root");
    while (true) {
        if (!cur.is_object() || cur.at("kind").get<std::string>() != "mult")
            throw std::invalid_argument("t != 0 points must be chains of mult components");
        ChainComp comp;
        comp.fixed_point = rat_from_json(cur.at("fixed"), "fixed point");
        json positions = cur.contains("positions") ? cur.at("positions") : json(json::object());
        if (cur.contains("marks"))
            for (const auto& m : cur.at("marks")) {
                int idx = m.get<int>();
                std::string key = std::to_string(idx);
                if (!positions.contains(key)) throw MalformedTree("mark " + key + " has no position");
                comp.marks[idx] = rat_from_json(positions.at(key), "position of mark " + key);
            }
        json kids = cur.contains("children") ? cur.at("children") : json(json::array());
        p.chain.push_back(std::move(comp));
        if (kids.empty()) break;
        if (kids.size() > 1)
            throw MalformedTree("a chain component can carry at most one child");
        if (rat_from_json(kids[0].at("at"), "attachment") != p.chain.back().fixed_point)
            throw MalformedTree("chain child must attach at the fixed point");
        cur = kids[0].at("vertex");
    }
    validate_fdrt(p);
    return p;
}

// ---------------------------------------------------------------------------
// DOT export.
// ---------------------------------------------------------------------------

static void dot_vertex(const GaVertex& v, std::ostringstream& os, int& counter, int parent,
                       const Rat* at) {
    int id = counter++;
    os << "  v" << id << " [label=\"";
    if (v.kind == GaVertex::Kind::Trunk) {
        os << "trunk";
    } else {
        os << "leaf speed " << rat_to_string(v.speed);
        for (const auto& [i, pos] : v.marks) os << "\\nx" << i << " = " << rat_to_string(pos);
    }
    if (parent < 0) os << "\\nx_inf at inf";
    os << "\"];\n";
    if (parent >= 0)
        os << "  v" << parent << " -> v" << id << " [label=\"" << rat_to_string(*at) << "\"];\n";
    for (const auto& [cat, c] : v.children) dot_vertex(c, os, counter, id, &cat);
}

std::string tree_to_dot(const GaTree& tree, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  node [shape=box];\n";
    int counter = 0;
    dot_vertex(tree.root, os, counter, -1, nullptr);
    os << "}\n";
    return os.str();
}

static void dot_shape(const TypeNode& t, std::ostringstream& os, int& counter, int parent) {
    int id = counter++;
    os << "  v" << id << " [label=\"";
    if (t.leaf) {
        std::string m;
        print_marks(t.marks, m);
        os << "leaf " << m;
    } else {
        os << "trunk";
    }
    if (parent < 0) os << "\\nx_inf";
    os << "\"];\n";
    if (parent >= 0) os << "  v" << parent << " -> v" << id << ";\n";
    for (const auto& c : t.children) dot_shape(c, os, counter, id);
}

std::string type_to_dot(const StratumType& s, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  node [shape=box];\n";
    if (s.space == StratumType::Space::P) {
        int counter = 0;
        dot_shape(s.shape, os, counter, -1);
    } else {
        // Chain picture for an ordered partition, 0-side first.
        for (size_t b = 0; b < s.blocks.size(); ++b) {
            os << "  b" << b << " [label=\"";
            for (size_t i = 0; i < s.blocks[b].size(); ++i)
                os << (i ? "," : "") << s.blocks[b][i];
            os << (b + 1 == s.blocks.size() ? "\\nx_inf side" : "") << "\"];\n";
            if (b) os << "  b" << b - 1 << " -> b" << b << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace gatree
