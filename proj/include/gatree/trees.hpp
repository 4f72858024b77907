#pragma once

#include <map>
#include <string>
#include <vector>

#include "gatree/epoly.hpp"
#include "gatree/errors.hpp"
#include "gatree/rational.hpp"

namespace gatree {

// ---------------------------------------------------------------------------
// Marked trees over a point.
//
// A GaTree is the limit object at t = 0: a tree of rational components where
// the extra point x_infinity sits at coordinate infinity of the root. Each
// component is either a trunk (the vector field vanishes identically on it;
// carries no marks) or a leaf (the field is a nonzero constant field with
// the stated speed; carries the marks at finite coordinates; its fixed point
// is infinity, which is also the node toward the parent). Children hang off
// trunks at pairwise distinct finite coordinates.
// ---------------------------------------------------------------------------

struct GaVertex {
    enum class Kind { Trunk, Leaf };
    Kind kind = Kind::Leaf;
    std::map<int, Rat> marks;  // mark index -> finite coordinate (leaf only)
    Rat speed = 1;             // leaf only; nonzero
    std::vector<std::pair<Rat, GaVertex>> children;  // trunk only: (attachment, child)

    bool operator==(const GaVertex& o) const {
        return kind == o.kind && marks == o.marks &&
               (kind == Kind::Leaf ? speed == o.speed : true) && children == o.children;
    }
};

struct GaTree {
    int n = 0;
    GaVertex root;
    bool operator==(const GaTree& o) const { return n == o.n && root == o.root; }
};

// Throws MalformedTree on structural violations: empty tree (n = 0 or no
// marks), marks on a trunk, children on a leaf, zero speed, duplicate
// attachment positions, or mark indices not exactly {1..n}.
void validate_structure(const GaTree& tree);

// True iff every component passes the counting test: a markless component
// must meet at least 3 others, or host x_infinity and meet at least 2.
// Equivalently here: every trunk has >= 2 children and every leaf >= 1 mark
// (the irreducible single-leaf tree is stable with any n >= 1).
// Throws MalformedTree on structurally invalid input.
bool is_stable(const GaTree& tree);

// ---------------------------------------------------------------------------
// Coordinate-free shapes (stratum types).
// ---------------------------------------------------------------------------

// The shape of a tree: kinds and mark sets, no coordinates. Children are
// kept sorted by the canonical order (trunks before leaves, then by mark
// content); two subtrees of a common parent always have disjoint mark sets,
// so the order is strict.
struct TypeNode {
    bool leaf = true;
    std::vector<int> marks;           // leaf only; sorted
    std::vector<TypeNode> children;   // trunk only; sorted canonically

    bool operator==(const TypeNode& o) const {
        return leaf == o.leaf && marks == o.marks && children == o.children;
    }
};

// Three-way canonical comparison; defines the child sort order.
int type_compare(const TypeNode& a, const TypeNode& b);

struct StratumType {
    enum class Space { P, L };
    Space space = Space::P;
    int n = 0;
    TypeNode shape;                        // space == P
    std::vector<std::vector<int>> blocks;  // space == L; ordered 0-side block
                                           // first; elements sorted within a block

    bool operator==(const StratumType& o) const {
        if (space != o.space || n != o.n) return false;
        return space == Space::P ? shape == o.shape : blocks == o.blocks;
    }
    bool operator!=(const StratumType& o) const { return !(*this == o); }
    // Strict total order (space, n, then blocks / canonical shape order);
    // lets types live in ordered sets.
    bool operator<(const StratumType& o) const;

    // P notation: <{1,2,3}>, <oo: {1,2},{3}>, <oo: ({1},{2}),{3}> (nested
    // trunks parenthesized). L notation: "(1,2 | 3)".
    std::string to_string() const;

    // Parse the L notation "(1,2 | 3)" into an ordered partition of {1..n}.
    // Throws std::invalid_argument on malformed text or a non-partition.
    static StratumType parse_l(int n, const std::string& text);
};

// Validates the combinatorial stability of a type (P: every trunk >= 2
// children, every leaf >= 1 mark, marks partition {1..n}; L: nonempty blocks
// partitioning {1..n}). Throws MalformedTree.
void validate_type(const StratumType& s);

// ---------------------------------------------------------------------------
// Field-decorated points: both fibers of the one-parameter degeneration.
// At t = 0 the point is a GaTree. At t != 0 the curve is a chain of
// multiplicative components, stored root-first (x_infinity side first);
// each component has its finite fixed point at `fixed_point`, its node to
// the parent at infinity, and the next component attached at `fixed_point`.
// ---------------------------------------------------------------------------

struct ChainComp {
    std::map<int, Rat> marks;  // mark index -> coordinate (not 0-like fixed, not infinity)
    Rat fixed_point = 0;
    bool operator==(const ChainComp& o) const {
        return marks == o.marks && fixed_point == o.fixed_point;
    }
};

struct FDRTPoint {
    Rat t = 0;
    int n = 0;
    GaTree tree;                   // meaningful when t == 0
    std::vector<ChainComp> chain;  // meaningful when t != 0
    bool operator==(const FDRTPoint& o) const {
        if (!(t == o.t) || n != o.n) return false;
        return t == 0 ? tree == o.tree : chain == o.chain;
    }
};

// Structural validation of an FDRTPoint (delegates to validate_structure at
// t = 0; at t != 0 checks the chain shape and mark placement).
void validate_fdrt(const FDRTPoint& p);
// Stability of the underlying curve (each chain component needs >= 1 mark).
bool is_stable(const FDRTPoint& p);

// ---------------------------------------------------------------------------
// Canonical forms and invariants.
// ---------------------------------------------------------------------------

// Coordinate-free classification. Requires a stable input.
StratumType canonical_type(const GaTree& tree);
StratumType canonical_type(const FDRTPoint& p);

// The canonical representative of the isomorphism class: every leaf gets
// speed 1 with its lowest-index mark at 0; every trunk is normalized so the
// first two children in canonical order sit at 0 and 1 (the parent node at
// infinity). Idempotent; two stable trees are isomorphic iff their canonical
// forms are equal.
GaTree canonical_point_form(const GaTree& tree);

// Canonical representative of a t != 0 chain: each component maps its fixed
// point to 0 and its lowest-index mark to 1. At t = 0 delegates to
// canonical_point_form.
FDRTPoint canonical_fdrt_form(const FDRTPoint& p);

int dimension(const StratumType& s);
EPolynomial epoly_stratum(const StratumType& s);
long long chi_stratum(const StratumType& s);
int component_count(const StratumType& s);

// ---------------------------------------------------------------------------
// Surgery helpers shared by the limit construction and the mark operations.
// ---------------------------------------------------------------------------

// Contract unstable pieces in place until stable: markless leaves are
// deleted, trunks with one child are spliced out (the child inherits the
// trunk's attachment position), childless non-root trunks are deleted, and a
// single-child root trunk hands the root to its child. Throws MalformedTree
// if nothing mark-carrying remains.
void stabilize(GaTree& tree);

// Apply the permutation perm (1-based: old index i becomes perm[i-1]) to the
// mark indices. perm must be a permutation of {1..n}.
GaTree relabel_marks(const GaTree& tree, const std::vector<int>& perm);

// ---------------------------------------------------------------------------
// Serialization.
// ---------------------------------------------------------------------------

// JSON: {"n": int, "root": vertex}; vertex = {"kind": "trunk"|"leaf",
// "marks": [int], "positions": {"<mark>": "rational"}, "speed": "rational"
// (leaf), "children": [{"at": "rational", "vertex": ...}] (trunk)}.
std::string tree_to_json(const GaTree& tree, bool with_indent = true);
GaTree tree_from_json(const std::string& text);

// FDRT points add "t" at top level; t != 0 vertices use kind "mult" with
// "fixed" for the finite fixed point.
std::string fdrt_to_json(const FDRTPoint& p, bool with_indent = true);
FDRTPoint fdrt_from_json(const std::string& text);

// GraphViz rendering of a tree (with coordinates) or a type (shape only).
std::string tree_to_dot(const GaTree& tree, const std::string& name = "tree");
std::string type_to_dot(const StratumType& s, const std::string& name = "type");

}  // namespace gatree
