#pragma once

#include <string>
#include <vector>

#include "gatree/trees.hpp"

namespace gatree {

// A point of the curve underlying an FDRTPoint. The component is named by
// child indices from the root (for chains every step is 0); on it the point
// is a finite coordinate, the coordinate infinity (x_infinity at the root,
// the node toward the parent anywhere else), or a node named from the parent
// side by child index. A finite coordinate that happens to be a child's
// attachment position names that node.
struct CurveLocation {
    enum class Kind { Finite, Infinity, Node };

    std::vector<int> vertex_path;
    Kind kind = Kind::Finite;
    Rat coordinate = 0;  // Kind::Finite only
    int node_child = 0;  // Kind::Node only

    static CurveLocation at(std::vector<int> path, Rat z);
    static CurveLocation at_infinity(std::vector<int> path = {});
    static CurveLocation at_node(std::vector<int> path, int child);
};

// JSON form: {"vertex": [child indices], "at": "5/3" | "infinity" | {"node": k}}.
std::string location_to_json(const CurveLocation& loc);
CurveLocation location_from_json(const std::string& text);

// The one-marked start of every tower: mark 1 at coordinate 1 under the
// field (1 + t x) d/dx. At t = 0 that is a single translation component; at
// t != 0 a single component with fixed points at infinity and -1/t.
FDRTPoint seed_curve(const Rat& t);

// The deformation parameter of the field; 0 exactly on the t = 0 fiber.
Rat coresidue(const FDRTPoint& p);

// Add mark n+1 at the given location. Bubbling happens in two stages: at
// x_infinity or at a node, a new component is interposed first (node at 0,
// transported special point at infinity, the mark at 1); then, wherever the
// field vanishes at the mark's position, the mark moves onto a further
// bubble carrying a nontrivial induced action. Inserting at an existing
// mark's exact position is a plain coincidence, never a bubble. Throws
// InvalidLocation when loc does not name a point of the curve.
FDRTPoint insert_mark(const FDRTPoint& p, const CurveLocation& loc);

// Remove mark i, contract whatever became unstable, and renumber the marks
// above i down by one. The deformation parameter is preserved. Throws
// LastMark when n = 1 and InvalidMark for an index outside 1..n.
FDRTPoint forget_mark(const FDRTPoint& p, int i);

}  // namespace gatree
