#pragma once

#include <string>
#include <vector>

#include "pafp/instance.hpp"

namespace pafp {

// Undirected view of an instance restricted to a vertex subset: one edge
// {u, v} for every arc or forbidden pair with both endpoints inside.
struct UndirectedGraph {
    int n = 0;                      // vertex universe 1..n
    std::vector<char> in_set;       // index 1..n
    std::vector<VertexPair> edges;  // u < v, sorted, unique

    std::vector<Vertex> vertices() const;  // members, ascending
};

UndirectedGraph union_constraint_graph(const PafpInstance& inst,
                                       const std::vector<Vertex>& restrict_to);

struct PathDecomposition {
    std::vector<std::vector<Vertex>> bags;  // each sorted ascending

    int width() const;  // max bag size - 1; -1 when there are no bags
};

// Path decomposition of the undirected view of the combined graph-plus-pairs
// digraph, restricted to the part reachable from the source: bag d holds
// layers d and d+1 plus every endpoint of a backward arc. With layer width b
// and beta backward arcs the width is at most 2b + 2*beta - 1.
PathDecomposition build_bfs_bags(const PafpInstance& inst);

struct DecompositionCheck {
    bool ok = true;
    std::string violation;  // human-readable description of the first failure
};

// Checks the three path-decomposition invariants: every member vertex in
// some bag, the bags containing a vertex form a contiguous run, and every
// edge contained in some bag.
DecompositionCheck verify_decomposition(const UndirectedGraph& g,
                                        const PathDecomposition& pd);

}  // namespace pafp
