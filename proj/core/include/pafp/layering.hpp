#pragma once

#include <optional>
#include <vector>

#include "pafp/instance.hpp"

namespace pafp {

// Breadth-first view of a digraph from a root: shortest-path distances,
// the layers they induce, and the arcs that jump to a strictly smaller
// layer ("backward arcs", both endpoints reachable).
struct LayerProfile {
    Vertex root = 0;
    std::vector<std::optional<int>> dist;     // index 1..n; nullopt = unreachable
    std::vector<std::vector<Vertex>> layers;  // layers[d] sorted; d = 0..max depth
    int width = 0;                            // max layer size (>= 1)
    std::vector<Arc> backward;                // sorted ascending

    bool reachable(Vertex v) const { return dist[v].has_value(); }
    int reachable_count() const;
};

LayerProfile layer_profile(const Digraph& g, Vertex root);

// Vertices grouped by *exact* walk length from the root: layers[0] = {root},
// and v is in layers[d] iff some arc (u, v) has u in layers[d-1]. Only
// meaningful on DAGs, where every such vertex is reached by a genuine
// length-d path.
struct ExactLengthProfile {
    std::vector<std::vector<Vertex>> layers;  // d = 0..n-1, each sorted
    int width = 0;                            // max layer size
};

// Throws precondition_error if g is not a DAG.
ExactLengthProfile exact_length_profile(const Digraph& g, Vertex root);

// A total order on a vertex set, as rank bijection plus its inverse.
struct TotalOrder {
    std::vector<int> rank_of;      // vertex -> rank; -1 if not in the set
    std::vector<Vertex> by_rank;   // rank -> vertex

    bool contains(Vertex v) const { return rank_of[v] >= 0; }
    bool less(Vertex u, Vertex v) const { return rank_of[u] < rank_of[v]; }
    int size() const { return static_cast<int>(by_rank.size()); }
};

// Deterministic reachability-compatible total order: if u reaches v but v
// does not reach u then u ranks below v. Computed as a Kahn pass over the
// strongly-connected-component condensation with a min-heap keyed by each
// component's smallest vertex; members of a component are listed ascending.
// On DAGs this degenerates to Kahn's algorithm with min-index tie-breaks.
TotalOrder reachability_order(const Digraph& g);

// The same rule applied to the sub-digraph induced by in_set (index 1..n).
TotalOrder reachability_order_induced(const Digraph& g, const std::vector<char>& in_set);

// The instance graph plus one arc per forbidden pair, the pair oriented from
// the lower-ranked endpoint under reachability_order(graph). Arcs already
// present are not duplicated.
Digraph union_digraph(const PafpInstance& inst);

int backward_count(const Digraph& g, Vertex root);

}  // namespace pafp
