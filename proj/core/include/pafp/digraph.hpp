#pragma once

#include <utility>
#include <vector>

namespace pafp {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;  // (tail, head)

// Loop-free directed graph on the dense vertex set 1..n with arc-set
// semantics: inserting an arc twice is a no-op. Out-lists are kept sorted
// ascending, which makes every traversal in the library deterministic.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);

    int vertex_count() const { return n_; }
    int arc_count() const { return arc_count_; }

    // Returns false if the arc was already present. Throws
    // std::invalid_argument on loops or endpoints outside 1..n.
    bool add_arc(Vertex u, Vertex v);
    bool has_arc(Vertex u, Vertex v) const;

    const std::vector<Vertex>& out(Vertex u) const;

    // All arcs ascending by (tail, head).
    std::vector<Arc> arcs() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    int arc_count_ = 0;
    std::vector<std::vector<Vertex>> out_;  // index 1..n; [0] unused
};

bool is_dag(const Digraph& g);

}  // namespace pafp
