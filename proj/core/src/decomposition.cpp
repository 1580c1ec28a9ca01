#include "pafp/decomposition.hpp"

#include <algorithm>
#include <string>

#include "pafp/errors.hpp"
#include "pafp/layering.hpp"

namespace pafp {

std::vector<Vertex> UndirectedGraph::vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= n; ++v)
        if (in_set[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

UndirectedGraph union_constraint_graph(const PafpInstance& inst,
                                       const std::vector<Vertex>& restrict_to) {
    UndirectedGraph g;
    g.n = inst.graph.vertex_count();
    g.in_set.assign(static_cast<std::size_t>(g.n) + 1, 0);
    for (Vertex v : restrict_to) {
        if (v < 1 || v > g.n) throw parse_error("restriction vertex " + std::to_string(v) + " out of range");
        g.in_set[static_cast<std::size_t>(v)] = 1;
    }

    auto keep = [&](Vertex u, Vertex v) {
        return g.in_set[static_cast<std::size_t>(u)] && g.in_set[static_cast<std::size_t>(v)];
    };
    for (auto [u, v] : inst.graph.arcs())
        if (keep(u, v)) g.edges.emplace_back(std::min(u, v), std::max(u, v));
    for (auto [u, v] : inst.pairs)
        if (keep(u, v)) g.edges.emplace_back(u, v);
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

int PathDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

PathDecomposition build_bfs_bags(const PafpInstance& inst) {
    Digraph h = union_digraph(inst);
    LayerProfile prof = layer_profile(h, inst.source);

    std::vector<Vertex> anchors;  // endpoints of backward arcs sit in every bag
    for (auto [u, v] : prof.backward) {
        anchors.push_back(u);
        anchors.push_back(v);
    }
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());

    PathDecomposition pd;
    const int depth = static_cast<int>(prof.layers.size()) - 1;
    for (int d = 0; d <= depth; ++d) {
        std::vector<Vertex> bag = prof.layers[static_cast<std::size_t>(d)];
        if (d + 1 <= depth) {
            const auto& next = prof.layers[static_cast<std::size_t>(d) + 1];
            bag.insert(bag.end(), next.begin(), next.end());
        }
        bag.insert(bag.end(), anchors.begin(), anchors.end());
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        pd.bags.push_back(std::move(bag));
    }
    return pd;
}

DecompositionCheck verify_decomposition(const UndirectedGraph& g, const PathDecomposition& pd) {
    auto in_bag = [&](std::size_t b, Vertex v) {
        const auto& bag = pd.bags[b];
        return std::binary_search(bag.begin(), bag.end(), v);
    };

    for (Vertex v : g.vertices()) {
        std::size_t first = pd.bags.size(), last = 0;
        int hits = 0;
        for (std::size_t b = 0; b < pd.bags.size(); ++b) {
            if (in_bag(b, v)) {
                first = std::min(first, b);
                last = std::max(last, b);
                ++hits;
            }
        }
        if (hits == 0)
            return {false, "vertex " + std::to_string(v) + " is in no bag"};
        if (static_cast<std::size_t>(hits) != last - first + 1)
            return {false, "bags containing vertex " + std::to_string(v) + " are not contiguous"};
    }

    for (auto [u, v] : g.edges) {
        bool covered = false;
        for (std::size_t b = 0; b < pd.bags.size() && !covered; ++b)
            covered = in_bag(b, u) && in_bag(b, v);
        if (!covered)
            return {false, "edge {" + std::to_string(u) + ", " + std::to_string(v) +
                               "} is in no bag"};
    }
    return {};
}

}  // namespace pafp
