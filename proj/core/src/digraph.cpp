#include "pafp/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pafp {

Digraph::Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n) + 1) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
}

void Digraph::check_vertex(Vertex v) const {
    if (v < 1 || v > n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                    std::to_string(n_));
}

bool Digraph::add_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop arc (" + std::to_string(u) + ")");
    auto& lst = out_[u];
    auto it = std::lower_bound(lst.begin(), lst.end(), v);
    if (it != lst.end() && *it == v) return false;
    lst.insert(it, v);
    ++arc_count_;
    return true;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    const auto& lst = out_[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

const std::vector<Vertex>& Digraph::out(Vertex u) const {
    check_vertex(u);
    return out_[u];
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(static_cast<std::size_t>(arc_count_));
    for (Vertex u = 1; u <= n_; ++u)
        for (Vertex v : out_[u]) result.emplace_back(u, v);
    return result;
}

bool is_dag(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> indeg(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v : g.out(u)) ++indeg[v];
    std::vector<Vertex> queue;
    for (Vertex v = 1; v <= n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    while (!queue.empty()) {
        Vertex u = queue.back();
        queue.pop_back();
        ++seen;
        for (Vertex v : g.out(u))
            if (--indeg[v] == 0) queue.push_back(v);
    }
    return seen == n;
}

}  // namespace pafp
