#include "pafp/layering.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>

#include "pafp/errors.hpp"

namespace pafp {

int LayerProfile::reachable_count() const {
    int c = 0;
    for (std::size_t v = 1; v < dist.size(); ++v)
        if (dist[v]) ++c;
    return c;
}

LayerProfile layer_profile(const Digraph& g, Vertex root) {
    const int n = g.vertex_count();
    LayerProfile p;
    p.root = root;
    p.dist.assign(static_cast<std::size_t>(n) + 1, std::nullopt);
    if (root < 1 || root > n) throw std::invalid_argument("layer_profile: root out of range");

    p.dist[root] = 0;
    std::deque<Vertex> queue{root};
    int max_d = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.out(u)) {
            if (!p.dist[v]) {
                p.dist[v] = *p.dist[u] + 1;
                max_d = std::max(max_d, *p.dist[v]);
                queue.push_back(v);
            }
        }
    }

    p.layers.assign(static_cast<std::size_t>(max_d) + 1, {});
    for (Vertex v = 1; v <= n; ++v)
        if (p.dist[v]) p.layers[static_cast<std::size_t>(*p.dist[v])].push_back(v);
    for (auto& layer : p.layers) {
        // vertices discovered in index order, but keep the invariant explicit
        std::sort(layer.begin(), layer.end());
        p.width = std::max(p.width, static_cast<int>(layer.size()));
    }

    for (auto [u, v] : g.arcs())
        if (p.dist[u] && p.dist[v] && *p.dist[v] < *p.dist[u]) p.backward.emplace_back(u, v);
    return p;
}

ExactLengthProfile exact_length_profile(const Digraph& g, Vertex root) {
    if (!is_dag(g)) throw precondition_error("exact_length_profile: graph is not a DAG");
    const int n = g.vertex_count();
    if (root < 1 || root > n) throw std::invalid_argument("exact_length_profile: root out of range");

    ExactLengthProfile p;
    p.layers.assign(static_cast<std::size_t>(n), {});
    p.layers[0] = {root};
    p.width = 1;
    std::vector<int> stamp(static_cast<std::size_t>(n) + 1, -1);
    for (int d = 1; d < n; ++d) {
        auto& next = p.layers[static_cast<std::size_t>(d)];
        for (Vertex u : p.layers[static_cast<std::size_t>(d) - 1]) {
            for (Vertex v : g.out(u)) {
                if (stamp[v] != d) {
                    stamp[v] = d;
                    next.push_back(v);
                }
            }
        }
        std::sort(next.begin(), next.end());
        p.width = std::max(p.width, static_cast<int>(next.size()));
        if (next.empty()) break;  // all later layers stay empty on a DAG
    }
    return p;
}

namespace {

// Strongly connected components, iterative Tarjan restricted to a vertex
// mask. comp ids are assigned in pop order (reverse topological).
struct SccResult {
    std::vector<int> comp;  // vertex -> comp id, -1 outside the mask
    int count = 0;
};

SccResult tarjan_scc(const Digraph& g, const std::vector<char>& in_set) {
    const int n = g.vertex_count();
    SccResult res;
    res.comp.assign(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> index(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> lowlink(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> stack;
    int next_index = 0;

    struct Frame {
        Vertex v;
        std::size_t child;
    };
    std::vector<Frame> call;

    for (Vertex start = 1; start <= n; ++start) {
        if (!in_set[start] || index[start] != -1) continue;
        call.push_back({start, 0});
        index[start] = lowlink[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = 1;
        while (!call.empty()) {
            auto& fr = call.back();
            const auto& outs = g.out(fr.v);
            bool descended = false;
            while (fr.child < outs.size()) {
                Vertex w = outs[fr.child++];
                if (!in_set[w]) continue;
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[fr.v] = std::min(lowlink[fr.v], index[w]);
            }
            if (descended) continue;
            Vertex v = fr.v;
            call.pop_back();
            if (!call.empty()) lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
            if (lowlink[v] == index[v]) {
                while (true) {
                    Vertex w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    res.comp[w] = res.count;
                    if (w == v) break;
                }
                ++res.count;
            }
        }
    }
    return res;
}

TotalOrder kahn_min_index_order(const Digraph& g, const std::vector<char>& in_set) {
    const int n = g.vertex_count();
    SccResult scc = tarjan_scc(g, in_set);

    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(scc.count));
    for (Vertex v = 1; v <= n; ++v)
        if (scc.comp[v] >= 0) members[static_cast<std::size_t>(scc.comp[v])].push_back(v);
    // membership collected in ascending vertex order already

    std::vector<Arc> cedges;
    for (Vertex u = 1; u <= n; ++u) {
        if (!in_set[u]) continue;
        for (Vertex v : g.out(u)) {
            if (!in_set[v]) continue;
            int cu = scc.comp[u], cv = scc.comp[v];
            if (cu != cv) cedges.emplace_back(cu, cv);
        }
    }
    std::sort(cedges.begin(), cedges.end());
    cedges.erase(std::unique(cedges.begin(), cedges.end()), cedges.end());

    std::vector<int> indeg(static_cast<std::size_t>(scc.count), 0);
    std::vector<std::vector<int>> cadj(static_cast<std::size_t>(scc.count));
    for (auto [cu, cv] : cedges) {
        cadj[static_cast<std::size_t>(cu)].push_back(cv);
        ++indeg[static_cast<std::size_t>(cv)];
    }

    // min-heap on (smallest member vertex, comp id)
    using HeapItem = std::pair<Vertex, int>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>> heap;
    for (int c = 0; c < scc.count; ++c)
        if (indeg[static_cast<std::size_t>(c)] == 0)
            heap.emplace(members[static_cast<std::size_t>(c)].front(), c);

    TotalOrder order;
    order.rank_of.assign(static_cast<std::size_t>(n) + 1, -1);
    while (!heap.empty()) {
        auto [minv, c] = heap.top();
        heap.pop();
        for (Vertex v : members[static_cast<std::size_t>(c)]) {
            order.rank_of[v] = static_cast<int>(order.by_rank.size());
            order.by_rank.push_back(v);
        }
        for (int d : cadj[static_cast<std::size_t>(c)])
            if (--indeg[static_cast<std::size_t>(d)] == 0)
                heap.emplace(members[static_cast<std::size_t>(d)].front(), d);
    }
    return order;
}

}  // namespace

TotalOrder reachability_order(const Digraph& g) {
    std::vector<char> all(static_cast<std::size_t>(g.vertex_count()) + 1, 1);
    if (!all.empty()) all[0] = 0;
    return kahn_min_index_order(g, all);
}

TotalOrder reachability_order_induced(const Digraph& g, const std::vector<char>& in_set) {
    return kahn_min_index_order(g, in_set);
}

Digraph union_digraph(const PafpInstance& inst) {
    TotalOrder order = reachability_order(inst.graph);
    Digraph h = inst.graph;
    for (auto [u, v] : inst.pairs) {
        if (order.less(u, v))
            h.add_arc(u, v);
        else
            h.add_arc(v, u);
    }
    return h;
}

int backward_count(const Digraph& g, Vertex root) {
    return static_cast<int>(layer_profile(g, root).backward.size());
}

}  // namespace pafp
