#include "pafp/oracle.hpp"

#include <limits>
#include <vector>

#include "pafp/errors.hpp"
#include "pafp/layering.hpp"

namespace pafp {

namespace {

struct Dfs {
    const PafpInstance& inst;
    std::vector<std::vector<Vertex>> partner;  // v -> pair partners of v
    std::vector<char> on_path;
    std::vector<Vertex> path;
    long long budget;
    long long expanded = 0;
    bool out_of_budget = false;

    explicit Dfs(const PafpInstance& i, long long b) : inst(i), budget(b) {
        const std::size_t n = static_cast<std::size_t>(i.graph.vertex_count());
        partner.assign(n + 1, {});
        on_path.assign(n + 1, 0);
        for (auto [u, v] : i.pairs) {
            partner[static_cast<std::size_t>(u)].push_back(v);
            partner[static_cast<std::size_t>(v)].push_back(u);
        }
    }

    bool conflicts(Vertex v) const {
        for (Vertex w : partner[static_cast<std::size_t>(v)])
            if (on_path[static_cast<std::size_t>(w)]) return true;
        return false;
    }

    // returns true when a full safe path has been found
    bool visit(Vertex v) {
        if (expanded >= budget) {
            out_of_budget = true;
            return false;
        }
        ++expanded;
        // safety pruning only: abandon the branch the moment a pair closes
        if (conflicts(v)) return false;
        on_path[static_cast<std::size_t>(v)] = 1;
        path.push_back(v);
        if (v == inst.target) return true;
        for (Vertex w : inst.graph.out(v)) {  // ascending index order
            if (on_path[static_cast<std::size_t>(w)]) continue;
            if (visit(w)) return true;
            if (out_of_budget) break;
        }
        on_path[static_cast<std::size_t>(v)] = 0;
        path.pop_back();
        return false;
    }
};

}  // namespace

OracleResult solve_exact(const PafpInstance& inst, long long node_budget) {
    Dfs dfs(inst, node_budget);
    OracleResult res;
    bool found = dfs.visit(inst.source);
    res.nodes_expanded = dfs.expanded;
    if (found) {
        res.status = OracleStatus::Yes;
        res.certificate = PathCertificate{dfs.path};
    } else if (dfs.out_of_budget) {
        res.status = OracleStatus::BudgetExceeded;
    } else {
        res.status = OracleStatus::No;
    }
    return res;
}

std::uint64_t count_paths(const PafpInstance& inst) {
    if (!is_dag(inst.graph)) throw precondition_error("count_paths: graph is not a DAG");
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    auto sat_add = [](std::uint64_t a, std::uint64_t b) {
        return a > kMax - b ? kMax : a + b;
    };
    TotalOrder order = reachability_order(inst.graph);
    std::vector<std::uint64_t> count(static_cast<std::size_t>(inst.graph.vertex_count()) + 1, 0);
    count[static_cast<std::size_t>(inst.source)] = 1;
    for (Vertex u : order.by_rank)
        for (Vertex v : inst.graph.out(u))
            count[static_cast<std::size_t>(v)] =
                sat_add(count[static_cast<std::size_t>(v)], count[static_cast<std::size_t>(u)]);
    return count[static_cast<std::size_t>(inst.target)];
}

}  // namespace pafp
