#include "pafp/instance.hpp"

#include <algorithm>
#include <string>

#include "pafp/errors.hpp"

namespace pafp {

bool PafpInstance::has_pair(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(pairs.begin(), pairs.end(), VertexPair{u, v});
}

PafpInstance make_instance(int n, const std::vector<Arc>& arcs, Vertex source,
                           Vertex target, const std::vector<VertexPair>& pairs) {
    if (n < 0) throw parse_error("vertex count must be nonnegative");
    auto in_range = [n](Vertex v) { return v >= 1 && v <= n; };
    if (!in_range(source)) throw parse_error("source " + std::to_string(source) + " out of range");
    if (!in_range(target)) throw parse_error("target " + std::to_string(target) + " out of range");
    if (source == target) throw parse_error("source equals target");

    PafpInstance inst;
    inst.graph = Digraph(n);
    inst.source = source;
    inst.target = target;
    for (auto [u, v] : arcs) {
        if (!in_range(u) || !in_range(v))
            throw parse_error("arc (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") has an endpoint out of range");
        if (u == v) throw parse_error("loop arc at vertex " + std::to_string(u));
        inst.graph.add_arc(u, v);  // duplicates dropped silently
    }
    for (auto [u, v] : pairs) {
        if (!in_range(u) || !in_range(v))
            throw parse_error("pair {" + std::to_string(u) + ", " + std::to_string(v) +
                              "} has an endpoint out of range");
        if (u == v) throw parse_error("pair with equal endpoints {" + std::to_string(u) + "}");
        inst.pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(inst.pairs.begin(), inst.pairs.end());
    inst.pairs.erase(std::unique(inst.pairs.begin(), inst.pairs.end()), inst.pairs.end());
    return inst;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::SafePath: return "SAFE_PATH";
        case Verdict::NotAPath: return "NOT_A_PATH";
        case Verdict::Unsafe: return "UNSAFE";
    }
    return "?";
}

SafetyReport check_path(const PafpInstance& inst, const std::vector<Vertex>& seq) {
    SafetyReport rep;
    const int n = inst.graph.vertex_count();
    std::vector<char> on(static_cast<std::size_t>(n) + 1, 0);

    bool simple = !seq.empty();
    for (Vertex v : seq) {
        if (v < 1 || v > n) {
            simple = false;
            continue;
        }
        if (on[v]) simple = false;
        on[v] = 1;
    }
    bool arcs_ok = true;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!inst.graph.has_arc(seq[i], seq[i + 1])) arcs_ok = false;

    rep.is_path = simple && arcs_ok;
    rep.starts_at_source = !seq.empty() && seq.front() == inst.source;
    rep.ends_at_target = !seq.empty() && seq.back() == inst.target;

    for (const auto& p : inst.pairs)
        if (on[p.first] && on[p.second]) rep.violated_pairs.push_back(p);

    if (rep.is_path && rep.starts_at_source && rep.ends_at_target)
        rep.verdict = rep.violated_pairs.empty() ? Verdict::SafePath : Verdict::Unsafe;
    else
        rep.verdict = Verdict::NotAPath;
    return rep;
}

}  // namespace pafp
