#include "pafp/normalize.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pafp/errors.hpp"
#include "pafp/layering.hpp"

namespace pafp {

NormalizedInstance normalize(const PafpInstance& inst) {
    if (!is_dag(inst.graph)) throw precondition_error("normalize: input graph is not a DAG");

    const int n = inst.graph.vertex_count();
    LayerProfile prof = layer_profile(inst.graph, inst.source);
    std::vector<char> reachable(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) reachable[static_cast<std::size_t>(v)] = prof.reachable(v);

    NormalizedInstance norm;
    norm.original = inst;

    // core order and its reverse listing; the source sinks to the very end
    // because it is the unique in-degree-0 vertex of the reachable core
    TotalOrder core_order = reachability_order_induced(inst.graph, reachable);
    const int q = core_order.size();
    norm.q = q;
    norm.reverse_listing.assign(core_order.by_rank.rbegin(), core_order.by_rank.rend());
    if (norm.reverse_listing.back() != inst.source)
        throw std::logic_error("normalize: core order does not end at the source");

    // dense renumbering: core ascending, unreachable target, start, spine, detours
    norm.core_new_id.assign(static_cast<std::size_t>(n) + 1, 0);
    int next_id = 0;
    for (Vertex v = 1; v <= n; ++v)
        if (reachable[static_cast<std::size_t>(v)]) norm.core_new_id[static_cast<std::size_t>(v)] = ++next_id;
    const bool target_unreachable = !reachable[static_cast<std::size_t>(inst.target)];
    if (target_unreachable) norm.core_new_id[static_cast<std::size_t>(inst.target)] = ++next_id;
    const Vertex new_target = norm.core_new_id[static_cast<std::size_t>(inst.target)];
    const Vertex start = ++next_id;
    norm.spine.resize(static_cast<std::size_t>(2 * q - 1));
    for (auto& p : norm.spine) p = ++next_id;
    norm.detours.resize(static_cast<std::size_t>(q));
    for (auto& w : norm.detours) w = ++next_id;
    const int n_prime = next_id;

    norm.original_id.assign(static_cast<std::size_t>(n_prime) + 1, 0);
    for (Vertex v = 1; v <= n; ++v)
        if (norm.core_new_id[static_cast<std::size_t>(v)] != 0)
            norm.original_id[static_cast<std::size_t>(norm.core_new_id[static_cast<std::size_t>(v)])] = v;

    auto renum = [&](Vertex v) { return norm.core_new_id[static_cast<std::size_t>(v)]; };

    std::vector<Arc> arcs;
    std::vector<VertexPair> pairs;

    // embedded core: surviving arcs plus one arc per surviving pair,
    // oriented along the core order
    for (auto [u, v] : inst.graph.arcs())
        if (reachable[static_cast<std::size_t>(u)] && reachable[static_cast<std::size_t>(v)])
            arcs.emplace_back(renum(u), renum(v));
    for (auto [u, v] : inst.pairs) {
        if (!reachable[static_cast<std::size_t>(u)] || !reachable[static_cast<std::size_t>(v)]) continue;
        pairs.emplace_back(renum(u), renum(v));
        if (core_order.less(u, v))
            arcs.emplace_back(renum(u), renum(v));
        else
            arcs.emplace_back(renum(v), renum(u));
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    norm.core_arcs = arcs;

    // entry gadget: spine path plus one guarded detour per core vertex,
    // visiting the core in reverse topological order; only the final detour
    // (into the original source) is left unguarded
    arcs.emplace_back(start, norm.spine.front());
    for (int j = 0; j + 1 < 2 * q - 1; ++j)
        arcs.emplace_back(norm.spine[static_cast<std::size_t>(j)], norm.spine[static_cast<std::size_t>(j) + 1]);
    for (int i = 1; i <= q; ++i) {
        Vertex attach = norm.spine[static_cast<std::size_t>(2 * i - 2)];  // p_{2i-1}
        Vertex w = norm.detours[static_cast<std::size_t>(i - 1)];
        Vertex target_i = renum(norm.reverse_listing[static_cast<std::size_t>(i - 1)]);
        arcs.emplace_back(attach, w);
        arcs.emplace_back(w, target_i);
        if (norm.reverse_listing[static_cast<std::size_t>(i - 1)] != inst.source)
            pairs.emplace_back(attach, w);
    }

    norm.instance = make_instance(n_prime, arcs, start, new_target, pairs);

    // closed-form levels
    norm.level.assign(static_cast<std::size_t>(n_prime) + 1, std::nullopt);
    norm.level[static_cast<std::size_t>(start)] = 0;
    for (int j = 1; j <= 2 * q - 1; ++j)
        norm.level[static_cast<std::size_t>(norm.spine[static_cast<std::size_t>(j - 1)])] = j;
    for (int i = 1; i <= q; ++i) {
        norm.level[static_cast<std::size_t>(norm.detours[static_cast<std::size_t>(i - 1)])] = 2 * i;
        norm.level[static_cast<std::size_t>(renum(norm.reverse_listing[static_cast<std::size_t>(i - 1)]))] =
            2 * i + 1;
    }
    if (target_unreachable) norm.level[static_cast<std::size_t>(new_target)] = std::nullopt;
    return norm;
}

LevelCheck check_level_function(const NormalizedInstance& norm) {
    Digraph h = union_digraph(norm.instance);
    LayerProfile prof = layer_profile(h, norm.instance.source);
    LevelCheck check;
    for (Vertex v = 1; v <= norm.instance.graph.vertex_count(); ++v) {
        if (prof.dist[static_cast<std::size_t>(v)] != norm.level[static_cast<std::size_t>(v)]) {
            check.ok = false;
            check.first_mismatch = v;
            check.expected = norm.level[static_cast<std::size_t>(v)];
            check.actual = prof.dist[static_cast<std::size_t>(v)];
            return check;
        }
    }
    return check;
}

std::vector<Arc> backward_arcs_of_normal_form(const NormalizedInstance& norm) {
    Digraph h = union_digraph(norm.instance);
    LayerProfile prof = layer_profile(h, norm.instance.source);
    if (prof.backward != norm.core_arcs)
        throw std::logic_error("normal form: backward arcs differ from the embedded core");
    if (static_cast<int>(prof.backward.size()) < norm.q - 1)
        throw std::logic_error("normal form: fewer backward arcs than q - 1");
    return prof.backward;
}

PathCertificate lift_path(const NormalizedInstance& norm, const PathCertificate& core_path) {
    SafetyReport rep = check_path(norm.original, core_path.vertices);
    if (rep.verdict != Verdict::SafePath)
        throw precondition_error(std::string("lift_path: input is not a safe path (") +
                                 to_string(rep.verdict) + ")");

    PathCertificate lifted;
    lifted.vertices.push_back(norm.instance.source);
    lifted.vertices.insert(lifted.vertices.end(), norm.spine.begin(), norm.spine.end());
    lifted.vertices.push_back(norm.detours.back());  // the unguarded detour into the source
    for (Vertex v : core_path.vertices)
        lifted.vertices.push_back(norm.core_new_id[static_cast<std::size_t>(v)]);

    if (check_path(norm.instance, lifted.vertices).verdict != Verdict::SafePath)
        throw std::logic_error("lift_path: lifted path failed the safety check");
    return lifted;
}

PathCertificate project_path(const NormalizedInstance& norm, const PathCertificate& normalized_path) {
    SafetyReport rep = check_path(norm.instance, normalized_path.vertices);
    if (rep.verdict != Verdict::SafePath)
        throw precondition_error(std::string("project_path: input is not a safe path (") +
                                 to_string(rep.verdict) + ")");

    const Vertex core_source = norm.core_new_id[static_cast<std::size_t>(norm.original.source)];
    auto it = std::find(normalized_path.vertices.begin(), normalized_path.vertices.end(), core_source);
    if (it == normalized_path.vertices.end())
        throw std::logic_error("project_path: safe path misses the embedded source");

    PathCertificate projected;
    for (; it != normalized_path.vertices.end(); ++it) {
        Vertex orig = norm.original_id[static_cast<std::size_t>(*it)];
        if (orig == 0) throw std::logic_error("project_path: gadget vertex after the embedded source");
        projected.vertices.push_back(orig);
    }
    // a safe suffix can only ride real arcs of the original graph: a pair
    // arc would put both endpoints of that pair on the path
    if (check_path(norm.original, projected.vertices).verdict != Verdict::SafePath)
        throw std::logic_error("project_path: projected path failed the safety check");
    return projected;
}

}  // namespace pafp
