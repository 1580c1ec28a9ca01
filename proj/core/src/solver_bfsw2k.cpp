#include "pafp/solver_bfsw2k.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "pafp/errors.hpp"
#include "pafp/twosat.hpp"

namespace pafp {

SegmentPlan plan_segments(const PafpInstance& inst, const LayerProfile& prof,
                          const std::vector<Arc>& subset) {
    return plan_segments(inst, prof, subset, reachability_order(inst.graph));
}

SegmentPlan plan_segments(const PafpInstance& inst, const LayerProfile& prof,
                          const std::vector<Arc>& subset, const TotalOrder& order) {
    SegmentPlan plan;
    plan.chosen = subset;
    std::sort(plan.chosen.begin(), plan.chosen.end());
    for (auto [u, v] : plan.chosen) {
        if (!inst.graph.has_arc(u, v) || !prof.dist[static_cast<std::size_t>(u)] ||
            !prof.dist[static_cast<std::size_t>(v)] ||
            *prof.dist[static_cast<std::size_t>(v)] >= *prof.dist[static_cast<std::size_t>(u)])
            throw precondition_error("plan_segments: subset contains a non-backward arc");
    }

    plan.ordered = plan.chosen;
    std::sort(plan.ordered.begin(), plan.ordered.end(), [&](const Arc& a, const Arc& b) {
        if (order.rank_of[static_cast<std::size_t>(a.first)] != order.rank_of[static_cast<std::size_t>(b.first)])
            return order.rank_of[static_cast<std::size_t>(a.first)] < order.rank_of[static_cast<std::size_t>(b.first)];
        return order.rank_of[static_cast<std::size_t>(a.second)] < order.rank_of[static_cast<std::size_t>(b.second)];
    });

    const int r = static_cast<int>(plan.ordered.size());
    plan.segments.reserve(static_cast<std::size_t>(r) + 1);
    Vertex alpha = inst.source;
    for (int j = 0; j < r; ++j) {
        plan.segments.emplace_back(alpha, plan.ordered[static_cast<std::size_t>(j)].first);
        alpha = plan.ordered[static_cast<std::size_t>(j)].second;
    }
    plan.segments.emplace_back(alpha, inst.target);

    for (auto [a, w] : plan.segments) {
        const auto& da = prof.dist[static_cast<std::size_t>(a)];
        const auto& dw = prof.dist[static_cast<std::size_t>(w)];
        if (!da || !dw || *da > *dw) {
            plan.feasible = false;  // no forward walk can drop to a smaller layer
            break;
        }
    }
    return plan;
}

std::vector<Vertex> OccurrenceDecoder::decode(const std::vector<bool>& model) const {
    std::vector<Vertex> walk;
    for (std::size_t j = 0; j < segments.size(); ++j) {
        for (const auto& slot : segments[j]) {
            Vertex entry = slot.entry_var < 0
                               ? slot.v0
                               : (model[static_cast<std::size_t>(slot.entry_var)] ? slot.v1 : slot.v0);
            Vertex exit = slot.exit_var < 0
                              ? slot.v0
                              : (model[static_cast<std::size_t>(slot.exit_var)] ? slot.v1 : slot.v0);
            walk.push_back(entry);
            if (exit != entry) walk.push_back(exit);
        }
    }
    return walk;
}

SubsetFormula build_subset_formula(const PafpInstance& inst, const LayerProfile& prof,
                                   const SegmentPlan& plan) {
    if (!plan.feasible) throw precondition_error("build_subset_formula: infeasible plan");

    SubsetFormula out;
    FormulaBuilder fb;
    const int segs = static_cast<int>(plan.segments.size());

    auto layer_at = [&](int d) -> const std::vector<Vertex>& {
        return prof.layers[static_cast<std::size_t>(d)];
    };
    // usable arcs: everything except backward jumps, i.e. same-layer or +1
    auto usable = [&](Vertex u, Vertex v) {
        return inst.graph.has_arc(u, v) &&
               *prof.dist[static_cast<std::size_t>(v)] >= *prof.dist[static_cast<std::size_t>(u)];
    };

    out.decoder.segments.resize(static_cast<std::size_t>(segs));
    out.decoder.first_layer.resize(static_cast<std::size_t>(segs));
    for (int j = 0; j < segs; ++j) {
        auto [alpha, omega] = plan.segments[static_cast<std::size_t>(j)];
        int lo = *prof.dist[static_cast<std::size_t>(alpha)];
        int hi = *prof.dist[static_cast<std::size_t>(omega)];
        out.decoder.first_layer[static_cast<std::size_t>(j)] = lo;
        auto& slots = out.decoder.segments[static_cast<std::size_t>(j)];
        slots.resize(static_cast<std::size_t>(hi - lo) + 1);
        for (int d = lo; d <= hi; ++d) {
            const auto& layer = layer_at(d);
            if (static_cast<int>(layer.size()) > 2)
                throw precondition_error("BFS layer " + std::to_string(d) + " has width " +
                                         std::to_string(layer.size()) + " > 2");
            auto& slot = slots[static_cast<std::size_t>(d - lo)];
            slot.v0 = layer[0];
            if (layer.size() == 2) {
                slot.v1 = layer[1];
                slot.entry_var = fb.add_var();
                slot.exit_var = fb.add_var();
            }
        }
    }

    auto term = [&](int j, int d, Vertex v, bool exit) {
        const auto& slot = out.decoder.segments[static_cast<std::size_t>(j)][static_cast<std::size_t>(
            d - out.decoder.first_layer[static_cast<std::size_t>(j)])];
        int var = exit ? slot.exit_var : slot.entry_var;
        if (var < 0) return Term::constant(v == slot.v0);
        return v == slot.v0 ? Term::literal(neg(var)) : Term::literal(pos(var));
    };
    auto entry = [&](int j, int d, Vertex v) { return term(j, d, v, false); };
    auto exit = [&](int j, int d, Vertex v) { return term(j, d, v, true); };

    for (int j = 0; j < segs; ++j) {
        auto [alpha, omega] = plan.segments[static_cast<std::size_t>(j)];
        int lo = *prof.dist[static_cast<std::size_t>(alpha)];
        int hi = *prof.dist[static_cast<std::size_t>(omega)];

        // inside a layer, entry and exit differ only across a usable arc
        for (int d = lo; d <= hi; ++d)
            for (Vertex u : layer_at(d))
                for (Vertex v : layer_at(d))
                    if (u != v && !usable(u, v)) fb.require_or(~entry(j, d, u), ~exit(j, d, v));

        fb.require(entry(j, lo, alpha));
        fb.require(exit(j, hi, omega));

        // consecutive layers must be bridged by a usable arc
        for (int d = lo; d < hi; ++d)
            for (Vertex u : layer_at(d))
                for (Vertex v : layer_at(d + 1))
                    if (!usable(u, v)) fb.require_or(~exit(j, d, u), ~entry(j, d + 1, v));
    }

    // forbidden pairs: no two occurrences may both be used, in any role
    std::vector<std::vector<std::pair<int, int>>> occ(
        static_cast<std::size_t>(inst.graph.vertex_count()) + 1);
    for (int j = 0; j < segs; ++j) {
        auto [alpha, omega] = plan.segments[static_cast<std::size_t>(j)];
        int lo = *prof.dist[static_cast<std::size_t>(alpha)];
        int hi = *prof.dist[static_cast<std::size_t>(omega)];
        for (int d = lo; d <= hi; ++d)
            for (Vertex v : layer_at(d)) occ[static_cast<std::size_t>(v)].emplace_back(j, d);
    }
    for (const auto& [a, b] : inst.pairs) {
        for (auto [ja, da] : occ[static_cast<std::size_t>(a)]) {
            for (auto [jb, db] : occ[static_cast<std::size_t>(b)]) {
                fb.require_or(~entry(ja, da, a), ~entry(jb, db, b));
                fb.require_or(~entry(ja, da, a), ~exit(jb, db, b));
                fb.require_or(~exit(ja, da, a), ~entry(jb, db, b));
                fb.require_or(~exit(ja, da, a), ~exit(jb, db, b));
            }
        }
    }

    out.contradiction = fb.contradiction();
    out.clauses_added = fb.clauses_added();
    out.formula = fb.formula();
    return out;
}

namespace {

// Subsets of {0..k-1} in (cardinality, then lexicographic) order.
class SubsetSequence {
public:
    explicit SubsetSequence(int k) : k_(k) {}

    // next index set, or nullopt when exhausted
    std::optional<std::vector<int>> next() {
        if (card_ > k_) return std::nullopt;
        std::vector<int> result = comb_;
        advance();
        return result;
    }

private:
    void advance() {
        int c = static_cast<int>(comb_.size());
        int i = c - 1;
        while (i >= 0 && comb_[static_cast<std::size_t>(i)] == k_ - c + i) --i;
        if (i < 0) {
            ++card_;
            comb_.resize(static_cast<std::size_t>(card_));
            for (int j = 0; j < card_; ++j) comb_[static_cast<std::size_t>(j)] = j;
            return;
        }
        ++comb_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < c; ++j)
            comb_[static_cast<std::size_t>(j)] = comb_[static_cast<std::size_t>(j) - 1] + 1;
    }

    int k_;
    int card_ = 0;
    std::vector<int> comb_;
};

struct SweepState {
    std::mutex seq_mutex;           // guards the sequence and counter
    SubsetSequence sequence;
    long long next_seq = 0;

    std::atomic<long long> best_seq{-1};  // -1 = no accepting subset yet
    std::mutex best_mutex;                // guards best_cert
    PathCertificate best_cert;

    std::atomic<long long> clauses_total{0};
    std::atomic<long long> formulas_built{0};

    explicit SweepState(int k) : sequence(k) {}
};

void sweep_worker(const PafpInstance& inst, const LayerProfile& prof, const TotalOrder& order,
                  const std::vector<Arc>& backward, SweepState& state) {
    constexpr int kBatch = 32;
    std::vector<std::pair<long long, std::vector<int>>> batch;
    while (true) {
        batch.clear();
        {
            std::lock_guard<std::mutex> lock(state.seq_mutex);
            for (int i = 0; i < kBatch; ++i) {
                auto idx = state.sequence.next();
                if (!idx) break;
                batch.emplace_back(state.next_seq++, std::move(*idx));
            }
        }
        if (batch.empty()) return;
        for (auto& [seq, indices] : batch) {
            std::vector<Arc> subset;
            subset.reserve(indices.size());
            for (int i : indices) subset.push_back(backward[static_cast<std::size_t>(i)]);

            SegmentPlan plan = plan_segments(inst, prof, subset, order);
            state.formulas_built.fetch_add(1, std::memory_order_relaxed);
            if (!plan.feasible) continue;  // the formula degenerates to an empty clause

            SubsetFormula sf = build_subset_formula(inst, prof, plan);
            state.clauses_total.fetch_add(sf.clauses_added, std::memory_order_relaxed);
            if (sf.contradiction) continue;

            long long best = state.best_seq.load(std::memory_order_acquire);
            if (best != -1 && best < seq) continue;  // cannot become the smallest accept

            auto model = solve(sf.formula);
            if (!model) continue;
            std::vector<Vertex> walk = sf.decoder.decode(*model);
            SafetyReport rep = check_path(inst, walk);
            if (rep.verdict != Verdict::SafePath)
                throw std::logic_error("solve_bfsw2k: decoded walk failed the safety check");

            std::lock_guard<std::mutex> lock(state.best_mutex);
            long long cur = state.best_seq.load(std::memory_order_relaxed);
            if (cur == -1 || seq < cur) {
                state.best_seq.store(seq, std::memory_order_release);
                state.best_cert = PathCertificate{std::move(walk)};
            }
        }
    }
}

}  // namespace

Bfsw2kResult solve_bfsw2k(const PafpInstance& inst, const Bfsw2kOptions& options) {
    if (!is_dag(inst.graph)) throw precondition_error("solve_bfsw2k: graph is not a DAG");
    LayerProfile prof = layer_profile(inst.graph, inst.source);
    if (prof.width > 2)
        throw precondition_error("BFS width " + std::to_string(prof.width) + " exceeds 2");

    Bfsw2kResult res;
    if (!prof.dist[static_cast<std::size_t>(inst.target)]) return res;  // target unreachable

    const std::vector<Arc>& backward = prof.backward;  // sorted ascending
    const int k = static_cast<int>(backward.size());
    if (k > options.max_k)
        throw budget_error("backward arc count " + std::to_string(k) + " exceeds the cap " +
                           std::to_string(options.max_k));

    TotalOrder order = reachability_order(inst.graph);
    SweepState state(k);

    int threads = std::max(1, options.threads);
    if (threads == 1) {
        sweep_worker(inst, prof, order, backward, state);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(sweep_worker, std::cref(inst), std::cref(prof), std::cref(order),
                              std::cref(backward), std::ref(state));
        for (auto& th : pool) th.join();
    }

    res.formulas_built = state.formulas_built.load();
    res.clauses_total = state.clauses_total.load();
    if (state.best_seq.load() != -1) {
        res.yes = true;
        res.certificate = state.best_cert;
    }
    return res;
}

}  // namespace pafp
