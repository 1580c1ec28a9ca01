#pragma once

#include <optional>
#include <vector>

#include "pafp/instance.hpp"
#include "pafp/layering.hpp"
#include "pafp/twosat.hpp"

namespace pafp {

// A guessed set of backward arcs, ordered and cut into segments. Ordering
// the chosen arcs e_1..e_r by a fixed topological order of their tails is
// forced: a path can only use them in that order. Segment j runs between
// consecutive chosen arcs (head of e_j to tail of e_{j+1}), with the source
// in front and the target at the end. A plan is infeasible when some
// segment would have to travel to a strictly smaller layer, which no
// forward walk can do.
struct SegmentPlan {
    std::vector<Arc> chosen;                        // the subset, sorted ascending
    std::vector<Arc> ordered;                       // e_1..e_r by (tail rank, head rank)
    std::vector<std::pair<Vertex, Vertex>> segments;  // (alpha_j, omega_j), j = 0..r
    bool feasible = true;
};

// subset must consist of backward arcs of the profile (checked).
SegmentPlan plan_segments(const PafpInstance& inst, const LayerProfile& prof,
                          const std::vector<Arc>& subset);
SegmentPlan plan_segments(const PafpInstance& inst, const LayerProfile& prof,
                          const std::vector<Arc>& subset, const TotalOrder& order);

// Decodes models of a per-subset formula: per segment and layer, an entry
// and an exit choice (forced on single-vertex layers).
struct OccurrenceDecoder {
    struct Slot {
        Vertex v0 = 0;
        Vertex v1 = 0;      // 0 on single-vertex layers
        int entry_var = -1;
        int exit_var = -1;
    };
    std::vector<std::vector<Slot>> segments;  // [segment][layer - first layer]
    std::vector<int> first_layer;             // per segment

    std::vector<Vertex> decode(const std::vector<bool>& model) const;
};

struct SubsetFormula {
    TwoSatFormula formula;
    bool contradiction = false;
    long long clauses_added = 0;
    OccurrenceDecoder decoder;
};

// Two-literal encoding of "is there a safe path using exactly the planned
// backward arcs". Each segment crosses its layer range one layer at a time
// using only non-backward arcs; entry/exit choices per layer are wired by
// adjacency clauses, endpoints are pinned by units, and forbidden pairs
// exclude co-use across all occurrences. Requires a feasible plan and
// layers of size at most 2 throughout (precondition_error otherwise).
SubsetFormula build_subset_formula(const PafpInstance& inst, const LayerProfile& prof,
                                   const SegmentPlan& plan);

struct Bfsw2kOptions {
    int max_k = 24;   // cap on the number of backward arcs (budget_error above)
    int threads = 1;  // worker threads for the subset sweep
};

struct Bfsw2kResult {
    bool yes = false;
    std::optional<PathCertificate> certificate;
    long long formulas_built = 0;  // always 2^k
    long long clauses_total = 0;
};

// Decides the instance by sweeping every subset of the backward arcs in
// (cardinality, then lexicographic) order and testing the per-subset
// formula; one formula is built for each of the 2^k subsets. YES reports
// the decoded path of the smallest accepting subset, independent of thread
// count. Requires a DAG with breadth-first width at most 2.
Bfsw2kResult solve_bfsw2k(const PafpInstance& inst, const Bfsw2kOptions& options = {});

}  // namespace pafp
