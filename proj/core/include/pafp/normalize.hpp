#pragma once

#include <optional>
#include <vector>

#include "pafp/instance.hpp"

namespace pafp {

// Output of the width-reducing rewrite. Given a DAG instance, the rewrite
// keeps the sub-instance reachable from the source, adds one arc per
// surviving pair (oriented along a fixed topological order of the reachable
// core), and grafts an entry gadget in front: a fresh start vertex, a spine
// path, and one detour per core vertex. Detours to anything except the
// original source are booby-trapped by a fresh forbidden pair, so a safe
// path must ride the whole spine, take the last detour into the original
// source, and continue inside the core. The combined graph-plus-pairs
// digraph of the result has breadth-first width at most 2, and its
// backward arcs are exactly the embedded core arcs.
//
// Output vertices are renumbered densely: reachable core vertices first
// (original ascending order preserved), then the target if it was
// unreachable, then the fresh start, the spine, and the detour vertices.
struct NormalizedInstance {
    PafpInstance instance;  // the rewritten instance; instance.source is the fresh start
    PafpInstance original;  // the input, kept for lifting/projecting paths

    int q = 0;                         // number of reachable core vertices
    std::vector<Vertex> reverse_listing;  // core in reverse topological order, original ids; last = original source
    std::vector<Vertex> spine;            // p_1..p_{2q-1}, output ids
    std::vector<Vertex> detours;          // w_1..w_q, output ids; w_i -> reverse_listing[i-1]
    std::vector<Arc> core_arcs;           // embedded core arcs + pair arcs, output ids, sorted

    // Closed-form level of every output vertex: start 0, spine vertex j has
    // level j, detour i level 2i, its core target level 2i+1; nullopt for an
    // unreachable target. Matches breadth-first distance pointwise.
    std::vector<std::optional<int>> level;  // index 1..n'

    std::vector<Vertex> core_new_id;  // original id -> output id (0 = dropped)
    std::vector<Vertex> original_id;  // output id -> original id (0 = gadget vertex)
};

// Throws precondition_error if inst.graph is not a DAG.
NormalizedInstance normalize(const PafpInstance& inst);

struct LevelCheck {
    bool ok = true;
    Vertex first_mismatch = 0;         // output vertex id
    std::optional<int> expected;       // stored level
    std::optional<int> actual;         // recomputed distance
};

// Recomputes breadth-first distances over the combined graph-plus-pairs
// digraph of norm.instance and compares them with norm.level pointwise.
LevelCheck check_level_function(const NormalizedInstance& norm);

// Backward arcs of the combined digraph of norm.instance. Verifies they
// equal norm.core_arcs as a set and number at least q - 1; a mismatch means
// an internal bug and throws std::logic_error.
std::vector<Arc> backward_arcs_of_normal_form(const NormalizedInstance& norm);

// Maps a safe path of the original instance to a safe path of the rewritten
// one: fresh start, full spine, last detour, then the core path re-indexed.
// Throws precondition_error if core_path is not safe in the original.
PathCertificate lift_path(const NormalizedInstance& norm, const PathCertificate& core_path);

// Inverse direction: takes a safe path of the rewritten instance, strips the
// gadget prefix (everything before the original source), and re-indexes the
// core suffix. Throws precondition_error if the input path is not safe.
PathCertificate project_path(const NormalizedInstance& norm, const PathCertificate& normalized_path);

}  // namespace pafp
