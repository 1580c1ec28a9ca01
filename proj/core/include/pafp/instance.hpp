#pragma once

#include <vector>

#include "pafp/digraph.hpp"

namespace pafp {

// Unordered vertex pair, stored normalized with first < second.
using VertexPair = std::pair<Vertex, Vertex>;

// A query instance: digraph, two distinct terminals, and a set of forbidden
// pairs. A path answers YES when it runs from source to target, repeats no
// vertex, and contains at most one endpoint of every forbidden pair.
struct PafpInstance {
    Digraph graph;
    Vertex source = 0;
    Vertex target = 0;
    std::vector<VertexPair> pairs;  // sorted, unique, each .first < .second

    bool has_pair(Vertex u, Vertex v) const;

    friend bool operator==(const PafpInstance&, const PafpInstance&) = default;
};

// Builds a validated instance. Duplicate arcs and duplicate (unordered)
// pairs are dropped silently. Throws parse_error on loops, pairs with equal
// endpoints, out-of-range vertices, or source == target.
PafpInstance make_instance(int n, const std::vector<Arc>& arcs, Vertex source,
                           Vertex target, const std::vector<VertexPair>& pairs);

struct PathCertificate {
    std::vector<Vertex> vertices;

    friend bool operator==(const PathCertificate&, const PathCertificate&) = default;
};

enum class Verdict { SafePath, NotAPath, Unsafe };

const char* to_string(Verdict v);

struct SafetyReport {
    bool is_path = false;       // vertex-simple and every consecutive hop is an arc
    bool starts_at_source = false;
    bool ends_at_target = false;
    std::vector<VertexPair> violated_pairs;  // pairs with both endpoints on the sequence
    Verdict verdict = Verdict::NotAPath;
};

// Classifies an arbitrary vertex sequence against an instance. The verdict is
// SafePath exactly when the sequence is a source-to-target path violating no
// pair; Unsafe when it is such a path but violates at least one pair;
// NotAPath otherwise. violated_pairs is reported for any sequence.
SafetyReport check_path(const PafpInstance& inst, const std::vector<Vertex>& seq);

}  // namespace pafp
