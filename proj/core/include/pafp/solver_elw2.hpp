#pragma once

#include <optional>
#include <vector>

#include "pafp/instance.hpp"
#include "pafp/layering.hpp"
#include "pafp/twosat.hpp"

namespace pafp {

// Maps models of a per-length formula back to vertex sequences: one slot per
// position; a slot is either forced (var < 0, vertex v0) or chooses v0/v1
// by the value of its variable.
struct PositionDecoder {
    struct Slot {
        Vertex v0 = 0;
        Vertex v1 = 0;
        int var = -1;
    };
    std::vector<Slot> slots;  // positions 0..length

    std::vector<Vertex> decode(const std::vector<bool>& model) const;
};

struct LengthFormula {
    TwoSatFormula formula;
    bool contradiction = false;   // became unsatisfiable during simplification
    long long clauses_added = 0;  // pre-simplification count
    PositionDecoder decoder;
};

// Two-literal encoding of "is there a safe source-to-target path of exactly
// this length". One variable per two-vertex exact-length layer; clauses rule
// out non-arcs between consecutive positions and co-selection of forbidden
// pairs at distinct positions; a unit clause pins the target at the last
// position. Requires a DAG whose exact-length width is at most 2 and a
// length whose layer contains the target (precondition_error otherwise).
LengthFormula build_length_formula(const PafpInstance& inst,
                                   const ExactLengthProfile& prof, int length);

struct Elw2Result {
    bool yes = false;
    std::optional<PathCertificate> certificate;
    long long clauses_total = 0;  // summed over all lengths tried
    int formulas_built = 0;
};

// Decides the instance by trying lengths in ascending order and returning
// the first satisfiable formula's decoded path, so a YES certificate is a
// shortest safe path. Requires a DAG with exact-length width at most 2.
Elw2Result solve_elw2(const PafpInstance& inst);

}  // namespace pafp
