#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pafp/instance.hpp"

namespace pafp {

// 3-CNF with exactly three DIMACS-style literals per clause (repetition pads
// shorter clauses). Literal v > 0 means variable v, -v its negation.
struct Cnf3 {
    int var_count = 0;
    std::vector<std::array<int, 3>> clauses;
};

// DIMACS cnf reader: 'c' comment lines, a 'p cnf <vars> <clauses>' header,
// then whitespace-separated literals with 0 terminating each clause
// (clauses may span lines). Clauses with fewer than three distinct literals
// are padded by repeating their first literal; more than three literals, a
// bad header, out-of-range literals, empty clauses, or a clause-count
// mismatch are rejected.
Cnf3 parse_dimacs_cnf(const std::string& text);

// Truth-table satisfiability check; precondition_error above 20 variables.
bool sat_brute(const Cnf3& cnf);

// Satisfiability reduced to a path query: a source, one three-vertex layer
// per clause (one vertex per literal occurrence), a target, complete arcs
// between consecutive layers, and a forbidden pair for every two
// complementary literal occurrences. A safe path picks one occurrence per
// clause without ever picking both x and not-x, so the instance answers YES
// exactly when the formula is satisfiable. The result always has
// breadth-first width <= 3, exact-length width <= 3, and no backward arcs.
// Rejects empty formulas.
PafpInstance gen_gmo(const Cnf3& cnf);

// Layered "ladder": source, len-1 two-vertex layers, target, arcs only
// between consecutive layers, no pairs. With density unset every
// consecutive arc is present, giving 2^(len-1) source-target paths; with a
// density p in (0, 1] each arc is kept with probability p except that one
// randomly chosen source-to-target chain is always retained, so the target
// stays reachable. Exact-length width is <= 2 either way. Vertex layout:
// source 1, layer d = {2d, 2d+1}, target 2*len.
PafpInstance gen_ladder(int len, std::optional<double> density, std::uint64_t seed);

// A density-0.5 ladder plus k extra arcs, each injected from a reachable
// vertex to a reachable vertex at a strictly smaller distance that does not
// reach the tail (so the graph stays a DAG and, because the head is already
// at least as close to the source, every breadth-first distance is
// provably unchanged). The result therefore has exactly k backward arcs.
// Throws precondition_error when no candidate arc is left before k are
// placed.
PafpInstance gen_backward_augmented(int len, int k, std::uint64_t seed);

}  // namespace pafp
