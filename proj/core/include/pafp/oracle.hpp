#pragma once

#include <cstdint>
#include <optional>

#include "pafp/instance.hpp"

namespace pafp {

enum class OracleStatus { Yes, No, BudgetExceeded };

struct OracleResult {
    OracleStatus status = OracleStatus::No;
    std::optional<PathCertificate> certificate;  // set when status == Yes
    long long nodes_expanded = 0;
};

inline constexpr long long kDefaultOracleBudget = 10'000'000;

// Exhaustive reference decider: depth-first enumeration of vertex-simple
// source-to-target paths with ascending-index neighbor order. A branch is
// abandoned as soon as the partial path holds both endpoints of some pair
// (safety pruning only — no other shortcuts), so the first path reaching the
// target is a witness. Each vertex placed on the path costs one unit of the
// node budget; exhausting it yields BudgetExceeded instead of a decision.
OracleResult solve_exact(const PafpInstance& inst, long long node_budget = kDefaultOracleBudget);

// Number of distinct source-to-target paths, by topological-order dynamic
// programming. Saturates at UINT64_MAX. Throws precondition_error on
// non-DAG input.
std::uint64_t count_paths(const PafpInstance& inst);

}  // namespace pafp
