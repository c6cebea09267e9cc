#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blpack/geometry.hpp"
#include "blpack/sequencing.hpp"

namespace blpack {

struct SolveConfig {
    std::uint64_t node_limit = 0;     // 0 = unlimited
    double time_limit_seconds = 0.0;  // 0 = unlimited
    /// Sequential, reproducible search. When false, root branches are
    /// explored by independent workers and the first SAT wins.
    bool deterministic = true;
    bool area_prune = true;
    bool duplicate_prune = true;
    unsigned workers = 0;  // 0 = hardware concurrency
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::size_t max_corners = 0;
    /// max_corners_by_depth[k] = largest corner list ever enumerated at a
    /// node with k rectangles placed; always <= (k+1)^2.
    std::vector<std::size_t> max_corners_by_depth;
};

enum class Outcome { kSat, kUnsat, kUnknown };

struct Verdict {
    Outcome outcome = Outcome::kUnknown;
    std::optional<Packing> packing;            // present iff SAT
    std::optional<PlacementSequence> sequence;  // present iff SAT
    std::string unknown_reason;                // "node-limit" or "time-limit"
    SolveStats stats;
};

/// Complete decision procedure: depth-first search over bottom-left
/// placement actions, branching on (next rectangle, orientation, corner).
/// UNSAT is only reported on full exhaustion; resource limits give UNKNOWN.
Verdict solve_exact(const Instance& instance, const SolveConfig& cfg = {});

struct GreedyResult {
    std::optional<Packing> packing;  // present iff every rectangle was placed
    PlacementSequence sequence;      // actions of the successful prefix
    int failed_id = 0;               // first rectangle with no corner, 0 on success
};

/// Bottom-Left heuristic: place the rectangles in the given order, each at
/// the lowest-then-leftmost corner for its fixed orientation; no backtracking.
GreedyResult solve_greedy(const Instance& instance, const std::vector<int>& order,
                          const std::vector<Orientation>& orientation_by_id);

/// Exhaustive integer-lattice decision for integer instances, implemented
/// over plain 64-bit integers (independent of the rational code path).
/// Throws Error for non-integer instances. Never returns kUnknown.
Outcome oracle_lattice(const Instance& instance);

/// n! * 2^n * prod_{k=0}^{n-1} (k+1)^2, saturated at UINT64_MAX: the search
/// action bound with the corner bound instantiated as (k+1)^2 at depth k.
std::uint64_t theorem3_bound(int n);

}  // namespace blpack
