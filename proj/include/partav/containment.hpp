#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "partav/partition.hpp"

namespace partav {

inline constexpr long long kDefaultOracleCap = 16; // cells of alpha

/// Rows/columns of alpha (1-based indices) whose deletion, followed by
/// justification, yields the pattern.
struct DeletionWitness {
    std::vector<int> rows;
    std::vector<int> cols;
};

/// Fast containment decision.  Equivalent to the deletion oracle (this is a
/// tested contract, not an assumption): alpha contains mu iff alpha's parts
/// have a subsequence L_1 >= ... >= L_k with L_a - L_{a+1} >= mu_a - mu_{a+1}
/// for a = 1..k, reading L_{k+1} = mu_{k+1} = 0.  The empty pattern is
/// contained in everything.
bool contains(const Partition& alpha, const Partition& mu);

/// Canonical witness when contains(alpha, mu), none otherwise.  Among all
/// valid witnesses the lexicographically smallest deleted-row set is chosen;
/// deleted columns are then the smallest indices workable in each column
/// interval between consecutive kept-row lengths.
std::optional<DeletionWitness> witness(const Partition& alpha, const Partition& mu);

/// Replays a deletion: removes the given rows of alpha and the given column
/// indices of the original board, justifies, and returns the result.
Partition apply_deletions(const Partition& alpha, const std::vector<int>& rows,
                          const std::vector<int>& cols);

/// Slow reference implementation of containment: the set of patterns inside
/// alpha is the closure of alpha under single row deletions and single
/// column deletions.  Closures are memoized across calls, so keep one
/// oracle alive for sweeps.
class ContainmentOracle {
public:
    explicit ContainmentOracle(long long cap_cells = kDefaultOracleCap) : cap_(cap_cells) {}

    /// CapExceeded when weight(alpha) is above the configured cap.
    bool contains(const Partition& alpha, const Partition& mu);

    /// Every partition reachable from alpha by deletions (alpha included).
    const std::set<Partition>& closure(const Partition& alpha);

private:
    long long cap_;
    std::map<Partition, std::set<Partition>> memo_;
};

/// One-shot convenience wrapper around ContainmentOracle.
bool contains_oracle(const Partition& alpha, const Partition& mu,
                     long long cap_cells = kDefaultOracleCap);

} // namespace partav
