#pragma once

#include <optional>
#include <span>
#include <vector>

#include "homds/sets.hpp"

namespace homds {

/// Largest family handled by exhaustive partition enumeration (Bell(12) ~ 4.2M).
inline constexpr int kMaxPartitionSets = 12;
/// Largest number of distinct sets for which 2^l subset scans are attempted.
inline constexpr int kMaxSubsetScan = 24;

/// A generic zero pattern satisfies |S_I| <= k - |I| for every set I of rows.
/// Identical rows are grouped, so the scan is 2^order rather than 2^k.
bool is_gzp(const ZeroPattern& pattern);
/// First violating set of rows (as row indices), if any.
std::optional<IndexSet> gzp_violation(const ZeroPattern& pattern);

/// First nonempty I (in increasing bitmask order) with |A_I| > k - sum_{i in I} delta_i.
/// Requires deltas.
std::optional<IndexSet> ell_hall_violation(const SetFamily& family);

/// delta_i copies of A_i followed by k - sum(delta) empty rows.
/// Throws std::invalid_argument when sum(delta) > k.
ZeroPattern pattern_from_multiplicities(const SetFamily& family);
/// Distinct nonempty rows in order of first appearance, with their multiplicities.
SetFamily multiplicities_from_pattern(const ZeroPattern& pattern);

/// Supersets A'_i of A_i with |A'_i| = k - delta_i that still satisfy the
/// delta-weighted Hall condition. Requires n >= k and a family that satisfies the
/// condition; otherwise std::invalid_argument naming the violating I.
SetFamily extend_hall(const SetFamily& family);

/// Extends every distinct nonempty row A (appearing delta times) to a superset of
/// size k - delta. Rows keep their positions; empty rows stay empty.
ZeroPattern extend_to_maximal(const ZeroPattern& pattern);

/// Extends every row to a superset of size k - 1, keeping the pattern generic.
ZeroPattern gen_hall_k_minus_1(const ZeroPattern& pattern);

/// Perfect matching of rows to elements with matched element in allowed[row].
/// Kuhn's augmenting paths, rows in order, smallest element first.
std::optional<std::vector<int>> hall_matching(std::span<const IndexSet> allowed);

struct PartitionScore {
    IndexPartition partition;
    int value = 0;  // sum_j |A_{P_j}| - (s - 1) k
};

/// Partition of [l] maximising sum_j |A_{P_j}| - (s-1)k; the first maximiser in
/// restricted-growth-string order. Throws CapacityError for l > kMaxPartitionSets.
PartitionScore max_partition_value(const SetFamily& family);

struct PartitionCheck {
    bool holds = true;
    IndexPartition violating;  // maximally violating partition when !holds
    int excess = 0;            // max value - d when !holds
};

/// Whether sum_j |A_{P_j}| <= (s-1)k + d for every partition of [l].
PartitionCheck check_partition_condition(const SetFamily& family, int d);

/// Multiplicities delta with sum = k - d satisfying the weighted Hall condition
/// against the original sets, built by padding and recursing on a tight partition.
/// Requires 0 <= d <= k and check_partition_condition(family, d).holds.
std::vector<int> deltas_from_d(const SetFamily& family, int d);

}  // namespace homds
