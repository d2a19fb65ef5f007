#include "homds/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace homds {

namespace {

// Restricted-growth-string DFS over partitions of the given sets, tracking the
// intersection of each block. visit(blocks, commons) returns false to stop.
template <class Visit>
bool scan_partitions(std::size_t i, std::span<const IndexSet> sets, std::vector<IndexSet>& blocks,
                     std::vector<IndexSet>& commons, Visit& visit) {
    if (i == sets.size()) return visit(blocks, commons);
    const int elem = static_cast<int>(i);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        const IndexSet saved = commons[j];
        blocks[j].insert(elem);
        commons[j] = commons[j] & sets[i];
        const bool go = scan_partitions(i + 1, sets, blocks, commons, visit);
        blocks[j].erase(elem);
        commons[j] = saved;
        if (!go) return false;
    }
    blocks.push_back(IndexSet::singleton(elem));
    commons.push_back(sets[i]);
    const bool go = scan_partitions(i + 1, sets, blocks, commons, visit);
    blocks.pop_back();
    commons.pop_back();
    return go;
}

template <class Visit>
void for_each_scored_partition(std::span<const IndexSet> sets, int k, Visit&& visit) {
    std::vector<IndexSet> blocks, commons;
    auto wrapped = [&](const std::vector<IndexSet>& b, const std::vector<IndexSet>& c) {
        int value = -(static_cast<int>(b.size()) - 1) * k;
        for (auto s : c) value += s.size();
        return visit(b, value);
    };
    scan_partitions(0, sets, blocks, commons, wrapped);
}

PartitionScore best_partition(std::span<const IndexSet> sets, int k) {
    PartitionScore best;
    bool have = false;
    for_each_scored_partition(sets, k, [&](const std::vector<IndexSet>& blocks, int value) {
        if (!have || value > best.value) {
            best.value = value;
            best.partition.blocks = blocks;
            have = true;
        }
        return true;
    });
    return best;
}

void require_partition_cap(std::size_t ell) {
    if (ell > static_cast<std::size_t>(kMaxPartitionSets))
        throw CapacityError("partition enumeration is capped at " + std::to_string(kMaxPartitionSets) +
                            " sets; use the LP engine");
}

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::string members_to_string(IndexSet members) { return to_string(members); }

// Delta induction on l. `universe` bounds the elements used for padding; the
// padded sets never leave this function, only the multiplicities do.
std::vector<int> solve_deltas(std::vector<IndexSet> sets, int k, int d, int universe) {
    const std::size_t ell = sets.size();
    if (ell == 1) return {k - d};

    std::optional<IndexPartition> tight;
    for (;;) {
        for_each_scored_partition(sets, k, [&](const std::vector<IndexSet>& blocks, int value) {
            if (blocks.size() >= 2 && value == d) {
                tight = IndexPartition{blocks};
                return false;
            }
            return true;
        });
        if (tight) break;

        bool padded = false;
        for (std::size_t i = 0; i < ell && !padded; ++i) {
            if (sets[i].size() >= k) continue;
            for (int x = 0; x < universe && !padded; ++x) {
                if (sets[i].contains(x)) continue;
                sets[i].insert(x);
                if (best_partition(sets, k).value <= d)
                    padded = true;
                else
                    sets[i].erase(x);
            }
        }
        if (!padded) throw std::logic_error("deltas_from_d: no admissible padding found");
    }

    std::vector<int> deltas(ell, 0);
    for (auto block : tight->blocks) {
        IndexSet common = IndexSet::prefix(universe);
        for (int j : block.elements()) common = common & sets[static_cast<std::size_t>(j)];
        const int sub_k = k - common.size();
        std::vector<IndexSet> reduced;
        for (int j : block.elements()) reduced.push_back(sets[static_cast<std::size_t>(j)] - common);
        const std::vector<int> sub = solve_deltas(std::move(reduced), sub_k, 0, universe);
        const auto members = block.elements();
        for (std::size_t t = 0; t < members.size(); ++t) deltas[static_cast<std::size_t>(members[t])] = sub[t];
    }
    return deltas;
}

}  // namespace

std::optional<IndexSet> gzp_violation(const ZeroPattern& pattern) {
    pattern.validate();
    std::vector<IndexSet> distinct;
    std::vector<IndexSet> owners;  // rows carrying each distinct set
    for (int r = 0; r < pattern.k; ++r) {
        const IndexSet row = pattern.rows[static_cast<std::size_t>(r)];
        if (row.empty()) continue;
        auto it = std::find(distinct.begin(), distinct.end(), row);
        if (it == distinct.end()) {
            distinct.push_back(row);
            owners.push_back(IndexSet::singleton(r));
        } else {
            owners[static_cast<std::size_t>(it - distinct.begin())].insert(r);
        }
    }
    const std::size_t m = distinct.size();
    if (m > static_cast<std::size_t>(kMaxSubsetScan)) throw CapacityError("is_gzp: too many distinct rows");
    // Including some copies of a set only weakens the condition, so take all of them.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        IndexSet common = IndexSet::prefix(pattern.n);
        IndexSet rows;
        for (std::uint64_t b = mask; b; b &= b - 1) {
            const auto j = static_cast<std::size_t>(std::countr_zero(b));
            common = common & distinct[j];
            rows = rows | owners[j];
        }
        if (common.size() > pattern.k - rows.size()) return rows;
    }
    return std::nullopt;
}

bool is_gzp(const ZeroPattern& pattern) { return !gzp_violation(pattern).has_value(); }

std::optional<IndexSet> ell_hall_violation(const SetFamily& family) {
    if (!family.has_deltas()) throw std::invalid_argument("weighted Hall condition needs deltas");
    const std::size_t ell = family.size();
    if (ell > static_cast<std::size_t>(kMaxSubsetScan)) throw CapacityError("weighted Hall check: too many sets");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ell); ++mask) {
        int weight = 0;
        for (std::uint64_t b = mask; b; b &= b - 1) weight += family.deltas[static_cast<std::size_t>(std::countr_zero(b))];
        if (family.common(IndexSet(mask)).size() > family.k - weight) return IndexSet(mask);
    }
    return std::nullopt;
}

ZeroPattern pattern_from_multiplicities(const SetFamily& family) {
    family.validate();
    if (!family.has_deltas()) throw std::invalid_argument("pattern_from_multiplicities: deltas required");
    if (sum_of(family.deltas) > family.k) throw std::invalid_argument("pattern_from_multiplicities: sum of deltas exceeds k");
    ZeroPattern p{family.n, family.k, {}};
    for (std::size_t i = 0; i < family.size(); ++i)
        for (int c = 0; c < family.deltas[i]; ++c) p.rows.push_back(family.sets[i]);
    while (p.rows.size() < static_cast<std::size_t>(family.k)) p.rows.emplace_back();
    return p;
}

SetFamily multiplicities_from_pattern(const ZeroPattern& pattern) {
    pattern.validate();
    SetFamily f{pattern.n, pattern.k, {}, {}};
    for (auto row : pattern.rows) {
        if (row.empty()) continue;
        auto it = std::find(f.sets.begin(), f.sets.end(), row);
        if (it == f.sets.end()) {
            f.sets.push_back(row);
            f.deltas.push_back(1);
        } else {
            ++f.deltas[static_cast<std::size_t>(it - f.sets.begin())];
        }
    }
    return f;
}

std::optional<std::vector<int>> hall_matching(std::span<const IndexSet> allowed) {
    const std::size_t rows = allowed.size();
    std::vector<int> row_of(IndexSet::kCapacity, -1);
    std::vector<int> match(rows, -1);
    std::vector<char> seen;
    auto augment = [&](auto&& self, std::size_t r) -> bool {
        for (int e : allowed[r].elements()) {
            if (seen[static_cast<std::size_t>(e)]) continue;
            seen[static_cast<std::size_t>(e)] = 1;
            const int owner = row_of[static_cast<std::size_t>(e)];
            if (owner < 0 || self(self, static_cast<std::size_t>(owner))) {
                row_of[static_cast<std::size_t>(e)] = static_cast<int>(r);
                match[r] = e;
                return true;
            }
        }
        return false;
    };
    for (std::size_t r = 0; r < rows; ++r) {
        seen.assign(IndexSet::kCapacity, 0);
        if (!augment(augment, r)) return std::nullopt;
    }
    return match;
}

SetFamily extend_hall(const SetFamily& family) {
    family.validate();
    if (!family.has_deltas()) throw std::invalid_argument("extend_hall: deltas required");
    if (family.n < family.k) throw std::invalid_argument("extend_hall: requires n >= k");
    if (sum_of(family.deltas) > family.k) throw std::invalid_argument("extend_hall: sum of deltas exceeds k");
    if (auto bad = ell_hall_violation(family))
        throw std::invalid_argument("extend_hall: weighted Hall condition fails for I = " + members_to_string(*bad));

    SetFamily out = family;
    const int k = family.k;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int target = k - out.deltas[i];
        if (out.sets[i].size() == target) continue;

        if (out.deltas[i] == 0) {
            for (int x = 0; out.sets[i].size() < k; ++x) out.sets[i].insert(x);
            continue;
        }

        // Rows of the pattern: delta_j copies of A_j, then empty rows.
        std::vector<IndexSet> rows;
        std::vector<std::size_t> owner;
        for (std::size_t j = 0; j < out.size(); ++j)
            for (int c = 0; c < out.deltas[j]; ++c) {
                rows.push_back(out.sets[j]);
                owner.push_back(j);
            }
        while (rows.size() < static_cast<std::size_t>(k)) {
            rows.emplace_back();
            owner.push_back(out.size());
        }

        IndexSet t = out.sets[i];
        for (int x = 0; t.size() < k; ++x) t.insert(x);

        std::vector<IndexSet> complements;
        for (auto r : rows) complements.push_back(t - (r & t));
        const auto matching = hall_matching(complements);
        if (!matching) throw std::logic_error("extend_hall: Hall matching unexpectedly failed");

        IndexSet u = t;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (owner[r] == i) u.erase((*matching)[r]);
        out.sets[i] = u;
    }
    return out;
}

ZeroPattern extend_to_maximal(const ZeroPattern& pattern) {
    if (auto bad = gzp_violation(pattern))
        throw std::invalid_argument("extend_to_maximal: not a generic zero pattern (rows " + to_string(*bad) + ")");
    const SetFamily grouped = multiplicities_from_pattern(pattern);
    if (grouped.sets.empty()) return pattern;
    const SetFamily extended = extend_hall(grouped);
    ZeroPattern out = pattern;
    for (auto& row : out.rows) {
        if (row.empty()) continue;
        const auto it = std::find(grouped.sets.begin(), grouped.sets.end(), row);
        row = extended.sets[static_cast<std::size_t>(it - grouped.sets.begin())];
    }
    return out;
}

ZeroPattern gen_hall_k_minus_1(const ZeroPattern& pattern) {
    if (auto bad = gzp_violation(pattern))
        throw std::invalid_argument("gen_hall_k_minus_1: not a generic zero pattern (rows " + to_string(*bad) + ")");
    SetFamily rows{pattern.n, pattern.k, pattern.rows, std::vector<int>(static_cast<std::size_t>(pattern.k), 1)};
    const SetFamily extended = extend_hall(rows);
    return ZeroPattern{pattern.n, pattern.k, extended.sets};
}

PartitionScore max_partition_value(const SetFamily& family) {
    family.validate();
    require_partition_cap(family.size());
    return best_partition(family.sets, family.k);
}

PartitionCheck check_partition_condition(const SetFamily& family, int d) {
    const PartitionScore best = max_partition_value(family);
    if (best.value <= d) return {};
    return PartitionCheck{false, best.partition, best.value - d};
}

std::vector<int> deltas_from_d(const SetFamily& family, int d) {
    family.validate();
    if (d < 0 || d > family.k) throw std::invalid_argument("deltas_from_d: d must lie in [0, k]");
    const PartitionCheck check = check_partition_condition(family, d);
    if (!check.holds)
        throw std::invalid_argument("deltas_from_d: partition condition fails for " + to_string(check.violating));
    const int base = std::max(family.n, family.k);
    const int universe = std::min(IndexSet::kCapacity, base + static_cast<int>(family.size()) * family.k);
    return solve_deltas(family.sets, family.k, d, universe);
}

}  // namespace homds
