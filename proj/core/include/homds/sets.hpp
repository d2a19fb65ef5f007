#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace homds {

/// Thrown when an exhaustive routine is asked to go beyond its enumeration cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Subset of {0, ..., 63} as a bitmask. Used both for subsets of the
/// coordinate set [n] and for subsets of the index set [l] of a family.
class IndexSet {
public:
    static constexpr int kCapacity = 64;

    constexpr IndexSet() noexcept = default;
    constexpr explicit IndexSet(std::uint64_t bits) noexcept : bits_(bits) {}
    static IndexSet of(std::initializer_list<int> elements);
    static IndexSet of(std::span<const int> elements);
    /// {0, ..., n-1}
    static constexpr IndexSet prefix(int n) noexcept {
        return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr IndexSet singleton(int i) noexcept { return IndexSet(std::uint64_t{1} << i); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr bool contains(int i) const noexcept { return (bits_ >> i) & 1U; }
    constexpr bool subset_of(IndexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
    /// Smallest element; undefined on the empty set.
    constexpr int min() const noexcept { return std::countr_zero(bits_); }
    constexpr int max() const noexcept { return 63 - std::countl_zero(bits_); }

    void insert(int i) noexcept { bits_ |= std::uint64_t{1} << i; }
    void erase(int i) noexcept { bits_ &= ~(std::uint64_t{1} << i); }
    std::vector<int> elements() const;

    constexpr IndexSet operator&(IndexSet o) const noexcept { return IndexSet(bits_ & o.bits_); }
    constexpr IndexSet operator|(IndexSet o) const noexcept { return IndexSet(bits_ | o.bits_); }
    constexpr IndexSet operator-(IndexSet o) const noexcept { return IndexSet(bits_ & ~o.bits_); }

    friend constexpr bool operator==(IndexSet, IndexSet) noexcept = default;
    friend constexpr auto operator<=>(IndexSet, IndexSet) noexcept = default;

private:
    std::uint64_t bits_ = 0;
};

std::string to_string(IndexSet s);  // 1-based, e.g. "{1,3}"

/// Sets A_1..A_l of [n] with optional multiplicities delta_i (k x n setting).
struct SetFamily {
    int n = 0;
    int k = 0;
    std::vector<IndexSet> sets;
    std::vector<int> deltas;  // empty when absent

    std::size_t size() const noexcept { return sets.size(); }
    bool has_deltas() const noexcept { return !deltas.empty(); }
    /// A_I: intersection of the members selected by I; [n] for the empty selector.
    IndexSet common(IndexSet members) const noexcept;
    int total_size() const noexcept;
    /// Checks 1 <= n <= 64, k >= 1, l >= 1, A_i within [n] and |A_i| <= k,
    /// deltas (if present) nonnegative and one per set. Throws std::invalid_argument.
    void validate() const;
};

/// k subsets of [n], one per row of a k x n matrix.
struct ZeroPattern {
    int n = 0;
    int k = 0;
    std::vector<IndexSet> rows;

    /// Number of distinct nonempty rows.
    int order() const;
    void validate() const;
};

/// Set partition of [l] into nonempty blocks.
struct IndexPartition {
    std::vector<IndexSet> blocks;
    std::size_t size() const noexcept { return blocks.size(); }
    bool is_partition_of(int ell) const noexcept;
    friend bool operator==(const IndexPartition&, const IndexPartition&) = default;
};

std::string to_string(const IndexPartition& p);

/// Calls visit(blocks) for every set partition of [ell] in restricted-growth-string
/// order, where blocks[j] is the j-th block. Stops early when visit returns false.
/// Returns the number of partitions visited.
template <class Visit>
std::uint64_t for_each_partition(int ell, Visit&& visit);

namespace detail {

template <class Visit>
bool partition_dfs(int i, int ell, std::vector<IndexSet>& blocks, std::uint64_t& count, Visit& visit) {
    if (i == ell) {
        ++count;
        return visit(std::span<const IndexSet>(blocks));
    }
    for (std::size_t j = 0; j < blocks.size(); ++j) {
        blocks[j].insert(i);
        const bool go = partition_dfs(i + 1, ell, blocks, count, visit);
        blocks[j].erase(i);
        if (!go) return false;
    }
    blocks.push_back(IndexSet::singleton(i));
    const bool go = partition_dfs(i + 1, ell, blocks, count, visit);
    blocks.pop_back();
    return go;
}

}  // namespace detail

template <class Visit>
std::uint64_t for_each_partition(int ell, Visit&& visit) {
    std::vector<IndexSet> blocks;
    std::uint64_t count = 0;
    if (ell <= 0) return 0;
    detail::partition_dfs(0, ell, blocks, count, visit);
    return count;
}

/// Bell number B(m) for m <= 25.
std::uint64_t bell_number(int m);

}  // namespace homds
