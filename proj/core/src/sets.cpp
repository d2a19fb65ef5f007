#include "homds/sets.hpp"

#include <algorithm>

namespace homds {

IndexSet IndexSet::of(std::initializer_list<int> elements) {
    return of(std::span<const int>(elements.begin(), elements.size()));
}

IndexSet IndexSet::of(std::span<const int> elements) {
    IndexSet s;
    for (int e : elements) {
        if (e < 0 || e >= kCapacity) throw std::out_of_range("set element " + std::to_string(e) + " out of range");
        s.insert(e);
    }
    return s;
}

std::vector<int> IndexSet::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
}

std::string to_string(IndexSet s) {
    std::string out = "{";
    bool first = true;
    for (int e : s.elements()) {
        if (!first) out += ',';
        out += std::to_string(e + 1);
        first = false;
    }
    return out + "}";
}

IndexSet SetFamily::common(IndexSet members) const noexcept {
    IndexSet acc = IndexSet::prefix(n);
    for (std::uint64_t b = members.bits(); b; b &= b - 1) acc = acc & sets[static_cast<std::size_t>(std::countr_zero(b))];
    return acc;
}

int SetFamily::total_size() const noexcept {
    int t = 0;
    for (auto s : sets) t += s.size();
    return t;
}

void SetFamily::validate() const {
    if (n < 1 || n > IndexSet::kCapacity) throw std::invalid_argument("family: n must lie in [1, 64]");
    if (k < 1) throw std::invalid_argument("family: k must be positive");
    if (sets.empty()) throw std::invalid_argument("family: at least one set is required");
    if (sets.size() > static_cast<std::size_t>(IndexSet::kCapacity))
        throw std::invalid_argument("family: at most 64 sets are supported");
    const IndexSet universe = IndexSet::prefix(n);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!sets[i].subset_of(universe))
            throw std::invalid_argument("family: set " + std::to_string(i + 1) + " is not contained in [n]");
        if (sets[i].size() > k)
            throw std::invalid_argument("family: set " + std::to_string(i + 1) + " has more than k elements");
    }
    if (has_deltas()) {
        if (deltas.size() != sets.size()) throw std::invalid_argument("family: need exactly one delta per set");
        for (int d : deltas)
            if (d < 0) throw std::invalid_argument("family: deltas must be nonnegative");
    }
}

int ZeroPattern::order() const {
    std::vector<IndexSet> distinct;
    for (auto r : rows)
        if (!r.empty() && std::find(distinct.begin(), distinct.end(), r) == distinct.end()) distinct.push_back(r);
    return static_cast<int>(distinct.size());
}

void ZeroPattern::validate() const {
    if (n < 1 || n > IndexSet::kCapacity) throw std::invalid_argument("pattern: n must lie in [1, 64]");
    if (k < 1) throw std::invalid_argument("pattern: k must be positive");
    if (rows.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("pattern: expected exactly k sets");
    for (auto r : rows)
        if (!r.subset_of(IndexSet::prefix(n))) throw std::invalid_argument("pattern: set not contained in [n]");
}

bool IndexPartition::is_partition_of(int ell) const noexcept {
    IndexSet seen;
    for (auto b : blocks) {
        if (b.empty() || !(b & seen).empty()) return false;
        seen = seen | b;
    }
    return seen == IndexSet::prefix(ell);
}

std::string to_string(const IndexPartition& p) {
    std::string out;
    for (auto b : p.blocks) out += to_string(b);
    return out;
}

std::uint64_t bell_number(int m) {
    if (m < 0 || m > 25) throw std::out_of_range("bell_number: argument out of range");
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < m; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (auto v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace homds
