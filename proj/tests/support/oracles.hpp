#pragma once

// Test-side reference implementations. They share no code with the library beyond
// the plain data types, and favour obviously-correct enumeration over speed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "homds/matrix.hpp"
#include "homds/sets.hpp"

namespace oracle {

using homds::IndexSet;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<homds::uint128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

/// Determinant by cofactor expansion, for matrices up to about 7 x 7.
inline std::uint64_t det(const std::vector<std::vector<std::uint64_t>>& m, std::uint64_t p) {
    const std::size_t n = m.size();
    if (n == 0) return 1 % p;
    if (n == 1) return m[0][0] % p;
    std::uint64_t total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<std::uint64_t>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::uint64_t> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(m[r][j]);
            minor.push_back(std::move(row));
        }
        const std::uint64_t term = mulmod(m[0][c], det(minor, p), p);
        total = (c % 2 == 0) ? (total + term) % p : (total + p - term) % p;
    }
    return total;
}

/// Rank as the size of the largest nonzero minor.
inline std::size_t rank_by_minors(const homds::MatrixFp& a) {
    const std::uint64_t p = a.field().modulus();
    const std::size_t rows = a.rows(), cols = a.cols();
    for (std::size_t r = std::min(rows, cols); r > 0; --r) {
        std::vector<std::size_t> ri(r), ci(r);
        std::function<bool(std::size_t, std::size_t)> pick_rows;
        std::function<bool(std::size_t, std::size_t)> pick_cols = [&](std::size_t d, std::size_t from) -> bool {
            if (d == r) {
                std::vector<std::vector<std::uint64_t>> m(r, std::vector<std::uint64_t>(r));
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) m[i][j] = a(ri[i], ci[j]);
                return det(m, p) != 0;
            }
            for (std::size_t c = from; c < cols; ++c) {
                ci[d] = c;
                if (pick_cols(d + 1, c + 1)) return true;
            }
            return false;
        };
        pick_rows = [&](std::size_t d, std::size_t from) -> bool {
            if (d == r) return pick_cols(0, 0);
            for (std::size_t x = from; x < rows; ++x) {
                ri[d] = x;
                if (pick_rows(d + 1, x + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) return r;
    }
    return 0;
}

/// Generic intersection dimension by brute force over all labelings of [l] with
/// block labels, i.e. every set partition many times over.
inline int generic_dim(const std::vector<IndexSet>& sets, int n, int k) {
    const std::size_t ell = sets.size();
    std::vector<std::size_t> label(ell, 0);
    int best = -1000000;
    for (;;) {
        int value = 0;
        int blocks = 0;
        for (std::size_t b = 0; b < ell; ++b) {
            IndexSet common = IndexSet::prefix(n);
            bool used = false;
            for (std::size_t i = 0; i < ell; ++i)
                if (label[i] == b) {
                    common = common & sets[i];
                    used = true;
                }
            if (used) {
                ++blocks;
                value += common.size();
            }
        }
        value -= (blocks - 1) * k;
        best = std::max(best, value);
        std::size_t i = 0;
        while (i < ell && ++label[i] == ell) label[i++] = 0;
        if (i == ell) break;
    }
    return best;
}

/// Generic zero pattern condition over every nonempty set of rows, without grouping.
inline bool is_gzp(const std::vector<IndexSet>& rows, int n, int k) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rows.size()); ++mask) {
        IndexSet common = IndexSet::prefix(n);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if ((mask >> r) & 1U) common = common & rows[r];
        if (common.size() > k - std::popcount(mask)) return false;
    }
    return true;
}

/// Weighted Hall condition over every nonempty I.
inline bool ell_hall(const std::vector<IndexSet>& sets, const std::vector<int>& deltas, int n, int k) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << sets.size()); ++mask) {
        IndexSet common = IndexSet::prefix(n);
        int w = 0;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if ((mask >> i) & 1U) {
                common = common & sets[i];
                w += deltas[i];
            }
        if (common.size() > k - w) return false;
    }
    return true;
}

/// All vectors of GF(p)^dim, for tiny p and dim.
inline std::vector<homds::Vector> all_vectors(std::uint64_t p, std::size_t dim) {
    std::vector<homds::Vector> out;
    homds::Vector v(dim, 0);
    for (;;) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < dim && ++v[i] == p) v[i++] = 0;
        if (i == dim) break;
    }
    return out;
}

/// Is v a combination of the given columns? Exhaustive over coefficient vectors.
inline bool in_column_span(const homds::MatrixFp& m, const std::vector<int>& cols, const homds::Vector& v) {
    const std::uint64_t p = m.field().modulus();
    for (const auto& coeff : all_vectors(p, cols.size())) {
        bool ok = true;
        for (std::size_t r = 0; r < m.rows() && ok; ++r) {
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < cols.size(); ++j) s = (s + mulmod(coeff[j], m(r, static_cast<std::size_t>(cols[j])), p)) % p;
            ok = s == v[r];
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace oracle
