#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "homds/codes.hpp"
#include "homds/matrix.hpp"
#include "homds/sets.hpp"

namespace homds {

/// z != 0 in the intersection of the column spans G_{A_i}, with G u_i = z and supp(u_i) in A_i.
struct IntersectionWitness {
    SetFamily family;
    Vector z;
    std::vector<Vector> u;
};

/// Nonzero point of the intersection read off a kernel vector of L_A(G), if the kernel is nontrivial.
std::optional<IntersectionWitness> find_intersection_witness(const MatrixFp& g, const SetFamily& family);

/// z nonzero, G u_i = z, supports respected, and the family null-intersecting generically.
bool verify_intersection_witness(const MatrixFp& g, const IntersectionWitness& w);

/// Groups equal u_i into s >= 2 distinct vectors. The result is a level s-1 witness
/// against dual_code(code), whose parity checks span the row space of G.
/// Throws std::invalid_argument when the input witness does not verify.
LdMdsWitness mds_violation_to_ldmds(const LinearCode& code, const IntersectionWitness& w);

struct DimensionGapReport {
    SetFamily family;             // J_i = supp(u_i) over n with k' = n - k
    std::vector<bool> clipped;    // J_i larger than n - k, cut to its first n - k elements
    int generic_dimension = 0;    // partition formula
    int intersection_dimension = 0;  // dim of the intersection of the H_{J_i}, via annihilators
    int kernel_dimension = 0;        // sum |J_i| - rank L_J(H)
    bool gap() const noexcept { return intersection_dimension > generic_dimension; }
    bool consistent() const noexcept { return intersection_dimension == kernel_dimension; }
};

/// For an MDS code and a witness that it is not LD-MDS(level), the supports certify
/// that the dual is not MDS(level + 1). Both sides of the gap are recomputed here.
/// Throws std::invalid_argument for a non-MDS code or an invalid witness.
DimensionGapReport ldmds_to_mds_violation(const LinearCode& code, const LdMdsWitness& w);

struct St20Matrix {
    int t = 0, k = 0, n = 0;
    std::vector<IndexSet> sets;
    MatrixFp matrix;
    std::vector<std::pair<int, int>> column_blocks;  // (i, j), 0-based, one per block of k columns
    std::size_t type_a_rows = 0;
};

/// Type (a) rows first, pairs (i, j) of [t-1] in lexicographic order; then type (b)
/// rows, pairs of [t] in lexicographic order, elements of J_i and J_j ascending.
St20Matrix build_st20_matrix(const LinearCode& code, const std::vector<IndexSet>& sets);

struct St20Report {
    bool hypothesis_holds = false;
    std::optional<IndexSet> violating_subset;  // first S (bitmask order) breaking the inequality
    bool union_equality = false;               // equality at S = [t]
    IndexSet used_columns;                     // union of the J_i
    std::optional<bool> full_column_rank;      // evaluated only when the hypothesis holds
    std::size_t rank = 0;
    std::size_t columns = 0;
};

St20Report check_st20(const LinearCode& code, const std::vector<IndexSet>& sets);

/// For codewords c_i = G^T f_i and a center y: J_i = {a : (c_i)_a = y_a} and
/// v = (f_j - f_i) stacked in column-block order. M v = 0 always holds.
std::pair<std::vector<IndexSet>, Vector> st20_from_codewords(const LinearCode& code, const std::vector<Vector>& messages,
                                                             const Vector& center);

}  // namespace homds
