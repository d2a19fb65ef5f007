#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homds/matrix.hpp"
#include "homds/rational.hpp"
#include "homds/sets.hpp"

namespace homds {

inline constexpr int kMaxLpSets = 20;

enum class Engine { partition, lp, randomized };

std::string_view to_string(Engine e) noexcept;
/// Throws std::invalid_argument for an unknown name.
Engine parse_engine(std::string_view name);

struct GenericDimResult {
    int dimension = 0;
    IndexPartition partition;  // achieving partition (partition engine only)
    Engine engine = Engine::partition;
    // Randomized engine only.
    int trials = 0;
    int agreeing_trials = 0;      // trials whose rank equals the best one
    double error_bound = 0.0;     // per-trial probability of underestimating the rank
    double total_error_bound = 0.0;  // probability that every trial underestimates it
};

struct DualLpCertificate {
    std::vector<std::pair<IndexSet, Rational>> weights;  // mu_I on nonempty I
    Rational objective;                                  // k - sum_I (k - |A_I|) mu_I
};

struct LpReport {
    GenericDimResult result;
    RationalVector deltas;  // optimal primal point
    Rational optimum;       // k - sum(delta), equal to the dimension
    DualLpCertificate dual;
    std::vector<IndexSet> constraints;  // cuts in the order they were added
    int rounds = 0;
};

/// Maximum over partitions; see max_partition_value. Throws CapacityError for l > 12.
GenericDimResult generic_dim_partition(const SetFamily& family);

/// Cutting-plane LP  max sum(delta)  s.t.  sum_{i in I} delta_i <= k - |A_I|,
/// with exact rational simplex and brute-force separation. Throws CapacityError
/// for l > 20 and std::logic_error if the optimum is not integral.
LpReport generic_dim_lp(const SetFamily& family);

/// f(I) = k - |A_I| - sum_{i in I} delta_i. The empty selector uses A_empty = [n],
/// the convention under which f is submodular on the full lattice.
Rational separation_value(const SetFamily& family, std::span<const Rational> deltas, IndexSet members);

struct SeparationResult {
    bool feasible = true;
    IndexSet minimizer;  // first minimiser over nonempty I in bitmask order
    Rational value;      // f(minimizer)
};

SeparationResult separation_oracle(const SetFamily& family, std::span<const Rational> deltas);

/// mu_{P_j} = 1 for each block of the partition.
DualLpCertificate dual_certificate_from_partition(const SetFamily& family, const IndexPartition& partition);
/// Nonnegativity, coverage of every index, and the stated objective.
bool verify_dual_certificate(const SetFamily& family, const DualLpCertificate& cert);

struct LinearMatrixInstance {
    MatrixFp matrix;
    std::vector<std::size_t> column_offsets;  // first column of each A_i block, plus the total
};

/// The (l-1)k x sum|A_i| block matrix: block row r holds W^{A_1} in the first block
/// column and W^{A_{r+2}} in block column r+2.
LinearMatrixInstance build_linear_matrix(const SetFamily& family, const MatrixFp& w);

/// sum|A_i| - max rank of L_A(W) over `trials` random W. Requires p >= 2^31.
GenericDimResult generic_dim_randomized(const SetFamily& family, PrimeField field, int trials, std::uint64_t seed);

/// Rank of L_A with every variable w_ij replaced by one random t x t block,
/// maximised over three derived seeds. t must be 1, 2 or 3; p >= 2^31.
std::size_t blow_up_rank(const SetFamily& family, int t, PrimeField field, std::uint64_t seed);

/// The family on [t n] with k' = t k, each element j replaced by t copies.
SetFamily t_pled_family(const SetFamily& family, int t);

/// Generic intersection dimension zero; partition engine for l <= 12, LP beyond.
bool is_null_intersecting(const SetFamily& family);

/// Dispatch for the deterministic engines; the randomized engine needs a field.
GenericDimResult generic_dim(const SetFamily& family, Engine engine, PrimeField field = PrimeField(kMersenne61),
                             int trials = 2, std::uint64_t seed = 0);

}  // namespace homds
