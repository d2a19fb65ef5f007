#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "homds/matrix.hpp"
#include "homds/rational.hpp"
#include "homds/sets.hpp"

namespace homds {

inline constexpr std::size_t kDefaultBudget = 2'000'000;

/// Linear [n, k] code over GF(p) given by a full-row-rank k x n generator.
struct LinearCode {
    MatrixFp generator;
    std::optional<std::vector<std::uint64_t>> rs_points;  // set for Reed-Solomon codes

    const PrimeField& field() const noexcept { return generator.field(); }
    int k() const noexcept { return static_cast<int>(generator.rows()); }
    int n() const noexcept { return static_cast<int>(generator.cols()); }
    /// Full row rank, n <= 64, and consistency with rs_points when present.
    void validate() const;
};

/// Rows are the powers 0..k-1 of the evaluation points.
LinearCode vandermonde(PrimeField field, std::span<const std::uint64_t> points, int k);

/// Dual of a Reed-Solomon code: H_{j,i} = a_i^{j-1} / prod_{m != i}(a_i - a_m), j = 1..n-k.
LinearCode grs_dual(const LinearCode& code);

/// Deterministic (n-k) x n parity-check matrix: the kernel basis of the generator.
MatrixFp parity_check_matrix(const LinearCode& code);
/// grs_dual when rs_points are present, otherwise the parity-check matrix as generator.
LinearCode dual_code(const LinearCode& code);

bool is_mds(const LinearCode& code);
/// First k-subset of columns (in combination order) that is dependent.
std::optional<IndexSet> mds_violation(const LinearCode& code);

struct MdsEllResult {
    bool holds = true;
    std::optional<SetFamily> violating;  // a family whose intersection exceeds its generic dimension
    std::size_t families_checked = 0;
};

/// MDS check followed by every null-intersecting family of nonempty sets of size <= k
/// with total size (l-1)k, each tested for a nonsingular L_A(G).
/// Throws CapacityError when more than `budget` families are enumerated.
MdsEllResult is_mds_ell(const LinearCode& code, int ell, std::size_t budget = kDefaultBudget);

struct GzpCertificate {
    ZeroPattern pattern;
    MatrixFp m;
};

bool verify_gzp_certificate(const LinearCode& code, const GzpCertificate& cert);

enum class AttainStrategy { maximal, k_minus_1 };

struct AttainResult {
    bool success = false;
    std::optional<GzpCertificate> certificate;
    ZeroPattern extended;  // the pattern whose dual bases were stacked
    std::string reason;    // set on failure
};

/// Throws std::invalid_argument for a non-generic pattern or shape mismatch;
/// a dependent stack of rows is reported as failure.
AttainResult attain_pattern(const LinearCode& code, const ZeroPattern& pattern,
                            AttainStrategy strategy = AttainStrategy::maximal);

/// Maximal generic zero patterns of order <= l: distinct sets A of sizes 1..k-1, each
/// repeated k - |A| times, total multiplicity <= k, padded with empty rows.
std::vector<ZeroPattern> maximal_patterns(int n, int k, int ell, std::size_t budget = kDefaultBudget);

struct GzpEllResult {
    bool holds = true;
    bool mds = true;
    std::optional<ZeroPattern> failing;
    std::vector<GzpCertificate> certificates;  // only when requested
    std::size_t patterns_checked = 0;
};

GzpEllResult is_gzp_ell(const LinearCode& code, int ell, std::size_t budget = kDefaultBudget,
                        bool keep_certificates = false);

/// Pairwise distinct u_0..u_level with equal syndromes and total weight <= level (n-k).
struct LdMdsWitness {
    int level = 0;
    std::vector<Vector> u;
    Vector syndrome;  // with respect to parity_check_matrix(code)
};

/// Checks the witness literally against the code.
bool verify_ld_mds_witness(const LinearCode& code, const LdMdsWitness& w);

enum class LdMdsStrategy { dual, direct };

std::string_view to_string(LdMdsStrategy s) noexcept;
LdMdsStrategy parse_ld_mds_strategy(std::string_view name);

struct LdMdsResult {
    bool holds = true;
    std::optional<LdMdsWitness> witness;       // direct strategy
    std::optional<SetFamily> dual_violation;   // dual strategy
    std::size_t items_checked = 0;
};

/// LD-MDS(l') for every l' = 1..L. The dual strategy tests MDS(L+1) of the dual code.
/// The direct strategy scans support tuples and the kernel of the syndrome system; it
/// throws CapacityError when a kernel can be neither enumerated nor settled exactly.
LdMdsResult is_ld_mds_le(const LinearCode& code, int L, LdMdsStrategy strategy,
                         std::size_t budget = kDefaultBudget);

struct AverageRadiusResult {
    bool holds = true;
    std::vector<Vector> codewords;  // violating tuple
    Vector center;
    int cost = 0;                   // sum of distances to the center
    std::size_t tuples_checked = 0;
};

/// Level-L test over all (L+1)-sets of distinct codewords with the plurality center.
/// Requires q^k <= budget, otherwise CapacityError.
AverageRadiusResult brute_force_average_radius(const LinearCode& code, int L, std::size_t budget = kDefaultBudget);

/// rho = 1 - R - (1 - R) / (L + 1). Requires 0 < R < 1 and L >= 1.
Rational radius_from_params(const Rational& rate, int L);

/// c(n, k, L) = 2 L n^2 (sum_{i <= n-k} C(n, i))^{L+1}.
mpz_class rs_failure_constant(int n, int k, int L);

struct RsTrialOutcome {
    std::vector<std::uint64_t> points;
    bool distinct = true;
    bool ld_mds = false;
    std::optional<SetFamily> dual_violation;
};

/// LD-MDS(<= L) of the Reed-Solomon code on the given points (dual strategy).
/// Repeated points are reported as a failure rather than an error.
RsTrialOutcome evaluate_rs_points(PrimeField field, std::span<const std::uint64_t> points, int k, int L);

struct RsReport {
    int n = 0, k = 0, L = 0, trials = 0;
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    std::vector<RsTrialOutcome> outcomes;
    int failures = 0;
    mpz_class c;
    double bound = 0.0;  // c / p
};

/// Requires p >= max(n, 2^31). `workers` > 1 spreads trials over threads; the report
/// is identical for any worker count.
RsReport random_rs_trial(int n, int k, int L, PrimeField field, int trials, std::uint64_t seed, int workers = 1);

/// A [n, 3] MDS code (n >= 6) whose column pairs {1,2}, {3,4}, {5,6} span lines
/// through one common point, so it is not MDS(3).
LinearCode planted_non_mds3(PrimeField field, int n, std::uint64_t seed);

}  // namespace homds
