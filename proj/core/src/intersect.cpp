#include "homds/intersect.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

#include "homds/lp.hpp"
#include "homds/patterns.hpp"
#include "homds/rng.hpp"

namespace homds {

std::string_view to_string(Engine e) noexcept {
    switch (e) {
        case Engine::partition: return "partition";
        case Engine::lp: return "lp";
        case Engine::randomized: return "randomized";
    }
    return "unknown";
}

Engine parse_engine(std::string_view name) {
    if (name == "partition") return Engine::partition;
    if (name == "lp") return Engine::lp;
    if (name == "randomized") return Engine::randomized;
    throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

GenericDimResult generic_dim_partition(const SetFamily& family) {
    PartitionScore best = max_partition_value(family);
    GenericDimResult r;
    r.dimension = best.value;
    r.partition = std::move(best.partition);
    r.engine = Engine::partition;
    return r;
}

Rational separation_value(const SetFamily& family, std::span<const Rational> deltas, IndexSet members) {
    Rational v = family.k - family.common(members).size();
    for (int i : members.elements()) v -= deltas[static_cast<std::size_t>(i)];
    return v;
}

namespace {

void require_lp_cap(const SetFamily& family) {
    if (family.size() > static_cast<std::size_t>(kMaxLpSets))
        throw CapacityError("LP engine separation is capped at " + std::to_string(kMaxLpSets) + " sets");
}

// Minimiser of f over nonempty I with all deltas scaled to integers over a common
// denominator. Returns nullopt if the scaled values do not fit comfortably in 64 bits.
std::optional<SeparationResult> separate_scaled(const SetFamily& family, std::span<const Rational> deltas) {
    mpz_class den = 1;
    for (const auto& d : deltas) den = lcm(den, d.get_den());
    if (!den.fits_slong_p()) return std::nullopt;
    std::vector<long> num;
    const long dl = den.get_si();
    for (const auto& d : deltas) {
        mpz_class v = d.get_num() * (den / d.get_den());
        if (!v.fits_slong_p() || std::abs(v.get_si()) > (LONG_MAX >> 8) / 32) return std::nullopt;
        num.push_back(v.get_si());
    }
    if (std::abs(dl) > (LONG_MAX >> 8) / 128) return std::nullopt;

    const std::size_t ell = family.size();
    const std::uint64_t full = std::uint64_t{1} << ell;
    std::vector<IndexSet> common(full);
    std::vector<long> weight(full, 0);
    common[0] = IndexSet::prefix(family.n);
    long best = 0;
    std::uint64_t arg = 0;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
        const std::uint64_t low = mask & (~mask + 1);
        const auto i = static_cast<std::size_t>(std::countr_zero(low));
        common[mask] = common[mask ^ low] & family.sets[i];
        weight[mask] = weight[mask ^ low] + num[i];
        const long f = (family.k - common[mask].size()) * dl - weight[mask];
        if (arg == 0 || f < best) {
            best = f;
            arg = mask;
        }
    }
    SeparationResult r;
    r.minimizer = IndexSet(arg);
    r.value = Rational(mpz_class(best), den);
    r.value.canonicalize();
    r.feasible = r.value >= 0;
    return r;
}

}  // namespace

SeparationResult separation_oracle(const SetFamily& family, std::span<const Rational> deltas) {
    family.validate();
    require_lp_cap(family);
    if (deltas.size() != family.size()) throw std::invalid_argument("separation_oracle: need one delta per set");
    for (const auto& d : deltas)
        if (d < 0) throw std::invalid_argument("separation_oracle: deltas must be nonnegative");
    if (auto fast = separate_scaled(family, deltas)) return *fast;

    SeparationResult r;
    bool have = false;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << family.size()); ++mask) {
        Rational f = separation_value(family, deltas, IndexSet(mask));
        if (!have || f < r.value) {
            r.value = f;
            r.minimizer = IndexSet(mask);
            have = true;
        }
    }
    r.feasible = r.value >= 0;
    return r;
}

LpReport generic_dim_lp(const SetFamily& family) {
    family.validate();
    require_lp_cap(family);
    const std::size_t ell = family.size();
    const int k = family.k;

    LpReport rep;
    for (std::size_t i = 0; i < ell; ++i) rep.constraints.push_back(IndexSet::singleton(static_cast<int>(i)));

    SimplexResult sol;
    for (;;) {
        ++rep.rounds;
        const std::size_t m = rep.constraints.size();
        RationalMatrix a(m, ell);
        RationalVector b(m), c(ell, Rational(1));
        for (std::size_t r = 0; r < m; ++r) {
            for (int i : rep.constraints[r].elements()) a(r, static_cast<std::size_t>(i)) = 1;
            b[r] = k - family.common(rep.constraints[r]).size();
        }
        sol = maximize_nonneg(a, b, c);
        const SeparationResult cut = separation_oracle(family, sol.x);
        if (cut.feasible) break;
        if (std::find(rep.constraints.begin(), rep.constraints.end(), cut.minimizer) != rep.constraints.end())
            throw std::logic_error("generic_dim_lp: separation returned an existing constraint");
        rep.constraints.push_back(cut.minimizer);
    }

    rep.deltas = sol.x;
    rep.optimum = k - sol.objective;
    if (!is_integral(rep.optimum))
        throw std::logic_error("generic_dim_lp: fractional optimum " + to_string(rep.optimum));

    Rational dual_sum = 0;
    for (std::size_t r = 0; r < rep.constraints.size(); ++r) {
        if (sol.duals[r] == 0) continue;
        rep.dual.weights.emplace_back(rep.constraints[r], sol.duals[r]);
        dual_sum += (k - family.common(rep.constraints[r]).size()) * sol.duals[r];
    }
    rep.dual.objective = k - dual_sum;

    rep.result.engine = Engine::lp;
    rep.result.dimension = static_cast<int>(rep.optimum.get_num().get_si());
    return rep;
}

DualLpCertificate dual_certificate_from_partition(const SetFamily& family, const IndexPartition& partition) {
    if (!partition.is_partition_of(static_cast<int>(family.size())))
        throw std::invalid_argument("dual_certificate_from_partition: not a partition of the family indices");
    DualLpCertificate cert;
    Rational sum = 0;
    for (auto block : partition.blocks) {
        cert.weights.emplace_back(block, Rational(1));
        sum += family.k - family.common(block).size();
    }
    cert.objective = family.k - sum;
    return cert;
}

bool verify_dual_certificate(const SetFamily& family, const DualLpCertificate& cert) {
    std::vector<Rational> cover(family.size(), Rational(0));
    Rational sum = 0;
    const IndexSet index_universe = IndexSet::prefix(static_cast<int>(family.size()));
    for (const auto& [members, mu] : cert.weights) {
        if (mu < 0 || members.empty() || !members.subset_of(index_universe)) return false;
        for (int i : members.elements()) cover[static_cast<std::size_t>(i)] += mu;
        sum += (family.k - family.common(members).size()) * mu;
    }
    for (const auto& c : cover)
        if (c < 1) return false;
    return cert.objective == family.k - sum;
}

LinearMatrixInstance build_linear_matrix(const SetFamily& family, const MatrixFp& w) {
    family.validate();
    if (w.rows() != static_cast<std::size_t>(family.k) || w.cols() != static_cast<std::size_t>(family.n))
        throw std::invalid_argument("build_linear_matrix: W must be k x n");
    const std::size_t ell = family.size();
    const std::size_t k = w.rows();

    std::vector<std::size_t> offsets{0};
    for (auto s : family.sets) offsets.push_back(offsets.back() + static_cast<std::size_t>(s.size()));

    MatrixFp m(w.field(), (ell - 1) * k, offsets.back());
    auto place = [&](std::size_t block_row, std::size_t member) {
        std::size_t col = offsets[member];
        for (int j : family.sets[member].elements()) {
            for (std::size_t i = 0; i < k; ++i) m.set(block_row * k + i, col, w(i, static_cast<std::size_t>(j)));
            ++col;
        }
    };
    for (std::size_t r = 0; r + 1 < ell; ++r) {
        place(r, 0);
        place(r, r + 1);
    }
    return LinearMatrixInstance{std::move(m), std::move(offsets)};
}

namespace {

void require_large_field(const PrimeField& field, const char* who) {
    if (field.modulus() < (std::uint64_t{1} << 31))
        throw std::invalid_argument(std::string(who) + ": field modulus must be at least 2^31");
}

}  // namespace

GenericDimResult generic_dim_randomized(const SetFamily& family, PrimeField field, int trials, std::uint64_t seed) {
    family.validate();
    require_large_field(field, "generic_dim_randomized");
    if (trials < 1) throw std::invalid_argument("generic_dim_randomized: trials must be positive");

    std::vector<std::size_t> ranks;
    for (int t = 0; t < trials; ++t) {
        const MatrixFp w = random_matrix(field, static_cast<std::size_t>(family.k), static_cast<std::size_t>(family.n),
                                         derive_seed(seed, static_cast<std::uint64_t>(t)));
        ranks.push_back(rank(build_linear_matrix(family, w).matrix));
    }
    const std::size_t best = *std::max_element(ranks.begin(), ranks.end());

    GenericDimResult r;
    r.engine = Engine::randomized;
    r.dimension = family.total_size() - static_cast<int>(best);
    r.trials = trials;
    r.agreeing_trials = static_cast<int>(std::count(ranks.begin(), ranks.end(), best));
    const double n = family.n;
    r.error_bound = std::min(1.0, static_cast<double>(family.size() - 1) * n * n / static_cast<double>(field.modulus()));
    r.total_error_bound = std::pow(r.error_bound, trials);
    return r;
}

std::size_t blow_up_rank(const SetFamily& family, int t, PrimeField field, std::uint64_t seed) {
    family.validate();
    if (t < 1 || t > 3) throw std::invalid_argument("blow_up_rank: t must be 1, 2 or 3");
    require_large_field(field, "blow_up_rank");

    const auto k = static_cast<std::size_t>(family.k);
    const auto n = static_cast<std::size_t>(family.n);
    const auto tt = static_cast<std::size_t>(t);
    const std::size_t ell = family.size();
    std::vector<std::size_t> offsets{0};
    for (auto s : family.sets) offsets.push_back(offsets.back() + static_cast<std::size_t>(s.size()));

    std::size_t best = 0;
    for (std::uint64_t s = 0; s < 3; ++s) {
        SplitMix64 rng(derive_seed(seed, s));
        // blocks[(i * n + j) * t * t + a * t + b]
        std::vector<std::uint64_t> blocks(k * n * tt * tt);
        for (auto& v : blocks) v = rng.uniform(field.modulus());

        MatrixFp m(field, (ell - 1) * k * tt, offsets.back() * tt);
        auto place = [&](std::size_t block_row, std::size_t member) {
            std::size_t col = offsets[member];
            for (int j : family.sets[member].elements()) {
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t a = 0; a < tt; ++a)
                        for (std::size_t b = 0; b < tt; ++b)
                            m.set((block_row * k + i) * tt + a, col * tt + b,
                                  blocks[(i * n + static_cast<std::size_t>(j)) * tt * tt + a * tt + b]);
                ++col;
            }
        };
        for (std::size_t r = 0; r + 1 < ell; ++r) {
            place(r, 0);
            place(r, r + 1);
        }
        best = std::max(best, rank(m));
    }
    return best;
}

SetFamily t_pled_family(const SetFamily& family, int t) {
    if (t < 1) throw std::invalid_argument("t_pled_family: t must be positive");
    SetFamily out{family.n * t, family.k * t, {}, {}};
    for (auto s : family.sets) {
        IndexSet big;
        for (int j : s.elements())
            for (int c = 0; c < t; ++c) {
                if (j * t + c >= IndexSet::kCapacity) throw CapacityError("t_pled_family: more than 64 elements");
                big.insert(j * t + c);
            }
        out.sets.push_back(big);
    }
    out.validate();
    return out;
}

bool is_null_intersecting(const SetFamily& family) {
    if (family.size() <= static_cast<std::size_t>(kMaxPartitionSets)) return generic_dim_partition(family).dimension == 0;
    return generic_dim_lp(family).result.dimension == 0;
}

GenericDimResult generic_dim(const SetFamily& family, Engine engine, PrimeField field, int trials, std::uint64_t seed) {
    switch (engine) {
        case Engine::partition: return generic_dim_partition(family);
        case Engine::lp: return generic_dim_lp(family).result;
        case Engine::randomized: return generic_dim_randomized(family, field, trials, seed);
    }
    throw std::invalid_argument("unknown engine");
}

}  // namespace homds
