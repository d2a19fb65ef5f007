#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "homds/intersect.hpp"
#include "homds/patterns.hpp"
#include "homds/rng.hpp"
#include "homds/subspace.hpp"
#include "oracles.hpp"

using namespace homds;

namespace {

IndexSet S(std::initializer_list<int> one_based) {
    IndexSet s;
    for (int e : one_based) s.insert(e - 1);
    return s;
}

const PrimeField BIG(kMersenne61);

std::uint64_t next_prime(std::uint64_t from) {
    while (!is_prime(from)) ++from;
    return from;
}

SetFamily random_family(SplitMix64& rng, int max_n = 8, int max_k = 5, int max_ell = 4) {
    const int k = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(max_k)));
    const int n = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(max_n)));
    const int ell = 1 + static_cast<int>(rng.uniform(static_cast<std::uint64_t>(max_ell)));
    SetFamily f{n, k, {}, {}};
    for (int i = 0; i < ell; ++i) {
        IndexSet s;
        const int size = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(std::min(n, k) + 1)));
        while (s.size() < size) s.insert(static_cast<int>(rng.uniform(static_cast<std::uint64_t>(n))));
        f.sets.push_back(s);
    }
    return f;
}

}  // namespace

TEST_SUITE("generic dimension") {
    TEST_CASE("partition engine examples") {
        const SetFamily a{3, 2, {S({1, 2}), S({1, 2}), S({3})}, {}};
        const GenericDimResult r = generic_dim_partition(a);
        CHECK(r.dimension == 1);
        CHECK(to_string(r.partition) == "{1,2}{3}");
        CHECK(oracle::generic_dim(a.sets, 3, 2) == 1);

        CHECK(generic_dim_partition(SetFamily{2, 2, {S({1}), S({1}), S({2})}, {}}).dimension == 0);
        CHECK(generic_dim_partition(SetFamily{5, 4, {S({1, 3, 5})}, {}}).dimension == 3);
        const SetFamily pairs{6, 3, {S({1, 2}), S({3, 4}), S({5, 6})}, {}};
        CHECK(generic_dim_partition(pairs).dimension == 0);
        CHECK(is_null_intersecting(pairs));
        CHECK_FALSE(is_null_intersecting(SetFamily{3, 2, {S({1}), S({1})}, {}}));
        CHECK(is_null_intersecting(SetFamily{2, 2, {S({1}), S({1}), S({2})}, {}}));
    }

    TEST_CASE("the geometric meaning at small scale") {
        // span(w1) and span(w2) for two generic columns meet only in 0.
        const MatrixFp w = random_matrix(PrimeField(10007), 2, 2, 5);
        const std::vector<Subspace> lines{Subspace::column_span(w.select_columns(std::vector<int>{0})),
                                          Subspace::column_span(w.select_columns(std::vector<int>{1}))};
        CHECK(subspace_intersection(lines).dim() == 0);
    }

    TEST_CASE("lp engine examples") {
        const SetFamily a{3, 2, {S({1, 2}), S({1, 2}), S({3})}, {}};
        const LpReport r = generic_dim_lp(a);
        CHECK(r.result.dimension == 1);
        CHECK(r.optimum == 1);
        CHECK(verify_dual_certificate(a, r.dual));
        CHECK(r.dual.objective == r.optimum);

        const SetFamily one{5, 4, {S({2, 4})}, {}};
        const LpReport r1 = generic_dim_lp(one);
        CHECK(r1.result.dimension == 2);
        CHECK(r1.deltas == RationalVector{Rational(2)});

        const SetFamily disjoint{5, 4, {S({1, 2}), S({3})}, {}};
        const LpReport r2 = generic_dim_lp(disjoint);
        CHECK(r2.result.dimension == 0);
        CHECK(r2.deltas[0] + r2.deltas[1] == 4);

        SetFamily wide{4, 2, std::vector<IndexSet>(21, S({1})), {}};
        CHECK_THROWS_AS(generic_dim_lp(wide), CapacityError);
    }

    TEST_CASE("separation oracle") {
        const SetFamily f{2, 2, {S({1, 2})}, {}};
        const RationalVector d{Rational(1)};
        const SeparationResult s = separation_oracle(f, d);
        CHECK_FALSE(s.feasible);
        CHECK(s.minimizer == S({1}));
        CHECK(s.value == -1);

        SplitMix64 rng(1);
        for (int iter = 0; iter < 200; ++iter) {
            const SetFamily g = random_family(rng);
            const RationalVector zero(g.size(), Rational(0));
            CHECK(separation_oracle(g, zero).feasible);
        }
        CHECK_THROWS_AS(separation_oracle(f, RationalVector{Rational(-1)}), std::invalid_argument);
    }

    TEST_CASE("separation function is submodular with A_empty = [n]") {
        SplitMix64 rng(2);
        for (int iter = 0; iter < 300; ++iter) {
            const SetFamily g = random_family(rng);
            RationalVector d;
            for (std::size_t i = 0; i < g.size(); ++i) d.emplace_back(static_cast<long>(rng.uniform(7)), 1 + static_cast<long>(rng.uniform(3)));
            for (auto& x : d) x.canonicalize();
            const std::uint64_t full = std::uint64_t{1} << g.size();
            for (std::uint64_t a = 0; a < full; ++a)
                for (std::uint64_t b = 0; b < full; ++b) {
                    const Rational lhs = separation_value(g, d, IndexSet(a)) + separation_value(g, d, IndexSet(b));
                    const Rational rhs = separation_value(g, d, IndexSet(a | b)) + separation_value(g, d, IndexSet(a & b));
                    CHECK(lhs >= rhs);
                }
        }
    }

    TEST_CASE("separation oracle returns the true minimum") {
        SplitMix64 rng(3);
        for (int iter = 0; iter < 300; ++iter) {
            const SetFamily g = random_family(rng);
            RationalVector d;
            for (std::size_t i = 0; i < g.size(); ++i) d.emplace_back(static_cast<long>(rng.uniform(9)), 1 + static_cast<long>(rng.uniform(4)));
            for (auto& x : d) x.canonicalize();
            const SeparationResult s = separation_oracle(g, d);
            Rational best = separation_value(g, d, IndexSet(1));
            for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.size()); ++m) best = std::min(best, separation_value(g, d, IndexSet(m)));
            CHECK(s.value == best);
            CHECK(separation_value(g, d, s.minimizer) == best);
            CHECK(s.feasible == (best >= 0));
        }
    }

    TEST_CASE("randomized engine examples") {
        const SetFamily a{3, 2, {S({1, 2}), S({1, 2}), S({3})}, {}};
        const GenericDimResult r = generic_dim_randomized(a, BIG, 2, 7);
        CHECK(r.dimension == 1);
        CHECK(r.trials == 2);
        CHECK(r.agreeing_trials == 2);
        CHECK(r.error_bound > 0);
        CHECK(r.error_bound < 1e-15);
        CHECK(generic_dim_randomized(SetFamily{5, 3, {S({1, 4})}, {}}, BIG, 1, 1).dimension == 2);
        CHECK(generic_dim_randomized(SetFamily{6, 3, {S({1, 2}), S({3, 4}), S({5, 6})}, {}}, BIG, 2, 1).dimension == 0);
        CHECK_THROWS_AS(generic_dim_randomized(a, PrimeField(10007), 2, 1), std::invalid_argument);
    }

    TEST_CASE("engines agree with each other and with the oracle") {
        SplitMix64 rng(4);
        const PrimeField other(next_prime(std::uint64_t{1} << 31));
        for (int iter = 0; iter < 300; ++iter) {
            const SetFamily f = random_family(rng);
            const int expect = oracle::generic_dim(f.sets, f.n, f.k);
            CHECK(generic_dim_partition(f).dimension == expect);
            const LpReport lp = generic_dim_lp(f);
            CHECK(lp.result.dimension == expect);
            CHECK(is_integral(lp.optimum));
            CHECK(verify_dual_certificate(f, lp.dual));
            CHECK(lp.dual.objective == lp.optimum);
            CHECK(generic_dim_randomized(f, BIG, 2, rng.next()).dimension == expect);
            CHECK(generic_dim_randomized(f, other, 2, rng.next()).dimension == expect);

            const GenericDimResult part = generic_dim_partition(f);
            const DualLpCertificate pc = dual_certificate_from_partition(f, part.partition);
            CHECK(verify_dual_certificate(f, pc));
            CHECK(pc.objective == expect);
        }
    }

    TEST_CASE("bounds, monotonicity and symmetry") {
        SplitMix64 rng(5);
        for (int iter = 0; iter < 300; ++iter) {
            const SetFamily f = random_family(rng);
            const int d = generic_dim_partition(f).dimension;
            int smallest = f.k;
            for (auto s : f.sets) smallest = std::min(smallest, s.size());
            CHECK(d <= smallest);
            CHECK(d >= std::max(0, f.total_size() - static_cast<int>(f.size() - 1) * f.k));

            // Enlarge one set.
            SetFamily bigger = f;
            const auto i = static_cast<std::size_t>(rng.uniform(f.size()));
            if (bigger.sets[i].size() < f.k && bigger.sets[i].size() < f.n) {
                int x = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(f.n)));
                while (bigger.sets[i].contains(x)) x = (x + 1) % f.n;
                bigger.sets[i].insert(x);
                CHECK(generic_dim_partition(bigger).dimension >= d);
            }

            // Permute the family and relabel [n].
            SetFamily moved = f;
            std::reverse(moved.sets.begin(), moved.sets.end());
            std::vector<int> perm(static_cast<std::size_t>(f.n));
            std::iota(perm.begin(), perm.end(), 0);
            for (std::size_t a = perm.size(); a > 1; --a) std::swap(perm[a - 1], perm[rng.uniform(a)]);
            for (auto& s : moved.sets) {
                IndexSet t;
                for (int e : s.elements()) t.insert(perm[static_cast<std::size_t>(e)]);
                s = t;
            }
            CHECK(generic_dim_partition(moved).dimension == d);
        }
    }

    TEST_CASE("t-pled families scale the dimension") {
        SplitMix64 rng(6);
        for (int iter = 0; iter < 100; ++iter) {
            const SetFamily f = random_family(rng, 6, 3, 4);
            const int d = generic_dim_partition(f).dimension;
            for (int t = 2; t <= 3; ++t) CHECK(generic_dim_partition(t_pled_family(f, t)).dimension == t * d);
        }
    }
}

TEST_SUITE("linear matrix") {
    TEST_CASE("layout") {
        const MatrixFp w = random_matrix(BIG, 2, 4, 9);
        const SetFamily two{4, 2, {S({1, 3}), S({2, 3, 4}) - S({4})}, {}};
        const LinearMatrixInstance inst = build_linear_matrix(two, w);
        CHECK(inst.matrix.rows() == 2);
        CHECK(inst.matrix.cols() == 4);
        CHECK(inst.matrix == hstack(w.select_columns(std::vector<int>{0, 2}), w.select_columns(std::vector<int>{1, 2})));
        CHECK(inst.column_offsets == std::vector<std::size_t>{0, 2, 4});

        const SetFamily three{4, 2, {S({1}), S({2, 3}), S({4})}, {}};
        const LinearMatrixInstance i3 = build_linear_matrix(three, w);
        CHECK(i3.matrix.rows() == 4);
        CHECK(i3.matrix.cols() == 4);
        // Row block 1: W^{A1} in block column 1, W^{A3} in block column 3.
        CHECK(i3.matrix(2, 0) == w(0, 0));
        CHECK(i3.matrix(2, 1) == 0);
        CHECK(i3.matrix(2, 3) == w(0, 3));
        CHECK(i3.matrix(0, 1) == w(0, 1));
        CHECK(i3.matrix(0, 3) == 0);

        CHECK_THROWS_AS(build_linear_matrix(three, random_matrix(BIG, 3, 4, 1)), std::invalid_argument);
    }

    TEST_CASE("kernel dimension equals the dimension of the intersection") {
        SplitMix64 rng(7);
        for (int iter = 0; iter < 300; ++iter) {
            const SetFamily f = random_family(rng, 7, 4, 4);
            const std::uint64_t p = iter % 2 ? 5 : 10007;
            const PrimeField field(p);
            const MatrixFp w = random_matrix(field, static_cast<std::size_t>(f.k), static_cast<std::size_t>(f.n), rng.next());
            bool independent = true;
            std::vector<Subspace> spans;
            for (auto s : f.sets) {
                const MatrixFp block = w.select_columns(s.elements());
                independent = independent && rank(block) == static_cast<std::size_t>(s.size());
                spans.push_back(Subspace::column_span(block));
            }
            if (!independent) continue;
            const LinearMatrixInstance inst = build_linear_matrix(f, w);
            const std::size_t ker = inst.matrix.cols() - rank(inst.matrix);
            CHECK(ker == subspace_intersection(spans).dim());
        }
    }

    TEST_CASE("blow-up ranks") {
        const SetFamily a{3, 2, {S({1, 2}), S({1, 2}), S({3})}, {}};
        const std::size_t r1 = blow_up_rank(a, 1, BIG, 3);
        CHECK(r1 == 4);  // sum |A_i| - d = 5 - 1
        CHECK(blow_up_rank(a, 2, BIG, 3) == 2 * r1);
        CHECK(blow_up_rank(a, 3, BIG, 3) == 3 * r1);
        CHECK_THROWS_AS(blow_up_rank(a, 4, BIG, 3), std::invalid_argument);
        CHECK_THROWS_AS(blow_up_rank(a, 0, BIG, 3), std::invalid_argument);

        SplitMix64 rng(8);
        for (int iter = 0; iter < 40; ++iter) {
            const SetFamily f = random_family(rng, 6, 4, 4);
            const std::size_t one = blow_up_rank(f, 1, BIG, iter);
            const MatrixFp w = random_matrix(BIG, static_cast<std::size_t>(f.k), static_cast<std::size_t>(f.n), rng.next());
            CHECK(one == rank(build_linear_matrix(f, w).matrix));
            CHECK(static_cast<int>(one) == f.total_size() - oracle::generic_dim(f.sets, f.n, f.k));
            for (int t = 2; t <= 3; ++t) {
                const std::size_t bt = blow_up_rank(f, t, BIG, iter);
                CHECK(bt % static_cast<std::size_t>(t) == 0);
                CHECK(bt == static_cast<std::size_t>(t) * one);
            }
        }
    }
}
