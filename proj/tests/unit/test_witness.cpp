#include <doctest.h>

#include <algorithm>

#include "homds/codes.hpp"
#include "homds/intersect.hpp"
#include "homds/rng.hpp"
#include "homds/subspace.hpp"
#include "homds/witness.hpp"

using namespace homds;

namespace {

IndexSet S(std::initializer_list<int> one_based) {
    IndexSet s;
    for (int e : one_based) s.insert(e - 1);
    return s;
}

const PrimeField BIG(kMersenne61);

LinearCode random_rs(PrimeField f, int n, int k, SplitMix64& rng) {
    std::vector<std::uint64_t> pts;
    while (pts.size() < static_cast<std::size_t>(n)) {
        const std::uint64_t a = rng.uniform(f.modulus());
        if (std::find(pts.begin(), pts.end(), a) == pts.end()) pts.push_back(a);
    }
    return vandermonde(f, pts, k);
}

IndexSet random_subset(SplitMix64& rng, int n) { return IndexSet(rng.next() & IndexSet::prefix(n).bits()); }

}  // namespace

TEST_SUITE("witnesses") {
    TEST_CASE("intersection witness on a planted code") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const LinearCode planted = planted_non_mds3(BIG, 6 + static_cast<int>(seed % 2), seed);
            const MdsEllResult r = is_mds_ell(planted, 3);
            REQUIRE_FALSE(r.holds);
            const auto w = find_intersection_witness(planted.generator, *r.violating);
            REQUIRE(w);
            CHECK(verify_intersection_witness(planted.generator, *w));

            IntersectionWitness broken = *w;
            broken.z[0] = BIG.add(broken.z[0], 1);
            CHECK_FALSE(verify_intersection_witness(planted.generator, broken));

            const LdMdsWitness ld = mds_violation_to_ldmds(planted, *w);
            const LinearCode dual = dual_code(planted);
            CHECK(verify_ld_mds_witness(dual, ld));
            CHECK(ld.level >= 1);
            CHECK(ld.level <= 2);

            const DimensionGapReport gap = ldmds_to_mds_violation(dual, ld);
            CHECK(gap.consistent());
            CHECK(gap.gap());
            CHECK(gap.family.k == planted.k());
        }
        const PrimeField f(10007);
        const LinearCode rs = vandermonde(f, std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6}, 3);
        CHECK_FALSE(find_intersection_witness(rs.generator, SetFamily{6, 3, {S({1, 2}), S({3, 4}), S({5, 6})}, {}}));
    }

    TEST_CASE("list-decoding witnesses map to dimension gaps") {
        SplitMix64 rng(20);
        int mapped = 0;
        // Smaller MDS codes over these fields are all LD-MDS(<= 2); [6, 3] is the first shape that fails.
        for (int iter = 0; iter < 20; ++iter) {
            const PrimeField f(iter % 2 ? 7 : 11);
            const int n = 6;
            const LinearCode c{random_matrix(f, 3, static_cast<std::size_t>(n), rng.next()), std::nullopt};
            if (rank(c.generator) != 3 || !is_mds(c)) continue;
            for (int L = 1; L <= 2; ++L) {
                const LdMdsResult r = is_ld_mds_le(c, L, LdMdsStrategy::direct);
                if (r.holds) continue;
                ++mapped;
                const DimensionGapReport rep = ldmds_to_mds_violation(c, *r.witness);
                CHECK(rep.consistent());
                CHECK(rep.gap());
                CHECK(rep.family.k == n - 3);
                CHECK_FALSE(is_mds_ell(dual_code(c), r.witness->level + 1).holds);
            }
        }
        CHECK(mapped > 0);

        const LinearCode non_mds{MatrixFp::from_rows(PrimeField(7), {{1, 0, 1, 1}, {0, 1, 0, 1}}), std::nullopt};
        const LdMdsWitness any{1, {Vector{0, 0, 0, 0}, Vector{1, 0, 6, 0}}, Vector{0, 0}};
        CHECK_THROWS_AS(ldmds_to_mds_violation(non_mds, any), std::invalid_argument);
    }

    TEST_CASE("block matrix shapes") {
        const PrimeField f(13);
        const LinearCode c = vandermonde(f, std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6}, 2);
        const St20Matrix two = build_st20_matrix(c, {S({1, 2, 3}), S({2, 3, 4})});
        CHECK(two.matrix.rows() == 2);
        CHECK(two.matrix.cols() == 2);
        CHECK(two.type_a_rows == 0);
        CHECK(two.matrix.row(0)[1] == c.generator(1, 1));

        const std::vector<IndexSet> full(3, IndexSet::prefix(6));
        const St20Matrix three = build_st20_matrix(c, full);
        CHECK(three.matrix.rows() == 2 + 3 * 6);
        CHECK(three.matrix.cols() == 3 * 2);
        CHECK(three.type_a_rows == 2);
        CHECK(three.column_blocks == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
        // Type (a): v_{12} + v_{23} - v_{13} for each coordinate.
        CHECK(Vector(three.matrix.row(0).begin(), three.matrix.row(0).end()) == Vector{1, 0, 12, 0, 1, 0});
        CHECK(Vector(three.matrix.row(1).begin(), three.matrix.row(1).end()) == Vector{0, 1, 0, 12, 0, 1});

        const St20Matrix four = build_st20_matrix(c, std::vector<IndexSet>(4, S({1})));
        CHECK(four.type_a_rows == 3 * 2);
        CHECK(four.matrix.rows() == 6 + 6);
        CHECK_THROWS_AS(build_st20_matrix(c, {S({1})}), std::invalid_argument);
        CHECK_THROWS_AS(build_st20_matrix(c, {S({1}), S({7})}), std::invalid_argument);
    }

    TEST_CASE("close codewords give kernel vectors") {
        SplitMix64 rng(21);
        const PrimeField f(13);
        for (int iter = 0; iter < 100; ++iter) {
            const LinearCode c = random_rs(f, 6, 2, rng);
            std::vector<Vector> msgs;
            for (int i = 0; i < 3; ++i) msgs.push_back(Vector{rng.uniform(13), rng.uniform(13)});
            // Plant agreement: the center copies codeword i on two coordinates each.
            const MatrixFp gt = c.generator.transpose();
            Vector y(6);
            for (std::size_t a = 0; a < 6; ++a) y[a] = gt.apply(msgs[a / 2])[a];
            const auto [sets, v] = st20_from_codewords(c, msgs, y);
            const St20Matrix m = build_st20_matrix(c, sets);
            CHECK(m.matrix.apply(v) == Vector(m.matrix.rows(), 0));
            const bool distinct = msgs[0] != msgs[1] || msgs[1] != msgs[2];
            CHECK(distinct == std::any_of(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; }));
        }
    }

    TEST_CASE("hypothesis check and full column rank") {
        SplitMix64 rng(22);
        int checked = 0;
        while (checked < 30) {
            std::vector<IndexSet> sets;
            for (int i = 0; i < 3; ++i) sets.push_back(random_subset(rng, 6));
            const LinearCode c = random_rs(BIG, 6, 2, rng);
            const St20Report r = check_st20(c, sets);
            if (!r.hypothesis_holds) {
                CHECK_FALSE(r.full_column_rank);
                continue;
            }
            ++checked;
            CHECK(r.union_equality);
            REQUIRE(r.full_column_rank);
            CHECK(*r.full_column_rank);
            CHECK(r.columns == 6);
        }

        const LinearCode c = random_rs(BIG, 6, 2, rng);
        const St20Report over = check_st20(c, {S({1, 2, 3}), S({1, 2, 3}), S({4})});
        CHECK_FALSE(over.hypothesis_holds);
        CHECK(over.violating_subset == IndexSet(0b011));
        const St20Report loose = check_st20(c, {S({1}), S({2}), S({3})});
        CHECK_FALSE(loose.hypothesis_holds);
        CHECK_FALSE(loose.union_equality);
        CHECK_FALSE(loose.violating_subset);
    }
}
