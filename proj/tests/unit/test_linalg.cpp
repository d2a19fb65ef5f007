#include <doctest.h>

#include <cmath>
#include <sstream>

#include "homds/field.hpp"
#include "homds/matrix.hpp"
#include "homds/rational.hpp"
#include "homds/rng.hpp"
#include "homds/subspace.hpp"
#include "oracles.hpp"

using namespace homds;

namespace {

const PrimeField F7(7);

MatrixFp m7(const std::vector<std::vector<std::uint64_t>>& rows) { return MatrixFp::from_rows(F7, rows); }

}  // namespace

TEST_SUITE("field") {
    TEST_CASE("primality") {
        CHECK(is_prime(2));
        CHECK(is_prime(7));
        CHECK(is_prime(kMersenne61));
        CHECK(is_prime(2147483647ULL));
        CHECK_FALSE(is_prime(1));
        CHECK_FALSE(is_prime(561));  // Carmichael
        CHECK_FALSE(is_prime(3215031751ULL));
        CHECK_FALSE(is_prime(2305843009213693953ULL));  // 2^61 + 1
        for (std::uint64_t n = 0; n < 2000; ++n) {
            bool trial = n >= 2;
            for (std::uint64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
            CHECK(is_prime(n) == trial);
        }
    }

    TEST_CASE("construction rejects composites and oversized moduli") {
        CHECK_THROWS_AS(PrimeField(8), std::invalid_argument);
        CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
        CHECK_THROWS_AS(PrimeField((std::uint64_t{1} << 62) + 135), std::invalid_argument);
        CHECK_NOTHROW(PrimeField{kMersenne61});
    }

    TEST_CASE("arithmetic") {
        CHECK(F7.add(5, 4) == 2);
        CHECK(F7.sub(2, 5) == 4);
        CHECK(F7.neg(3) == 4);
        CHECK(F7.mul(6, 6) == 1);
        CHECK(F7.inv(3) == 5);
        CHECK(F7.reduce_signed(-1) == 6);
        CHECK_THROWS_AS(F7.inv(0), std::domain_error);
        const PrimeField big(kMersenne61);
        SplitMix64 rng(5);
        for (int i = 0; i < 200; ++i) {
            const auto a = 1 + rng.uniform(kMersenne61 - 1);
            CHECK(big.mul(a, big.inv(a)) == 1);
            CHECK(big.pow(a, kMersenne61 - 1) == 1);
            CHECK(big.mul(a, 7) == oracle::mulmod(a, 7, kMersenne61));
        }
    }
}

TEST_SUITE("matrix") {
    TEST_CASE("rank examples") {
        CHECK(rank(MatrixFp::identity(F7, 3)) == 3);
        CHECK(rank(MatrixFp(F7, 2, 5)) == 0);
        const MatrixFp m = m7({{1, 2}, {2, 4}});
        CHECK(rank(m) == 1);
        CHECK(oracle::rank_by_minors(m) == 1);
    }

    TEST_CASE("entries are reduced") {
        const MatrixFp m = m7({{8, 15}, {7, 100}});
        CHECK(m(0, 0) == 1);
        CHECK(m(0, 1) == 1);
        CHECK(m(1, 0) == 0);
        CHECK(m(1, 1) == 2);
    }

    TEST_CASE("rank agrees with minors, its transpose, and rank-nullity") {
        SplitMix64 rng(11);
        for (int iter = 0; iter < 1000; ++iter) {
            const std::uint64_t p = iter % 3 == 0 ? 2 : iter % 3 == 1 ? 7 : kMersenne61;
            const PrimeField f(p);
            const std::size_t r = 1 + rng.uniform(12), c = 1 + rng.uniform(12);
            MatrixFp m = random_matrix(f, r, c, rng.next());
            // Force low rank sometimes.
            if (iter % 4 == 0 && r > 2) {
                const std::size_t keep = 1 + rng.uniform(r - 1);
                for (std::size_t i = keep; i < r; ++i)
                    for (std::size_t j = 0; j < c; ++j) m.set(i, j, f.add(m(i % keep, j), m((i + 1) % keep, j)));
            }
            const std::size_t rk = rank(m);
            CHECK(rk == rank(m.transpose()));
            CHECK(rk <= std::min(r, c));
            const MatrixFp ker = kernel_matrix(m);
            CHECK(ker.rows() + rk == c);
            CHECK((m * ker.transpose()).is_zero());
            CHECK(rank(ker) == ker.rows());
            if (r <= 6 && c <= 6 && p == 7) CHECK(rk == oracle::rank_by_minors(m));
        }
    }

    TEST_CASE("solve and inverse") {
        SplitMix64 rng(3);
        const PrimeField f(10007);
        for (int iter = 0; iter < 100; ++iter) {
            const std::size_t n = 1 + rng.uniform(6);
            const MatrixFp a = random_matrix(f, n, n, rng.next());
            Vector x(n);
            for (auto& v : x) v = rng.uniform(f.modulus());
            const Vector b = a.apply(x);
            const auto sol = solve(a, b);
            REQUIRE(sol.has_value());
            CHECK(a.apply(*sol) == b);
            const auto inv = inverse(a);
            CHECK(inv.has_value() == (rank(a) == n));
            if (inv) CHECK(a * *inv == MatrixFp::identity(f, n));
        }
        const MatrixFp singular = m7({{1, 2}, {2, 4}});
        CHECK_FALSE(inverse(singular).has_value());
        CHECK_FALSE(solve(singular, Vector{1, 0}).has_value());
    }

    TEST_CASE("kernel examples") {
        const Subspace k1 = kernel_basis(m7({{1, 1}}));
        CHECK(k1.dim() == 1);
        CHECK(k1.contains(Vector{1, 6}));
        // Exhaustive: the kernel is exactly {(a, -a)}.
        for (const auto& v : oracle::all_vectors(7, 2)) CHECK(k1.contains(v) == ((v[0] + v[1]) % 7 == 0));
        CHECK(kernel_basis(MatrixFp::identity(F7, 3)).dim() == 0);
        CHECK(kernel_basis(MatrixFp(F7, 1, 3)) == Subspace::full(F7, 3));
    }

    TEST_CASE("text format round trip") {
        const MatrixFp m = random_matrix(PrimeField(kMersenne61), 3, 4, 99);
        std::ostringstream os;
        write_matrix_text(os, m);
        std::istringstream is(os.str());
        CHECK(read_matrix_text(is) == m);

        std::istringstream exact("7 2 3\n1 2 3\n4 5 6\n");
        const MatrixFp e = read_matrix_text(exact);
        std::ostringstream back;
        write_matrix_text(back, e);
        CHECK(back.str() == "7 2 3\n1 2 3\n4 5 6\n");

        std::istringstream unreduced("7 1 1\n9\n");
        CHECK_THROWS(read_matrix_text(unreduced));
        std::istringstream shortrow("7 1 2\n1\n");
        CHECK_THROWS(read_matrix_text(shortrow));
        std::istringstream composite("8 1 1\n1\n");
        CHECK_THROWS(read_matrix_text(composite));
    }
}

TEST_SUITE("random") {
    TEST_CASE("seeded determinism") {
        CHECK(random_matrix(F7, 2, 2, 1) == random_matrix(F7, 2, 2, 1));
        CHECK_FALSE(random_matrix(PrimeField(kMersenne61), 4, 4, 1) == random_matrix(PrimeField(kMersenne61), 4, 4, 2));
        // SplitMix64 reference output for seed 0.
        SplitMix64 g(0);
        CHECK(g.next() == 0xE220A8397B1DCDAFULL);
        CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
    }

    TEST_CASE("GF(2) entries") {
        const PrimeField f2(2);
        for (std::uint64_t s = 0; s < 50; ++s) CHECK(random_matrix(f2, 1, 1, s)(0, 0) <= 1);
    }

    TEST_CASE("uniformity over 10^6 draws") {
        const std::size_t draws = 1'000'000;
        const MatrixFp m = random_matrix(F7, 1000, 1000, 2024);
        std::vector<double> count(7, 0.0);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (auto v : m.row(r)) count[v] += 1;
        const double expect = draws / 7.0;
        const double sigma = std::sqrt(draws * (1.0 / 7) * (6.0 / 7));
        double chi2 = 0;
        for (double c : count) {
            CHECK(std::abs(c - expect) <= 4 * sigma);
            chi2 += (c - expect) * (c - expect) / expect;
        }
        // 6 degrees of freedom: mean 6, standard deviation sqrt(12).
        CHECK(chi2 <= 6 + 4 * std::sqrt(12.0));
    }
}

TEST_SUITE("subspace") {
    TEST_CASE("intersection examples") {
        const Subspace a = Subspace::span(F7, 3, {{1, 0, 0}, {0, 1, 0}});
        const Subspace b = Subspace::span(F7, 3, {{0, 1, 0}, {0, 0, 1}});
        const std::vector<Subspace> ab{a, b};
        CHECK(subspace_intersection(ab) == Subspace::span(F7, 3, {{0, 1, 0}}));
        const std::vector<Subspace> aa{a, a};
        CHECK(subspace_intersection(aa) == a);

        const PrimeField f(10007);
        std::vector<Subspace> planes;
        for (std::uint64_t s = 0; s < 3; ++s) planes.push_back(Subspace::column_span(random_matrix(f, 3, 2, 100 + s)));
        CHECK(subspace_intersection(planes).dim() == 0);
    }

    TEST_CASE("errors") {
        CHECK_THROWS_AS(subspace_intersection(std::vector<Subspace>{}), std::invalid_argument);
        const std::vector<Subspace> mixed{Subspace::full(F7, 2), Subspace::full(F7, 3)};
        CHECK_THROWS_AS(subspace_intersection(mixed), std::invalid_argument);
    }

    TEST_CASE("intersection is exact on small fields") {
        SplitMix64 rng(77);
        for (int iter = 0; iter < 150; ++iter) {
            const std::uint64_t p = iter % 2 ? 3 : 5;
            const PrimeField f(p);
            const std::size_t amb = 1 + rng.uniform(4);
            const std::size_t count = 1 + rng.uniform(3);
            std::vector<Subspace> spaces;
            for (std::size_t i = 0; i < count; ++i)
                spaces.push_back(Subspace::column_span(random_matrix(f, amb, rng.uniform(amb + 1), rng.next())));
            const Subspace x = subspace_intersection(spaces);
            for (std::size_t b = 0; b < x.dim(); ++b)
                for (const auto& s : spaces) CHECK(s.contains(x.basis_vector(b)));
            for (const auto& v : oracle::all_vectors(p, amb)) {
                bool everywhere = true;
                for (const auto& s : spaces) everywhere = everywhere && s.contains(v);
                CHECK(everywhere == x.contains(v));
            }
        }
    }

    TEST_CASE("intersection ignores the choice of input bases") {
        SplitMix64 rng(8);
        const PrimeField f(10007);
        for (int iter = 0; iter < 50; ++iter) {
            std::vector<Subspace> first, second;
            for (int i = 0; i < 3; ++i) {
                const MatrixFp g = random_matrix(f, 5, 1 + rng.uniform(4), rng.next());
                first.push_back(Subspace::column_span(g));
                // Same column space under a random invertible change of basis.
                MatrixFp change = random_matrix(f, g.cols(), g.cols(), rng.next());
                while (rank(change) != g.cols()) change = random_matrix(f, g.cols(), g.cols(), rng.next());
                second.push_back(Subspace::column_span(g * change));
            }
            CHECK(subspace_intersection(first) == subspace_intersection(second));
        }
    }
}

TEST_SUITE("rational") {
    TEST_CASE("lowest terms") {
        Rational q(6, 8);
        q.canonicalize();
        CHECK(q.get_num() == 3);
        CHECK(q.get_den() == 4);
        CHECK(is_integral(Rational(4, 2)));
        CHECK(to_string(Rational(-1, 3)) == "-1/3");
    }

    TEST_CASE("rational rank agrees with GF(2^61-1) rank") {
        SplitMix64 rng(21);
        const PrimeField f(kMersenne61);
        for (int iter = 0; iter < 200; ++iter) {
            const std::size_t r = 1 + rng.uniform(6), c = 1 + rng.uniform(6);
            std::vector<std::vector<long>> rows(r, std::vector<long>(c));
            MatrixFp m(f, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) {
                    long v = static_cast<long>(rng.uniform(7)) - 3;
                    if (iter % 3 == 0 && i > 0) v = rows[0][j] * static_cast<long>(i);  // dependent rows
                    rows[i][j] = v;
                    m.set(i, j, f.reduce_signed(v));
                }
            const RationalMatrix q = RationalMatrix::from_integers(rows);
            CHECK(rank(q) == rank(m));
            const RationalEchelon e = rref(q);
            for (std::size_t i = 0; i < e.reduced.rows(); ++i)
                for (std::size_t j = 0; j < e.reduced.cols(); ++j) {
                    const Rational& x = e.reduced(i, j);
                    CHECK(gcd(x.get_num(), x.get_den()) == 1);
                }
        }
    }
}
