#include "homds/codes.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "homds/intersect.hpp"
#include "homds/patterns.hpp"
#include "homds/rng.hpp"

namespace homds {

namespace {

// Visits the r-subsets of {0..n-1} in lexicographic order of their sorted elements.
template <class Visit>
bool for_each_combination(int n, int r, Visit&& visit) {
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (r > n) return true;
    for (;;) {
        if (!visit(IndexSet::of(idx))) return false;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

MatrixFp columns_of(const MatrixFp& m, IndexSet cols) {
    const auto e = cols.elements();
    return m.select_columns(e);
}

// Basis of {v in F^k : v^T G^A = 0}, one vector per row.
MatrixFp left_annihilator(const MatrixFp& g, IndexSet cols) {
    if (cols.empty()) return MatrixFp::identity(g.field(), g.rows());
    return kernel_matrix(columns_of(g, cols).transpose());
}

void require_shape(const LinearCode& code, const ZeroPattern& pattern) {
    if (pattern.n != code.n() || pattern.k != code.k())
        throw std::invalid_argument("pattern shape does not match the code");
}

int weight(const Vector& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; }));
}

}  // namespace

void LinearCode::validate() const {
    if (generator.rows() < 1 || generator.rows() > generator.cols())
        throw std::invalid_argument("code: need 1 <= k <= n");
    if (generator.cols() > static_cast<std::size_t>(IndexSet::kCapacity))
        throw std::invalid_argument("code: n is capped at 64");
    if (rank(generator) != generator.rows()) throw std::invalid_argument("code: generator must have full row rank");
    if (rs_points) {
        if (rs_points->size() != generator.cols()) throw std::invalid_argument("code: need one evaluation point per column");
        if (vandermonde(field(), *rs_points, k()).generator != generator)
            throw std::invalid_argument("code: generator does not match the evaluation points");
    }
}

LinearCode vandermonde(PrimeField field, std::span<const std::uint64_t> points, int k) {
    const std::size_t n = points.size();
    if (k < 1 || static_cast<std::size_t>(k) > n) throw std::invalid_argument("vandermonde: need 1 <= k <= n");
    std::vector<std::uint64_t> pts;
    for (auto a : points) {
        if (a >= field.modulus()) throw std::invalid_argument("vandermonde: point is not a field element");
        pts.push_back(a);
    }
    std::vector<std::uint64_t> sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("vandermonde: evaluation points must be distinct");

    MatrixFp g(field, static_cast<std::size_t>(k), n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t p = 1;
        for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r) {
            g.set(r, i, p);
            p = field.mul(p, pts[i]);
        }
    }
    return LinearCode{std::move(g), std::move(pts)};
}

LinearCode grs_dual(const LinearCode& code) {
    if (!code.rs_points) throw std::invalid_argument("grs_dual: evaluation points required");
    const auto& a = *code.rs_points;
    const std::size_t n = a.size();
    if (n < 2) throw std::invalid_argument("grs_dual: need at least two points");
    if (code.k() >= code.n()) throw std::invalid_argument("grs_dual: dual of a full-length code is trivial");
    const PrimeField& f = code.field();

    const std::size_t rows = n - static_cast<std::size_t>(code.k());
    MatrixFp h(f, rows, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t delta = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) delta = f.mul(delta, f.sub(a[i], a[j]));
        if (delta == 0) throw std::invalid_argument("grs_dual: evaluation points must be distinct");
        std::uint64_t v = f.inv(delta);
        for (std::size_t r = 0; r < rows; ++r) {
            h.set(r, i, v);
            v = f.mul(v, a[i]);
        }
    }
    return LinearCode{std::move(h), std::nullopt};
}

MatrixFp parity_check_matrix(const LinearCode& code) { return kernel_matrix(code.generator); }

LinearCode dual_code(const LinearCode& code) {
    if (code.k() >= code.n()) throw std::invalid_argument("dual_code: requires k < n");
    if (code.rs_points) return grs_dual(code);
    return LinearCode{parity_check_matrix(code), std::nullopt};
}

std::optional<IndexSet> mds_violation(const LinearCode& code) {
    std::optional<IndexSet> bad;
    for_each_combination(code.n(), code.k(), [&](IndexSet cols) {
        if (rank(columns_of(code.generator, cols)) < static_cast<std::size_t>(code.k())) {
            bad = cols;
            return false;
        }
        return true;
    });
    return bad;
}

bool is_mds(const LinearCode& code) { return !mds_violation(code).has_value(); }

MdsEllResult is_mds_ell(const LinearCode& code, int ell, std::size_t budget) {
    if (ell < 1) throw std::invalid_argument("is_mds_ell: level must be positive");
    const int n = code.n();
    const int k = code.k();
    MdsEllResult res;
    if (auto bad = mds_violation(code)) {
        res.holds = false;
        res.violating = SetFamily{n, k, {*bad}, {}};
        return res;
    }
    if (ell == 1) return res;

    std::vector<IndexSet> subsets;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
        if (std::popcount(m) <= k) subsets.emplace_back(m);

    const int target = (ell - 1) * k;
    std::vector<IndexSet> chosen;
    const auto expected = static_cast<std::size_t>(target);

    auto dfs = [&](auto&& self, std::size_t from, int used) -> bool {
        const int slots = ell - static_cast<int>(chosen.size());
        if (slots == 0) {
            if (used != target) return true;
            if (++res.families_checked > budget) throw CapacityError("is_mds_ell: family budget exceeded");
            SetFamily fam{n, k, chosen, {}};
            if (!is_null_intersecting(fam)) return true;
            if (rank(build_linear_matrix(fam, code.generator).matrix) != expected) {
                res.holds = false;
                res.violating = std::move(fam);
                return false;
            }
            return true;
        }
        for (std::size_t i = from; i < subsets.size(); ++i) {
            const int s = subsets[i].size();
            if (used + s > target || used + s + (slots - 1) * k < target) continue;
            chosen.push_back(subsets[i]);
            const bool go = self(self, i, used + s);
            chosen.pop_back();
            if (!go) return false;
        }
        return true;
    };
    dfs(dfs, 0, 0);
    return res;
}

bool verify_gzp_certificate(const LinearCode& code, const GzpCertificate& cert) {
    const auto k = static_cast<std::size_t>(code.k());
    if (cert.pattern.n != code.n() || cert.pattern.k != code.k()) return false;
    if (cert.pattern.rows.size() != k) return false;
    if (cert.m.rows() != k || cert.m.cols() != k || !(cert.m.field() == code.field())) return false;
    if (rank(cert.m) != k) return false;
    const MatrixFp prod = cert.m * code.generator;
    for (std::size_t r = 0; r < k; ++r)
        for (int j : cert.pattern.rows[r].elements())
            if (j >= code.n() || prod(r, static_cast<std::size_t>(j)) != 0) return false;
    return true;
}

AttainResult attain_pattern(const LinearCode& code, const ZeroPattern& pattern, AttainStrategy strategy) {
    require_shape(code, pattern);
    if (auto bad = gzp_violation(pattern))
        throw std::invalid_argument("attain_pattern: not a generic zero pattern (rows " + to_string(*bad) + ")");

    AttainResult res;
    res.extended = strategy == AttainStrategy::maximal ? extend_to_maximal(pattern) : gen_hall_k_minus_1(pattern);
    const auto k = static_cast<std::size_t>(code.k());
    const PrimeField& f = code.field();

    MatrixFp m(f, k, k);
    std::vector<bool> filled(k, false);
    std::vector<IndexSet> done;
    for (std::size_t r = 0; r < k; ++r) {
        const IndexSet s = res.extended.rows[r];
        if (s.empty() || std::find(done.begin(), done.end(), s) != done.end()) continue;
        done.push_back(s);
        const MatrixFp ann = left_annihilator(code.generator, s);
        std::size_t next = 0;
        for (std::size_t q = r; q < k; ++q) {
            if (res.extended.rows[q] != s) continue;
            if (next == ann.rows()) {
                res.reason = "annihilator of " + to_string(s) + " has dimension " + std::to_string(ann.rows()) +
                             ", fewer than its multiplicity";
                return res;
            }
            for (std::size_t c = 0; c < k; ++c) m.set(q, c, ann(next, c));
            filled[q] = true;
            ++next;
        }
    }

    std::vector<int> used;
    for (std::size_t r = 0; r < k; ++r)
        if (filled[r]) used.push_back(static_cast<int>(r));
    if (rank(m.select_rows(used)) != used.size()) {
        res.reason = "stacked annihilator rows are linearly dependent";
        return res;
    }
    // Complete the empty rows with standard basis vectors, greedily.
    std::size_t current = used.size();
    std::size_t unit = 0;
    for (std::size_t r = 0; r < k; ++r) {
        if (filled[r]) continue;
        for (; unit < k; ++unit) {
            for (std::size_t c = 0; c < k; ++c) m.set(r, c, c == unit ? 1 : 0);
            used.push_back(static_cast<int>(r));
            if (rank(m.select_rows(used)) == current + 1) {
                ++current;
                ++unit;
                break;
            }
            used.pop_back();
        }
    }
    if (current != k) {
        res.reason = "could not complete to an invertible matrix";
        return res;
    }

    GzpCertificate cert{pattern, std::move(m)};
    if (!verify_gzp_certificate(code, cert)) {
        res.reason = "certificate failed verification";
        return res;
    }
    res.success = true;
    res.certificate = std::move(cert);
    return res;
}

std::vector<ZeroPattern> maximal_patterns(int n, int k, int ell, std::size_t budget) {
    if (n < 1 || n > IndexSet::kCapacity || k < 1 || ell < 0) throw std::invalid_argument("maximal_patterns: bad parameters");
    std::vector<IndexSet> candidates;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const int s = std::popcount(m);
        if (s >= 1 && s <= k - 1) candidates.emplace_back(m);
    }

    std::vector<ZeroPattern> out;
    SetFamily fam{n, k, {}, {}};
    auto emit = [&]() {
        if (out.size() >= budget) throw CapacityError("maximal_patterns: pattern budget exceeded");
        if (fam.sets.empty()) {
            out.push_back(ZeroPattern{n, k, std::vector<IndexSet>(static_cast<std::size_t>(k))});
        } else {
            out.push_back(pattern_from_multiplicities(fam));
        }
    };
    auto dfs = [&](auto&& self, std::size_t from, int weight_used) -> void {
        emit();
        if (static_cast<int>(fam.sets.size()) == ell) return;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            const int delta = k - candidates[i].size();
            if (weight_used + delta > k) continue;
            fam.sets.push_back(candidates[i]);
            fam.deltas.push_back(delta);
            if (!ell_hall_violation(fam)) self(self, i + 1, weight_used + delta);
            fam.sets.pop_back();
            fam.deltas.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return out;
}

GzpEllResult is_gzp_ell(const LinearCode& code, int ell, std::size_t budget, bool keep_certificates) {
    if (ell < 1) throw std::invalid_argument("is_gzp_ell: level must be positive");
    GzpEllResult res;
    if (!is_mds(code)) {
        res.holds = false;
        res.mds = false;
        return res;
    }
    for (const auto& p : maximal_patterns(code.n(), code.k(), ell, budget)) {
        ++res.patterns_checked;
        AttainResult a = attain_pattern(code, p);
        if (!a.success) {
            res.holds = false;
            res.failing = p;
            return res;
        }
        if (keep_certificates) res.certificates.push_back(std::move(*a.certificate));
    }
    return res;
}

bool verify_ld_mds_witness(const LinearCode& code, const LdMdsWitness& w) {
    const auto n = static_cast<std::size_t>(code.n());
    if (w.level < 1 || w.u.size() != static_cast<std::size_t>(w.level) + 1) return false;
    const MatrixFp h = parity_check_matrix(code);
    int total = 0;
    for (std::size_t i = 0; i < w.u.size(); ++i) {
        if (w.u[i].size() != n) return false;
        for (auto x : w.u[i])
            if (x >= code.field().modulus()) return false;
        for (std::size_t j = 0; j < i; ++j)
            if (w.u[i] == w.u[j]) return false;
        if (h.apply(w.u[i]) != w.syndrome) return false;
        total += weight(w.u[i]);
    }
    return total <= w.level * (code.n() - code.k());
}

std::string_view to_string(LdMdsStrategy s) noexcept { return s == LdMdsStrategy::dual ? "dual" : "direct"; }

LdMdsStrategy parse_ld_mds_strategy(std::string_view name) {
    if (name == "dual") return LdMdsStrategy::dual;
    if (name == "direct") return LdMdsStrategy::direct;
    throw std::invalid_argument("unknown LD-MDS strategy '" + std::string(name) + "'");
}

namespace {

constexpr std::uint64_t kEnumerationLimit = 1'000'000;

// Expands a kernel vector of the syndrome system into the n-vectors u_0..u_m.
std::vector<Vector> expand(std::span<const std::uint64_t> x, const std::vector<IndexSet>& supports, std::size_t n) {
    std::vector<Vector> u;
    std::size_t pos = 0;
    for (auto s : supports) {
        Vector v(n, 0);
        for (int j : s.elements()) v[static_cast<std::size_t>(j)] = x[pos++];
        u.push_back(std::move(v));
    }
    return u;
}

bool pairwise_distinct(const std::vector<Vector>& u) {
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
            if (u[a] == u[b]) return false;
    return true;
}

// Some x in the row span of `basis` whose expansion is pairwise distinct, if one exists.
std::optional<std::vector<Vector>> distinct_point(const MatrixFp& basis, const std::vector<IndexSet>& supports,
                                                  std::size_t n, const PrimeField& f) {
    const std::size_t dim = basis.rows();
    if (dim == 0) return std::nullopt;
    const std::size_t m = supports.size();
    const std::size_t pairs = m * (m - 1) / 2;

    // A pair that agrees on every basis vector agrees everywhere.
    std::vector<std::vector<Vector>> expanded;
    for (std::size_t b = 0; b < dim; ++b) expanded.push_back(expand(basis.row(b), supports, n));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = 0; c < a; ++c) {
            bool separated = false;
            for (std::size_t b = 0; b < dim && !separated; ++b) separated = expanded[b][a] != expanded[b][c];
            if (!separated) return std::nullopt;
        }

    auto combine = [&](const Vector& coeff) {
        Vector x(basis.cols(), 0);
        for (std::size_t b = 0; b < dim; ++b)
            for (std::size_t c = 0; c < x.size(); ++c) x[c] = f.add(x[c], f.mul(coeff[b], basis(b, c)));
        return expand(x, supports, n);
    };

    const std::uint64_t q = f.modulus();
    const std::uint64_t degree = pairs * std::max<std::uint64_t>(dim - 1, 1);
    if (q > degree) {
        // Each pair is a nonzero linear form; along the moment curve it is a nonzero
        // polynomial of degree <= dim - 1, so one of the first degree+1 points works.
        for (std::uint64_t t = 0; t <= degree; ++t) {
            Vector coeff(dim);
            std::uint64_t p = 1;
            for (auto& c : coeff) {
                c = p;
                p = f.mul(p, t);
            }
            auto u = combine(coeff);
            if (pairwise_distinct(u)) return u;
        }
        throw std::logic_error("moment-curve search failed despite a large field");
    }

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > kEnumerationLimit / q) throw CapacityError("is_ld_mds_le: kernel too large to enumerate");
        total *= q;
    }
    Vector coeff(dim, 0);
    for (std::uint64_t it = 1; it < total; ++it) {
        for (std::size_t i = 0; i < dim; ++i) {
            if (++coeff[i] < q) break;
            coeff[i] = 0;
        }
        auto u = combine(coeff);
        if (pairwise_distinct(u)) return u;
    }
    return std::nullopt;
}

}  // namespace

LdMdsResult is_ld_mds_le(const LinearCode& code, int L, LdMdsStrategy strategy, std::size_t budget) {
    if (L < 1) throw std::invalid_argument("is_ld_mds_le: list size must be positive");
    LdMdsResult res;
    if (strategy == LdMdsStrategy::dual) {
        if (code.k() == code.n()) return res;
        MdsEllResult r = is_mds_ell(dual_code(code), L + 1, budget);
        res.holds = r.holds;
        res.dual_violation = std::move(r.violating);
        res.items_checked = r.families_checked;
        return res;
    }

    const auto n = static_cast<std::size_t>(code.n());
    const int redundancy = code.n() - code.k();
    const MatrixFp h = parity_check_matrix(code);
    const PrimeField& f = code.field();

    for (int level = 1; level <= L; ++level) {
        const int target = level * redundancy;
        const int m = level + 1;
        std::vector<IndexSet> supports;
        std::optional<std::vector<Vector>> found;

        auto test = [&]() {
            if (++res.items_checked > budget) throw CapacityError("is_ld_mds_le: support budget exceeded");
            std::vector<std::size_t> offset{0};
            for (auto s : supports) offset.push_back(offset.back() + static_cast<std::size_t>(s.size()));
            MatrixFp sys(f, static_cast<std::size_t>(level) * h.rows(), offset.back());
            for (int i = 1; i < m; ++i) {
                const std::size_t row0 = static_cast<std::size_t>(i - 1) * h.rows();
                std::size_t c = 0;
                for (int j : supports[0].elements()) {
                    for (std::size_t r = 0; r < h.rows(); ++r) sys.set(row0 + r, c, h(r, static_cast<std::size_t>(j)));
                    ++c;
                }
                c = offset[static_cast<std::size_t>(i)];
                for (int j : supports[static_cast<std::size_t>(i)].elements()) {
                    for (std::size_t r = 0; r < h.rows(); ++r)
                        sys.set(row0 + r, c, f.neg(h(r, static_cast<std::size_t>(j))));
                    ++c;
                }
            }
            found = distinct_point(kernel_matrix(sys), supports, n, f);
        };

        auto dfs = [&](auto&& self, std::uint64_t from, int used) -> bool {
            const int slots = m - static_cast<int>(supports.size());
            if (slots == 0) {
                if (used != target) return true;
                test();
                return !found;
            }
            for (std::uint64_t mask = from; mask < (std::uint64_t{1} << n); ++mask) {
                const int s = std::popcount(mask);
                if (used + s > target || used + s + (slots - 1) * code.n() < target) continue;
                supports.emplace_back(mask);
                const bool go = self(self, mask, used + s);
                supports.pop_back();
                if (!go) return false;
            }
            return true;
        };
        dfs(dfs, 0, 0);

        if (found) {
            LdMdsWitness w;
            w.level = level;
            w.u = std::move(*found);
            w.syndrome = h.apply(w.u[0]);
            res.holds = false;
            res.witness = std::move(w);
            return res;
        }
    }
    return res;
}

AverageRadiusResult brute_force_average_radius(const LinearCode& code, int L, std::size_t budget) {
    if (L < 1) throw std::invalid_argument("brute_force_average_radius: list size must be positive");
    const PrimeField& f = code.field();
    const std::uint64_t q = f.modulus();
    const auto k = static_cast<std::size_t>(code.k());
    const auto n = static_cast<std::size_t>(code.n());

    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (count > budget / q) throw CapacityError("brute_force_average_radius: q^k exceeds the budget");
        count *= q;
    }

    std::vector<Vector> words;
    Vector msg(k, 0);
    for (std::uint64_t it = 0; it < count; ++it) {
        Vector c(n, 0);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < n; ++j) c[j] = f.add(c[j], f.mul(msg[r], code.generator(r, j)));
        words.push_back(std::move(c));
        for (std::size_t i = 0; i < k; ++i) {
            if (++msg[i] < q) break;
            msg[i] = 0;
        }
    }

    const auto m = static_cast<std::size_t>(L) + 1;
    const int limit = L * (code.n() - code.k());
    AverageRadiusResult res;
    if (words.size() < m) return res;

    std::vector<std::size_t> pick(m);
    auto cost_of = [&](Vector* center) {
        int cost = 0;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t best = 0;
            std::uint64_t sym = 0;
            for (std::size_t a = 0; a < m; ++a) {
                const std::uint64_t v = words[pick[a]][j];
                std::size_t mult = 0;
                for (std::size_t b = 0; b < m; ++b) mult += words[pick[b]][j] == v;
                if (mult > best || (mult == best && v < sym)) {
                    best = mult;
                    sym = v;
                }
            }
            cost += static_cast<int>(m - best);
            if (center) (*center)[j] = sym;
        }
        return cost;
    };

    auto dfs = [&](auto&& self, std::size_t depth, std::size_t from) -> bool {
        if (depth == m) {
            ++res.tuples_checked;
            const int cost = cost_of(nullptr);
            if (cost <= limit) {
                res.holds = false;
                res.cost = cost;
                res.center.assign(n, 0);
                cost_of(&res.center);
                for (auto i : pick) res.codewords.push_back(words[i]);
                return false;
            }
            return true;
        }
        for (std::size_t i = from; i < words.size(); ++i) {
            pick[depth] = i;
            if (!self(self, depth + 1, i + 1)) return false;
        }
        return true;
    };
    dfs(dfs, 0, 0);
    return res;
}

Rational radius_from_params(const Rational& rate, int L) {
    if (rate <= 0 || rate >= 1) throw std::invalid_argument("radius_from_params: rate must lie in (0, 1)");
    if (L < 1) throw std::invalid_argument("radius_from_params: list size must be positive");
    Rational rho = 1 - rate - (1 - rate) / Rational(L + 1);
    rho.canonicalize();
    return rho;
}

mpz_class rs_failure_constant(int n, int k, int L) {
    if (n < 1 || k < 1 || k > n || L < 1) throw std::invalid_argument("rs_failure_constant: bad parameters");
    mpz_class ball = 0;
    for (int i = 0; i <= n - k; ++i) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
        ball += b;
    }
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), ball.get_mpz_t(), static_cast<unsigned long>(L + 1));
    return mpz_class(2) * L * n * n * power;
}

RsTrialOutcome evaluate_rs_points(PrimeField field, std::span<const std::uint64_t> points, int k, int L) {
    RsTrialOutcome out;
    out.points.assign(points.begin(), points.end());
    std::vector<std::uint64_t> sorted = out.points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        out.distinct = false;
        return out;
    }
    const LinearCode code = vandermonde(field, points, k);
    LdMdsResult r = is_ld_mds_le(code, L, LdMdsStrategy::dual);
    out.ld_mds = r.holds;
    out.dual_violation = std::move(r.dual_violation);
    return out;
}

RsReport random_rs_trial(int n, int k, int L, PrimeField field, int trials, std::uint64_t seed, int workers) {
    if (field.modulus() < std::max<std::uint64_t>(static_cast<std::uint64_t>(std::max(n, 0)), std::uint64_t{1} << 31))
        throw std::invalid_argument("random_rs_trial: field modulus must be at least max(n, 2^31)");
    if (n < 2 || k < 1 || k >= n || L < 1 || trials < 0)
        throw std::invalid_argument("random_rs_trial: need 1 <= k < n and L >= 1");

    RsReport rep;
    rep.n = n;
    rep.k = k;
    rep.L = L;
    rep.trials = trials;
    rep.prime = field.modulus();
    rep.seed = seed;
    rep.c = rs_failure_constant(n, k, L);
    rep.bound = rep.c.get_d() / static_cast<double>(field.modulus());
    rep.outcomes.resize(static_cast<std::size_t>(trials));

    std::atomic<int> next{0};
    auto work = [&]() {
        for (int t = next++; t < trials; t = next++) {
            SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
            std::vector<std::uint64_t> pts(static_cast<std::size_t>(n));
            for (auto& a : pts) a = rng.uniform(field.modulus());
            rep.outcomes[static_cast<std::size_t>(t)] = evaluate_rs_points(field, pts, k, L);
        }
    };
    const int threads = std::max(1, std::min(workers, trials));
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    for (const auto& o : rep.outcomes)
        if (!o.ld_mds) ++rep.failures;
    return rep;
}

LinearCode planted_non_mds3(PrimeField field, int n, std::uint64_t seed) {
    if (n < 6 || n > IndexSet::kCapacity) throw std::invalid_argument("planted_non_mds3: need 6 <= n <= 64");
    const std::uint64_t q = field.modulus();
    SplitMix64 rng(seed);
    auto nonzero = [&]() { return 1 + rng.uniform(q - 1); };
    for (int attempt = 0; attempt < 10000; ++attempt) {
        MatrixFp g(field, 3, static_cast<std::size_t>(n));
        Vector z(3);
        for (auto& v : z) v = rng.uniform(q);
        for (std::size_t pair = 0; pair < 3; ++pair) {
            const std::uint64_t r1 = nonzero();
            const std::uint64_t r2 = nonzero();
            for (std::size_t i = 0; i < 3; ++i) {
                const std::uint64_t a = rng.uniform(q);
                g.set(i, 2 * pair, a);
                g.set(i, 2 * pair + 1, field.add(field.mul(r1, z[i]), field.mul(r2, a)));
            }
        }
        for (std::size_t c = 6; c < static_cast<std::size_t>(n); ++c)
            for (std::size_t i = 0; i < 3; ++i) g.set(i, c, rng.uniform(q));
        LinearCode code{std::move(g), std::nullopt};
        if (rank(code.generator) == 3 && is_mds(code)) return code;
    }
    throw std::runtime_error("planted_non_mds3: no MDS instance found; the field may be too small");
}

}  // namespace homds
