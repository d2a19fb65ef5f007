#include "homds/witness.hpp"

#include <algorithm>
#include <stdexcept>

#include "homds/intersect.hpp"
#include "homds/patterns.hpp"
#include "homds/subspace.hpp"

namespace homds {

namespace {

Vector spread(std::span<const std::uint64_t> x, std::size_t from, IndexSet support, std::size_t n) {
    Vector v(n, 0);
    for (int j : support.elements()) v[static_cast<std::size_t>(j)] = x[from++];
    return v;
}

IndexSet support_of(const Vector& v) {
    IndexSet s;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) s.insert(static_cast<int>(j));
    return s;
}

bool all_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

}  // namespace

std::optional<IntersectionWitness> find_intersection_witness(const MatrixFp& g, const SetFamily& family) {
    const LinearMatrixInstance inst = build_linear_matrix(family, g);
    const MatrixFp ker = kernel_matrix(inst.matrix);
    const PrimeField& f = g.field();
    const std::size_t n = g.cols();
    for (std::size_t b = 0; b < ker.rows(); ++b) {
        IntersectionWitness w{family, {}, {}};
        for (std::size_t i = 0; i < family.size(); ++i) {
            Vector u = spread(ker.row(b), inst.column_offsets[i], family.sets[i], n);
            if (i > 0)
                for (auto& x : u) x = f.neg(x);
            w.u.push_back(std::move(u));
        }
        w.z = g.apply(w.u[0]);
        if (!all_zero(w.z)) return w;
    }
    return std::nullopt;
}

bool verify_intersection_witness(const MatrixFp& g, const IntersectionWitness& w) {
    if (w.family.n != static_cast<int>(g.cols()) || w.family.k != static_cast<int>(g.rows())) return false;
    if (w.u.size() != w.family.size() || w.z.size() != g.rows() || all_zero(w.z)) return false;
    for (std::size_t i = 0; i < w.u.size(); ++i) {
        if (w.u[i].size() != g.cols() || !support_of(w.u[i]).subset_of(w.family.sets[i])) return false;
        if (g.apply(w.u[i]) != w.z) return false;
    }
    return is_null_intersecting(w.family);
}

LdMdsWitness mds_violation_to_ldmds(const LinearCode& code, const IntersectionWitness& w) {
    if (!verify_intersection_witness(code.generator, w))
        throw std::invalid_argument("mds_violation_to_ldmds: intersection witness does not verify");
    std::vector<Vector> distinct;
    for (const auto& u : w.u)
        if (std::find(distinct.begin(), distinct.end(), u) == distinct.end()) distinct.push_back(u);
    if (distinct.size() < 2)
        throw std::invalid_argument("mds_violation_to_ldmds: all preimages coincide, which forces z = 0");

    const LinearCode dual = dual_code(code);
    LdMdsWitness out;
    out.level = static_cast<int>(distinct.size()) - 1;
    out.syndrome = parity_check_matrix(dual).apply(distinct[0]);
    out.u = std::move(distinct);
    if (!verify_ld_mds_witness(dual, out))
        throw std::logic_error("mds_violation_to_ldmds: grouped vectors exceed the weight bound");
    return out;
}

DimensionGapReport ldmds_to_mds_violation(const LinearCode& code, const LdMdsWitness& w) {
    if (code.k() >= code.n()) throw std::invalid_argument("ldmds_to_mds_violation: requires k < n");
    if (!is_mds(code)) throw std::invalid_argument("ldmds_to_mds_violation: the code must be MDS");
    if (!verify_ld_mds_witness(code, w)) throw std::invalid_argument("ldmds_to_mds_violation: witness does not verify");

    const MatrixFp h = parity_check_matrix(code);
    const int redundancy = code.n() - code.k();
    DimensionGapReport rep;
    rep.family = SetFamily{code.n(), redundancy, {}, {}};
    for (const auto& u : w.u) {
        IndexSet s = support_of(u);
        const bool clip = s.size() > redundancy;
        if (clip) {
            IndexSet cut;
            for (int j : s.elements()) {
                if (cut.size() == redundancy) break;
                cut.insert(j);
            }
            s = cut;
        }
        rep.family.sets.push_back(s);
        rep.clipped.push_back(clip);
    }

    rep.generic_dimension = rep.family.size() <= static_cast<std::size_t>(kMaxPartitionSets)
                                ? generic_dim_partition(rep.family).dimension
                                : generic_dim_lp(rep.family).result.dimension;

    std::vector<Subspace> spans;
    for (auto s : rep.family.sets) spans.push_back(Subspace::column_span(h.select_columns(s.elements())));
    rep.intersection_dimension = static_cast<int>(subspace_intersection(spans).dim());
    rep.kernel_dimension =
        rep.family.total_size() - static_cast<int>(rank(build_linear_matrix(rep.family, h).matrix));
    return rep;
}

St20Matrix build_st20_matrix(const LinearCode& code, const std::vector<IndexSet>& sets) {
    const int t = static_cast<int>(sets.size());
    if (t < 2) throw std::invalid_argument("build_st20_matrix: need at least two sets");
    for (auto s : sets)
        if (!s.subset_of(IndexSet::prefix(code.n()))) throw std::invalid_argument("build_st20_matrix: set outside [n]");
    const auto k = static_cast<std::size_t>(code.k());
    const PrimeField& f = code.field();

    St20Matrix out{t, code.k(), code.n(), sets, MatrixFp(f, 0, 0), {}, 0};
    std::vector<std::vector<std::size_t>> block(static_cast<std::size_t>(t), std::vector<std::size_t>(static_cast<std::size_t>(t)));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            block[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = out.column_blocks.size();
            out.column_blocks.emplace_back(i, j);
        }

    std::size_t type_b = 0;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) type_b += static_cast<std::size_t>((sets[static_cast<std::size_t>(i)] & sets[static_cast<std::size_t>(j)]).size());
    const std::size_t pairs_a = static_cast<std::size_t>((t - 1) * (t - 2) / 2);
    out.type_a_rows = pairs_a * k;

    MatrixFp m(f, out.type_a_rows + type_b, out.column_blocks.size() * k);
    const std::uint64_t minus_one = f.neg(1);
    const auto last = static_cast<std::size_t>(t - 1);
    std::size_t row = 0;
    for (std::size_t i = 0; i < last; ++i)
        for (std::size_t j = i + 1; j < last; ++j) {
            for (std::size_t r = 0; r < k; ++r) {
                m.set(row + r, block[i][j] * k + r, 1);
                m.set(row + r, block[j][last] * k + r, 1);
                m.set(row + r, block[i][last] * k + r, minus_one);
            }
            row += k;
        }
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            for (int a : (sets[i] & sets[j]).elements()) {
                for (std::size_t r = 0; r < k; ++r) m.set(row, block[i][j] * k + r, code.generator(r, static_cast<std::size_t>(a)));
                ++row;
            }
    out.matrix = std::move(m);
    return out;
}

St20Report check_st20(const LinearCode& code, const std::vector<IndexSet>& sets) {
    const std::size_t t = sets.size();
    if (t < 2) throw std::invalid_argument("check_st20: need at least two sets");
    if (t > 20) throw CapacityError("check_st20: hypothesis scan is capped at 20 sets");
    St20Report rep;
    for (auto s : sets) rep.used_columns = rep.used_columns | s;

    rep.hypothesis_holds = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
        int total = 0;
        IndexSet uni;
        for (std::uint64_t b = mask; b; b &= b - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(b));
            total += sets[i].size();
            uni = uni | sets[i];
        }
        const int excess = total - uni.size();
        const int bound = (std::popcount(mask) - 1) * code.k();
        if (excess > bound) {
            rep.hypothesis_holds = false;
            if (!rep.violating_subset) rep.violating_subset = IndexSet(mask);
        }
        if (mask == (std::uint64_t{1} << t) - 1) rep.union_equality = excess == bound;
    }
    if (!rep.union_equality) rep.hypothesis_holds = false;
    if (!rep.hypothesis_holds) return rep;

    const St20Matrix m = build_st20_matrix(code, sets);
    rep.columns = m.matrix.cols();
    rep.rank = rank(m.matrix);
    rep.full_column_rank = rep.rank == rep.columns;
    return rep;
}

std::pair<std::vector<IndexSet>, Vector> st20_from_codewords(const LinearCode& code, const std::vector<Vector>& messages,
                                                             const Vector& center) {
    const PrimeField& f = code.field();
    const auto n = static_cast<std::size_t>(code.n());
    const auto k = static_cast<std::size_t>(code.k());
    if (center.size() != n) throw std::invalid_argument("st20_from_codewords: center has the wrong length");
    const MatrixFp gt = code.generator.transpose();
    std::vector<IndexSet> sets;
    for (const auto& msg : messages) {
        if (msg.size() != k) throw std::invalid_argument("st20_from_codewords: message has the wrong length");
        const Vector c = gt.apply(msg);
        IndexSet agree;
        for (std::size_t a = 0; a < n; ++a)
            if (c[a] == center[a]) agree.insert(static_cast<int>(a));
        sets.push_back(agree);
    }
    Vector v;
    for (std::size_t i = 0; i < messages.size(); ++i)
        for (std::size_t j = i + 1; j < messages.size(); ++j)
            for (std::size_t r = 0; r < k; ++r) v.push_back(f.sub(messages[j][r], messages[i][r]));
    return {std::move(sets), std::move(v)};
}

}  // namespace homds
