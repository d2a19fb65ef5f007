#include "homds/subspace.hpp"

#include <stdexcept>

namespace homds {

Subspace Subspace::row_span(const MatrixFp& generators) {
    const RowEchelon e = rref(generators);
    MatrixFp basis(generators.field(), e.rank(), generators.cols());
    for (std::size_t r = 0; r < e.rank(); ++r)
        for (std::size_t c = 0; c < generators.cols(); ++c) basis.set(r, c, e.reduced(r, c));
    return Subspace(std::move(basis));
}

Subspace Subspace::span(PrimeField field, std::size_t ambient, const std::vector<Vector>& vectors) {
    MatrixFp g(field, vectors.size(), ambient);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient) throw std::invalid_argument("span: vector of wrong length");
        for (std::size_t c = 0; c < ambient; ++c) g.set(r, c, vectors[r][c]);
    }
    return row_span(g);
}

Subspace Subspace::full(PrimeField field, std::size_t ambient) { return Subspace(MatrixFp::identity(field, ambient)); }

bool Subspace::contains(std::span<const std::uint64_t> v) const {
    if (v.size() != ambient()) throw std::invalid_argument("contains: vector of wrong length");
    MatrixFp row(field(), 1, ambient());
    for (std::size_t c = 0; c < ambient(); ++c) row.set(0, c, v[c]);
    return rank(vstack(basis_, row)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient() != ambient()) throw std::invalid_argument("contains: ambient dimension mismatch");
    return rank(vstack(basis_, other.basis_)) == dim();
}

Subspace Subspace::orthogonal_complement() const { return kernel_basis(basis_); }

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient() != ambient()) throw std::invalid_argument("sum: ambient dimension mismatch");
    return row_span(vstack(basis_, other.basis_));
}

Subspace kernel_basis(const MatrixFp& m) { return Subspace::row_span(kernel_matrix(m)); }

Subspace subspace_intersection(std::span<const Subspace> spaces) {
    if (spaces.empty()) throw std::invalid_argument("intersection of an empty list of subspaces");
    const std::size_t ambient = spaces.front().ambient();
    Subspace annihilators(spaces.front().field(), ambient);
    for (const auto& s : spaces) {
        if (s.ambient() != ambient) throw std::invalid_argument("intersection: ambient dimension mismatch");
        if (s.field() != spaces.front().field()) throw std::invalid_argument("intersection: field mismatch");
        annihilators = annihilators.sum(s.orthogonal_complement());
    }
    return annihilators.orthogonal_complement();
}

}  // namespace homds
