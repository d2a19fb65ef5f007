#pragma once

#include <span>
#include <vector>

#include "homds/matrix.hpp"

namespace homds {

/// Linear subspace of GF(p)^ambient, stored as a reduced row echelon basis
/// so that equal subspaces have identical representations.
class Subspace {
public:
    /// The zero subspace.
    Subspace(PrimeField field, std::size_t ambient) : basis_(field, 0, ambient) {}

    /// Span of the rows of `generators` (which need not be independent).
    static Subspace row_span(const MatrixFp& generators);
    /// Span of the columns of `generators`.
    static Subspace column_span(const MatrixFp& generators) { return row_span(generators.transpose()); }
    static Subspace span(PrimeField field, std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace full(PrimeField field, std::size_t ambient);

    const PrimeField& field() const noexcept { return basis_.field(); }
    std::size_t ambient() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    /// dim() x ambient() matrix whose rows are the basis vectors.
    const MatrixFp& basis() const noexcept { return basis_; }
    Vector basis_vector(std::size_t i) const { return Vector(basis_.row(i).begin(), basis_.row(i).end()); }

    bool contains(std::span<const std::uint64_t> v) const;
    bool contains(const Subspace& other) const;
    /// {x : <x, v> = 0 for all v in this}.
    Subspace orthogonal_complement() const;
    Subspace sum(const Subspace& other) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    explicit Subspace(MatrixFp basis) : basis_(std::move(basis)) {}
    MatrixFp basis_;
};

/// Basis of the null space {x : m x = 0}.
Subspace kernel_basis(const MatrixFp& m);

/// Common intersection of the given subspaces, computed through annihilators:
/// the intersection is the complement of the sum of the complements.
/// Throws std::invalid_argument on an empty list or mismatched ambient dimensions.
Subspace subspace_intersection(std::span<const Subspace> spaces);

}  // namespace homds
