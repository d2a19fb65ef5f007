#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "homds/field.hpp"

namespace homds {

using Vector = std::vector<std::uint64_t>;

struct RowEchelon;

/// Dense row-major matrix over GF(p). Every stored entry is reduced.
class MatrixFp {
public:
    MatrixFp(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static MatrixFp identity(PrimeField field, std::size_t n);
    /// Entries are reduced modulo p; all rows must have `cols` entries.
    static MatrixFp from_rows(PrimeField field, std::size_t cols, const std::vector<std::vector<std::uint64_t>>& rows);
    static MatrixFp from_rows(PrimeField field, const std::vector<std::vector<std::uint64_t>>& rows);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint64_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::uint64_t v) noexcept { data_[r * cols_ + c] = field_.reduce(v); }

    std::span<const std::uint64_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    Vector column(std::size_t c) const;

    MatrixFp transpose() const;
    /// Submatrix made of the listed columns, in the given order.
    MatrixFp select_columns(std::span<const int> cols) const;
    MatrixFp select_rows(std::span<const int> rows) const;

    MatrixFp operator*(const MatrixFp& rhs) const;
    Vector apply(std::span<const std::uint64_t> x) const;

    bool is_zero() const noexcept;

    friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

private:
    friend RowEchelon rref(MatrixFp m);

    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint64_t> data_;
};

MatrixFp vstack(const MatrixFp& top, const MatrixFp& bottom);
MatrixFp hstack(const MatrixFp& left, const MatrixFp& right);

struct RowEchelon {
    MatrixFp reduced;                 // reduced row echelon form, same shape as the input
    std::vector<std::size_t> pivots;  // pivot column of each of the first rank() rows
    std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination, first-nonzero pivoting.
RowEchelon rref(MatrixFp m);
std::size_t rank(const MatrixFp& m);
/// Rows of the result form a basis of {x : m x = 0}, one row per free column.
MatrixFp kernel_matrix(const MatrixFp& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const MatrixFp& m, std::span<const std::uint64_t> b);
std::optional<MatrixFp> inverse(const MatrixFp& m);

/// Entries i.i.d. uniform over the field, drawn from SplitMix64(seed).
MatrixFp random_matrix(PrimeField field, std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Text format: "p r c" header, then r lines of c residues separated by single spaces.
void write_matrix_text(std::ostream& os, const MatrixFp& m);
MatrixFp read_matrix_text(std::istream& is);

}  // namespace homds
