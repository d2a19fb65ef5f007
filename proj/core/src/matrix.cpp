#include "homds/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "homds/rng.hpp"

namespace homds {

MatrixFp MatrixFp::identity(PrimeField field, std::size_t n) {
    MatrixFp m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % field.modulus();
    return m;
}

MatrixFp MatrixFp::from_rows(PrimeField field, std::size_t cols, const std::vector<std::vector<std::uint64_t>>& rows) {
    MatrixFp m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                                        " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

MatrixFp MatrixFp::from_rows(PrimeField field, const std::vector<std::vector<std::uint64_t>>& rows) {
    return from_rows(field, rows.empty() ? 0 : rows.front().size(), rows);
}

Vector MatrixFp::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

MatrixFp MatrixFp::transpose() const {
    MatrixFp t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
    return t;
}

MatrixFp MatrixFp::select_columns(std::span<const int> cols) const {
    MatrixFp s(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] < 0 || static_cast<std::size_t>(cols[j]) >= cols_)
                throw std::out_of_range("column index out of range");
            s.data_[r * cols.size() + j] = (*this)(r, static_cast<std::size_t>(cols[j]));
        }
    return s;
}

MatrixFp MatrixFp::select_rows(std::span<const int> rows) const {
    MatrixFp s(field_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0 || static_cast<std::size_t>(rows[i]) >= rows_) throw std::out_of_range("row index out of range");
        for (std::size_t c = 0; c < cols_; ++c) s.data_[i * cols_ + c] = (*this)(static_cast<std::size_t>(rows[i]), c);
    }
    return s;
}

MatrixFp MatrixFp::operator*(const MatrixFp& rhs) const {
    if (field_ != rhs.field_) throw std::invalid_argument("matrix product over different fields");
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    MatrixFp out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t t = 0; t < cols_; ++t) {
            const std::uint64_t a = (*this)(i, t);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                auto& cell = out.data_[i * rhs.cols_ + j];
                cell = field_.add(cell, field_.mul(a, rhs(t, j)));
            }
        }
    return out;
}

Vector MatrixFp::apply(std::span<const std::uint64_t> x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Vector y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = field_.add(acc, field_.mul((*this)(r, c), field_.reduce(x[c])));
        y[r] = acc;
    }
    return y;
}

bool MatrixFp::is_zero() const noexcept {
    for (auto v : data_)
        if (v != 0) return false;
    return true;
}

MatrixFp vstack(const MatrixFp& top, const MatrixFp& bottom) {
    if (top.field() != bottom.field() || top.cols() != bottom.cols())
        throw std::invalid_argument("vstack: incompatible matrices");
    MatrixFp out(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out.set(r, c, top(r, c));
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < top.cols(); ++c) out.set(top.rows() + r, c, bottom(r, c));
    return out;
}

MatrixFp hstack(const MatrixFp& left, const MatrixFp& right) {
    if (left.field() != right.field() || left.rows() != right.rows())
        throw std::invalid_argument("hstack: incompatible matrices");
    MatrixFp out(left.field(), left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) out.set(r, c, left(r, c));
        for (std::size_t c = 0; c < right.cols(); ++c) out.set(r, left.cols() + c, right(r, c));
    }
    return out;
}

RowEchelon rref(MatrixFp m) {
    const PrimeField& f = m.field_;
    const std::size_t R = m.rows_, C = m.cols_;
    auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& { return m.data_[r * C + c]; };
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t pr = row;
        while (pr < R && at(pr, col) == 0) ++pr;
        if (pr == R) continue;
        if (pr != row)
            for (std::size_t c = 0; c < C; ++c) std::swap(at(pr, c), at(row, c));
        const std::uint64_t scale = f.inv(at(row, col));
        for (std::size_t c = col; c < C; ++c) at(row, c) = f.mul(at(row, c), scale);
        for (std::size_t r = 0; r < R; ++r) {
            if (r == row) continue;
            const std::uint64_t factor = at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < C; ++c) at(r, c) = f.sub(at(r, c), f.mul(factor, at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return RowEchelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const MatrixFp& m) { return rref(m).rank(); }

MatrixFp kernel_matrix(const MatrixFp& m) {
    const RowEchelon e = rref(m);
    const std::size_t C = m.cols();
    std::vector<bool> is_pivot(C, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    const PrimeField& f = m.field();
    MatrixFp basis(f, C - e.rank(), C);
    std::size_t out = 0;
    for (std::size_t free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        basis.set(out, free, 1);
        for (std::size_t i = 0; i < e.rank(); ++i) basis.set(out, e.pivots[i], f.neg(e.reduced(i, free)));
        ++out;
    }
    return basis;
}

std::optional<Vector> solve(const MatrixFp& m, std::span<const std::uint64_t> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
    const PrimeField& f = m.field();
    MatrixFp aug(f, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
        aug.set(r, m.cols(), b[r]);
    }
    const RowEchelon e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols(), 0);
    for (std::size_t i = 0; i < e.rank(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
    return x;
}

std::optional<MatrixFp> inverse(const MatrixFp& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    const RowEchelon e = rref(hstack(m, MatrixFp::identity(m.field(), n)));
    if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
    MatrixFp inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.set(r, c, e.reduced(r, n + c));
    return inv;
}

MatrixFp random_matrix(PrimeField field, std::size_t rows, std::size_t cols, std::uint64_t seed) {
    SplitMix64 gen(seed);
    MatrixFp m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, gen.uniform(field.modulus()));
    return m;
}

void write_matrix_text(std::ostream& os, const MatrixFp& m) {
    os << m.field().modulus() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m(r, c);
        }
        os << '\n';
    }
}

MatrixFp read_matrix_text(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("matrix text: missing header");
    std::istringstream header(line);
    std::uint64_t p = 0;
    std::size_t rows = 0, cols = 0;
    if (!(header >> p >> rows >> cols)) throw std::runtime_error("matrix text: malformed header '" + line + "'");
    PrimeField field(p);
    MatrixFp m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(is, line)) throw std::runtime_error("matrix text: missing row " + std::to_string(r));
        std::istringstream row(line);
        for (std::size_t c = 0; c < cols; ++c) {
            std::uint64_t v = 0;
            if (!(row >> v)) throw std::runtime_error("matrix text: short row " + std::to_string(r));
            if (v >= p) throw std::runtime_error("matrix text: entry not reduced modulo p");
            m.set(r, c, v);
        }
        std::string extra;
        if (row >> extra) throw std::runtime_error("matrix text: long row " + std::to_string(r));
    }
    return m;
}

}  // namespace homds
