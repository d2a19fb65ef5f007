#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace homds {

/// Arbitrary-precision rational; GMP keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

inline bool is_integral(const Rational& q) { return mpz_divisible_p(q.get_num_mpz_t(), q.get_den_mpz_t()) != 0; }
inline std::string to_string(const Rational& q) { return q.get_str(); }

class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static RationalMatrix from_integers(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

struct RationalEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const noexcept { return pivots.size(); }
};

RationalEchelon rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

}  // namespace homds
