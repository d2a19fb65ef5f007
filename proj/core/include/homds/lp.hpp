#pragma once

#include <cstddef>

#include "homds/rational.hpp"

namespace homds {

struct SimplexResult {
    RationalVector x;      // optimal primal point
    RationalVector duals;  // one multiplier per constraint row
    Rational objective;
    std::size_t pivots = 0;
};

/// Exact tableau simplex for  max c.x  s.t.  A x <= b, x >= 0  with b >= 0, so the
/// origin is a feasible start. Bland's rule guarantees termination.
/// Throws std::invalid_argument on shape errors or negative b, std::domain_error if unbounded.
SimplexResult maximize_nonneg(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

}  // namespace homds
