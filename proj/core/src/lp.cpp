#include "homds/lp.hpp"

#include <stdexcept>

namespace homds {

SimplexResult maximize_nonneg(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
    const std::size_t m = a.rows();
    const std::size_t nv = a.cols();
    if (b.size() != m || c.size() != nv) throw std::invalid_argument("simplex: shape mismatch");
    for (const auto& v : b)
        if (v < 0) throw std::invalid_argument("simplex: right-hand side must be nonnegative");

    // Columns: nv structural, m slack, then the right-hand side. Row m is the
    // reduced-cost row (c_j - z_j), with minus the objective in the last cell.
    const std::size_t width = nv + m + 1;
    RationalMatrix t(m + 1, width);
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < nv; ++j) t(r, j) = a(r, j);
        t(r, nv + r) = 1;
        t(r, width - 1) = b[r];
        basis[r] = nv + r;
    }
    for (std::size_t j = 0; j < nv; ++j) t(m, j) = c[j];

    SimplexResult out;
    for (;;) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (t(m, j) > 0) {
                enter = j;
                break;
            }
        if (enter == width) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t r = 0; r < m; ++r) {
            if (t(r, enter) <= 0) continue;
            Rational ratio = t(r, width - 1) / t(r, enter);
            if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == m) throw std::domain_error("simplex: objective is unbounded");

        const Rational piv = t(leave, enter);
        for (std::size_t j = 0; j < width; ++j) t(leave, j) /= piv;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == leave || t(r, enter) == 0) continue;
            const Rational f = t(r, enter);
            for (std::size_t j = 0; j < width; ++j) t(r, j) -= f * t(leave, j);
        }
        basis[leave] = enter;
        ++out.pivots;
    }

    out.x.assign(nv, 0);
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] < nv) out.x[basis[r]] = t(r, width - 1);
    out.duals.resize(m);
    for (std::size_t r = 0; r < m; ++r) out.duals[r] = -t(m, nv + r);
    out.objective = -t(m, width - 1);
    return out;
}

}  // namespace homds
