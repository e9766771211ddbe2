#include "sympdeg/linalg.hpp"

#include <utility>

namespace sympdeg {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
    return out;
}

std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = row;
        while (p < m.rows() && m(p, col) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Rational inv = 1 / m(row, col);
        for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rational factor = m(r, col);
            for (int c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

int rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix nullspace(const RatMatrix& m) {
    RatMatrix e = m;
    const std::vector<int> pivots = rref(e);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<int> free;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);

    RatMatrix basis(m.cols(), static_cast<int>(free.size()));
    for (std::size_t k = 0; k < free.size(); ++k) {
        const int fc = free[k];
        basis(fc, static_cast<int>(k)) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            basis(pivots[r], static_cast<int>(k)) = -e(static_cast<int>(r), fc);
        }
    }
    return basis;
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace sympdeg
