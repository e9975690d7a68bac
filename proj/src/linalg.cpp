#include <spinkerov/linalg.hpp>

#include <stdexcept>

namespace spinkerov {

namespace {

// Row-echelon elimination in place; returns the pivot column of each pivot row.
std::vector<std::size_t> eliminate(RationalMatrix& a, RationalVector* b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        if (b) std::swap((*b)[pivot], (*b)[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            if (b) (*b)[i] -= f * (*b)[r];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t column_rank(RationalMatrix a) { return eliminate(a, nullptr).size(); }

std::optional<RationalVector> solve_full_column_rank(RationalMatrix a, RationalVector b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("solve: dimension mismatch");
    std::vector<std::size_t> pivots = eliminate(a, &b);
    if (pivots.size() < cols) return std::nullopt;
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (b[i] != 0) throw std::runtime_error("solve: inconsistent system");
    RationalVector x(cols, 0);
    for (std::size_t r = pivots.size(); r-- > 0;) {
        std::size_t c = pivots[r];
        Rational s = b[r];
        for (std::size_t j = c + 1; j < cols; ++j) s -= a[r][j] * x[j];
        x[c] = s / a[r][c];
    }
    return x;
}

RationalVector solve_square(RationalMatrix a, RationalVector b) {
    if (a.size() != b.size() || (a.size() && a.size() != a[0].size()))
        throw std::invalid_argument("solve_square: matrix must be square");
    auto x = solve_full_column_rank(std::move(a), std::move(b));
    if (!x) throw std::runtime_error("solve_square: singular matrix");
    return *x;
}

}  // namespace spinkerov
