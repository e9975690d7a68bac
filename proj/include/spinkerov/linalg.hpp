#pragma once

#include <spinkerov/rational.hpp>

#include <optional>
#include <vector>

namespace spinkerov {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

// Exact Gaussian elimination over the rationals.
// Returns the unique solution of A x = b when A has full column rank and the
// system is consistent; nullopt when the rank is deficient.
// Throws std::runtime_error on an inconsistent system.
std::optional<RationalVector> solve_full_column_rank(RationalMatrix a, RationalVector b);

// Column rank of A.
std::size_t column_rank(RationalMatrix a);

// Solves the square system A x = b; throws if A is singular.
RationalVector solve_square(RationalMatrix a, RationalVector b);

}  // namespace spinkerov
