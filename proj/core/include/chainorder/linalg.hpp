#pragma once

#include <optional>
#include <vector>

#include "chainorder/numeric.hpp"

namespace chainorder {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

std::size_t rank(RatMatrix m);
Rat det(RatMatrix m);
std::optional<RatMatrix> inverse(RatMatrix m);
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& x);

IntMatrix int_identity(std::size_t n);
Int int_det(IntMatrix m);
IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> int_mat_vec(const IntMatrix& a, const std::vector<Int>& x);

// Basis of {x in Z^n : m x = 0} as columns; the kernel lattice is saturated.
IntMatrix integer_kernel(const IntMatrix& m);

// Given the columns of `basis` spanning a saturated rank-d sublattice of Z^n,
// returns a unimodular n x n matrix whose first d columns span that lattice.
IntMatrix unimodular_extension(const IntMatrix& basis, std::size_t d);

}  // namespace chainorder
