#pragma once

#include <vector>

#include "chainorder/linalg.hpp"
#include "chainorder/marked_poset.hpp"
#include "chainorder/poly.hpp"

namespace chainorder {

// The fixed reduced words: type A blocks (m, m-1, ..., 1), type C blocks
// (m, m-1, ..., 1, 2, ..., m).  Entries are 1-based simple-root indices.
std::vector<int> reduced_word(TypeTag type, int n);

int matrix_size(TypeTag type, int n);

IntMatrix chevalley_f(TypeTag type, int n, int i);
IntMatrix chevalley_e(TypeTag type, int n, int i);

// exp(t_var * f_i) as a polynomial matrix; the nilpotent series terminates
// with integer coefficients for these generators.
PolyMatrix exp_f(TypeTag type, int n, int i, int var_index, int nvars);

// Lift s-bar_i = exp(f_i) exp(-e_i) exp(f_i).
IntMatrix sbar(TypeTag type, int n, int i);
// The closed form of section 2 (type A only), for cross-checking.
IntMatrix sbar_closed_form_A(int n, int i);

// Omega_{C,O}(t_1..t_N) = prod_k u_k-bar exp(t_k f_{i_k}).
PolyMatrix omega_product(TypeTag type, int n, const Partition& part);

// Type C: A(x) with free upper-left block, (-1)^i antidiagonal, and the
// dependent entries solved from A^T w0-bar A = w0-bar by back-substitution.
// Variables are arranged (x_{1,2n-1}, ..., x_{1,1}, x_{2,2n-2}, ..., x_{n,n}).
PolyMatrix a_of_x(int n);

bool check_symplectic(const PolyMatrix& m, int n);

// t'-arrangement: 1-based ambient index of t'_m at position m-1.
std::vector<int> tprime_arrangement(int n);

// Images x_l(t') as polynomials in the ambient t variables.
std::vector<Poly> x_images_in_t(int n);

}  // namespace chainorder
