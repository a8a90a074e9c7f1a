#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chainorder/marked_poset.hpp"
#include "chainorder/numeric.hpp"

namespace chainorder {

// Ambient tensor product of wedge powers for lambda = sum lambda_i pi_i:
// lambda_i copies of Lambda^i C^{n+1}.  Wedge basis elements are entry
// bitmasks; a tensor basis element is one mask per factor.
struct TensorSpace {
  int n = 0;
  std::vector<int64_t> lambda;
  std::vector<int> factors;  // wedge degree per factor

  TensorSpace(int n, std::vector<int64_t> lambda);
  int64_t ambient_dim() const;
};

using TensorKey = std::vector<uint32_t>;

struct TensorVector {
  std::map<TensorKey, Int> coords;

  bool is_zero() const { return coords.empty(); }
  void add(const TensorKey& key, const Int& c);
};

// Highest weight vector: each factor is e_1 ^ ... ^ e_k.
TensorVector highest_vector(const TensorSpace& space);

// f_i by the Leibniz rule across factors, derivation on each wedge.
TensorVector apply_f(const TensorSpace& space, int i, const TensorVector& v);
// s-bar_i acting factorwise as a signed permutation of wedge monomials.
TensorVector apply_sbar(const TensorSpace& space, int i, const TensorVector& v);
// Divided power f_i^{(a)} = f_i^a / a!, exact division asserted.
TensorVector apply_f_divided(const TensorSpace& space, int i, int64_t a, const TensorVector& v);

// v_lambda^{(C,O)}(a) = u_1-bar f_{i_1}^{(a_1)} ... u_N-bar f_{i_N}^{(a_N)} v_lambda.
TensorVector basis_vector(const TensorSpace& space, const Partition& part, const ValVec& a);

// One vector per lattice point of Delta_{C,O}(lambda) - d_lambda.
std::vector<TensorVector> basis_vectors(int n, const std::vector<int64_t>& lambda,
                                        const Partition& part);

// Exact rank by fraction-free elimination.
int64_t rank_check(const std::vector<TensorVector>& vectors);

}  // namespace chainorder
