#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "chainorder/chevalley.hpp"
#include "chainorder/crystal.hpp"
#include "chainorder/marked_poset.hpp"
#include "chainorder/poly.hpp"
#include "chainorder/polytope.hpp"

namespace chainorder {

// Pullback polynomials of a spanning set of sections of L_lambda^{level}.
// Invariant: dim(span) == expected_dim, checked at construction.
struct SectionSpace {
  TypeTag type = TypeTag::A;
  int n = 0;
  std::vector<int64_t> lambda;
  Partition part;
  int level = 1;
  std::vector<Poly> span;
  int64_t expected_dim = 0;
  std::set<ValVec> low_values_ambient;  // cached value set, identity order, low mode
};

// The minor of omega with row set b and columns 1..k (increasing-row sign
// convention); the pullback of the dual global basis section G^up(b).
Poly fundamental_section(int n, int k, const Column& b, const PolyMatrix& omega);
Poly fundamental_section(int n, int k, const Column& b, const Partition& part);

// Translation vector d_{pi_k}; d_lambda extends additively.
ValVec d_vector(int n, int k, const Partition& part);
ValVec d_lambda(int n, const std::vector<int64_t>& lambda, const Partition& part);

// Span of all products of fundamental-section polynomials of multiset degree
// level * lambda.  Throws if the computed dimension disagrees with the
// lattice-point count of the scaled weight (spanning assumption).
SectionSpace level_space(TypeTag type, int n, const std::vector<int64_t>& lambda,
                         const Partition& part, int level);

std::set<ValVec> level_value_set(const SectionSpace& space, const VarOrder& ord, ValMode mode);

struct MainTheoremReport {
  bool pass = false;
  bool points_match = false;
  bool hull_match = false;
  std::size_t matched = 0;
  std::vector<ValVec> only_value_set;  // symmetric difference when failing
  std::vector<ValVec> only_polytope;
};

// Level-1 value set == (Delta_{C,O}(lambda) lattice points) - d_lambda, and
// hull of the value set == vertices of the H-system, translated.
MainTheoremReport verify_main_theorem(int n, const Partition& part,
                                      const std::vector<int64_t>& lambda);

struct SaturationReport {
  bool pass = false;
  std::vector<std::size_t> level_counts;
  int first_failing_level = 0;  // 0 when passing
};

// Level-k value sets against (k Delta cap Z^N) - k d, with the lattice
// Minkowski decomposition as the polytope-side oracle.
SaturationReport saturation_check(int n, const Partition& part,
                                  const std::vector<int64_t>& lambda, int kmax);

enum class TypeCLabel { GT, NZ, DELTA, CROSS };
std::string to_string(TypeCLabel label);        // display form, x for CROSS
std::string json_label(TypeCLabel label);       // GT | NZ | DELTA | CROSS

struct TypeCCell {
  TypeCLabel label = TypeCLabel::CROSS;
  Rat hull_volume;
  std::set<ValVec> points;
};

// The three partitions of the Sp4 study: 1 = (all order), 2 = (all chain),
// 3 = (C = {q_3, q_4}).
Partition sp4_partition(int part_index);

// Level-1 value set of L_rho on Sp4/B under the given lex order: volume 5/6
// hulls are CROSS, volume-1 hulls are matched against the three reference
// polytopes by unimodular equivalence.
TypeCCell classify_type_c(int part_index, const VarOrder& ord);

// Reference polytopes: GT_{C_2}(rho) from the poset, NZ and Delta from their
// inequality lists.
const VPolytope& gt_c2_rho_reference();
const VPolytope& nz_reference();
const VPolytope& delta_reference();

struct Table1Result {
  // rows follow the 24 permutations of {1,2,3,4} in lexicographic order
  std::vector<std::array<TypeCCell, 3>> cells;
  std::vector<std::array<TypeCLabel, 3>> expected;
  std::vector<std::size_t> mismatched_rows;
  bool pass = false;

  TypeCLabel computed(std::size_t row, int col) const { return cells[row][col].label; }
};

Table1Result compute_table1(int jobs = 1);
std::vector<std::vector<int>> s4_permutations();  // lex order, 1-based

struct HighestBodyResult {
  VPolytope scaled_hull;  // hull of the level-kmax value set, scaled by 1/kmax
  bool stabilized = false;
  int level = 0;
};

// (1/k)-scaled highest-term value-set hulls, with a stabilization flag
// comparing levels kmax and kmax-1.
HighestBodyResult highest_body(int n, const Partition& part,
                               const std::vector<int64_t>& lambda, int kmax);

}  // namespace chainorder
