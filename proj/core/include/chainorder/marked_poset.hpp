#pragma once

#include <map>
#include <string>
#include <vector>

#include "chainorder/polytope.hpp"

namespace chainorder {

enum class TypeTag { A, C };

TypeTag type_from_string(const std::string& s);
std::string to_string(TypeTag t);

// Coordinates <lambda, h_i> for i = 1..n; all non-negative.
struct DominantWeight {
  TypeTag type = TypeTag::A;
  int n = 0;
  std::vector<int64_t> coords;

  DominantWeight() = default;
  DominantWeight(TypeTag type, int n, std::vector<int64_t> coords);
  bool is_zero() const;
};

// Finite poset with a marked subset carrying an integer marking and a fixed
// coordinate arrangement of the unmarked elements.
struct MarkedPoset {
  std::vector<std::string> names;              // one per element
  std::vector<std::pair<int, int>> covers;     // (a, b) meaning a is covered by b
  std::map<int, int64_t> marking;              // marked element -> value
  std::vector<int> coordinate_order;           // unmarked elements, q_1..q_N

  int num_elements() const { return static_cast<int>(names.size()); }
  int num_unmarked() const { return static_cast<int>(coordinate_order.size()); }
  bool is_marked(int e) const { return marking.count(e) > 0; }
  int coordinate_of(int e) const;              // position in coordinate_order
  std::vector<int> lower_covers(int e) const;
  std::vector<int> upper_covers(int e) const;
  void validate() const;                       // invariants from the data model
};

// Two-coloring of the unmarked elements along the coordinate order
// (true = chain element).
struct Partition {
  std::vector<bool> chain;

  static Partition all_order(int n);
  static Partition all_chain(int n);
  // Bitmask string over q_1..q_N, '1' = chain.
  static Partition from_bitmask(const std::string& mask);
  std::string to_bitmask() const;
  int size() const { return static_cast<int>(chain.size()); }
  bool is_chain(int pos) const { return chain[pos]; }
};

// Gelfand-Tsetlin marked posets; coordinate order per the fixed arrangements.
MarkedPoset gt_poset(TypeTag type, int n, const DominantWeight& lambda);

// Inequality system of the marked chain-order polytope: x_p >= 0 for chain
// elements plus one row per saturated chain through chain elements anchored
// in marked/order elements.  Deduplicated, possibly redundant.
HPolytope mco_hrep(const MarkedPoset& poset, const Partition& part);

// Transfer map phi_{C,O}; total piecewise-affine, identity on order elements.
std::vector<Rat> transfer(const MarkedPoset& poset, const Partition& part,
                          const std::vector<Rat>& x);

// Lattice points of the marked order polytope (box-bounded chain enumeration).
LatticePointSet order_polytope_lattice_points(const MarkedPoset& poset);

// Lattice points of the marked chain-order polytope, as transfer images.
LatticePointSet mco_lattice_points(const MarkedPoset& poset, const Partition& part);

}  // namespace chainorder
