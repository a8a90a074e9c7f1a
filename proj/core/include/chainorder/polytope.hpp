#pragma once

#include <optional>
#include <set>
#include <vector>

#include "chainorder/linalg.hpp"
#include "chainorder/numeric.hpp"
#include "chainorder/poly.hpp"

namespace chainorder {

// Inequality system: row.first · x <= row.second.
struct HPolytope {
  int dim = 0;
  std::vector<std::pair<std::vector<Rat>, Rat>> rows;

  void add_row(std::vector<Rat> coeffs, Rat rhs);
};

// Irredundant vertex list with exact rational coordinates.
struct VPolytope {
  int dim = 0;
  std::vector<std::vector<Rat>> vertices;
};

struct LatticePointSet {
  int dim = 0;
  std::set<ValVec> points;
};

// x -> mat * x + shift with |det(mat)| = 1.
struct AffineUnimodularMap {
  IntMatrix mat;
  std::vector<Int> shift;

  ValVec apply(const ValVec& x) const;
  std::vector<Rat> apply(const std::vector<Rat>& x) const;
};

// Exact vertex enumeration by double description.  Throws on empty or
// unbounded input.
VPolytope vertices(const HPolytope& h);

// Convex hull of a point list; returns the irredundant vertex sublist.
VPolytope hull(const std::vector<std::vector<Rat>>& points);

// Facet system of a full-dimensional VPolytope (throws if lower-dimensional).
HPolytope hrep_of(const VPolytope& p);

// Dimension of the affine hull.
int affine_dim(const std::vector<std::vector<Rat>>& points);

// All integer points satisfying every row; bounding box comes from the
// vertex set.  Throws on unbounded input.
LatticePointSet lattice_points(const HPolytope& h);

// Hull of pairwise vertex sums.
VPolytope minkowski(const VPolytope& a, const VPolytope& b);

VPolytope dilate(const VPolytope& p, const Rat& factor);
VPolytope translate(const VPolytope& p, const std::vector<Rat>& shift);

// Euclidean volume with respect to Z^N; 0 for lower-dimensional input.
Rat volume(const VPolytope& p);

// Searches for an affine unimodular map with T(P) = Q as vertex sets.
// Both polytopes must be integral.
std::optional<AffineUnimodularMap> unimodular_equiv(const VPolytope& p, const VPolytope& q);

bool is_integral(const VPolytope& p);
bool same_vertex_set(const VPolytope& a, const VPolytope& b);

}  // namespace chainorder
