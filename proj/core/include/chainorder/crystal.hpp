#pragma once

#include <optional>
#include <vector>

#include "chainorder/marked_poset.hpp"
#include "chainorder/poly.hpp"

namespace chainorder {

// Element of the minuscule crystal B(pi_k) for sl_{n+1}: a strictly
// increasing column with entries in 1..n+1.
struct Column {
  int n = 0;
  std::vector<int> entries;

  Column() = default;
  Column(int n, std::vector<int> entries);
  int k() const { return static_cast<int>(entries.size()); }
  bool operator==(const Column&) const = default;
  bool operator<(const Column& o) const { return entries < o.entries; }
};

// Highest-weight column (1, 2, ..., k).
Column highest_column(int n, int k);
// All of B(pi_k), C(n+1, k) elements.
std::vector<Column> crystal_elements(int n, int k);

std::optional<Column> ftilde(int i, const Column& b);
std::optional<Column> etilde(int i, const Column& b);
int epsilon(int i, const Column& b);
int phi(int i, const Column& b);
// <wt(b), h_i> for i = 1..n.
std::vector<int> weight(const Column& b);
// Weyl action: apply the transposition (i, i+1) to the entries and sort.
Column weyl(int i, const Column& b);

struct CombValuation {
  ValVec value;             // the hat-a vector, in ambient coordinate order
  std::vector<int> gammas;  // gamma_m for m = n-k+1..n
};

// Block-by-block computation of the valuation of the dual-global-basis
// section indexed by b, driven by the running column; asserts that the
// column returns to the highest one.
CombValuation comb_valuation(int n, int k, const Column& b, const Partition& part);

}  // namespace chainorder
