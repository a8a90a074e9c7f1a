#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chainorder/numeric.hpp"

namespace chainorder {

using Monomial = std::vector<int>;     // exponent vector, all entries >= 0
using ValVec = std::vector<int64_t>;   // valuation vectors may go negative

// Sparse multivariate polynomial over Int in variables t_1..t_N.
// Invariant: no zero coefficients stored; all exponent vectors have length N.
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, Int c);
  static Poly variable(int nvars, int index, Int coeff = 1);  // index 0-based

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Int>& terms() const { return terms_; }

  // The coefficient of the given monomial (0 if absent).
  Int coeff(const Monomial& m) const;
  // Constant term.
  Int constant_term() const;

  void add_term(const Monomial& m, const Int& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Int& c) const;
  bool operator==(const Poly& o) const = default;

  // Substitutes images[i] for variable i; images share a variable count.
  Poly substitute(const std::vector<Poly>& images) const;

  // Text form: integer-coefficient sum of monomials "c*t1^a1*...*tN^aN".
  std::string to_string(const std::string& var = "t") const;

 private:
  int nvars_;
  std::map<Monomial, Int> terms_;
};

// Lex order on variables: perm[0] is the 0-based index of the biggest
// variable, so t_{perm[0]+1} > t_{perm[1]+1} > ... in 1-based speak.
struct VarOrder {
  std::vector<int> perm;

  static VarOrder identity(int n);
  // 1-based variable indices, e.g. {1,3,4,2} means t_1 > t_3 > t_4 > t_2.
  static VarOrder from_one_based(const std::vector<int>& sigma);
  int size() const { return static_cast<int>(perm.size()); }
};

enum class ValMode { Low, High };

// Lex-minimal exponent vector of f, reported permuted by ord.
ValVec low_val(const Poly& f, const VarOrder& ord);
// Minus the lex-maximal exponent vector, reported permuted by ord.
ValVec high_val(const Poly& f, const VarOrder& ord);
ValVec val_quotient(const Poly& f, const Poly& g, const VarOrder& ord, ValMode mode);

// Valuation image of the linear span: Gaussian elimination over the monomial
// order with fraction-free integer pivoting.  |result| = dim span.
std::set<ValVec> value_set(const std::vector<Poly>& span, const VarOrder& ord, ValMode mode);

// Square matrix of polynomials.
struct PolyMatrix {
  int size = 0;
  int nvars = 0;
  std::vector<std::vector<Poly>> entries;

  static PolyMatrix identity(int size, int nvars);
  PolyMatrix operator*(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const = default;
  // Determinant of the submatrix with the given 0-based rows/columns.
  Poly minor_det(const std::vector<int>& rows, const std::vector<int>& cols) const;
  Poly det() const;
  std::string to_string(const std::string& var = "t") const;
};

ValVec permute_to_ambient(const ValVec& v, const VarOrder& ord);

}  // namespace chainorder
