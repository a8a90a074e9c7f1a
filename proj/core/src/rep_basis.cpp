#include "chainorder/rep_basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "chainorder/chevalley.hpp"
#include "chainorder/no_body.hpp"

namespace chainorder {

TensorSpace::TensorSpace(int n, std::vector<int64_t> lam) : n(n), lambda(std::move(lam)) {
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("weight rank mismatch");
  for (int i = 1; i <= n; ++i) {
    if (lambda[i - 1] < 0) throw std::invalid_argument("negative weight coordinate");
    for (int64_t c = 0; c < lambda[i - 1]; ++c) factors.push_back(i);
  }
}

int64_t TensorSpace::ambient_dim() const {
  auto binom = [](int a, int b) {
    int64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - i + 1) / i;
    return r;
  };
  int64_t d = 1;
  for (int k : factors) d *= binom(n + 1, k);
  return d;
}

void TensorVector::add(const TensorKey& key, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = coords.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords.erase(it);
  }
}

TensorVector highest_vector(const TensorSpace& space) {
  TensorKey key;
  key.reserve(space.factors.size());
  for (int k : space.factors) key.push_back((1u << k) - 1);  // e_1 ^ ... ^ e_k
  TensorVector v;
  v.add(key, 1);
  return v;
}

TensorVector apply_f(const TensorSpace& space, int i, const TensorVector& v) {
  if (i < 1 || i > space.n) throw std::invalid_argument("generator index out of range");
  uint32_t lo = 1u << (i - 1), hi = 1u << i;
  TensorVector out;
  for (const auto& [key, c] : v.coords)
    for (std::size_t f = 0; f < key.size(); ++f) {
      // f_i replaces e_i by e_{i+1}; kills the wedge if e_{i+1} is present.
      if ((key[f] & lo) && !(key[f] & hi)) {
        TensorKey k2 = key;
        k2[f] = (key[f] & ~lo) | hi;
        out.add(k2, c);  // no sign: the slot keeps its sorted position
      }
    }
  return out;
}

TensorVector apply_sbar(const TensorSpace& space, int i, const TensorVector& v) {
  if (i < 1 || i > space.n) throw std::invalid_argument("generator index out of range");
  uint32_t lo = 1u << (i - 1), hi = 1u << i;
  TensorVector out;
  for (const auto& [key, c] : v.coords) {
    TensorKey k2 = key;
    Int coeff = c;
    for (std::size_t f = 0; f < key.size(); ++f) {
      bool has_lo = key[f] & lo, has_hi = key[f] & hi;
      if (has_lo && !has_hi) {
        k2[f] = (key[f] & ~lo) | hi;  // e_i -> e_{i+1}
      } else if (has_hi && !has_lo) {
        k2[f] = (key[f] & ~hi) | lo;  // e_{i+1} -> -e_i
        coeff = -coeff;
      }
      // both present: e_i ^ e_{i+1} -> e_{i+1} ^ (-e_i) = e_i ^ e_{i+1}
    }
    out.add(k2, coeff);
  }
  return out;
}

TensorVector apply_f_divided(const TensorSpace& space, int i, int64_t a, const TensorVector& v) {
  if (a < 0) throw std::invalid_argument("divided power with negative exponent");
  TensorVector out = v;
  for (int64_t rep = 0; rep < a; ++rep) out = apply_f(space, i, out);
  Int fact = factorial(static_cast<unsigned>(a));
  if (fact != 1) {
    for (auto& [key, c] : out.coords) {
      if (c % fact != 0) throw std::logic_error("divided power is not integral on the lattice");
      c /= fact;
    }
  }
  return out;
}

TensorVector basis_vector(const TensorSpace& space, const Partition& part, const ValVec& a) {
  std::vector<int> word = reduced_word(TypeTag::A, space.n);
  if (a.size() != word.size() || part.size() != static_cast<int>(word.size()))
    throw std::invalid_argument("index vector length mismatch");
  TensorVector v = highest_vector(space);
  for (int k = static_cast<int>(word.size()) - 1; k >= 0; --k) {
    if (a[k] < 0) throw std::invalid_argument("index vector has a negative coordinate");
    v = apply_f_divided(space, word[k], a[k], v);
    if (part.is_chain(k)) v = apply_sbar(space, word[k], v);
  }
  return v;
}

std::vector<TensorVector> basis_vectors(int n, const std::vector<int64_t>& lambda,
                                        const Partition& part) {
  TensorSpace space(n, lambda);
  DominantWeight lam(TypeTag::A, n, lambda);
  LatticePointSet pts = mco_lattice_points(gt_poset(TypeTag::A, n, lam), part);
  ValVec d = d_lambda(n, lambda, part);
  std::vector<TensorVector> out;
  out.reserve(pts.points.size());
  for (const ValVec& p : pts.points) {
    ValVec a(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) a[i] = p[i] - d[i];
    out.push_back(basis_vector(space, part, a));
  }
  return out;
}

int64_t rank_check(const std::vector<TensorVector>& vectors) {
  // Column index set, then fraction-free row elimination.
  std::map<TensorKey, std::size_t> col_of;
  for (const auto& v : vectors)
    for (const auto& [key, c] : v.coords) col_of.emplace(key, col_of.size());
  std::vector<std::vector<Int>> rows;
  for (const auto& v : vectors) {
    std::vector<Int> row(col_of.size(), 0);
    for (const auto& [key, c] : v.coords) row[col_of[key]] = c;
    rows.push_back(std::move(row));
  }
  std::size_t nrows = rows.size(), ncols = col_of.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = r;
    while (piv < nrows && rows[piv][c] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      if (rows[i][c] == 0) continue;
      Int f1 = rows[r][c], f2 = rows[i][c];
      Int g = int_gcd(f1, f2);
      f1 /= g;
      f2 /= g;
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] = rows[i][j] * f1 - rows[r][j] * f2;
    }
    ++r;
  }
  return static_cast<int64_t>(r);
}

}  // namespace chainorder
