#include "chainorder/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace chainorder {

std::size_t rank(RatMatrix m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

Rat det(RatMatrix m) {
  std::size_t n = m.size();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

std::optional<RatMatrix> inverse(RatMatrix m) {
  std::size_t n = m.size();
  RatMatrix inv(n, std::vector<Rat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    Rat p = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMatrix c(n, std::vector<Rat>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

std::vector<Rat> mat_vec(const RatMatrix& a, const std::vector<Rat>& x) {
  std::vector<Rat> y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Int int_det(IntMatrix m) {
  // Bareiss fraction-free elimination.
  std::size_t n = m.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i)
      for (std::size_t j = c + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
    prev = m[c][c];
  }
  return sign * m[n - 1][n - 1];
}

IntMatrix int_mat_mul(const IntMatrix& a, const IntMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

std::vector<Int> int_mat_vec(const IntMatrix& a, const std::vector<Int>& x) {
  std::vector<Int> y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

namespace {

// Column-style Hermite reduction of m, tracking the transform u (m' = m u).
// Afterwards zero columns of m correspond to kernel generators in u.
void column_reduce(IntMatrix& m, IntMatrix& u) {
  if (m.empty()) return;
  std::size_t rows = m.size(), cols = m[0].size();
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    for (std::size_t i = 0; i < u.size(); ++i) std::swap(u[i][a], u[i][b]);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < rows; ++i) m[i][dst] += f * m[i][src];
    for (std::size_t i = 0; i < u.size(); ++i) u[i][dst] += f * u[i][src];
  };
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    // Euclidean sweep until at most one nonzero remains in row r at >= lead.
    while (true) {
      std::size_t best = cols;
      for (std::size_t c = lead; c < cols; ++c)
        if (m[r][c] != 0 && (best == cols || boost::multiprecision::abs(m[r][c]) <
                                                 boost::multiprecision::abs(m[r][best])))
          best = c;
      if (best == cols) break;
      col_swap(lead, best);
      bool done = true;
      for (std::size_t c = lead + 1; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        Int q = m[r][c] / m[r][lead];
        col_axpy(c, lead, -q);
        if (m[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][lead] != 0) ++lead;
  }
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  IntMatrix work = m;
  IntMatrix u = int_identity(cols);
  column_reduce(work, u);
  IntMatrix kernel(cols);
  std::vector<std::size_t> zero_cols;
  for (std::size_t c = 0; c < cols; ++c) {
    bool zero = true;
    for (std::size_t r = 0; r < rows; ++r)
      if (work[r][c] != 0) {
        zero = false;
        break;
      }
    if (zero) zero_cols.push_back(c);
  }
  IntMatrix out(cols, std::vector<Int>(zero_cols.size()));
  for (std::size_t j = 0; j < zero_cols.size(); ++j)
    for (std::size_t i = 0; i < cols; ++i) out[i][j] = u[i][zero_cols[j]];
  return out;
}

IntMatrix unimodular_extension(const IntMatrix& basis, std::size_t d) {
  std::size_t n = basis.size();
  if (d == n) {
    IntMatrix b(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i][j] = basis[i][j];
    Int dt = int_det(b);
    if (dt != 1 && dt != -1) throw std::invalid_argument("basis is not unimodular");
    return b;
  }
  // Smith-style reduction of the n x d basis: U * basis * V = [I_d; 0] for a
  // saturated lattice, so the first d columns of U^{-1} span it.  We track
  // U^{-1} directly by applying inverse row operations to the identity.
  IntMatrix work(n, std::vector<Int>(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) work[i][j] = basis[i][j];
  IntMatrix uinv = int_identity(n);  // columns track inverse row ops

  auto row_swap = [&](std::size_t a, std::size_t b) {
    std::swap(work[a], work[b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(uinv[i][a], uinv[i][b]);
  };
  // work_row[a] += f * work_row[b]  =>  uinv_col[b] -= f * uinv_col[a]
  auto row_axpy = [&](std::size_t a, std::size_t b, const Int& f) {
    for (std::size_t j = 0; j < d; ++j) work[a][j] += f * work[b][j];
    for (std::size_t i = 0; i < n; ++i) uinv[i][b] -= f * uinv[i][a];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) std::swap(work[i][a], work[i][b]);
  };
  auto col_axpy = [&](std::size_t a, std::size_t b, const Int& f) {
    for (std::size_t i = 0; i < n; ++i) work[i][a] += f * work[i][b];
  };

  for (std::size_t k = 0; k < d; ++k) {
    while (true) {
      std::size_t pi = n, pj = d;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < d; ++j)
          if (work[i][j] != 0 &&
              (pi == n || boost::multiprecision::abs(work[i][j]) <
                              boost::multiprecision::abs(work[pi][pj])))
            pi = i, pj = j;
      if (pi == n) throw std::invalid_argument("basis has rank below d");
      if (pi != k) row_swap(pi, k);
      if (pj != k) col_swap(pj, k);
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (work[i][k] == 0) continue;
        Int q = work[i][k] / work[k][k];
        row_axpy(i, k, -q);
        if (work[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < d; ++j) {
        if (work[k][j] == 0) continue;
        Int q = work[k][j] / work[k][k];
        col_axpy(j, k, -q);
        if (work[k][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (work[k][k] < 0) {
      for (std::size_t j = k; j < d; ++j) work[k][j] = -work[k][j];
      for (std::size_t i = 0; i < n; ++i) uinv[i][k] = -uinv[i][k];
    }
    if (work[k][k] != 1)
      throw std::invalid_argument("lattice is not saturated (nontrivial invariant factor)");
  }
  return uinv;
}

}  // namespace chainorder
