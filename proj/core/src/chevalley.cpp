#include "chainorder/chevalley.hpp"

#include <stdexcept>

namespace chainorder {

std::vector<int> reduced_word(TypeTag type, int n) {
  std::vector<int> w;
  for (int m = 1; m <= n; ++m) {
    for (int i = m; i >= 1; --i) w.push_back(i);
    if (type == TypeTag::C)
      for (int i = 2; i <= m; ++i) w.push_back(i);
  }
  return w;
}

int matrix_size(TypeTag type, int n) { return type == TypeTag::A ? n + 1 : 2 * n; }

namespace {

IntMatrix zeros(int size) { return IntMatrix(size, std::vector<Int>(size, 0)); }

void check_index(TypeTag type, int n, int i) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (i < 1 || i > n) throw std::invalid_argument("Chevalley index out of range");
  (void)type;
}

}  // namespace

IntMatrix chevalley_f(TypeTag type, int n, int i) {
  check_index(type, n, i);
  IntMatrix m = zeros(matrix_size(type, n));
  if (type == TypeTag::A) {
    m[i][i - 1] = 1;  // E_{i+1,i}
  } else if (i == 1) {
    m[n][n - 1] = 1;  // E_{n+1,n}
  } else {
    m[n - i + 1][n - i] = 1;      // E_{n-i+2,n-i+1}
    m[n + i - 1][n + i - 2] = 1;  // E_{n+i,n+i-1}
  }
  return m;
}

IntMatrix chevalley_e(TypeTag type, int n, int i) {
  check_index(type, n, i);
  IntMatrix m = zeros(matrix_size(type, n));
  if (type == TypeTag::A) {
    m[i - 1][i] = 1;
  } else if (i == 1) {
    m[n - 1][n] = 1;
  } else {
    m[n - i][n - i + 1] = 1;
    m[n + i - 2][n + i - 1] = 1;
  }
  return m;
}

PolyMatrix exp_f(TypeTag type, int n, int i, int var_index, int nvars) {
  IntMatrix f = chevalley_f(type, n, i);
  int size = matrix_size(type, n);
  PolyMatrix out = PolyMatrix::identity(size, nvars);
  // Nilpotent series I + t f + t^2 f^2/2 + ...; every listed f_i squares to
  // zero, but the loop stays general and asserts integrality.
  IntMatrix power = f;
  Int fact = 1;
  Poly tpow = Poly::variable(nvars, var_index);
  for (int k = 1; k <= size; ++k) {
    bool all_zero = true;
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) {
        if (power[r][c] == 0) continue;
        all_zero = false;
        if (power[r][c] % fact != 0)
          throw std::logic_error("exp series coefficient is not integral");
        out.entries[r][c] = out.entries[r][c] + tpow.scaled(power[r][c] / fact);
      }
    if (all_zero) break;
    power = int_mat_mul(power, f);
    fact *= k + 1;
    tpow = tpow * Poly::variable(nvars, var_index);
  }
  return out;
}

namespace {

IntMatrix int_identity_plus(const IntMatrix& m, int sign) {
  IntMatrix out = m;
  for (std::size_t r = 0; r < out.size(); ++r)
    for (std::size_t c = 0; c < out.size(); ++c) out[r][c] *= sign;
  for (std::size_t r = 0; r < out.size(); ++r) out[r][r] += 1;
  return out;
}

}  // namespace

IntMatrix sbar(TypeTag type, int n, int i) {
  IntMatrix f = int_identity_plus(chevalley_f(type, n, i), 1);
  IntMatrix e = int_identity_plus(chevalley_e(type, n, i), -1);
  return int_mat_mul(int_mat_mul(f, e), f);
}

IntMatrix sbar_closed_form_A(int n, int i) {
  check_index(TypeTag::A, n, i);
  IntMatrix m = zeros(n + 1);
  m[i][i - 1] = 1;
  m[i - 1][i] = -1;
  for (int j = 0; j <= n; ++j)
    if (j != i - 1 && j != i) m[j][j] = 1;
  return m;
}

PolyMatrix omega_product(TypeTag type, int n, const Partition& part) {
  std::vector<int> word = reduced_word(type, n);
  int nvars = static_cast<int>(word.size());
  if (part.size() != nvars) throw std::invalid_argument("partition size mismatch");
  int size = matrix_size(type, n);
  PolyMatrix out = PolyMatrix::identity(size, nvars);
  for (int k = 0; k < nvars; ++k) {
    if (part.is_chain(k)) {
      PolyMatrix s;
      s.size = size;
      s.nvars = nvars;
      s.entries.assign(size, std::vector<Poly>(size, Poly(nvars)));
      IntMatrix sb = sbar(type, n, word[k]);
      for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c)
          if (sb[r][c] != 0) s.entries[r][c] = Poly::constant(nvars, sb[r][c]);
      out = out * s;
    }
    out = out * exp_f(type, n, word[k], k, nvars);
  }
  return out;
}

PolyMatrix a_of_x(int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  int nv = n * n;
  int size = 2 * n;
  // (x_1, ..., x_N) = (x_{1,2n-1}, ..., x_{1,1}, x_{2,2n-2}, ..., x_{n,n})
  std::map<std::pair<int, int>, int> xidx;
  int cnt = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 2 * n - i; j >= i; --j) xidx[{i, j}] = cnt++;

  PolyMatrix a;
  a.size = size;
  a.nvars = nv;
  a.entries.assign(size, std::vector<Poly>(size, Poly(nv)));
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) {
      if (i <= n && i <= j && j <= 2 * n - i)
        a.entries[i - 1][j - 1] = Poly::variable(nv, xidx[{i, j}]);
      else if (i + j == 2 * n + 1)
        a.entries[i - 1][j - 1] = Poly::constant(nv, i % 2 == 0 ? 1 : -1);
    }

  auto w0 = [&](int i, int j) -> int {
    if (i + j != 2 * n + 1) return 0;
    return i % 2 == 0 ? 1 : -1;
  };
  // The pairing <col_j, col_c> = sum_i (-1)^i A_{i,j} A_{2n+1-i,c} is linear
  // in y_{c,j} with coefficient -1; every other entry it touches is already
  // final when columns are processed right-to-left and rows bottom-up.
  for (int j = n - 1; j >= 1; --j)
    for (int c = 2 * n - j; c >= j + 1; --c) {
      Poly acc = Poly::constant(nv, -w0(j, c));
      for (int i = 1; i <= size; ++i) {
        if (i == c) continue;
        int r = 2 * n + 1 - i;
        const Poly& lhs = a.entries[i - 1][j - 1];
        const Poly& rhs = a.entries[r - 1][c - 1];
        if (lhs.is_zero() || rhs.is_zero()) continue;
        Poly term = lhs * rhs;
        acc = (i % 2 == 0) ? acc + term : acc - term;
      }
      a.entries[c - 1][j - 1] = acc;
    }
  return a;
}

bool check_symplectic(const PolyMatrix& m, int n) {
  if (m.size != 2 * n) throw std::invalid_argument("matrix size mismatch");
  int nv = m.nvars;
  PolyMatrix w0;
  w0.size = m.size;
  w0.nvars = nv;
  w0.entries.assign(m.size, std::vector<Poly>(m.size, Poly(nv)));
  for (int i = 1; i <= m.size; ++i)
    w0.entries[i - 1][2 * n - i] = Poly::constant(nv, i % 2 == 0 ? 1 : -1);
  PolyMatrix mt;
  mt.size = m.size;
  mt.nvars = nv;
  mt.entries.assign(m.size, std::vector<Poly>(m.size, Poly(nv)));
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) mt.entries[i][j] = m.entries[j][i];
  return mt * w0 * m == w0;
}

std::vector<int> tprime_arrangement(int n) {
  // T'(n) = (t_{n^2}, ..., t_{n^2-n+2}, t_{n^2-n}, ..., t_{(n-1)^2+1},
  //          t_{n^2-n+1}) ++ T'(n-1); matches the n=2 tail (t4, t2, t3, t1).
  std::vector<int> out;
  for (int m = n; m >= 2; --m) {
    int nn = m * m;
    out.push_back(nn);
    for (int t = nn - 1; t >= nn - m + 2; --t) out.push_back(t);
    for (int t = nn - m; t >= (m - 1) * (m - 1) + 1; --t) out.push_back(t);
    out.push_back(nn - m + 1);
  }
  out.push_back(1);
  return out;
}

std::vector<Poly> x_images_in_t(int n) {
  int nv = n * n;
  std::vector<int> tp = tprime_arrangement(n);
  auto tpv = [&](int m, int coeff) { return Poly::variable(nv, tp[m - 1] - 1, coeff); };
  std::vector<Poly> out;
  for (int l = 1; l <= nv; ++l) {
    int k = -1;
    for (int kk = 0; kk < n; ++kk)
      if (nv - l == kk * kk) k = kk;
    if (k >= 0) {
      int sign_n = n % 2 == 0 ? 1 : -1;
      Poly p = tpv(l, sign_n);
      for (int c = 1; c <= k; ++c) {
        Poly term = tpv(l - k + c - 1, 1) * tpv(l - k - c, 1);
        p = p + term.scaled(sign_n * (c % 2 == 1 ? 1 : -1));
      }
      out.push_back(p);
    } else {
      out.push_back(tpv(l, l % 2 == 0 ? 1 : -1));
    }
  }
  return out;
}

}  // namespace chainorder
