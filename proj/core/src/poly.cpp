#include "chainorder/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chainorder {

Poly Poly::constant(int nvars, Int c) {
  Poly p(nvars);
  if (c != 0) p.terms_[Monomial(nvars, 0)] = std::move(c);
  return p;
}

Poly Poly::variable(int nvars, int index, Int coeff) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  Poly p(nvars);
  if (coeff != 0) {
    Monomial m(nvars, 0);
    m[index] = 1;
    p.terms_[std::move(m)] = std::move(coeff);
  }
  return p;
}

Int Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int(0) : it->second;
}

Int Poly::constant_term() const { return coeff(Monomial(nvars_, 0)); }

void Poly::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  Monomial prod(nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) prod[i] = m1[i] + m2[i];
      r.add_term(prod, c1 * c2);
    }
  return r;
}

Poly Poly::scaled(const Int& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitute: image count mismatch");
  int out_vars = images.empty() ? 0 : images[0].nvars();
  Poly acc(out_vars);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      for (int e = 0; e < m[i]; ++e) term = term * images[i];
    acc = acc + term;
  }
  return acc;
}

std::string Poly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Int a = boost::multiprecision::abs(c);
    bool printed = false;
    if (a != 1) {
      os << a.str();
      printed = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << var << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      printed = true;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

VarOrder VarOrder::identity(int n) {
  VarOrder o;
  o.perm.resize(n);
  std::iota(o.perm.begin(), o.perm.end(), 0);
  return o;
}

VarOrder VarOrder::from_one_based(const std::vector<int>& sigma) {
  VarOrder o;
  std::vector<bool> seen(sigma.size(), false);
  for (int s : sigma) {
    if (s < 1 || s > static_cast<int>(sigma.size()) || seen[s - 1])
      throw std::invalid_argument("order is not a permutation");
    seen[s - 1] = true;
    o.perm.push_back(s - 1);
  }
  return o;
}

namespace {

ValVec permuted(const Monomial& m, const VarOrder& ord) {
  ValVec v(ord.perm.size());
  for (std::size_t i = 0; i < ord.perm.size(); ++i) v[i] = m[ord.perm[i]];
  return v;
}

}  // namespace

ValVec permute_to_ambient(const ValVec& v, const VarOrder& ord) {
  ValVec out(v.size());
  for (std::size_t i = 0; i < ord.perm.size(); ++i) out[ord.perm[i]] = v[i];
  return out;
}

ValVec low_val(const Poly& f, const VarOrder& ord) {
  if (f.is_zero()) throw std::invalid_argument("low_val of the zero polynomial");
  bool first = true;
  ValVec best;
  for (const auto& [m, c] : f.terms()) {
    ValVec v = permuted(m, ord);
    if (first || v < best) best = std::move(v);
    first = false;
  }
  return best;
}

ValVec high_val(const Poly& f, const VarOrder& ord) {
  if (f.is_zero()) throw std::invalid_argument("high_val of the zero polynomial");
  bool first = true;
  ValVec best;
  for (const auto& [m, c] : f.terms()) {
    ValVec v = permuted(m, ord);
    if (first || v > best) best = std::move(v);
    first = false;
  }
  for (auto& x : best) x = -x;
  return best;
}

ValVec val_quotient(const Poly& f, const Poly& g, const VarOrder& ord, ValMode mode) {
  ValVec a = mode == ValMode::Low ? low_val(f, ord) : high_val(f, ord);
  ValVec b = mode == ValMode::Low ? low_val(g, ord) : high_val(g, ord);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

namespace {

// One row of the elimination: terms sorted so the pivot monomial comes first.
struct Row {
  std::vector<std::pair<ValVec, Int>> terms;  // keys already ord-permuted

  void normalize_content() {
    Int g = 0;
    for (const auto& [m, c] : terms) {
      g = int_gcd(g, c);
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& [m, c] : terms) c /= g;
  }
};

}  // namespace

std::set<ValVec> value_set(const std::vector<Poly>& span, const VarOrder& ord, ValMode mode) {
  if (span.empty()) throw std::invalid_argument("value_set of an empty span");
  const bool low = mode == ValMode::Low;
  std::vector<Row> rows;
  for (const Poly& f : span) {
    if (f.is_zero()) continue;
    Row r;
    r.terms.reserve(f.term_count());
    for (const auto& [m, c] : f.terms()) r.terms.emplace_back(permuted(m, ord), c);
    // Pivot first: ascending lex for lowest-term mode, descending for highest.
    std::sort(r.terms.begin(), r.terms.end(), [low](const auto& a, const auto& b) {
      return low ? a.first < b.first : a.first > b.first;
    });
    r.normalize_content();
    rows.push_back(std::move(r));
  }

  std::set<ValVec> values;
  std::vector<Row> pending = std::move(rows);
  while (!pending.empty()) {
    // Lowest list index wins among equal pivot monomials.
    std::size_t best = 0;
    for (std::size_t i = 1; i < pending.size(); ++i) {
      const ValVec& a = pending[i].terms.front().first;
      const ValVec& b = pending[best].terms.front().first;
      if (low ? a < b : a > b) best = i;
    }
    Row pivot = std::move(pending[best]);
    pending.erase(pending.begin() + best);
    const ValVec& pm = pivot.terms.front().first;
    const Int& pc = pivot.terms.front().second;

    ValVec reported = pm;
    if (!low)
      for (auto& x : reported) x = -x;
    values.insert(reported);

    std::vector<Row> next;
    next.reserve(pending.size());
    for (Row& r : pending) {
      auto it = std::find_if(r.terms.begin(), r.terms.end(),
                             [&](const auto& t) { return t.first == pm; });
      if (it == r.terms.end()) {
        next.push_back(std::move(r));
        continue;
      }
      Int rc = it->second;
      // r <- pc * r - rc * pivot, merged over the sorted term lists.
      Row merged;
      merged.terms.reserve(r.terms.size() + pivot.terms.size());
      std::size_t i = 0, j = 0;
      auto before = [low](const ValVec& a, const ValVec& b) { return low ? a < b : a > b; };
      while (i < r.terms.size() || j < pivot.terms.size()) {
        if (j == pivot.terms.size() ||
            (i < r.terms.size() && before(r.terms[i].first, pivot.terms[j].first))) {
          merged.terms.emplace_back(r.terms[i].first, pc * r.terms[i].second);
          ++i;
        } else if (i == r.terms.size() || before(pivot.terms[j].first, r.terms[i].first)) {
          merged.terms.emplace_back(pivot.terms[j].first, -rc * pivot.terms[j].second);
          ++j;
        } else {
          Int c = pc * r.terms[i].second - rc * pivot.terms[j].second;
          if (c != 0) merged.terms.emplace_back(r.terms[i].first, std::move(c));
          ++i;
          ++j;
        }
      }
      if (!merged.terms.empty()) {
        merged.normalize_content();
        next.push_back(std::move(merged));
      }
    }
    pending = std::move(next);
  }
  return values;
}

PolyMatrix PolyMatrix::identity(int size, int nvars) {
  PolyMatrix m;
  m.size = size;
  m.nvars = nvars;
  m.entries.assign(size, std::vector<Poly>(size, Poly(nvars)));
  for (int i = 0; i < size; ++i) m.entries[i][i] = Poly::constant(nvars, 1);
  return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  PolyMatrix r;
  r.size = size;
  r.nvars = nvars;
  r.entries.assign(size, std::vector<Poly>(size, Poly(nvars)));
  for (int i = 0; i < size; ++i)
    for (int k = 0; k < size; ++k) {
      if (entries[i][k].is_zero()) continue;
      for (int j = 0; j < size; ++j) {
        if (o.entries[k][j].is_zero()) continue;
        r.entries[i][j] = r.entries[i][j] + entries[i][k] * o.entries[k][j];
      }
    }
  return r;
}

Poly PolyMatrix::minor_det(const std::vector<int>& rows, const std::vector<int>& cols) const {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: row/col count mismatch");
  std::size_t k = rows.size();
  if (k == 0) return Poly::constant(nvars, 1);
  // Laplace expansion along columns, memoized over row subsets.
  std::map<uint32_t, Poly> memo;
  // det over rows S (subset bitmask of `rows`) and the first |S| columns.
  auto rec = [&](auto&& self, uint32_t mask) -> Poly {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    std::vector<int> idx;
    for (std::size_t r = 0; r < k; ++r)
      if (mask & (1u << r)) idx.push_back(static_cast<int>(r));
    std::size_t c = cols.size() - idx.size();  // expand along column cols[c]
    Poly acc(nvars);
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const Poly& e = entries[rows[idx[pos]]][cols[c]];
      if (e.is_zero()) continue;
      Poly sub = idx.size() == 1 ? Poly::constant(nvars, 1)
                                 : self(self, mask & ~(1u << idx[pos]));
      Poly term = e * sub;
      acc = (pos % 2 == 0) ? acc + term : acc - term;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (1u << k) - 1);
}

Poly PolyMatrix::det() const {
  std::vector<int> all(size);
  std::iota(all.begin(), all.end(), 0);
  return minor_det(all, all);
}

std::string PolyMatrix::to_string(const std::string& var) const {
  std::ostringstream os;
  for (int i = 0; i < size; ++i) {
    os << "[ ";
    for (int j = 0; j < size; ++j) {
      os << entries[i][j].to_string(var);
      if (j + 1 < size) os << ", ";
    }
    os << " ]\n";
  }
  return os.str();
}

}  // namespace chainorder
