#include "chainorder/marked_poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chainorder {

TypeTag type_from_string(const std::string& s) {
  if (s == "A" || s == "a") return TypeTag::A;
  if (s == "C" || s == "c") return TypeTag::C;
  throw std::invalid_argument("unknown type tag: " + s);
}

std::string to_string(TypeTag t) { return t == TypeTag::A ? "A" : "C"; }

DominantWeight::DominantWeight(TypeTag type, int n, std::vector<int64_t> coords)
    : type(type), n(n), coords(std::move(coords)) {
  if (static_cast<int>(this->coords.size()) != n)
    throw std::invalid_argument("dominant weight rank mismatch");
  for (int64_t c : this->coords)
    if (c < 0) throw std::invalid_argument("dominant weight has a negative coordinate");
}

bool DominantWeight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int64_t c) { return c == 0; });
}

int MarkedPoset::coordinate_of(int e) const {
  for (std::size_t i = 0; i < coordinate_order.size(); ++i)
    if (coordinate_order[i] == e) return static_cast<int>(i);
  throw std::invalid_argument("element is not in the coordinate order");
}

std::vector<int> MarkedPoset::lower_covers(int e) const {
  std::vector<int> out;
  for (const auto& [a, b] : covers)
    if (b == e) out.push_back(a);
  return out;
}

std::vector<int> MarkedPoset::upper_covers(int e) const {
  std::vector<int> out;
  for (const auto& [a, b] : covers)
    if (a == e) out.push_back(b);
  return out;
}

void MarkedPoset::validate() const {
  int m = num_elements();
  // acyclic cover relation (topological sort)
  std::vector<int> indeg(m, 0);
  for (const auto& [a, b] : covers) {
    if (a < 0 || a >= m || b < 0 || b >= m) throw std::invalid_argument("cover out of range");
    ++indeg[b];
  }
  std::vector<int> queue;
  for (int e = 0; e < m; ++e)
    if (indeg[e] == 0) queue.push_back(e);
  int seen = 0;
  while (!queue.empty()) {
    int e = queue.back();
    queue.pop_back();
    ++seen;
    for (int f : upper_covers(e))
      if (--indeg[f] == 0) queue.push_back(f);
  }
  if (seen != m) throw std::invalid_argument("cover relation has a cycle");
  // minimal/maximal elements are marked
  for (int e = 0; e < m; ++e) {
    bool has_lower = !lower_covers(e).empty();
    bool has_upper = !upper_covers(e).empty();
    if ((!has_lower || !has_upper) && !is_marked(e))
      throw std::invalid_argument("extremal element is unmarked: " + names[e]);
  }
  // coordinate order is a bijection onto the unmarked elements
  std::set<int> coord(coordinate_order.begin(), coordinate_order.end());
  if (coord.size() != coordinate_order.size())
    throw std::invalid_argument("coordinate order has duplicates");
  for (int e : coordinate_order)
    if (is_marked(e)) throw std::invalid_argument("marked element in coordinate order");
  if (static_cast<int>(coord.size()) + static_cast<int>(marking.size()) != m)
    throw std::invalid_argument("coordinate order does not cover the unmarked elements");
  // marking weakly order-preserving along covers, hence along the order
  for (const auto& [a, b] : covers)
    if (is_marked(a) && is_marked(b) && marking.at(a) > marking.at(b))
      throw std::invalid_argument("marking is not order-preserving");
}

Partition Partition::all_order(int n) {
  Partition p;
  p.chain.assign(n, false);
  return p;
}

Partition Partition::all_chain(int n) {
  Partition p;
  p.chain.assign(n, true);
  return p;
}

Partition Partition::from_bitmask(const std::string& mask) {
  Partition p;
  for (char c : mask) {
    if (c == '0') p.chain.push_back(false);
    else if (c == '1') p.chain.push_back(true);
    else throw std::invalid_argument("partition bitmask must be over {0,1}");
  }
  return p;
}

std::string Partition::to_bitmask() const {
  std::string s;
  for (bool b : chain) s.push_back(b ? '1' : '0');
  return s;
}

namespace {

MarkedPoset gt_poset_A(int n, const DominantWeight& lambda) {
  // lambda_{>=k} = sum_{k<=l<=n} <lambda, h_l>
  std::vector<int64_t> lam_ge(n + 2, 0);
  for (int k = n; k >= 1; --k) lam_ge[k] = lam_ge[k + 1] + lambda.coords[k - 1];

  MarkedPoset p;
  // marked c_0..c_n with values (0, lambda_{>=n}, ..., lambda_{>=1})
  std::vector<int> cid(n + 1);
  for (int j = 0; j <= n; ++j) {
    cid[j] = p.num_elements();
    p.names.push_back("c_" + std::to_string(j));
    p.marking[cid[j]] = j == 0 ? 0 : lam_ge[n + 1 - j];
  }
  std::map<std::pair<int, int>, int> qid;  // (j, i) -> element
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n + 1 - i; ++j) {
      qid[{j, i}] = p.num_elements();
      p.names.push_back("q_" + std::to_string(j) + "^(" + std::to_string(i) + ")");
    }
  for (int j = 1; j <= n; ++j) {
    p.covers.emplace_back(cid[j - 1], qid[{j, 1}]);
    p.covers.emplace_back(qid[{j, 1}], cid[j]);
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n - i; ++j) {
      p.covers.emplace_back(qid[{j, i}], qid[{j, i + 1}]);
      p.covers.emplace_back(qid[{j, i + 1}], qid[{j + 1, i}]);
    }
  // arrangement: block m = (q_1^(m), q_2^(m-1), ..., q_m^(1))
  for (int m = 1; m <= n; ++m)
    for (int l = 1; l <= m; ++l) p.coordinate_order.push_back(qid[{l, m + 1 - l}]);
  return p;
}

MarkedPoset gt_poset_C(int n, const DominantWeight& lambda) {
  // lambda_{<=k} = sum_{1<=l<=k} <lambda, h_l>
  std::vector<int64_t> lam_le(n + 1, 0);
  for (int k = 1; k <= n; ++k) lam_le[k] = lam_le[k - 1] + lambda.coords[k - 1];

  MarkedPoset p;
  std::vector<int> zid(n + 1), mid(n + 1);
  std::map<std::pair<int, int>, int> qid;  // (j, i)
  for (int i = 1; i <= n; ++i) {
    zid[i] = p.num_elements();
    p.names.push_back("z_" + std::to_string(i));
    p.marking[zid[i]] = 0;
    mid[i] = p.num_elements();
    p.names.push_back("m_" + std::to_string(i));
    p.marking[mid[i]] = lam_le[i];
    for (int j = 1; j <= 2 * i - 1; ++j) {
      qid[{j, i}] = p.num_elements();
      p.names.push_back("q_" + std::to_string(j) + "^(" + std::to_string(i) + ")");
    }
  }
  // row chains z_i < q_1^(i) < ... < q_{2i-1}^(i) < m_i
  for (int i = 1; i <= n; ++i) {
    p.covers.emplace_back(zid[i], qid[{1, i}]);
    for (int j = 1; j < 2 * i - 1; ++j) p.covers.emplace_back(qid[{j, i}], qid[{j + 1, i}]);
    p.covers.emplace_back(qid[{2 * i - 1, i}], mid[i]);
  }
  // diagonal covers into the next row
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= 2 * i - 1; ++j) p.covers.emplace_back(qid[{j, i}], qid[{j + 1, i + 1}]);
    p.covers.emplace_back(mid[i], qid[{2 * i + 1, i + 1}]);
  }
  // arrangement: block m = (q_2^(m), ..., q_m^(m), q_1^(m), q_{m+1}^(m), ..., q_{2m-1}^(m))
  for (int m = 1; m <= n; ++m) {
    for (int j = 2; j <= m; ++j) p.coordinate_order.push_back(qid[{j, m}]);
    p.coordinate_order.push_back(qid[{1, m}]);
    for (int j = m + 1; j <= 2 * m - 1; ++j) p.coordinate_order.push_back(qid[{j, m}]);
  }
  return p;
}

}  // namespace

MarkedPoset gt_poset(TypeTag type, int n, const DominantWeight& lambda) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (lambda.n != n || lambda.type != type)
    throw std::invalid_argument("weight does not match the requested poset");
  MarkedPoset p = type == TypeTag::A ? gt_poset_A(n, lambda) : gt_poset_C(n, lambda);
  p.validate();
  return p;
}

HPolytope mco_hrep(const MarkedPoset& poset, const Partition& part) {
  int n = poset.num_unmarked();
  if (part.size() != n) throw std::invalid_argument("partition size mismatch");
  std::vector<int> pos(poset.num_elements(), -1);
  for (int i = 0; i < n; ++i) pos[poset.coordinate_order[i]] = i;

  std::set<std::pair<std::vector<Rat>, Rat>> rows;
  for (int i = 0; i < n; ++i)
    if (part.is_chain(i)) {
      std::vector<Rat> coeffs(n, 0);
      coeffs[i] = -1;
      rows.emplace(std::move(coeffs), 0);
    }

  // Saturated chains a < p_1 < ... < p_l < b with interior in C and
  // a, b in marked-or-order; l = 0 covers the plain order relations.
  std::vector<int> anchors;
  for (int e = 0; e < poset.num_elements(); ++e)
    if (poset.is_marked(e) || !part.is_chain(pos[e])) anchors.push_back(e);

  std::vector<int> interior;
  auto emit = [&](int a, int b) {
    std::vector<Rat> coeffs(n, 0);
    Rat rhs = 0;
    for (int pq : interior) coeffs[pos[pq]] += 1;
    if (poset.is_marked(a)) rhs -= poset.marking.at(a);
    else coeffs[pos[a]] += 1;
    if (poset.is_marked(b)) rhs += poset.marking.at(b);
    else coeffs[pos[b]] -= 1;
    rows.emplace(std::move(coeffs), std::move(rhs));
  };
  auto walk = [&](auto&& self, int a, int e) -> void {
    for (int f : poset.upper_covers(e)) {
      if (poset.is_marked(f) || !part.is_chain(pos[f])) {
        emit(a, f);
      } else {
        interior.push_back(f);
        self(self, a, f);
        interior.pop_back();
      }
    }
  };
  for (int a : anchors) walk(walk, a, a);

  HPolytope h;
  h.dim = n;
  h.rows.assign(rows.begin(), rows.end());
  return h;
}

std::vector<Rat> transfer(const MarkedPoset& poset, const Partition& part,
                          const std::vector<Rat>& x) {
  int n = poset.num_unmarked();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("point dimension mismatch");
  std::vector<int> pos(poset.num_elements(), -1);
  for (int i = 0; i < n; ++i) pos[poset.coordinate_order[i]] = i;
  std::vector<Rat> out = x;
  for (int i = 0; i < n; ++i) {
    if (!part.is_chain(i)) continue;
    int p = poset.coordinate_order[i];
    bool first = true;
    Rat best;
    for (int a : poset.lower_covers(p)) {
      Rat y = poset.is_marked(a) ? Rat(poset.marking.at(a)) : x[pos[a]];
      Rat cand = x[i] - y;
      if (first || cand < best) best = cand;
      first = false;
    }
    out[i] = best;  // every unmarked element has a lower cover (extremes are marked)
  }
  return out;
}

LatticePointSet order_polytope_lattice_points(const MarkedPoset& poset) {
  int n = poset.num_unmarked();
  std::vector<int> pos(poset.num_elements(), -1);
  for (int i = 0; i < n; ++i) pos[poset.coordinate_order[i]] = i;

  // Linear extension of the unmarked elements.
  std::vector<int> ext;
  std::set<int> rem(poset.coordinate_order.begin(), poset.coordinate_order.end());
  while (!rem.empty()) {
    bool advanced = false;
    for (int e : rem) {
      bool ready = true;
      for (int a : poset.lower_covers(e))
        if (rem.count(a)) {
          ready = false;
          break;
        }
      if (ready) {
        ext.push_back(e);
        rem.erase(e);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("poset has no linear extension");
  }

  // Static bounds from the markings reachable up/down.
  auto reach = [&](int e, bool up) {
    std::vector<int> stack{e}, out;
    std::set<int> seen;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int f : up ? poset.upper_covers(cur) : poset.lower_covers(cur))
        if (seen.insert(f).second) {
          out.push_back(f);
          stack.push_back(f);
        }
    }
    return out;
  };
  std::vector<int64_t> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    int e = poset.coordinate_order[i];
    bool any = false;
    int64_t bound = 0;
    for (int f : reach(e, true))
      if (poset.is_marked(f)) {
        int64_t v = poset.marking.at(f);
        bound = any ? std::min(bound, v) : v;
        any = true;
      }
    hi[i] = bound;  // every element has a marked element above it
    any = false;
    for (int f : reach(e, false))
      if (poset.is_marked(f)) {
        int64_t v = poset.marking.at(f);
        bound = any ? std::max(bound, v) : v;
        any = true;
      }
    lo[i] = bound;
  }

  LatticePointSet out;
  out.dim = n;
  ValVec val(n);
  auto rec = [&](auto&& self, std::size_t step) -> void {
    if (step == ext.size()) {
      out.points.insert(val);
      return;
    }
    int e = ext[step];
    int i = pos[e];
    int64_t lb = lo[i], ub = hi[i];
    for (int a : poset.lower_covers(e))
      if (!poset.is_marked(a)) lb = std::max(lb, val[pos[a]]);
    for (int64_t v = lb; v <= ub; ++v) {
      val[i] = v;
      self(self, step + 1);
    }
  };
  rec(rec, 0);
  return out;
}

LatticePointSet mco_lattice_points(const MarkedPoset& poset, const Partition& part) {
  LatticePointSet order_points = order_polytope_lattice_points(poset);
  LatticePointSet out;
  out.dim = order_points.dim;
  for (const ValVec& p : order_points.points) {
    std::vector<Rat> x(p.begin(), p.end());
    std::vector<Rat> y = transfer(poset, part, x);
    ValVec q(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      // transfer maps lattice points to lattice points
      if (!is_integer(y[i])) throw std::logic_error("transfer image is not integral");
      q[i] = static_cast<int64_t>(rat_num(y[i]));
    }
    out.points.insert(std::move(q));
  }
  return out;
}

}  // namespace chainorder
