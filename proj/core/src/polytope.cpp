#include "chainorder/polytope.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <numeric>
#include <stdexcept>

namespace chainorder {

void HPolytope::add_row(std::vector<Rat> coeffs, Rat rhs) {
  if (static_cast<int>(coeffs.size()) != dim)
    throw std::invalid_argument("inequality coefficient count mismatch");
  rows.emplace_back(std::move(coeffs), std::move(rhs));
}

ValVec AffineUnimodularMap::apply(const ValVec& x) const {
  ValVec y(shift.size());
  for (std::size_t i = 0; i < mat.size(); ++i) {
    Int acc = shift[i];
    for (std::size_t j = 0; j < x.size(); ++j) acc += mat[i][j] * x[j];
    y[i] = static_cast<int64_t>(acc);
  }
  return y;
}

std::vector<Rat> AffineUnimodularMap::apply(const std::vector<Rat>& x) const {
  std::vector<Rat> y(shift.size());
  for (std::size_t i = 0; i < mat.size(); ++i) {
    Rat acc = shift[i];
    for (std::size_t j = 0; j < x.size(); ++j) acc += Rat(mat[i][j]) * x[j];
    y[i] = acc;
  }
  return y;
}

namespace {

using Bitset = boost::dynamic_bitset<>;

struct Ray {
  std::vector<Int> v;
  Bitset active;  // rows satisfied with equality, over processed rows
};

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Extreme rays of the pointed cone {y : row · y <= 0 for every row}.
// Motzkin double description starting from a simplicial subcone.
std::vector<std::vector<Int>> dd_rays(const std::vector<std::vector<Int>>& rows, int d) {
  // Pick d rows of full rank for the initial simplicial cone.
  std::vector<std::size_t> base;
  {
    RatMatrix elim;
    for (std::size_t i = 0; i < rows.size() && base.size() < static_cast<std::size_t>(d); ++i) {
      RatMatrix trial = elim;
      trial.emplace_back(rows[i].begin(), rows[i].end());
      if (rank(trial) > elim.size()) {
        elim = std::move(trial);
        base.push_back(i);
      }
    }
    if (base.size() < static_cast<std::size_t>(d))
      throw std::invalid_argument("cone is not pointed (unbounded polyhedron)");
  }

  RatMatrix b(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) b[i][j] = Rat(rows[base[i]][j]);
  RatMatrix binv = *inverse(b);

  std::size_t total = rows.size();
  std::vector<Ray> rays(d);
  for (int j = 0; j < d; ++j) {
    // Column j of -B^{-1}: active on all base rows except the j-th.
    std::vector<Int> v(d);
    Int lcm = 1;
    for (int i = 0; i < d; ++i) lcm = lcm / int_gcd(lcm, rat_den(binv[i][j])) * rat_den(binv[i][j]);
    for (int i = 0; i < d; ++i) v[i] = -rat_num(binv[i][j]) * (lcm / rat_den(binv[i][j]));
    make_primitive(v);
    rays[j].v = std::move(v);
    rays[j].active.resize(total);
    for (int i = 0; i < d; ++i)
      if (i != j) rays[j].active.set(base[i]);
  }

  std::vector<bool> in_base(total, false);
  for (std::size_t i : base) in_base[i] = true;

  for (std::size_t k = 0; k < total; ++k) {
    if (in_base[k]) continue;
    std::vector<Int> s(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) s[i] = dot(rows[k], rays[i].v);
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] > 0) pos.push_back(i);
      else if (s[i] < 0) neg.push_back(i);
    }
    if (pos.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (s[i] == 0) rays[i].active.set(k);
      continue;
    }
    std::vector<Ray> created;
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        Bitset common = rays[p].active & rays[n].active;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size(); ++t) {
          if (t == p || t == n) continue;
          if (common.is_subset_of(rays[t].active)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        std::vector<Int> v(d);
        for (int j = 0; j < d; ++j) v[j] = s[p] * rays[n].v[j] - s[n] * rays[p].v[j];
        make_primitive(v);
        Ray r;
        r.v = std::move(v);
        r.active = std::move(common);
        r.active.set(k);
        created.push_back(std::move(r));
      }
    std::vector<Ray> next;
    next.reserve(rays.size() + created.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] > 0) continue;
      Ray r = std::move(rays[i]);
      if (s[i] == 0) r.active.set(k);
      next.push_back(std::move(r));
    }
    for (Ray& r : created) next.push_back(std::move(r));
    rays = std::move(next);
    if (rays.empty()) break;
  }

  std::vector<std::vector<Int>> out;
  out.reserve(rays.size());
  for (Ray& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  return out;
}

// Clears denominators of (coeffs, rhs) into the lifted integer row (-rhs, coeffs).
std::vector<Int> lift_row(const std::vector<Rat>& coeffs, const Rat& rhs) {
  Int lcm = rat_den(rhs);
  for (const Rat& c : coeffs) lcm = lcm / int_gcd(lcm, rat_den(c)) * rat_den(c);
  std::vector<Int> out(coeffs.size() + 1);
  out[0] = -rat_num(rhs) * (lcm / rat_den(rhs));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out[i + 1] = rat_num(coeffs[i]) * (lcm / rat_den(coeffs[i]));
  return out;
}

std::vector<Int> lift_point(const std::vector<Rat>& p) {
  Int lcm = 1;
  for (const Rat& c : p) lcm = lcm / int_gcd(lcm, rat_den(c)) * rat_den(c);
  std::vector<Int> out(p.size() + 1);
  out[0] = lcm;
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i + 1] = rat_num(p[i]) * (lcm / rat_den(p[i]));
  return out;
}

struct HullFacets {
  // c · x <= rhs with c primitive integer.
  std::vector<std::pair<std::vector<Int>, Rat>> facets;
};

// Facets of a full-dimensional hull, via the polar cone of the lifted points.
HullFacets hull_facets_full(const std::vector<std::vector<Rat>>& points, int dim) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(points.size());
  for (const auto& p : points) rows.push_back(lift_point(p));
  auto rays = dd_rays(rows, dim + 1);
  HullFacets out;
  for (auto& r : rays) {
    std::vector<Int> c(r.begin() + 1, r.end());
    out.facets.emplace_back(std::move(c), Rat(-r[0]));
  }
  return out;
}

Rat dot_rat(const std::vector<Int>& a, const std::vector<Rat>& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
  return s;
}

// Indices of points that are vertices of the full-dimensional hull.
std::vector<std::size_t> hull_vertex_indices_full(const std::vector<std::vector<Rat>>& points,
                                                  int dim, const HullFacets& hf) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < points.size(); ++i) {
    RatMatrix active;
    for (const auto& [c, rhs] : hf.facets)
      if (dot_rat(c, points[i]) == rhs) active.emplace_back(c.begin(), c.end());
    if (active.size() >= static_cast<std::size_t>(dim) &&
        rank(active) == static_cast<std::size_t>(dim))
      idx.push_back(i);
  }
  return idx;
}

std::vector<std::vector<Rat>> dedupe(const std::vector<std::vector<Rat>>& points) {
  std::vector<std::vector<Rat>> out = points;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Coordinate subset on which the affine hull projects bijectively.
std::vector<int> chart_columns(const std::vector<std::vector<Rat>>& points) {
  if (points.empty()) return {};
  std::size_t n = points[0].size();
  RatMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rat> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(row));
  }
  std::vector<int> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < diffs.size(); ++c) {
    std::size_t piv = r;
    while (piv < diffs.size() && diffs[piv][c] == 0) ++piv;
    if (piv == diffs.size()) continue;
    std::swap(diffs[piv], diffs[r]);
    for (std::size_t i = r + 1; i < diffs.size(); ++i) {
      if (diffs[i][c] == 0) continue;
      Rat f = diffs[i][c] / diffs[r][c];
      for (std::size_t j = c; j < n; ++j) diffs[i][j] -= f * diffs[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rat>> project_columns(const std::vector<std::vector<Rat>>& points,
                                              const std::vector<int>& cols) {
  std::vector<std::vector<Rat>> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    std::vector<Rat> q;
    q.reserve(cols.size());
    for (int c : cols) q.push_back(p[c]);
    out.push_back(std::move(q));
  }
  return out;
}

Rat volume_full(const std::vector<std::vector<Rat>>& verts, int dim);

// (dim-1)-volume of a facet after dropping one coordinate with nonzero normal
// component; the Euclidean correction factor ||c|| / |c_i| cancels against the
// lattice distance, so only rational data appears.
Rat pyramid_volume(const std::vector<std::vector<Rat>>& verts, int dim,
                   const std::pair<std::vector<Int>, Rat>& facet,
                   const std::vector<Rat>& apex) {
  const auto& [c, rhs] = facet;
  std::vector<std::vector<Rat>> fverts;
  for (const auto& v : verts)
    if (dot_rat(c, v) == rhs) fverts.push_back(v);
  int drop = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (boost::multiprecision::abs(c[i]) > boost::multiprecision::abs(c[drop])) drop = i;
  std::vector<int> keep;
  for (int i = 0; i < dim; ++i)
    if (i != drop) keep.push_back(i);
  Rat base = volume_full(project_columns(fverts, keep), dim - 1);
  Rat height = rhs - dot_rat(c, apex);  // scaled by ||c||, cancels below
  return height * base / Rat(boost::multiprecision::abs(c[drop]));
}

Rat volume_full(const std::vector<std::vector<Rat>>& verts, int dim) {
  if (dim == 0) return 1;
  if (dim == 1) {
    Rat lo = verts[0][0], hi = verts[0][0];
    for (const auto& v : verts) {
      lo = std::min(lo, v[0]);
      hi = std::max(hi, v[0]);
    }
    return hi - lo;
  }
  HullFacets hf = hull_facets_full(verts, dim);
  const std::vector<Rat>& apex = verts[0];
  Rat vol = 0;
  for (const auto& facet : hf.facets) {
    if (dot_rat(facet.first, apex) == facet.second) continue;
    vol += pyramid_volume(verts, dim, facet, apex);
  }
  return vol / dim;
}

}  // namespace

int affine_dim(const std::vector<std::vector<Rat>>& points) {
  if (points.empty()) return -1;
  std::size_t n = points[0].size();
  RatMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rat> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(row));
  }
  return static_cast<int>(rank(diffs));
}

VPolytope vertices(const HPolytope& h) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(h.rows.size() + 1);
  for (const auto& [coeffs, rhs] : h.rows) rows.push_back(lift_row(coeffs, rhs));
  {
    std::vector<Int> x0(h.dim + 1, 0);
    x0[0] = -1;
    rows.push_back(std::move(x0));
  }
  auto rays = dd_rays(rows, h.dim + 1);
  VPolytope out;
  out.dim = h.dim;
  for (const auto& r : rays) {
    if (r[0] == 0) throw std::invalid_argument("polyhedron is unbounded");
    std::vector<Rat> v(h.dim);
    for (int i = 0; i < h.dim; ++i) v[i] = Rat(r[i + 1], r[0]);
    out.vertices.push_back(std::move(v));
  }
  if (out.vertices.empty()) throw std::invalid_argument("polyhedron is empty");
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

VPolytope hull(const std::vector<std::vector<Rat>>& points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  auto pts = dedupe(points);
  VPolytope out;
  out.dim = static_cast<int>(pts[0].size());
  int d = affine_dim(pts);
  if (d == 0) {
    out.vertices.push_back(pts[0]);
    return out;
  }
  std::vector<std::vector<Rat>> chart = pts;
  if (d < out.dim) {
    std::vector<int> cols = chart_columns(pts);
    chart = project_columns(pts, cols);
  }
  HullFacets hf = hull_facets_full(chart, d);
  for (std::size_t i : hull_vertex_indices_full(chart, d, hf)) out.vertices.push_back(pts[i]);
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

HPolytope hrep_of(const VPolytope& p) {
  if (affine_dim(p.vertices) != p.dim)
    throw std::invalid_argument("hrep_of requires a full-dimensional polytope");
  HullFacets hf = hull_facets_full(p.vertices, p.dim);
  HPolytope out;
  out.dim = p.dim;
  for (auto& [c, rhs] : hf.facets) {
    std::vector<Rat> coeffs(c.begin(), c.end());
    out.rows.emplace_back(std::move(coeffs), rhs);
  }
  std::sort(out.rows.begin(), out.rows.end());
  return out;
}

LatticePointSet lattice_points(const HPolytope& h) {
  VPolytope v = vertices(h);  // also certifies boundedness
  LatticePointSet out;
  out.dim = h.dim;
  std::vector<int64_t> lo(h.dim), hi(h.dim);
  for (int i = 0; i < h.dim; ++i) {
    Rat mn = v.vertices[0][i], mx = v.vertices[0][i];
    for (const auto& vert : v.vertices) {
      mn = std::min(mn, vert[i]);
      mx = std::max(mx, vert[i]);
    }
    // ceil(mn), floor(mx)
    auto floor_div = [](const Int& num, const Int& den) {
      Int q = num / den;
      if (num % den != 0 && ((num < 0) != (den < 0))) --q;
      return q;
    };
    Int num = rat_num(mn), den = rat_den(mn);
    Int fl = floor_div(num, den);
    lo[i] = static_cast<int64_t>(num % den == 0 ? fl : Int(fl + 1));
    num = rat_num(mx);
    den = rat_den(mx);
    hi[i] = static_cast<int64_t>(floor_div(num, den));
  }
  ValVec point(h.dim);
  auto feasible = [&](const ValVec& x) {
    for (const auto& [coeffs, rhs] : h.rows) {
      Rat s = 0;
      for (int i = 0; i < h.dim; ++i) s += coeffs[i] * x[i];
      if (s > rhs) return false;
    }
    return true;
  };
  auto scan = [&](auto&& self, int axis) -> void {
    if (axis == h.dim) {
      if (feasible(point)) out.points.insert(point);
      return;
    }
    for (int64_t t = lo[axis]; t <= hi[axis]; ++t) {
      point[axis] = t;
      self(self, axis + 1);
    }
  };
  scan(scan, 0);
  return out;
}

VPolytope minkowski(const VPolytope& a, const VPolytope& b) {
  if (a.dim != b.dim) throw std::invalid_argument("minkowski: dimension mismatch");
  std::vector<std::vector<Rat>> sums;
  sums.reserve(a.vertices.size() * b.vertices.size());
  for (const auto& x : a.vertices)
    for (const auto& y : b.vertices) {
      std::vector<Rat> s(a.dim);
      for (int i = 0; i < a.dim; ++i) s[i] = x[i] + y[i];
      sums.push_back(std::move(s));
    }
  return hull(sums);
}

VPolytope dilate(const VPolytope& p, const Rat& factor) {
  VPolytope out;
  out.dim = p.dim;
  for (const auto& v : p.vertices) {
    std::vector<Rat> w(p.dim);
    for (int i = 0; i < p.dim; ++i) w[i] = v[i] * factor;
    out.vertices.push_back(std::move(w));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

VPolytope translate(const VPolytope& p, const std::vector<Rat>& shift) {
  VPolytope out;
  out.dim = p.dim;
  for (const auto& v : p.vertices) {
    std::vector<Rat> w(p.dim);
    for (int i = 0; i < p.dim; ++i) w[i] = v[i] + shift[i];
    out.vertices.push_back(std::move(w));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

Rat volume(const VPolytope& p) {
  if (p.vertices.empty()) return 0;
  if (affine_dim(p.vertices) < p.dim) return 0;
  return volume_full(p.vertices, p.dim);
}

bool is_integral(const VPolytope& p) {
  for (const auto& v : p.vertices)
    for (const Rat& c : v)
      if (!is_integer(c)) return false;
  return true;
}

bool same_vertex_set(const VPolytope& a, const VPolytope& b) {
  if (a.dim != b.dim) return false;
  auto va = a.vertices, vb = b.vertices;
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  return va == vb;
}

namespace {

std::vector<Int> to_int_point(const std::vector<Rat>& v) {
  std::vector<Int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = rat_num(v[i]);
  return out;
}

Int gcd_of_difference(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) g = int_gcd(g, a[i] - b[i]);
  return g;
}

// Facet-incidence degree per vertex; a unimodular invariant used for pruning.
std::vector<std::size_t> facet_degrees(const VPolytope& p) {
  HullFacets hf = hull_facets_full(p.vertices, p.dim);
  std::vector<std::size_t> deg(p.vertices.size(), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    for (const auto& [c, rhs] : hf.facets)
      if (dot_rat(c, p.vertices[i]) == rhs) ++deg[i];
  return deg;
}

std::optional<AffineUnimodularMap> unimodular_equiv_full(const VPolytope& p, const VPolytope& q) {
  int n = p.dim;
  if (volume(p) != volume(q)) return std::nullopt;
  for (int k = 1; k <= 2; ++k) {
    auto lp = lattice_points(hrep_of(dilate(p, k)));
    auto lq = lattice_points(hrep_of(dilate(q, k)));
    if (lp.points.size() != lq.points.size()) return std::nullopt;
  }

  std::vector<std::vector<Int>> pv, qv;
  for (const auto& v : p.vertices) pv.push_back(to_int_point(v));
  for (const auto& v : q.vertices) qv.push_back(to_int_point(v));

  // Affinely independent frame of P, greedily extended.
  std::vector<std::size_t> frame{0};
  RatMatrix dirs;
  for (std::size_t i = 1; i < pv.size() && frame.size() <= static_cast<std::size_t>(n); ++i) {
    RatMatrix trial = dirs;
    std::vector<Rat> row(n);
    for (int j = 0; j < n; ++j) row[j] = Rat(pv[i][j] - pv[0][j]);
    trial.push_back(std::move(row));
    if (rank(trial) > dirs.size()) {
      dirs = std::move(trial);
      frame.push_back(i);
    }
  }
  if (frame.size() != static_cast<std::size_t>(n) + 1) return std::nullopt;

  RatMatrix dmat(n, std::vector<Rat>(n));
  for (int col = 0; col < n; ++col)
    for (int r = 0; r < n; ++r) dmat[r][col] = Rat(pv[frame[col + 1]][r] - pv[frame[0]][r]);
  RatMatrix dinv = *inverse(dmat);

  auto pdeg = facet_degrees(p);
  auto qdeg = facet_degrees(q);
  std::vector<Int> pgcd(frame.size());
  for (std::size_t i = 1; i < frame.size(); ++i)
    pgcd[i] = gcd_of_difference(pv[frame[i]], pv[frame[0]]);

  std::set<std::vector<Int>> qset(qv.begin(), qv.end());
  std::vector<std::size_t> choice(frame.size());

  std::optional<AffineUnimodularMap> found;
  auto verify = [&]() -> bool {
    RatMatrix wmat(n, std::vector<Rat>(n));
    for (int col = 0; col < n; ++col)
      for (int r = 0; r < n; ++r)
        wmat[r][col] = Rat(qv[choice[col + 1]][r] - qv[choice[0]][r]);
    RatMatrix m = mat_mul(wmat, dinv);
    IntMatrix mi(n, std::vector<Int>(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (!is_integer(m[r][c])) return false;
        mi[r][c] = rat_num(m[r][c]);
      }
    Int dt = int_det(mi);
    if (dt != 1 && dt != -1) return false;
    std::vector<Int> shift(n);
    for (int r = 0; r < n; ++r) {
      Int acc = qv[choice[0]][r];
      for (int c = 0; c < n; ++c) acc -= mi[r][c] * pv[frame[0]][c];
      shift[r] = acc;
    }
    for (const auto& v : pv) {
      std::vector<Int> img(n);
      for (int r = 0; r < n; ++r) {
        Int acc = shift[r];
        for (int c = 0; c < n; ++c) acc += mi[r][c] * v[c];
        img[r] = acc;
      }
      if (!qset.count(img)) return false;
    }
    found = AffineUnimodularMap{std::move(mi), std::move(shift)};
    return true;
  };

  // Candidates in canonical (sorted vertex list) order: deterministic result.
  auto search = [&](auto&& self, std::size_t pos, RatMatrix& partial) -> bool {
    if (pos == frame.size()) return verify();
    for (std::size_t cand = 0; cand < qv.size(); ++cand) {
      bool used = false;
      for (std::size_t s = 0; s < pos; ++s)
        if (choice[s] == cand) used = true;
      if (used) continue;
      if (qdeg[cand] != pdeg[frame[pos]]) continue;
      if (pos > 0) {
        if (gcd_of_difference(qv[cand], qv[choice[0]]) != pgcd[pos]) continue;
        std::vector<Rat> row(n);
        for (int j = 0; j < n; ++j) row[j] = Rat(qv[cand][j] - qv[choice[0]][j]);
        RatMatrix trial = partial;
        trial.push_back(std::move(row));
        if (rank(trial) != pos) continue;
        choice[pos] = cand;
        if (self(self, pos + 1, trial)) return true;
      } else {
        choice[pos] = cand;
        RatMatrix empty;
        if (self(self, pos + 1, empty)) return true;
      }
    }
    return false;
  };
  RatMatrix empty;
  search(search, 0, empty);
  return found;
}

}  // namespace

std::optional<AffineUnimodularMap> unimodular_equiv(const VPolytope& p, const VPolytope& q) {
  if (!is_integral(p) || !is_integral(q))
    throw std::invalid_argument("unimodular_equiv requires integral polytopes");
  if (p.dim != q.dim) return std::nullopt;
  if (p.vertices.size() != q.vertices.size()) return std::nullopt;
  int dp = affine_dim(p.vertices), dq = affine_dim(q.vertices);
  if (dp != dq) return std::nullopt;
  int n = p.dim;
  if (dp == n) return unimodular_equiv_full(p, q);
  if (dp == 0) {
    std::vector<Int> shift(n);
    for (int i = 0; i < n; ++i) shift[i] = rat_num(q.vertices[0][i] - p.vertices[0][i]);
    return AffineUnimodularMap{int_identity(n), std::move(shift)};
  }

  // Lower-dimensional pair: move both to coordinates of the saturated
  // direction lattice of the affine hull, solve there, and conjugate back.
  auto reduce = [&](const VPolytope& poly, IntMatrix& u, std::vector<Int>& anchor) {
    std::vector<std::vector<Int>> verts;
    for (const auto& v : poly.vertices) verts.push_back(to_int_point(v));
    anchor = verts[0];
    IntMatrix gens(verts.size() - 1, std::vector<Int>(n));
    for (std::size_t i = 1; i < verts.size(); ++i)
      for (int j = 0; j < n; ++j) gens[i - 1][j] = verts[i][j] - anchor[j];
    IntMatrix k = integer_kernel(gens);  // columns orthogonal to directions
    IntMatrix kt(k.empty() ? 0 : k[0].size(), std::vector<Int>(n));
    for (std::size_t i = 0; i < kt.size(); ++i)
      for (int j = 0; j < n; ++j) kt[i][j] = k[j][i];
    IntMatrix lat = integer_kernel(kt);  // saturated direction lattice
    u = unimodular_extension(lat, dp);
    RatMatrix ur(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) ur[i][j] = Rat(u[i][j]);
    RatMatrix uinv = *inverse(ur);
    VPolytope red;
    red.dim = dp;
    for (const auto& v : verts) {
      std::vector<Rat> diff(n);
      for (int j = 0; j < n; ++j) diff[j] = Rat(v[j] - anchor[j]);
      std::vector<Rat> y = mat_vec(uinv, diff);
      red.vertices.push_back(std::vector<Rat>(y.begin(), y.begin() + dp));
    }
    std::sort(red.vertices.begin(), red.vertices.end());
    return red;
  };

  IntMatrix up, uq;
  std::vector<Int> ap, aq;
  VPolytope rp = reduce(p, up, ap);
  VPolytope rq = reduce(q, uq, aq);
  auto inner = unimodular_equiv_full(rp, rq);
  if (!inner) return std::nullopt;

  // T(x) = Uq * blockdiag(M', I) * Up^{-1} (x - ap) + Uq * pad(s') + aq
  IntMatrix block = int_identity(n);
  for (int i = 0; i < dp; ++i)
    for (int j = 0; j < dp; ++j) block[i][j] = inner->mat[i][j];
  RatMatrix upr(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) upr[i][j] = Rat(up[i][j]);
  RatMatrix upinv_r = *inverse(upr);
  IntMatrix upinv(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) upinv[i][j] = rat_num(upinv_r[i][j]);
  IntMatrix m = int_mat_mul(uq, int_mat_mul(block, upinv));
  std::vector<Int> spad(n, 0);
  for (int i = 0; i < dp; ++i) spad[i] = inner->shift[i];
  std::vector<Int> shift = int_mat_vec(uq, spad);
  std::vector<Int> map_ap = int_mat_vec(m, ap);
  for (int i = 0; i < n; ++i) shift[i] += aq[i] - map_ap[i];

  AffineUnimodularMap t{std::move(m), std::move(shift)};
  // Confirm on the vertex sets before returning.
  std::set<std::vector<Rat>> qverts(q.vertices.begin(), q.vertices.end());
  for (const auto& v : p.vertices)
    if (!qverts.count(t.apply(v))) return std::nullopt;
  return t;
}

}  // namespace chainorder
