#include "chainorder/no_body.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace chainorder {

namespace {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<int>(jobs, static_cast<int>(count));
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

int wedge_size(TypeTag type, int n, int i) { return type == TypeTag::A ? i : n + 1 - i; }

}  // namespace

Poly fundamental_section(int n, int k, const Column& b, const PolyMatrix& omega) {
  if (b.n != n || b.k() != k) throw std::invalid_argument("column does not lie in B(pi_k)");
  std::vector<int> rows;
  rows.reserve(k);
  for (int e : b.entries) rows.push_back(e - 1);
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  return omega.minor_det(rows, cols);
}

Poly fundamental_section(int n, int k, const Column& b, const Partition& part) {
  return fundamental_section(n, k, b, omega_product(TypeTag::A, n, part));
}

ValVec d_vector(int n, int k, const Partition& part) {
  int nn = n * (n + 1) / 2;
  if (part.size() != nn) throw std::invalid_argument("partition size mismatch");
  ValVec d(nn, 0);
  int pos = 0;
  for (int m = 1; m <= n; ++m)
    for (int l = 1; l <= m; ++l, ++pos)
      // position pos holds q_l^{(m+1-l)}; the subscript is l
      if (l >= n - k + 2 && !part.is_chain(pos)) d[pos] = 1;
  return d;
}

ValVec d_lambda(int n, const std::vector<int64_t>& lambda, const Partition& part) {
  ValVec d(part.size(), 0);
  for (int i = 1; i <= n; ++i) {
    if (lambda[i - 1] == 0) continue;
    ValVec di = d_vector(n, i, part);
    for (std::size_t p = 0; p < d.size(); ++p) d[p] += lambda[i - 1] * di[p];
  }
  return d;
}

SectionSpace level_space(TypeTag type, int n, const std::vector<int64_t>& lambda,
                         const Partition& part, int level) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  DominantWeight lam(type, n, lambda);
  std::vector<int64_t> scaled(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) scaled[i] = level * lambda[i];

  SectionSpace out;
  out.type = type;
  out.n = n;
  out.lambda = lambda;
  out.part = part;
  out.level = level;
  out.expected_dim = static_cast<int64_t>(
      order_polytope_lattice_points(gt_poset(type, n, DominantWeight(type, n, scaled)))
          .points.size());

  PolyMatrix omega = omega_product(type, n, part);
  int nvars = omega.nvars;

  // Per fundamental weight: the minors of the wedge columns.
  std::vector<std::vector<Poly>> generators(n);
  for (int i = 1; i <= n; ++i) {
    if (scaled[i - 1] == 0) continue;
    int s = wedge_size(type, n, i);
    std::vector<int> cols(s);
    for (int c = 0; c < s; ++c) cols[c] = c;
    std::vector<int> rows(s);
    auto rec = [&](auto&& self, int pos, int from) -> void {
      if (pos == s) {
        Poly m = omega.minor_det(rows, cols);
        if (!m.is_zero()) generators[i - 1].push_back(std::move(m));
        return;
      }
      for (int r = from; r < omega.size; ++r) {
        rows[pos] = r;
        self(self, pos + 1, r + 1);
      }
    };
    rec(rec, 0, 0);
  }

  // All products with multiset degree level*lambda.
  std::vector<Poly> span{Poly::constant(nvars, 1)};
  for (int i = 1; i <= n; ++i) {
    int64_t mult = scaled[i - 1];
    if (mult == 0) continue;
    const auto& gens = generators[i - 1];
    // multisets of size mult over gens
    std::vector<Poly> factors;
    auto rec = [&](auto&& self, int64_t pos, std::size_t from, const Poly& acc) -> void {
      if (pos == mult) {
        factors.push_back(acc);
        return;
      }
      for (std::size_t g = from; g < gens.size(); ++g) self(self, pos + 1, g, acc * gens[g]);
    };
    rec(rec, 0, 0, Poly::constant(nvars, 1));
    std::vector<Poly> next;
    next.reserve(span.size() * factors.size());
    for (const Poly& a : span)
      for (const Poly& b : factors) next.push_back(a * b);
    span = std::move(next);
  }
  out.span = std::move(span);

  out.low_values_ambient = value_set(out.span, VarOrder::identity(nvars), ValMode::Low);
  if (static_cast<int64_t>(out.low_values_ambient.size()) != out.expected_dim)
    throw std::runtime_error(
        "level space dimension deficiency: products of fundamental sections span " +
        std::to_string(out.low_values_ambient.size()) + " dimensions, expected " +
        std::to_string(out.expected_dim));
  return out;
}

std::set<ValVec> level_value_set(const SectionSpace& space, const VarOrder& ord, ValMode mode) {
  int nvars = space.span.empty() ? 0 : space.span[0].nvars();
  if (mode == ValMode::Low && ord.perm == VarOrder::identity(nvars).perm)
    return space.low_values_ambient;
  return value_set(space.span, ord, mode);
}

MainTheoremReport verify_main_theorem(int n, const Partition& part,
                                      const std::vector<int64_t>& lambda) {
  MainTheoremReport rep;
  SectionSpace space = level_space(TypeTag::A, n, lambda, part, 1);
  std::set<ValVec> values = space.low_values_ambient;

  DominantWeight lam(TypeTag::A, n, lambda);
  MarkedPoset poset = gt_poset(TypeTag::A, n, lam);
  ValVec d = d_lambda(n, lambda, part);
  std::set<ValVec> target;
  for (const ValVec& p : mco_lattice_points(poset, part).points) {
    ValVec q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] - d[i];
    target.insert(std::move(q));
  }

  rep.points_match = values == target;
  if (!rep.points_match) {
    std::set_difference(values.begin(), values.end(), target.begin(), target.end(),
                        std::back_inserter(rep.only_value_set));
    std::set_difference(target.begin(), target.end(), values.begin(), values.end(),
                        std::back_inserter(rep.only_polytope));
  }
  rep.matched = rep.points_match ? values.size() : 0;

  std::vector<std::vector<Rat>> vpts;
  for (const ValVec& v : values) vpts.emplace_back(v.begin(), v.end());
  VPolytope value_hull = hull(vpts);
  VPolytope poly_verts = vertices(mco_hrep(poset, part));
  std::vector<Rat> shift(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) shift[i] = -Rat(d[i]);
  rep.hull_match = same_vertex_set(value_hull, translate(poly_verts, shift));
  rep.pass = rep.points_match && rep.hull_match;
  return rep;
}

namespace {

std::set<ValVec> pointset_minkowski(const std::set<ValVec>& a, const std::set<ValVec>& b) {
  std::set<ValVec> out;
  for (const ValVec& x : a)
    for (const ValVec& y : b) {
      ValVec s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
      out.insert(std::move(s));
    }
  return out;
}

}  // namespace

SaturationReport saturation_check(int n, const Partition& part,
                                  const std::vector<int64_t>& lambda, int kmax) {
  SaturationReport rep;
  int nn = part.size();
  // Fundamental lattice point sets, used k*lambda_i-fold per level.
  std::vector<std::set<ValVec>> fund(n);
  for (int i = 1; i <= n; ++i) {
    if (lambda[i - 1] == 0) continue;
    std::vector<int64_t> ei(n, 0);
    ei[i - 1] = 1;
    fund[i - 1] =
        mco_lattice_points(gt_poset(TypeTag::A, n, DominantWeight(TypeTag::A, n, ei)), part)
            .points;
  }
  ValVec d = d_lambda(n, lambda, part);
  rep.pass = true;
  for (int k = 1; k <= kmax; ++k) {
    std::set<ValVec> target{ValVec(nn, 0)};
    for (int i = 1; i <= n; ++i)
      for (int64_t c = 0; c < k * lambda[i - 1]; ++c)
        target = pointset_minkowski(target, fund[i - 1]);
    std::set<ValVec> shifted;
    for (const ValVec& p : target) {
      ValVec q(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] - k * d[i];
      shifted.insert(std::move(q));
    }
    SectionSpace space = level_space(TypeTag::A, n, lambda, part, k);
    const std::set<ValVec>& values = space.low_values_ambient;
    rep.level_counts.push_back(values.size());
    if (values != shifted && rep.pass) {
      rep.pass = false;
      rep.first_failing_level = k;
    }
  }
  return rep;
}

std::string to_string(TypeCLabel label) {
  switch (label) {
    case TypeCLabel::GT: return "GT";
    case TypeCLabel::NZ: return "NZ";
    case TypeCLabel::DELTA: return "Delta";
    case TypeCLabel::CROSS: return "x";
  }
  return "?";
}

std::string json_label(TypeCLabel label) {
  switch (label) {
    case TypeCLabel::DELTA: return "DELTA";
    case TypeCLabel::CROSS: return "CROSS";
    default: return to_string(label);
  }
}

Partition sp4_partition(int part_index) {
  switch (part_index) {
    case 1: return Partition::all_order(4);
    case 2: return Partition::all_chain(4);
    case 3: return Partition::from_bitmask("0011");
  }
  throw std::invalid_argument("type C partition index must be 1, 2 or 3");
}

const VPolytope& gt_c2_rho_reference() {
  static const VPolytope ref = [] {
    DominantWeight rho(TypeTag::C, 2, {1, 1});
    return vertices(mco_hrep(gt_poset(TypeTag::C, 2, rho), Partition::all_order(4)));
  }();
  return ref;
}

const VPolytope& nz_reference() {
  static const VPolytope ref = [] {
    HPolytope h;
    h.dim = 4;
    // a_4 <= 1, a_3 <= a_4 + 1, a_2 <= min(a_3 + 1, 2 a_3), 2 a_1 <= min(a_2, 2)
    h.add_row({0, 0, 0, 1}, 1);
    h.add_row({0, 0, 1, -1}, 1);
    h.add_row({0, 1, -1, 0}, 1);
    h.add_row({0, 1, -2, 0}, 0);
    h.add_row({2, -1, 0, 0}, 0);
    h.add_row({2, 0, 0, 0}, 2);
    for (int i = 0; i < 4; ++i) {
      std::vector<Rat> row(4, 0);
      row[i] = -1;
      h.add_row(std::move(row), 0);
    }
    return vertices(h);
  }();
  return ref;
}

const VPolytope& delta_reference() {
  static const VPolytope ref = [] {
    HPolytope h;
    h.dim = 4;
    // a_2 <= 1, a_4 <= 1, a_1 <= 1 + a_4 - a_2, a_3 <= 2 - a_2 - a_4
    h.add_row({0, 1, 0, 0}, 1);
    h.add_row({0, 0, 0, 1}, 1);
    h.add_row({1, 1, 0, -1}, 1);
    h.add_row({0, 1, 1, 1}, 2);
    for (int i = 0; i < 4; ++i) {
      std::vector<Rat> row(4, 0);
      row[i] = -1;
      h.add_row(std::move(row), 0);
    }
    return vertices(h);
  }();
  return ref;
}

TypeCCell classify_type_c(int part_index, const VarOrder& ord) {
  SectionSpace space = level_space(TypeTag::C, 2, {1, 1}, sp4_partition(part_index), 1);
  TypeCCell cell;
  cell.points = level_value_set(space, ord, ValMode::Low);
  std::vector<std::vector<Rat>> pts;
  for (const ValVec& v : cell.points) pts.emplace_back(v.begin(), v.end());
  VPolytope h = hull(pts);
  cell.hull_volume = volume(h);
  if (cell.hull_volume == Rat(5, 6)) {
    cell.label = TypeCLabel::CROSS;
    return cell;
  }
  if (cell.hull_volume != 1)
    throw std::runtime_error("unexpected hull volume " + rat_to_string(cell.hull_volume) +
                             "; the volume normalization assumption needs revisiting");
  int matches = 0;
  if (unimodular_equiv(h, gt_c2_rho_reference())) {
    cell.label = TypeCLabel::GT;
    ++matches;
  }
  if (unimodular_equiv(h, nz_reference())) {
    cell.label = TypeCLabel::NZ;
    ++matches;
  }
  if (unimodular_equiv(h, delta_reference())) {
    cell.label = TypeCLabel::DELTA;
    ++matches;
  }
  if (matches != 1)
    throw std::runtime_error(matches == 0 ? "hull matches no reference polytope"
                                          : "hull matches several reference polytopes");
  return cell;
}

std::vector<std::vector<int>> s4_permutations() {
  std::vector<int> p{1, 2, 3, 4};
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

// Table 1 of the Sp4 study, row-major over the lex-ordered permutations.
constexpr const char* kGoldenTable1[24][3] = {
    {"NZ", "NZ", "NZ"}, {"NZ", "NZ", "NZ"}, {"NZ", "x", "x"},   {"x", "x", "x"},
    {"x", "NZ", "NZ"},  {"x", "NZ", "NZ"},  {"NZ", "D", "NZ"},  {"NZ", "D", "NZ"},
    {"GT", "D", "NZ"},  {"GT", "D", "NZ"},  {"NZ", "D", "NZ"},  {"GT", "D", "NZ"},
    {"GT", "x", "x"},   {"GT", "x", "x"},   {"GT", "NZ", "x"},  {"GT", "NZ", "x"},
    {"GT", "x", "x"},   {"GT", "x", "x"},   {"NZ", "NZ", "NZ"}, {"NZ", "NZ", "NZ"},
    {"NZ", "GT", "NZ"}, {"GT", "GT", "NZ"}, {"GT", "NZ", "NZ"}, {"GT", "NZ", "NZ"}};

TypeCLabel label_from_golden(const char* s) {
  std::string v(s);
  if (v == "GT") return TypeCLabel::GT;
  if (v == "NZ") return TypeCLabel::NZ;
  if (v == "D") return TypeCLabel::DELTA;
  return TypeCLabel::CROSS;
}

}  // namespace

Table1Result compute_table1(int jobs) {
  auto perms = s4_permutations();
  Table1Result res;
  res.cells.resize(perms.size());
  res.expected.resize(perms.size());
  for (std::size_t r = 0; r < perms.size(); ++r)
    for (int c = 0; c < 3; ++c) res.expected[r][c] = label_from_golden(kGoldenTable1[r][c]);

  parallel_for(perms.size() * 3, jobs, [&](std::size_t cell) {
    std::size_t r = cell / 3;
    int c = static_cast<int>(cell % 3);
    VarOrder ord = VarOrder::from_one_based(perms[r]);
    res.cells[r][c] = classify_type_c(c + 1, ord);
  });

  res.pass = true;
  for (std::size_t r = 0; r < perms.size(); ++r) {
    bool match = true;
    for (int c = 0; c < 3; ++c) match = match && res.cells[r][c].label == res.expected[r][c];
    if (!match) {
      res.pass = false;
      res.mismatched_rows.push_back(r);
    }
  }
  return res;
}

HighestBodyResult highest_body(int n, const Partition& part,
                               const std::vector<int64_t>& lambda, int kmax) {
  if (kmax < 2) throw std::invalid_argument("highest_body needs kmax >= 2");
  auto scaled_hull = [&](int k) {
    SectionSpace space = level_space(TypeTag::A, n, lambda, part, k);
    std::set<ValVec> values =
        level_value_set(space, VarOrder::identity(part.size()), ValMode::High);
    std::vector<std::vector<Rat>> pts;
    for (const ValVec& v : values) {
      std::vector<Rat> p(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) p[i] = Rat(v[i], k);
      pts.push_back(std::move(p));
    }
    return hull(pts);
  };
  HighestBodyResult out;
  out.level = kmax;
  out.scaled_hull = scaled_hull(kmax);
  out.stabilized = same_vertex_set(out.scaled_hull, scaled_hull(kmax - 1));
  return out;
}

}  // namespace chainorder
