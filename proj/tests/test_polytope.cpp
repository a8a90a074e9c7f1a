#include <doctest.h>

#include <random>

#include "chainorder/polytope.hpp"

using namespace chainorder;

namespace {

HPolytope unit_box(int dim) {
  HPolytope h;
  h.dim = dim;
  for (int i = 0; i < dim; ++i) {
    std::vector<Rat> up(dim, 0), dn(dim, 0);
    up[i] = 1;
    dn[i] = -1;
    h.add_row(up, 1);
    h.add_row(dn, 0);
  }
  return h;
}

std::vector<Rat> pt(std::initializer_list<int> xs) {
  std::vector<Rat> p;
  for (int x : xs) p.emplace_back(x);
  return p;
}

}  // namespace

TEST_CASE("vertices of boxes and simplices") {
  CHECK(vertices(unit_box(2)).vertices.size() == 4);
  CHECK(vertices(unit_box(4)).vertices.size() == 16);
  HPolytope simplex;
  simplex.dim = 4;
  std::vector<Rat> ones(4, 1);
  simplex.add_row(ones, 1);
  for (int i = 0; i < 4; ++i) {
    std::vector<Rat> row(4, 0);
    row[i] = -1;
    simplex.add_row(row, 0);
  }
  CHECK(vertices(simplex).vertices.size() == 5);
  CHECK(volume(vertices(simplex)) == Rat(1, 24));
}

TEST_CASE("vertices rejects empty and unbounded input") {
  HPolytope empty;
  empty.dim = 1;
  empty.add_row({Rat(1)}, -1);
  empty.add_row({Rat(-1)}, 0);
  CHECK_THROWS(vertices(empty));
  HPolytope unbounded;
  unbounded.dim = 2;
  unbounded.add_row({Rat(1), Rat(0)}, 1);
  CHECK_THROWS(vertices(unbounded));
}

TEST_CASE("hull drops interior points and handles lower dimensions") {
  auto h = hull({pt({0, 0}), pt({1, 0}), std::vector<Rat>{Rat(1, 2), Rat(0)}});
  CHECK(h.vertices == std::vector<std::vector<Rat>>{pt({0, 0}), pt({1, 0})});
  // 2-simplex inside R^3
  auto s = hull({pt({0, 0, 0}), pt({0, 0, 1}), pt({0, 1, 1})});
  CHECK(s.vertices.size() == 3);
  CHECK(volume(s) == 0);
  auto single = hull({pt({2, 3}), pt({2, 3})});
  CHECK(single.vertices.size() == 1);
  CHECK_THROWS(hull({}));
}

TEST_CASE("vertices agree with basic-solution enumeration on random systems") {
  // independent oracle: solve every dim-subset of rows and keep feasible,
  // irredundant basic solutions
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coeff(-3, 3), rhs(1, 4);
  int built = 0;
  while (built < 20) {
    int dim = 2 + built % 2;
    HPolytope h;
    h.dim = dim;
    for (int i = 0; i < dim; ++i) {  // a bounding box keeps it bounded
      std::vector<Rat> up(dim, 0), dn(dim, 0);
      up[i] = 1;
      dn[i] = -1;
      h.add_row(up, rhs(rng));
      h.add_row(dn, rhs(rng));
    }
    for (int r = 0; r < 3; ++r) {
      std::vector<Rat> row(dim);
      for (int j = 0; j < dim; ++j) row[j] = coeff(rng);
      h.add_row(row, rhs(rng));
    }
    ++built;
    std::set<std::vector<Rat>> oracle;
    std::size_t m = h.rows.size();
    std::vector<std::size_t> idx(dim);
    auto feasible = [&](const std::vector<Rat>& x) {
      for (const auto& [a, b] : h.rows) {
        Rat s = 0;
        for (int j = 0; j < dim; ++j) s += a[j] * x[j];
        if (s > b) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, int pos, std::size_t from) -> void {
      if (pos == dim) {
        RatMatrix a(dim, std::vector<Rat>(dim));
        std::vector<Rat> b(dim);
        for (int r = 0; r < dim; ++r) {
          a[r] = h.rows[idx[r]].first;
          b[r] = h.rows[idx[r]].second;
        }
        auto inv = inverse(a);
        if (!inv) return;
        std::vector<Rat> x = mat_vec(*inv, b);
        if (feasible(x)) oracle.insert(x);
        return;
      }
      for (std::size_t r = from; r < m; ++r) {
        idx[pos] = r;
        self(self, pos + 1, r + 1);
      }
    };
    rec(rec, 0, 0);
    VPolytope v = vertices(h);
    std::set<std::vector<Rat>> dd(v.vertices.begin(), v.vertices.end());
    // feasible basic solutions are exactly the vertices
    CHECK(dd == oracle);
  }
}

TEST_CASE("vertices of the hrep of a hull reproduce the hull") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int dim = 2 + trial % 3;
    std::vector<std::vector<Rat>> pts;
    for (int i = 0; i < dim + 4; ++i) {
      std::vector<Rat> p(dim);
      for (int j = 0; j < dim; ++j) p[j] = coord(rng);
      pts.push_back(std::move(p));
    }
    VPolytope h = hull(pts);
    if (affine_dim(h.vertices) < dim) continue;
    VPolytope back = vertices(hrep_of(h));
    CHECK(same_vertex_set(back, h));
  }
}

TEST_CASE("hrep_of rejects lower-dimensional input") {
  VPolytope flat{3, {pt({0, 0, 0}), pt({0, 0, 1}), pt({0, 1, 1})}};
  CHECK_THROWS(hrep_of(flat));
}

TEST_CASE("lattice points") {
  CHECK(lattice_points(unit_box(3)).points.size() == 8);
  HPolytope unbounded;
  unbounded.dim = 2;
  unbounded.add_row({Rat(1), Rat(0)}, 1);
  CHECK_THROWS(lattice_points(unbounded));
  HPolytope shifted;
  shifted.dim = 2;
  shifted.add_row({Rat(2), Rat(0)}, 1);    // x <= 1/2
  shifted.add_row({Rat(-2), Rat(0)}, 1);   // x >= -1/2
  shifted.add_row({Rat(0), Rat(1)}, 2);
  shifted.add_row({Rat(0), Rat(-1)}, 0);
  CHECK(lattice_points(shifted).points.size() == 3);  // x = 0, y in {0,1,2}
}

TEST_CASE("minkowski sums") {
  VPolytope seg1{2, {pt({0, 0}), pt({1, 0})}};
  VPolytope seg2{2, {pt({0, 0}), pt({0, 1})}};
  VPolytope square = minkowski(seg1, seg2);
  CHECK(square.vertices.size() == 4);
  CHECK(volume(square) == 1);
  VPolytope origin{2, {pt({0, 0})}};
  CHECK(same_vertex_set(minkowski(square, origin), square));
  CHECK_THROWS(minkowski(seg1, VPolytope{3, {pt({0, 0, 0})}}));
  // commutative and associative on a test triple
  VPolytope tri{2, {pt({0, 0}), pt({1, 0}), pt({0, 1})}};
  CHECK(same_vertex_set(minkowski(seg1, tri), minkowski(tri, seg1)));
  CHECK(same_vertex_set(minkowski(minkowski(seg1, seg2), tri),
                        minkowski(seg1, minkowski(seg2, tri))));
}

TEST_CASE("volume") {
  CHECK(volume(vertices(unit_box(4))) == 1);
  VPolytope tri{2, {pt({0, 0}), pt({2, 0}), pt({0, 2})}};
  CHECK(volume(tri) == 2);
}

TEST_CASE("unimodular equivalence finds translations") {
  VPolytope sq = vertices(unit_box(2));
  VPolytope moved = translate(sq, {Rat(1), Rat(0)});
  auto t = unimodular_equiv(sq, moved);
  REQUIRE(t.has_value());
  CHECK(t->mat == int_identity(2));
  CHECK(t->shift == std::vector<Int>{1, 0});
}

TEST_CASE("unimodular equivalence distinguishes the triangle from the square") {
  VPolytope sq = vertices(unit_box(2));
  VPolytope tri{2, {pt({0, 0}), pt({1, 0}), pt({0, 1})}};
  CHECK_FALSE(unimodular_equiv(sq, tri).has_value());
}

TEST_CASE("unimodular equivalence with a shear") {
  VPolytope sq = vertices(unit_box(2));
  // image of the square under (x, y) -> (x + y, y) plus a shift
  std::vector<std::vector<Rat>> img;
  for (const auto& v : sq.vertices) img.push_back({v[0] + v[1] + 3, v[1]});
  VPolytope sheared = hull(img);
  auto t = unimodular_equiv(sq, sheared);
  REQUIRE(t.has_value());
  // the found map carries vertices onto vertices and preserves volume
  std::vector<std::vector<Rat>> mapped;
  for (const auto& v : sq.vertices) mapped.push_back(t->apply(v));
  VPolytope image = hull(mapped);
  CHECK(same_vertex_set(image, sheared));
  CHECK(volume(image) == volume(sq));
}

TEST_CASE("unimodular equivalence preserves dilate lattice counts") {
  VPolytope tri{2, {pt({0, 0}), pt({2, 1}), pt({1, 2})}};
  std::vector<std::vector<Rat>> img;
  for (const auto& v : tri.vertices) img.push_back({v[0] + v[1], v[0] + 2 * v[1] + 1});
  VPolytope moved = hull(img);  // det = 1 map
  auto t = unimodular_equiv(tri, moved);
  REQUIRE(t.has_value());
  for (int k = 1; k <= 3; ++k) {
    auto a = lattice_points(hrep_of(dilate(tri, k))).points.size();
    auto b = lattice_points(hrep_of(dilate(moved, k))).points.size();
    CHECK(a == b);
  }
}

TEST_CASE("unimodular equivalence on lower-dimensional polytopes") {
  VPolytope a{2, {pt({0, 0}), pt({2, 0})}};
  VPolytope b{2, {pt({0, 0}), pt({0, 2})}};
  auto t = unimodular_equiv(a, b);
  REQUIRE(t.has_value());
  std::vector<std::vector<Rat>> mapped;
  for (const auto& v : a.vertices) mapped.push_back(t->apply(v));
  CHECK(same_vertex_set(hull(mapped), b));
  Int d = int_det(t->mat);
  CHECK((d == 1 || d == -1));
  // segments of different lattice lengths are inequivalent
  VPolytope c{2, {pt({0, 0}), pt({3, 0})}};
  CHECK_FALSE(unimodular_equiv(a, c).has_value());
}

TEST_CASE("unimodular equivalence requires integral vertices") {
  VPolytope bad{1, {std::vector<Rat>{Rat(1, 2)}, std::vector<Rat>{Rat(3, 2)}}};
  VPolytope good{1, {std::vector<Rat>{Rat(0)}, std::vector<Rat>{Rat(1)}}};
  CHECK_THROWS(unimodular_equiv(bad, good));
}
