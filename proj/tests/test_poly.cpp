#include <doctest.h>

#include <random>

#include "chainorder/linalg.hpp"
#include "chainorder/poly.hpp"

using namespace chainorder;

namespace {

Poly tvar(int n, int i) { return Poly::variable(n, i); }

Poly random_poly(std::mt19937& rng, int nvars, int max_terms) {
  std::uniform_int_distribution<int> nt(1, max_terms), e(0, 3), c(-5, 5);
  Poly p(nvars);
  int terms = nt(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (int i = 0; i < nvars; ++i) m[i] = e(rng);
    int cc = c(rng);
    if (cc == 0) cc = 1;
    p.add_term(m, cc);
  }
  return p;
}

}  // namespace

TEST_CASE("low_val picks the lex-minimal exponent vector") {
  // f = t1 + t1 t2
  Poly f = tvar(2, 0) + tvar(2, 0) * tvar(2, 1);
  CHECK(low_val(f, VarOrder::identity(2)) == ValVec{1, 0});
  // under t2 > t1 the pairs (t2-exp, t1-exp) are (0,1) < (1,1)
  CHECK(low_val(f, VarOrder::from_one_based({2, 1})) == ValVec{0, 1});
  Poly c = Poly::constant(3, 7);
  CHECK(low_val(c, VarOrder::identity(3)) == ValVec{0, 0, 0});
  CHECK_THROWS(low_val(Poly(2), VarOrder::identity(2)));
}

TEST_CASE("high_val negates the lex-maximal exponent vector") {
  Poly f = tvar(2, 0) + tvar(2, 0) * tvar(2, 1);
  CHECK(high_val(f, VarOrder::identity(2)) == ValVec{-1, -1});
  CHECK(high_val(Poly::constant(2, 3), VarOrder::identity(2)) == ValVec{0, 0});
  // f = t1^2 + t2^3
  Poly g = tvar(2, 0) * tvar(2, 0) + tvar(2, 1) * tvar(2, 1) * tvar(2, 1);
  CHECK(high_val(g, VarOrder::identity(2)) == ValVec{-2, 0});
}

TEST_CASE("val_quotient subtracts valuations") {
  Poly f = tvar(2, 0) * tvar(2, 1);
  Poly g = tvar(2, 1);
  CHECK(val_quotient(f, f, VarOrder::identity(2), ValMode::Low) == ValVec{0, 0});
  CHECK(val_quotient(f, g, VarOrder::identity(2), ValMode::Low) == ValVec{1, 0});
  CHECK(val_quotient(Poly::constant(2, 1), tvar(2, 0), VarOrder::identity(2), ValMode::Low) ==
        ValVec{-1, 0});
  CHECK(val_quotient(f, g, VarOrder::identity(2), ValMode::High) == ValVec{-1, 0});
  CHECK_THROWS(val_quotient(f, Poly(2), VarOrder::identity(2), ValMode::Low));
}

TEST_CASE("permuted reporting round-trips to ambient order") {
  Poly f = tvar(3, 0) * tvar(3, 2) * tvar(3, 2);  // t1 t3^2
  VarOrder ord = VarOrder::from_one_based({3, 1, 2});
  ValVec v = low_val(f, ord);
  CHECK(v == ValVec{2, 1, 0});
  CHECK(permute_to_ambient(v, ord) == ValVec{1, 0, 2});
  CHECK(permute_to_ambient(low_val(f, VarOrder::identity(3)), VarOrder::identity(3)) ==
        ValVec{1, 0, 2});
}

TEST_CASE("value_set performs elimination over the monomial order") {
  Poly t1 = tvar(2, 0), t2 = tvar(2, 1);
  std::vector<Poly> span{t1, t1 + t1 * t2};
  auto vs = value_set(span, VarOrder::identity(2), ValMode::Low);
  CHECK(vs == std::set<ValVec>{{1, 0}, {1, 1}});
  std::vector<Poly> unit{Poly::constant(3, 1)};
  CHECK(value_set(unit, VarOrder::identity(3), ValMode::Low) ==
        std::set<ValVec>{{0, 0, 0}});
  CHECK_THROWS(value_set({}, VarOrder::identity(2), ValMode::Low));
}

TEST_CASE("valuation axioms on random pairs") {
  std::mt19937 rng(7);
  VarOrder ord = VarOrder::from_one_based({2, 3, 1});
  for (int trial = 0; trial < 200; ++trial) {
    Poly f = random_poly(rng, 3, 5);
    Poly g = random_poly(rng, 3, 5);
    if (f.is_zero() || g.is_zero()) continue;
    // additivity on products
    ValVec sum = low_val(f, ord);
    ValVec vg = low_val(g, ord);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += vg[i];
    CHECK(low_val(f * g, ord) == sum);
    ValVec hsum = high_val(f, ord);
    ValVec hg = high_val(g, ord);
    for (std::size_t i = 0; i < hsum.size(); ++i) hsum[i] += hg[i];
    CHECK(high_val(f * g, ord) == hsum);
    // ultrametric
    Poly s = f + g;
    if (!s.is_zero()) CHECK(low_val(s, ord) >= std::min(low_val(f, ord), low_val(g, ord)));
  }
}

TEST_CASE("value_set is invariant under re-mixing the spanning list") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> span;
    for (int i = 0; i < 4; ++i) span.push_back(random_poly(rng, 3, 4));
    VarOrder ord = VarOrder::from_one_based({3, 1, 2});
    auto base = value_set(span, ord, ValMode::Low);
    // permute
    std::vector<Poly> perm{span[2], span[0], span[3], span[1]};
    CHECK(value_set(perm, ord, ValMode::Low) == base);
    // invertible integer re-mix (unit upper triangular)
    std::vector<Poly> mixed = span;
    for (int i = 0; i < 3; ++i) mixed[i] = mixed[i] + mixed[i + 1].scaled(2);
    CHECK(value_set(mixed, ord, ValMode::Low) == base);
  }
}

TEST_CASE("value_set cardinality equals the rank of the coefficient matrix") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> span;
    for (int i = 0; i < 5; ++i) span.push_back(random_poly(rng, 2, 3));
    span.push_back(span[0] + span[1]);  // force a dependency
    auto vs = value_set(span, VarOrder::identity(2), ValMode::Low);
    // independent exact rank over the monomial basis
    std::map<Monomial, std::size_t> cols;
    for (const Poly& p : span)
      for (const auto& [m, c] : p.terms()) cols.emplace(m, cols.size());
    RatMatrix rows;
    for (const Poly& p : span) {
      std::vector<Rat> row(cols.size(), 0);
      for (const auto& [m, c] : p.terms()) row[cols[m]] = Rat(c);
      rows.push_back(std::move(row));
    }
    CHECK(vs.size() == rank(rows));
  }
}

TEST_CASE("polynomial matrix determinant and minors") {
  PolyMatrix m = PolyMatrix::identity(3, 2);
  m.entries[0][1] = tvar(2, 0);
  m.entries[1][2] = tvar(2, 1);
  CHECK(m.det() == Poly::constant(2, 1));
  CHECK(m.minor_det({0, 1}, {0, 1}) == Poly::constant(2, 1));
  CHECK(m.minor_det({0}, {1}) == tvar(2, 0));
}

TEST_CASE("poly text form") {
  Poly f = tvar(2, 0).scaled(3) - tvar(2, 1) * tvar(2, 1);
  CHECK(f.to_string() == "-t2^2 + 3*t1");
  CHECK(Poly(2).to_string() == "0");
}
