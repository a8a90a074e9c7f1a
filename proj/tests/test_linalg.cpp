#include <doctest.h>

#include "chainorder/linalg.hpp"

using namespace chainorder;

TEST_CASE("rank and det") {
  RatMatrix m{{1, 2}, {2, 4}};
  CHECK(rank(m) == 1);
  CHECK(det(m) == 0);
  RatMatrix id{{1, 0}, {0, 1}};
  CHECK(det(id) == 1);
  RatMatrix a{{2, 1}, {1, 1}};
  CHECK(det(a) == 1);
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(*inv, a) == id);
}

TEST_CASE("integer determinant is fraction free") {
  IntMatrix m{{3, 1, 4}, {1, 5, 9}, {2, 6, 5}};
  CHECK(int_det(m) == -90);
  CHECK(int_det(int_identity(5)) == 1);
}

TEST_CASE("integer kernel is a saturated basis") {
  // kernel of (1  2  3) in Z^3
  IntMatrix m{{1, 2, 3}};
  IntMatrix k = integer_kernel(m);
  REQUIRE(k.size() == 3);
  REQUIRE(k[0].size() == 2);
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(k[0][j] * 1 + k[1][j] * 2 + k[2][j] * 3 == 0);
  // the double kernel is the saturation of span{(1,2,3)}
  IntMatrix kt(2, std::vector<Int>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) kt[j][i] = k[i][j];
  IntMatrix back = integer_kernel(kt);
  REQUIRE(back[0].size() == 1);
  std::vector<Int> g{back[0][0], back[1][0], back[2][0]};
  std::vector<Int> pos{1, 2, 3}, neg{-1, -2, -3};
  CHECK((g == pos || g == neg));
}

TEST_CASE("unimodular extension of a saturated lattice") {
  // L = span{(1,2,3)} is saturated (gcd 1)
  IntMatrix basis{{1}, {2}, {3}};
  IntMatrix u = unimodular_extension(basis, 1);
  Int d = int_det(u);
  CHECK((d == 1 || d == -1));
  CHECK(u[0][0] == 1);
  CHECK(u[1][0] == 2);
  CHECK(u[2][0] == 3);
}

TEST_CASE("unimodular extension rejects non-saturated input") {
  IntMatrix basis{{2}, {4}, {6}};
  CHECK_THROWS(unimodular_extension(basis, 1));
}

TEST_CASE("rational serialization round trips") {
  for (const char* s : {"5/6", "-7/3", "0", "12", "-1"}) {
    Rat r = rat_from_string(s);
    CHECK(rat_to_string(r) == s);
  }
  CHECK(rat_from_string("4/6") == Rat(2, 3));
  CHECK(rat_to_string(rat_from_string("4/6")) == "2/3");
  CHECK_THROWS(rat_from_string("1/0"));
}
