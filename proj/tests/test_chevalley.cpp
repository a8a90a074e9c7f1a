#include <doctest.h>

#include <random>

#include "chainorder/chevalley.hpp"

using namespace chainorder;

namespace {

Poly tv(int n, int i, int c = 1) { return Poly::variable(n, i, c); }

}  // namespace

TEST_CASE("reduced words") {
  CHECK(reduced_word(TypeTag::A, 3) == std::vector<int>{1, 2, 1, 3, 2, 1});
  CHECK(reduced_word(TypeTag::C, 2) == std::vector<int>{1, 2, 1, 2});
  CHECK(reduced_word(TypeTag::C, 3) == std::vector<int>{1, 2, 1, 2, 3, 2, 1, 2, 3});
}

TEST_CASE("chevalley generators") {
  IntMatrix f1 = chevalley_f(TypeTag::A, 2, 1);
  CHECK(f1[1][0] == 1);
  Int total = 0;
  for (const auto& row : f1)
    for (const Int& x : row) total += boost::multiprecision::abs(x);
  CHECK(total == 1);

  IntMatrix fc2 = chevalley_f(TypeTag::C, 2, 2);  // E_{2,1} + E_{4,3}
  CHECK(fc2[1][0] == 1);
  CHECK(fc2[3][2] == 1);
  IntMatrix fc1 = chevalley_f(TypeTag::C, 2, 1);  // E_{3,2}
  CHECK(fc1[2][1] == 1);
  CHECK_THROWS(chevalley_f(TypeTag::A, 2, 3));
}

TEST_CASE("exp_f terminates with integer coefficients") {
  PolyMatrix e = exp_f(TypeTag::A, 2, 1, 0, 1);
  PolyMatrix expect = PolyMatrix::identity(3, 1);
  expect.entries[1][0] = tv(1, 0);
  CHECK(e == expect);

  PolyMatrix ec = exp_f(TypeTag::C, 2, 2, 0, 1);
  PolyMatrix expc = PolyMatrix::identity(4, 1);
  expc.entries[1][0] = tv(1, 0);
  expc.entries[3][2] = tv(1, 0);
  CHECK(ec == expc);
  CHECK(exp_f(TypeTag::C, 2, 1, 0, 1).entries[2][1] == tv(1, 0));
}

TEST_CASE("sbar matches the closed form in type A") {
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) CHECK(sbar(TypeTag::A, n, i) == sbar_closed_form_A(n, i));
  // s-bar_2 in SL_4: entry (3,2) = 1, (2,3) = -1, diagonal 1 at rows 1 and 4
  IntMatrix s = sbar(TypeTag::A, 3, 2);
  CHECK(s[2][1] == 1);
  CHECK(s[1][2] == -1);
  CHECK(s[0][0] == 1);
  CHECK(s[3][3] == 1);
}

TEST_CASE("sbar has order four") {
  for (int i = 1; i <= 3; ++i) {
    IntMatrix s = sbar(TypeTag::A, 3, i);
    IntMatrix p = int_mat_mul(int_mat_mul(s, s), int_mat_mul(s, s));
    CHECK(p == int_identity(4));
  }
}

TEST_CASE("omega reproduces the SL4 example matrix") {
  // (C, O) = ({q_5, q_6}, {q_1..q_4})
  Partition part = Partition::from_bitmask("000011");
  PolyMatrix om = omega_product(TypeTag::A, 3, part);
  CHECK(om.entries[0][0] == tv(6, 5, -1));
  CHECK(om.entries[0][1] == Poly::constant(6, -1));
  CHECK(om.entries[3][0] == tv(6, 3));
  // entry (2,1) = -t_5 - t_1 t_6 - t_3 t_6
  Poly e21 = tv(6, 4, -1) - tv(6, 0) * tv(6, 5) - tv(6, 2) * tv(6, 5);
  CHECK(om.entries[1][0] == e21);
  // entry (3,1) = 1 - t_2 t_5 - t_2 t_3 t_6
  Poly e31 = Poly::constant(6, 1) - tv(6, 1) * tv(6, 4) - tv(6, 1) * tv(6, 2) * tv(6, 5);
  CHECK(om.entries[2][0] == e31);
}

TEST_CASE("omega rejects a partition of the wrong length") {
  CHECK_THROWS(omega_product(TypeTag::A, 2, Partition::all_order(4)));
  CHECK_THROWS(omega_product(TypeTag::C, 2, Partition::all_chain(3)));
}

TEST_CASE("omega at the all-order partition evaluates to I at t = 0") {
  PolyMatrix om = omega_product(TypeTag::A, 3, Partition::all_order(6));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(om.entries[i][j].constant_term() == (i == j ? 1 : 0));
}

TEST_CASE("omega reproduces the Sp6 full-chain example entries") {
  PolyMatrix om = omega_product(TypeTag::C, 3, Partition::all_chain(9));
  CHECK(om.entries[4][0] == tv(9, 8, -1));
  CHECK(om.entries[3][1] == tv(9, 3));
  // entry (1,1) = -t_7 - t_6 t_8 + t_5 t_9
  Poly e11 = tv(9, 6, -1) - tv(9, 5) * tv(9, 7) + tv(9, 4) * tv(9, 8);
  CHECK(om.entries[0][0] == e11);
}

TEST_CASE("det(omega) = 1 for all partitions at small rank") {
  for (int n = 1; n <= 3; ++n) {
    int nn = n * (n + 1) / 2;
    for (int mask = 0; mask < (1 << nn); ++mask) {
      std::string bits;
      for (int i = 0; i < nn; ++i) bits.push_back((mask >> i) & 1 ? '1' : '0');
      PolyMatrix om = omega_product(TypeTag::A, n, Partition::from_bitmask(bits));
      CHECK(om.det() == Poly::constant(nn, 1));
    }
  }
  for (int mask = 0; mask < 16; ++mask) {
    std::string bits;
    for (int i = 0; i < 4; ++i) bits.push_back((mask >> i) & 1 ? '1' : '0');
    PolyMatrix om = omega_product(TypeTag::C, 2, Partition::from_bitmask(bits));
    CHECK(om.det() == Poly::constant(4, 1));
  }
  // sampled type C partitions at n = 3
  for (const char* bits : {"000000000", "111111111", "010110101"}) {
    PolyMatrix om = omega_product(TypeTag::C, 3, Partition::from_bitmask(bits));
    CHECK(om.det() == Poly::constant(9, 1));
  }
}

TEST_CASE("omega is symplectic in type C") {
  for (int mask = 0; mask < 16; ++mask) {
    std::string bits;
    for (int i = 0; i < 4; ++i) bits.push_back((mask >> i) & 1 ? '1' : '0');
    CHECK(check_symplectic(omega_product(TypeTag::C, 2, Partition::from_bitmask(bits)), 2));
  }
  PolyMatrix id = PolyMatrix::identity(4, 1);
  CHECK(check_symplectic(id, 2));
  PolyMatrix bad = PolyMatrix::identity(4, 1);
  bad.entries[0][0] = Poly::constant(1, 2);
  CHECK_FALSE(check_symplectic(bad, 2));
  CHECK_THROWS(check_symplectic(PolyMatrix::identity(3, 1), 2));
}

TEST_CASE("a_of_x reproduces the paper's n = 3 entries and is symplectic") {
  PolyMatrix a = a_of_x(3);
  // variable order: (x_{1,5}, x_{1,4}, x_{1,3}, x_{1,2}, x_{1,1}, x_{2,4}, x_{2,3}, x_{2,2}, x_{3,3})
  auto x = [&](int idx) { return tv(9, idx); };
  int x15 = 0, x14 = 1, x13 = 2, x12 = 3, x24 = 5, x23 = 6, x22 = 7, x33 = 8;
  CHECK(a.entries[4][0] == x(x15));                       // y_{5,1}
  CHECK(a.entries[3][1] == x(x24));                       // y_{4,2}
  CHECK(a.entries[3][0] == x(x14) - x(x15) * x(x24));     // y_{4,1}
  CHECK(a.entries[2][1] == x(x23) + x(x24) * x(x33));     // y_{3,2}
  CHECK(a.entries[1][0] ==
        x(x12) - x(x15) * x(x22) + x(x14) * x(x23) - x(x13) * x(x24));  // y_{2,1}
  CHECK(check_symplectic(a, 3));
  // all x = 0: the antidiagonal pattern (-1)^i
  PolyMatrix a2 = a_of_x(2);
  CHECK(check_symplectic(a2, 2));
  for (int i = 1; i <= 4; ++i) {
    CHECK(a2.entries[i - 1][4 - i].constant_term() == (i % 2 == 0 ? 1 : -1));
    for (int j = 4 - i + 1; j < 4; ++j) CHECK(a2.entries[i - 1][j].is_zero());
  }
}

TEST_CASE("t' arrangement and the coordinate transition") {
  CHECK(tprime_arrangement(2) == std::vector<int>{4, 2, 3, 1});
  CHECK(tprime_arrangement(3) == std::vector<int>{9, 8, 6, 5, 7, 4, 2, 3, 1});
  for (int n = 2; n <= 3; ++n) {
    PolyMatrix a = a_of_x(n);
    std::vector<Poly> images = x_images_in_t(n);
    PolyMatrix om = omega_product(TypeTag::C, n, Partition::all_chain(n * n));
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < 2 * n; ++j)
        CHECK(a.entries[i][j].substitute(images) == om.entries[i][j]);
  }
}

TEST_CASE("the transition preserves lowest-term valuations of monomial images") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 3; ++n) {
    int nn = n * n;
    std::vector<Poly> images = x_images_in_t(n);
    VarOrder tprime_ord = VarOrder::from_one_based(tprime_arrangement(n));
    std::uniform_int_distribution<int> e(0, 2);
    for (int trial = 0; trial < 25; ++trial) {
      ValVec a(nn);
      Poly img = Poly::constant(nn, 1);
      bool nonzero = false;
      for (int i = 0; i < nn; ++i) {
        a[i] = e(rng);
        nonzero |= a[i] > 0;
        for (int rep = 0; rep < a[i]; ++rep) img = img * images[i];
      }
      if (!nonzero) continue;
      CHECK(low_val(img, tprime_ord) == a);
    }
  }
}
