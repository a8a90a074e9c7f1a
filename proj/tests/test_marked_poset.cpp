#include <doctest.h>

#include "chainorder/marked_poset.hpp"

using namespace chainorder;

namespace {

DominantWeight wA(int n, std::vector<int64_t> c) { return DominantWeight(TypeTag::A, n, std::move(c)); }
DominantWeight wC(int n, std::vector<int64_t> c) { return DominantWeight(TypeTag::C, n, std::move(c)); }

bool has_row(const HPolytope& h, std::vector<Rat> coeffs, Rat rhs) {
  for (const auto& [a, b] : h.rows)
    if (a == coeffs && b == rhs) return true;
  return false;
}

}  // namespace

TEST_CASE("gt_poset shapes and arrangements") {
  MarkedPoset pa = gt_poset(TypeTag::A, 2, wA(2, {1, 1}));
  REQUIRE(pa.num_unmarked() == 3);
  CHECK(pa.names[pa.coordinate_order[0]] == "q_1^(1)");
  CHECK(pa.names[pa.coordinate_order[1]] == "q_1^(2)");
  CHECK(pa.names[pa.coordinate_order[2]] == "q_2^(1)");
  // markings lambda_{>=1} = 2, lambda_{>=2} = 1
  std::multiset<int64_t> marks;
  for (const auto& [e, v] : pa.marking) marks.insert(v);
  CHECK(marks == std::multiset<int64_t>{0, 1, 2});

  CHECK(gt_poset(TypeTag::A, 3, wA(3, {1, 0, 2})).num_unmarked() == 6);

  MarkedPoset pc = gt_poset(TypeTag::C, 2, wC(2, {1, 1}));
  REQUIRE(pc.num_unmarked() == 4);
  CHECK(pc.names[pc.coordinate_order[0]] == "q_1^(1)");
  CHECK(pc.names[pc.coordinate_order[1]] == "q_2^(2)");
  CHECK(pc.names[pc.coordinate_order[2]] == "q_1^(2)");
  CHECK(pc.names[pc.coordinate_order[3]] == "q_3^(2)");
}

TEST_CASE("gt_poset rejects bad input") {
  CHECK_THROWS(gt_poset(TypeTag::A, 2, wA(3, {1, 1, 1})));
  CHECK_THROWS(wA(2, {1, -1}));
  CHECK_THROWS(gt_poset(TypeTag::C, 2, wA(2, {1, 1})));
}

TEST_CASE("mco_hrep reproduces the rank-2 systems") {
  MarkedPoset p = gt_poset(TypeTag::A, 2, wA(2, {1, 1}));
  // C = {q_1^(2)}: 0 <= a11 <= 1, 1 <= a21 <= 2, 0 <= a12 <= a21 - a11
  HPolytope mid = mco_hrep(p, Partition::from_bitmask("010"));
  CHECK(has_row(mid, {-1, 0, 0}, 0));
  CHECK(has_row(mid, {1, 0, 0}, 1));
  CHECK(has_row(mid, {0, 0, -1}, -1));
  CHECK(has_row(mid, {0, 0, 1}, 2));
  CHECK(has_row(mid, {0, -1, 0}, 0));
  CHECK(has_row(mid, {1, 1, -1}, 0));
  CHECK(mid.rows.size() == 6);

  // marked order polytope: the GT inequalities
  HPolytope gt = mco_hrep(p, Partition::all_order(3));
  CHECK(has_row(gt, {1, -1, 0}, 0));
  CHECK(has_row(gt, {0, 1, -1}, 0));
  CHECK(has_row(gt, {-1, 0, 0}, 0));
  CHECK(has_row(gt, {0, 0, 1}, 2));
  CHECK(has_row(gt, {1, 0, 0}, 1));
  CHECK(has_row(gt, {0, 0, -1}, -1));

  // marked chain polytope: the FFLV inequalities
  HPolytope ch = mco_hrep(p, Partition::all_chain(3));
  CHECK(has_row(ch, {1, 0, 0}, 1));
  CHECK(has_row(ch, {0, 0, 1}, 1));
  CHECK(has_row(ch, {1, 1, 1}, 2));
}

TEST_CASE("type C chain-order system matches the Sp4 study") {
  MarkedPoset p = gt_poset(TypeTag::C, 2, wC(2, {1, 1}));
  HPolytope h = mco_hrep(p, Partition::from_bitmask("0011"));
  // a_1 <= 1, a_4 <= 1, a_1 <= a_2 <= 2 - a_4, a_3 <= a_2, a_3, a_4 >= 0
  CHECK(has_row(h, {1, 0, 0, 0}, 1));
  CHECK(has_row(h, {0, 0, 0, 1}, 1));
  CHECK(has_row(h, {1, -1, 0, 0}, 0));
  CHECK(has_row(h, {0, 1, 0, 1}, 2));
  CHECK(has_row(h, {0, -1, 1, 0}, 0));
  CHECK(has_row(h, {-1, 0, 0, 0}, 0));
  CHECK(has_row(h, {0, 0, -1, 0}, 0));
  CHECK(has_row(h, {0, 0, 0, -1}, 0));
  CHECK(h.rows.size() == 8);
}

TEST_CASE("transfer map") {
  MarkedPoset p = gt_poset(TypeTag::A, 2, wA(2, {1, 1}));
  Partition full = Partition::all_chain(3);
  CHECK(transfer(p, full, {1, 1, 2}) == std::vector<Rat>{1, 0, 1});
  // C = empty is the identity
  Partition none = Partition::all_order(3);
  std::vector<Rat> x{Rat(1, 2), Rat(3, 4), Rat(2)};
  CHECK(transfer(p, none, x) == x);
  CHECK_THROWS(transfer(p, none, {Rat(1), Rat(2)}));
}

TEST_CASE("lattice point counts and bijection") {
  MarkedPoset p = gt_poset(TypeTag::A, 2, wA(2, {1, 1}));
  auto base = mco_lattice_points(p, Partition::all_order(3));
  CHECK(base.points.size() == 8);
  // partition independence of the count
  for (int mask = 0; mask < 8; ++mask) {
    Partition part = Partition::from_bitmask(std::string{char('0' + (mask & 1)),
                                                         char('0' + ((mask >> 1) & 1)),
                                                         char('0' + ((mask >> 2) & 1))});
    auto pts = mco_lattice_points(p, part);
    CHECK(pts.points.size() == 8);
    // transfer images satisfy the H-system
    HPolytope h = mco_hrep(p, part);
    for (const ValVec& q : pts.points)
      for (const auto& [coeffs, rhs] : h.rows) {
        Rat s = 0;
        for (int i = 0; i < h.dim; ++i) s += coeffs[i] * q[i];
        CHECK(s <= rhs);
      }
    // and every integer solution of the H-system appears
    CHECK(lattice_points(h).points == pts.points);
  }
}

TEST_CASE("zero weight collapses to the origin") {
  MarkedPoset p = gt_poset(TypeTag::A, 2, wA(2, {0, 0}));
  auto pts = mco_lattice_points(p, Partition::from_bitmask("011"));
  CHECK(pts.points == std::set<ValVec>{{0, 0, 0}});
}

TEST_CASE("fundamental weight pi_1 order polytope points") {
  MarkedPoset p = gt_poset(TypeTag::A, 2, wA(2, {1, 0}));
  auto pts = mco_lattice_points(p, Partition::all_order(3));
  CHECK(pts.points == std::set<ValVec>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}});
}

TEST_CASE("type C lattice point counts match dimensions") {
  CHECK(mco_lattice_points(gt_poset(TypeTag::C, 2, wC(2, {1, 1})), Partition::all_order(4))
            .points.size() == 16);
  CHECK(mco_lattice_points(gt_poset(TypeTag::C, 2, wC(2, {1, 0})), Partition::all_chain(4))
            .points.size() == 5);
  CHECK(mco_lattice_points(gt_poset(TypeTag::C, 3, wC(3, {1, 1, 1})), Partition::all_order(9))
            .points.size() == 512);
}
