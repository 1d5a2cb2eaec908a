#include <random>
#include <vector>

#include "aztec/counting.hpp"
#include "aztec/errors.hpp"
#include "doctest.h"

using namespace aztec;

TEST_CASE("brute force counts") {
  CHECK(count_matchings_brute(DualGraph{}) == 1);
  CHECK(count_matchings_brute(build_dual(make_aztec_diamond(2))) == 8);
  // 2x3 block of lattice squares: centres (x,y) in {0..2}x{0..1}, shifted to odd sums.
  std::vector<Cell> block;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 2; ++y) block.push_back(Cell{x + y + 1, x - y});
  }
  CHECK(count_matchings_brute(DualGraph(block)) == 3);
  const std::vector<Cell> odd{{1, 0}, {2, 1}, {3, 0}};
  CHECK(count_matchings_brute(DualGraph(odd)) == 0);
}

TEST_CASE("transfer matrix counts") {
  CHECK(count_tilings_dp(make_aztec_diamond(4)) == 1024);
  const std::vector<DefectSpec> se2{boundary_defect(Side::kSE, 2)};
  CHECK(count_tilings_dp(remove_defects(make_aztec_rectangle(2, 3), se2)) == 16);
  const std::vector<DefectSpec> se1{boundary_defect(Side::kSE, 1)};
  CHECK(count_tilings_dp(remove_defects(make_aztec_rectangle(1, 2), se1)) ==
        count_matchings_brute(build_dual(remove_defects(make_aztec_rectangle(1, 2), se1))));
  const std::vector<DefectSpec> only2{boundary_defect(Side::kSE, 2)};
  const Region r = remove_defects(make_aztec_rectangle(1, 2), only2);
  CHECK(count_tilings_dp(r) == 2);
  CHECK(count_matchings_brute(build_dual(r)) == 2);
  // Unbalanced: zero from both engines.
  const std::vector<DefectSpec> se13{boundary_defect(Side::kSE, 1), boundary_defect(Side::kSE, 3)};
  const Region unbalanced = remove_defects(make_aztec_rectangle(2, 3), se13);
  CHECK(count_tilings_dp(unbalanced) == 0);
  CHECK(count_matchings_brute(build_dual(unbalanced)) == 0);
}

TEST_CASE("engines agree on random defected regions") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int a = std::uniform_int_distribution<int>(1, 3)(rng);
    const int b = std::uniform_int_distribution<int>(a, a + 2)(rng);
    Region r = make_aztec_rectangle(a, b);
    if (b > a && std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
      r = add_gamma_squares(r, 1, std::uniform_int_distribution<int>(1, b - 1)(rng));
    }
    std::vector<Cell> cells(r.cells().begin(), r.cells().end());
    std::shuffle(cells.begin(), cells.end(), rng);
    cells.resize(cells.size() - std::uniform_int_distribution<std::size_t>(0, 4)(rng));
    if (cells.size() > 36) cells.resize(36);
    const Rational brute = count_matchings_brute(DualGraph(cells));
    CHECK(Rational(count_tilings_dp(cells)) == brute);
  }
}

TEST_CASE("weighted matchings") {
  const std::vector<Cell> pair{{1, 0}, {2, 1}};
  DualGraph edge(pair);
  edge.set_weight(pair[0], pair[1], fraction(3, 2));
  CHECK(count_matchings_weighted(edge) == fraction(3, 2));

  const DualGraph square = build_dual(make_aztec_diamond(1));
  CHECK(count_matchings_weighted(square) == 2);
  // Weights 1,2,3,4 around the 4-cycle (1,0)-(2,1)-(1,2)-(0,1).
  DualGraph weighted = square;
  weighted.set_weight({1, 0}, {2, 1}, 1);
  weighted.set_weight({2, 1}, {1, 2}, 2);
  weighted.set_weight({1, 2}, {0, 1}, 3);
  weighted.set_weight({0, 1}, {1, 0}, 4);
  CHECK(count_matchings_weighted(weighted) == 11);
  DualGraph broken = weighted;
  broken.set_weight({1, 0}, {2, 1}, 0);
  CHECK_THROWS_AS(count_matchings_weighted(broken), Error);
  broken.set_weight({1, 0}, {2, 1}, -1);
  CHECK_THROWS_AS(count_matchings_weighted(broken), Error);
}
