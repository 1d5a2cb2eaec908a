#include <random>
#include <vector>

#include "aztec/errors.hpp"
#include "aztec/exactalg.hpp"
#include "doctest.h"

using namespace aztec;

namespace {

SkewMatrix random_skew(std::size_t dim, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  SkewMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) m.set(i, j, fraction(num(rng), den(rng)));
  }
  return m;
}

}  // namespace

TEST_CASE("pfaffian small cases") {
  CHECK(pfaffian(SkewMatrix(0)) == 1);
  SkewMatrix two(2);
  two.set(0, 1, 5);
  CHECK(pfaffian(two) == 5);
  CHECK(pfaffian_expand_first_row(two) == 5);
  const SkewMatrix four({{0, 1, 2, 3}, {-1, 0, 4, 5}, {-2, -4, 0, 6}, {-3, -5, -6, 0}});
  CHECK(pfaffian(four) == 8);
  CHECK(pfaffian_expand_first_row(four) == 8);
  CHECK(determinant(four) == 64);
}

TEST_CASE("pfaffian needs pivoting") {
  // Zero (0,1) entry with a nonzero remainder.
  SkewMatrix m(4);
  m.set(0, 2, 1);
  m.set(1, 3, 1);
  CHECK(pfaffian(m) == -1);
  CHECK(pfaffian_expand_first_row(m) == -1);
  SkewMatrix empty_row(4);
  empty_row.set(1, 2, 3);
  empty_row.set(2, 3, 4);
  CHECK(pfaffian(empty_row) == 0);
}

TEST_CASE("pfaffian rejects bad input") {
  try {
    pfaffian(SkewMatrix(3));
    FAIL("odd dimension accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidMatrix);
  }
  try {
    SkewMatrix({{0, 1}, {1, 0}});
    FAIL("non-skew input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidMatrix);
  }
  SkewMatrix m(2);
  CHECK_THROWS_AS(m.set(1, 1, 2), Error);
}

TEST_CASE("elimination agrees with expansion and determinant") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 2 * std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const SkewMatrix m = random_skew(dim, rng);
    const Rational pf = pfaffian(m);
    CHECK(pf == pfaffian_expand_first_row(m));
    CHECK(pf * pf == determinant(m));
  }
}

TEST_CASE("swapping two indices negates the pfaffian") {
  std::mt19937 rng(9);
  const SkewMatrix m = random_skew(6, rng);
  SkewMatrix swapped(6);
  auto image = [](std::size_t i) -> std::size_t { return i == 1 ? 4 : i == 4 ? 1 : i; };
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      const std::size_t p = image(i);
      const std::size_t q = image(j);
      if (p < q) {
        swapped.set(p, q, m(i, j));
      } else {
        swapped.set(q, p, -m(i, j));
      }
    }
  }
  CHECK(pfaffian(swapped) == -pfaffian(m));
}
