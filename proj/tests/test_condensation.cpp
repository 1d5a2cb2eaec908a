#include <algorithm>
#include <random>
#include <vector>

#include "aztec/condensation.hpp"
#include "aztec/counting.hpp"
#include "aztec/errors.hpp"
#include "aztec/families.hpp"
#include "aztec/formulas.hpp"
#include "doctest.h"

using namespace aztec;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an aztec::Error");
  return ErrorCode::kInternalInconsistency;
}

std::vector<Cell> pick(const std::vector<Cell>& cycle, std::initializer_list<std::size_t> idx) {
  std::vector<Cell> out;
  for (std::size_t i : idx) out.push_back(cycle[i]);
  return out;
}

Integer direct(const DefectConfiguration& c) { return count_tilings_dp(residual_region(c)); }

DefectSpec d(Side side, int p) { return boundary_defect(side, p); }

}  // namespace

TEST_CASE("pfaffian condensation on the diamond") {
  const Region ad2 = make_aztec_diamond(2);
  const DualGraph g = build_dual(ad2);
  const std::vector<Cell> cycle = boundary_cycle(ad2);

  const std::vector<Cell> two = pick(cycle, {0, 3});
  CHECK(ciucu_condensation_count(g, two) == count_matchings_brute(delete_vertices(g, two)));

  // Two whites and two blacks, interleaved along the boundary.
  std::vector<Cell> four;
  for (const Cell& c : cycle) {
    if (four.size() < 4 && c.white() == (four.size() % 2 == 0)) four.push_back(c);
  }
  REQUIRE(four.size() == 4);
  CHECK(ciucu_condensation_count(g, four) ==
        Rational(count_tilings_dp(delete_vertices(g, four).vertices())));

  std::mt19937 rng(3);
  const Region ad3 = make_aztec_diamond(3);
  const DualGraph g3 = build_dual(ad3);
  const std::vector<Cell> cycle3 = boundary_cycle(ad3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> idx(cycle3.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(4);
    std::sort(idx.begin(), idx.end());
    std::vector<Cell> face;
    for (std::size_t i : idx) face.push_back(cycle3[i]);
    CHECK(ciucu_condensation_count(g3, face) ==
          Rational(count_tilings_dp(delete_vertices(g3, face).vertices())));
    std::reverse(face.begin(), face.end());
    CHECK(ciucu_condensation_count(g3, face) ==
          Rational(count_tilings_dp(delete_vertices(g3, face).vertices())));
  }
}

TEST_CASE("pfaffian condensation errors") {
  const Region ad2 = make_aztec_diamond(2);
  const DualGraph g = build_dual(ad2);
  const std::vector<Cell> cycle = boundary_cycle(ad2);
  const std::vector<Cell> crossed = pick(cycle, {0, 2, 1, 3});
  CHECK(code_of([&] { ciucu_condensation_count(g, crossed); }) == ErrorCode::kInvalidOrder);
  const std::vector<Cell> odd = pick(cycle, {0, 1, 2});
  CHECK(code_of([&] { ciucu_condensation_count(g, odd); }) == ErrorCode::kInvalidParameter);

  const Region unbalanced = make_aztec_rectangle(1, 2);
  const DualGraph u = build_dual(unbalanced);
  const std::vector<Cell> ucycle = boundary_cycle(unbalanced);
  const std::vector<Cell> face = pick(ucycle, {0, 1});
  CHECK(code_of([&] { ciucu_condensation_count(u, face); }) ==
        ErrorCode::kCondensationInapplicable);
}

TEST_CASE("symmetric difference condensation") {
  const Region ad3 = make_aztec_diamond(3);
  const DualGraph g = build_dual(ad3);
  const std::vector<Cell> all(g.vertices().begin(), g.vertices().end());
  const std::vector<Cell> cycle = boundary_cycle(ad3);
  const std::vector<Cell> face = pick(cycle, {0, 3, 5, 10});
  CHECK(generalized_condensation_count(g, all, face) == ciucu_condensation_count(g, face));

  // Host with gamma squares; the base drops them and the face adds them back.
  for (int a = 1; a <= 3; ++a) {
    for (int k = 1; k <= 2; ++k) {
      const Region host_region = region_ar_k(a, k);
      const DualGraph host = build_dual(host_region);
      std::vector<Cell> gammas;
      for (int p = 1; p <= k; ++p) gammas.push_back(boundary_cell(host_region, gamma_defect(p)));
      std::vector<Cell> whites;
      for (int s = 1; s <= k; ++s) whites.push_back(boundary_cell(host_region, d(Side::kNW, s)));
      std::vector<Cell> base;
      for (const Cell& c : host.vertices()) {
        if (std::ranges::find(gammas, c) == gammas.end() &&
            std::ranges::find(whites, c) == whites.end()) {
          base.push_back(c);
        }
      }
      if (count_tilings_dp(base) == 0) continue;
      std::vector<Cell> chosen = gammas;
      chosen.insert(chosen.end(), whites.begin(), whites.end());
      const std::vector<Cell> walk = outer_face_walk(host);
      std::vector<Cell> ordered;
      for (const Cell& c : walk) {
        if (std::ranges::find(chosen, c) != chosen.end() &&
            std::ranges::find(ordered, c) == ordered.end()) {
          ordered.push_back(c);
        }
      }
      const DualGraph target = symmetric_difference(host, base, ordered);
      CHECK(generalized_condensation_count(host, base, ordered) ==
            Rational(count_tilings_dp(target.vertices())));
      CHECK(check_prop_ck3(host, base, ordered));
    }
  }
}

TEST_CASE("ck3 identity") {
  const Region ad2 = make_aztec_diamond(2);
  const DualGraph g = build_dual(ad2);
  const std::vector<Cell> all(g.vertices().begin(), g.vertices().end());
  const std::vector<Cell> cycle = boundary_cycle(ad2);
  CHECK(check_prop_ck3(g, all, pick(cycle, {1, 4})));
  CHECK(check_prop_ck3(g, all, pick(cycle, {0, 1, 2, 3})));
  CHECK(check_prop_ck3(g, all, pick(cycle, {0, 2, 5, 7})));

  const Region ad3 = make_aztec_diamond(3);
  const DualGraph g3 = build_dual(ad3);
  const std::vector<Cell> all3(g3.vertices().begin(), g3.vertices().end());
  const std::vector<Cell> cycle3 = boundary_cycle(ad3);
  CHECK(check_prop_ck3(g3, all3, pick(cycle3, {0, 2, 3, 6, 8, 11})));
  CHECK(check_prop_ck3(g3, all3, pick(cycle3, {1, 4, 5, 7, 9, 10})));

  // A host with cut vertices on its outer face.
  const DualGraph host = build_dual(region_ar_k(1, 1));
  const std::vector<Cell> hall(host.vertices().begin(), host.vertices().end());
  const std::vector<Cell> face{{0, 3}, {3, 2}, {2, 1}, {1, 2}};
  CHECK(check_prop_ck3(host, hall, face));
}

TEST_CASE("kuo identities hold on every admissible boundary quadruple") {
  struct Case {
    KuoVariant variant;
    std::vector<DefectSpec> removed;
  };
  const std::vector<Case> cases{
      {KuoVariant::kKk1, {}},
      {KuoVariant::kKj, {}},
      {KuoVariant::kKk, {d(Side::kNE, 1), d(Side::kSW, 1)}},
      {KuoVariant::kCondCor, {d(Side::kNE, 2)}},
  };
  for (const Case& c : cases) {
    for (int a = 2; a <= 3; ++a) {
      const Region r = remove_defects(make_aztec_diamond(a), c.removed);
      const DualGraph g = build_dual(r);
      const std::vector<Cell> cycle = boundary_cycle(r);
      const std::size_t n = cycle.size();
      int admissible = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          for (std::size_t k = j + 1; k < n; ++k) {
            for (std::size_t l = k + 1; l < n; ++l) {
              try {
                const bool ok =
                    check_kuo_identity(c.variant, g, cycle[i], cycle[j], cycle[k], cycle[l]);
                CHECK(ok);
                ++admissible;
              } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::kInvalidConfiguration);
              }
            }
          }
        }
      }
      CHECK(admissible > 0);
    }
  }
  const DualGraph g = build_dual(make_aztec_diamond(2));
  const std::vector<Cell> cycle = boundary_cycle(make_aztec_diamond(2));
  CHECK(code_of([&] {
          check_kuo_identity(KuoVariant::kKk1, g, cycle[0], cycle[0], cycle[1], cycle[2]);
        }) == ErrorCode::kInvalidConfiguration);
}

TEST_CASE("three-sided defects") {
  for (int a = 1; a <= 4; ++a) {
    DefectConfiguration plain;
    plain.region = make_aztec_diamond(a);
    CHECK(count_mt1(plain) == count_ad(a));
  }

  const std::vector<DefectSpec> defects{d(Side::kSE, 1), d(Side::kSE, 3), d(Side::kNE, 1)};
  const DefectConfiguration c = make_configuration(make_aztec_rectangle(2, 3), defects);
  CHECK(count_mt1(c) == direct(c));
  PfaffianOptions engine;
  engine.source = EntrySource::kEngine;
  CHECK(count_mt1(c, engine) == direct(c));

  const std::vector<DefectSpec> square{d(Side::kSE, 2), d(Side::kNW, 3), d(Side::kNE, 1),
                                       d(Side::kNE, 3)};
  const DefectConfiguration ad = make_configuration(make_aztec_diamond(3), square);
  CHECK(count_mt1(ad) == count_mt3(ad));
  CHECK(count_mt1(ad) == direct(ad));

  const std::vector<DefectSpec> sw{d(Side::kSE, 1), d(Side::kSE, 2), d(Side::kSW, 1)};
  const DefectConfiguration bad = make_configuration(make_aztec_rectangle(2, 3), sw);
  CHECK(code_of([&] { count_mt1(bad); }) == ErrorCode::kOutOfScopeConfiguration);

  const std::vector<DefectSpec> uneven{d(Side::kSE, 1), d(Side::kNE, 1)};
  const DefectConfiguration skew = make_configuration(make_aztec_rectangle(2, 3), uneven);
  CHECK(code_of([&] { count_mt1(skew); }) == ErrorCode::kInvalidConfiguration);
}

TEST_CASE("printed normalisation exponent disagrees once k > 0") {
  const std::vector<DefectSpec> defects{d(Side::kSE, 1), d(Side::kSE, 2), d(Side::kSE, 4),
                                        d(Side::kNE, 2)};
  const DefectConfiguration c = make_configuration(make_aztec_rectangle(2, 4), defects);
  PfaffianOptions printed;
  printed.printed_exponent = true;
  bool differs = false;
  try {
    differs = count_mt1(c, printed) != direct(c);
  } catch (const Error& e) {
    differs = e.code() == ErrorCode::kInternalInconsistency;
  }
  CHECK(count_mt1(c) == direct(c));
  CHECK(differs);
}

TEST_CASE("four-sided defects") {
  const std::vector<DefectSpec> three{d(Side::kSE, 1), d(Side::kNW, 2), d(Side::kNE, 1)};
  const DefectConfiguration c3 = make_configuration(make_aztec_rectangle(2, 3), three);
  CHECK(count_mt2(c3) == count_mt1(c3));

  const std::vector<DefectSpec> four{d(Side::kSE, 1), d(Side::kSE, 3), d(Side::kNW, 2),
                                     d(Side::kNE, 1), d(Side::kSW, 2)};
  const DefectConfiguration c4 = make_configuration(make_aztec_rectangle(2, 3), four);
  CHECK(count_mt2(c4) == direct(c4));

  const std::vector<DefectSpec> one{d(Side::kSE, 2), d(Side::kSE, 3), d(Side::kSW, 1)};
  const DefectConfiguration c1 = make_configuration(make_aztec_rectangle(2, 3), one);
  CHECK(count_mt2(c1) == direct(c1));
}

TEST_CASE("defects on the diamond") {
  for (int a = 1; a <= 4; ++a) {
    for (int i = 1; i <= a; ++i) {
      for (int j = 1; j <= a; ++j) {
        const std::vector<DefectSpec> betas{d(Side::kSE, i)};
        const std::vector<DefectSpec> alphas{d(Side::kNE, j)};
        CHECK(count_mt3(a, betas, alphas) == count_prop_ad_adjacent(a, i, j));
      }
    }
  }

  std::mt19937 rng(17);
  std::vector<DefectSpec> whites, blacks;
  for (int p = 1; p <= 3; ++p) {
    whites.push_back(d(Side::kSE, p));
    whites.push_back(d(Side::kNW, p));
    blacks.push_back(d(Side::kNE, p));
    blacks.push_back(d(Side::kSW, p));
  }
  for (int trial = 0; trial < 15; ++trial) {
    std::shuffle(whites.begin(), whites.end(), rng);
    std::shuffle(blacks.begin(), blacks.end(), rng);
    DefectConfiguration c;
    c.region = make_aztec_diamond(3);
    c.betas.assign(whites.begin(), whites.begin() + 2);
    c.alphas.assign(blacks.begin(), blacks.begin() + 2);
    CHECK(count_mt3(c) == direct(c));
  }

  // Same-type entries vanish.
  const std::vector<DefectSpec> betas{d(Side::kSE, 1), d(Side::kNW, 2)};
  const std::vector<DefectSpec> alphas{d(Side::kNE, 2), d(Side::kSW, 3)};
  DefectConfiguration c;
  c.region = make_aztec_diamond(3);
  c.betas = betas;
  c.alphas = alphas;
  PfaffianOptions spy;
  int zero_pairs = 0;
  spy.matrix_hook = [&](SkewMatrix& m) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t j = i + 1; j < m.dim(); ++j) zero_pairs += m(i, j) == 0 ? 1 : 0;
    }
  };
  CHECK(count_mt3(c, spy) == direct(c));
  CHECK(zero_pairs >= 2);

  const std::vector<DefectSpec> lonely{d(Side::kSE, 1)};
  CHECK(code_of([&] { count_mt3(3, lonely, {}); }) == ErrorCode::kInvalidConfiguration);
  CHECK(code_of([&] { count_mt3(3, lonely, lonely); }) == ErrorCode::kInvalidConfiguration);
}

TEST_CASE("a corrupted entry is detected") {
  const std::vector<DefectSpec> defects{d(Side::kSE, 1), d(Side::kNW, 2), d(Side::kNE, 2),
                                        d(Side::kSW, 3)};
  const DefectConfiguration c = make_configuration(make_aztec_diamond(3), defects);
  PfaffianOptions fault;
  fault.matrix_hook = [](SkewMatrix& m) { m.set(0, 1, m(0, 1) + 1); };
  bool detected = false;
  try {
    detected = count_mt3(c, fault) != direct(c);
  } catch (const Error& e) {
    detected = e.code() == ErrorCode::kInternalInconsistency;
  }
  CHECK(detected);
}
