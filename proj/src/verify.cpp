#include "aztec/verify.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "aztec/families.hpp"
#include "aztec/formulas.hpp"

namespace aztec {

void VerifyReport::record(bool pass, const std::string& what) {
  if (pass) {
    ++passed;
    return;
  }
  ++failed;
  if (first_failure.empty()) first_failure = what;
  if (log.size() < 20) log.push_back(what);
}

namespace {

std::string show(const Integer& v) { return v.get_str(); }

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string out = "(";
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) out += ",";
    out += std::string(k) + "=" + std::to_string(v);
    first = false;
  }
  return out + ")";
}

void compare(VerifyReport& report, const std::string& label, const Integer& expected,
             const std::function<Integer()>& formula) {
  try {
    const Integer got = formula();
    report.record(got == expected, label + ": formula " + show(got) + ", engine " + show(expected));
  } catch (const Error& e) {
    report.record(false, label + ": " + e.what());
  }
}

void for_each_combination(int n, int r, const std::function<void(const std::vector<int>&)>& fn) {
  if (r < 0 || r > n) return;
  std::vector<int> pick(static_cast<std::size_t>(r));
  for (int t = 0; t < r; ++t) pick[static_cast<std::size_t>(t)] = t;
  while (true) {
    fn(pick);
    int t = r;
    while (t > 0 && pick[static_cast<std::size_t>(t - 1)] == n - r + t - 1) --t;
    if (t == 0) return;
    ++pick[static_cast<std::size_t>(t - 1)];
    for (int u = t; u < r; ++u) {
      pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
    }
  }
}

int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<DefectSpec> white_cells(int a, int b) {
  std::vector<DefectSpec> out;
  for (int p = 1; p <= b; ++p) out.push_back(boundary_defect(Side::kSE, p));
  for (int p = 1; p <= b; ++p) out.push_back(boundary_defect(Side::kNW, p));
  (void)a;
  return out;
}

std::vector<DefectSpec> black_cells(int a, bool with_sw) {
  std::vector<DefectSpec> out;
  for (int p = 1; p <= a; ++p) out.push_back(boundary_defect(Side::kNE, p));
  if (with_sw) {
    for (int p = 1; p <= a; ++p) out.push_back(boundary_defect(Side::kSW, p));
  }
  return out;
}

std::string describe(const DefectConfiguration& config) { return format_region_spec(config); }

void check_configuration(VerifyReport& report, const DefectConfiguration& config,
                         const char* theorem,
                         const std::function<Integer(const DefectConfiguration&)>& pfaffian) {
  const Integer expected = count_tilings_dp(residual_region(config));
  compare(report, std::string(theorem) + " " + describe(config), expected,
          [&] { return pfaffian(config); });
}

template <class T>
std::vector<T> sample(std::vector<T> pool, std::size_t count, std::mt19937& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  return pool;
}

// Orders distinct face cells by a randomly chosen visit along the walk.
std::vector<Cell> order_on_walk(const std::vector<Cell>& walk, std::vector<Cell> cells,
                                std::mt19937& rng) {
  std::vector<std::pair<std::size_t, Cell>> placed;
  for (const Cell& c : cells) {
    std::vector<std::size_t> visits;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (walk[i] == c) visits.push_back(i);
    }
    placed.emplace_back(sample(visits, 1, rng)[0], c);
  }
  std::sort(placed.begin(), placed.end());
  for (std::size_t i = 0; i < placed.size(); ++i) cells[i] = placed[i].second;
  return cells;
}

std::vector<Cell> distinct(const std::vector<Cell>& walk) {
  std::vector<Cell> out;
  for (const Cell& c : walk) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

}  // namespace

void verify_ar_se(VerifyReport& report, int max_b, std::size_t brute_limit) {
  for (int b = 2; b <= max_b; ++b) {
    for (int a = 1; a < b; ++a) {
      for_each_combination(b, a, [&](const std::vector<int>& pick) {
        std::vector<int> s;
        for (int t : pick) s.push_back(t + 1);
        const Region region = region_ar_se_kept(a, b, s);
        const Integer dp = count_tilings_dp(region);
        std::string label = "ar_se a=" + std::to_string(a) + " b=" + std::to_string(b) + " s=";
        for (int x : s) label += std::to_string(x) + ".";
        if (region.size() <= brute_limit) {
          const Rational brute = count_matchings_brute(build_dual(region));
          report.record(brute == Rational(dp), label + ": brute " + to_string(brute) + ", dp " + show(dp));
        }
        compare(report, label, dp, [&] { return count_ar_se(a, b, s); });
      });
    }
  }
}

void verify_corollaries(VerifyReport& report, int max_a, int max_b) {
  for (int a = 1; a <= max_a; ++a) {
    for (int i = 1; i <= a + 1; ++i) {
      compare(report, "cor1" + params({{"a", a}, {"i", i}}), count_tilings_dp(region_cor1(a, i)),
              [&] { return count_cor1(a, i); });
    }
    for (int b = a; b <= max_b; ++b) {
      compare(report, "cor2" + params({{"a", a}, {"b", b}}), count_tilings_dp(region_cor2(a, b)),
              [&] { return count_cor2(a, b); });
    }
  }
}

void verify_ad_adjacent(VerifyReport& report, int max_a) {
  for (int a = 1; a <= max_a; ++a) {
    for (int i = 1; i <= a; ++i) {
      for (int j = 1; j <= a; ++j) {
        compare(report, "ad_i_j" + params({{"a", a}, {"i", i}, {"j", j}}),
                count_tilings_dp(region_prop_ad_adjacent(a, i, j)),
                [&] { return count_prop_ad_adjacent(a, i, j); });
      }
    }
  }
}

void verify_ar_i_j(VerifyReport& report, int max_a) {
  for (int a = 1; a <= max_a; ++a) {
    for (int i = 1; i <= a + 2; ++i) {
      for (int j = 1; j <= a + 2; ++j) {
        compare(report, "ar_i_j" + params({{"a", a}, {"i", i}, {"j", j}}),
                count_tilings_dp(region_prop_ar_i_j(a, i, j)),
                [&] { return count_prop_ar_i_j(a, i, j); });
      }
    }
  }
}

void verify_ar_k_j(VerifyReport& report, int max_a, int max_k) {
  for (int a = 1; a <= max_a; ++a) {
    for (int k = 1; k <= max_k; ++k) {
      for (int j = 1; j <= a + k; ++j) {
        compare(report, "ar_k_j" + params({{"a", a}, {"k", k}, {"j", j}}),
                count_tilings_dp(region_prop_ar_k_j(a, k, j)),
                [&] { return count_prop_ar_k_j(a, k, j); });
      }
    }
  }
}

void verify_ar_k1_i(VerifyReport& report, int max_a, int max_k, bool printed) {
  for (int a = 1; a <= max_a; ++a) {
    for (int k = 1; k <= max_k; ++k) {
      for (int i = 1; i <= a + k; ++i) {
        compare(report, std::string(printed ? "ar_k1_i[printed]" : "ar_k1_i") +
                            params({{"a", a}, {"k", k}, {"i", i}}),
                count_tilings_dp(region_prop_ar_k1_i(a, k, i)), [&]() -> Integer {
                  if (!printed) return count_prop_ar_k1_i(a, k, i);
                  const Rational v = count_prop_ar_k1_i_printed(a, k, i);
                  if (!is_integral(v)) {
                    throw Error(ErrorCode::kInternalInconsistency,
                                "printed expression gives " + to_string(v));
                  }
                  return v.get_num();
                });
      }
    }
  }
}

void verify_recurrence_ll(VerifyReport& report, int max_a) {
  auto ad = [](int a, int i, int j) { return count_tilings_dp(region_prop_ad_adjacent(a, i, j)); };
  for (int a = 3; a <= max_a; ++a) {
    for (int i = 2; i < a; ++i) {
      for (int j = 2; j < a; ++j) {
        const Integer lhs = ad(a, i, j);
        const Integer rhs = pow2(static_cast<unsigned long>(a)) * ad(a - 1, i - 1, j - 1) +
                            pow2(static_cast<unsigned long>(a) * (a - 1) / 2) *
                                binomial_ext(a - 1, j - 1) * binomial_ext(a - 1, i - 1);
        report.record(lhs == rhs, "ll" + params({{"a", a}, {"i", i}, {"j", j}}) + ": " +
                                      show(lhs) + " vs " + show(rhs));
      }
    }
  }
}

void verify_recursion_ep31(VerifyReport& report, int max_a, int max_k) {
  for (int a = 1; a <= max_a; ++a) {
    for (int k = 2; k <= max_k; ++k) {
      const int b = a + k;
      for (int j = 1; j <= b; ++j) {
        const Integer lhs = count_tilings_dp(region_prop_ar_k_j(a, k, j));
        // The first added square pairs either with its upper or its left
        // neighbour.
        Integer rhs = j >= 2 ? count_tilings_dp(region_prop_ar_k_j(a, k - 1, j - 1)) : Integer(0);
        if (j == 1 || j > k) {
          std::vector<DefectSpec> doomed;
          for (int p = 2; p <= k; ++p) doomed.push_back(boundary_defect(Side::kSE, p));
          doomed.push_back(boundary_defect(Side::kSE, j));
          rhs += count_tilings_dp(remove_defects(make_aztec_rectangle(a, b), doomed));
        }
        report.record(lhs == rhs, "ep31" + params({{"a", a}, {"k", k}, {"j", j}}) + ": " +
                                      show(lhs) + " vs " + show(rhs));
      }
    }
  }
}

void verify_kuo(VerifyReport& report, KuoVariant variant, int max_a, int trials,
                std::mt19937& rng) {
  static const char* kNames[] = {"kk1", "kk", "kj", "cond-cor"};
  const char* name = kNames[static_cast<int>(variant)];
  int done = 0;
  for (int attempt = 0; done < trials && attempt < trials * 200; ++attempt) {
    const int a = uniform(rng, 2, std::max(2, max_a));
    const Region diamond = make_aztec_diamond(a);
    const bool major_white = uniform(rng, 0, 1) == 1;
    // Remove boundary cells so the major colour has the required surplus.
    int surplus = 0;
    if (variant == KuoVariant::kKk) surplus = 2;
    if (variant == KuoVariant::kCondCor) surplus = 1;
    std::vector<DefectSpec> doomed;
    std::vector<DefectSpec> minor = major_white ? black_cells(a, true) : white_cells(a, a);
    std::vector<DefectSpec> major = major_white ? white_cells(a, a) : black_cells(a, true);
    doomed = sample(minor, static_cast<std::size_t>(surplus), rng);
    if (surplus == 0 && uniform(rng, 0, 1) == 1) {
      doomed.push_back(sample(minor, 1, rng)[0]);
      doomed.push_back(sample(major, 1, rng)[0]);
    }
    const Region region = remove_defects(diamond, doomed);
    const DualGraph graph = build_dual(region);
    std::vector<Cell> walk;
    try {
      walk = outer_face_walk(graph);
    } catch (const Error&) {
      continue;
    }
    std::vector<Cell> major_cells, minor_cells;
    for (const Cell& c : distinct(walk)) {
      (c.white() == major_white ? major_cells : minor_cells).push_back(c);
    }
    const int want_major = variant == KuoVariant::kKk ? 4 : variant == KuoVariant::kCondCor ? 3 : 2;
    if (static_cast<int>(major_cells.size()) < want_major ||
        static_cast<int>(minor_cells.size()) < 4 - want_major) {
      continue;
    }
    std::vector<Cell> chosen = sample(major_cells, static_cast<std::size_t>(want_major), rng);
    for (const Cell& c : sample(minor_cells, static_cast<std::size_t>(4 - want_major), rng)) {
      chosen.push_back(c);
    }
    std::vector<Cell> quad = order_on_walk(walk, chosen, rng);
    // Rotate until the colour pattern fits.
    auto is_major = [&](const Cell& c) { return c.white() == major_white; };
    bool found = false;
    for (int r = 0; r < 4 && !found; ++r) {
      std::rotate(quad.begin(), quad.begin() + 1, quad.end());
      switch (variant) {
        case KuoVariant::kKk1:
          found = is_major(quad[0]) && is_major(quad[1]) && !is_major(quad[2]) && !is_major(quad[3]);
          break;
        case KuoVariant::kKj:
          found = is_major(quad[0]) && !is_major(quad[1]) && is_major(quad[2]) && !is_major(quad[3]);
          break;
        case KuoVariant::kKk:
          found = true;
          break;
        case KuoVariant::kCondCor:
          found = !is_major(quad[3]);
          break;
      }
    }
    if (!found) continue;
    const std::string label = std::string(name) + " AD(" + std::to_string(a) + ") at " +
                              to_string(quad[0]) + to_string(quad[1]) + to_string(quad[2]) +
                              to_string(quad[3]);
    try {
      report.record(check_kuo_identity(variant, graph, quad[0], quad[1], quad[2], quad[3]), label);
    } catch (const Error& e) {
      report.record(false, label + ": " + e.what());
    }
    ++done;
  }
  if (done < trials) report.record(false, std::string(name) + ": could not generate enough quadruples");
}

void verify_ciucu(VerifyReport& report, int max_a, int max_k, int trials, std::mt19937& rng) {
  for (int t = 0; t < trials; ++t) {
    const int a = uniform(rng, 1, max_a);
    const DualGraph graph = build_dual(make_aztec_diamond(a));
    const std::vector<Cell> walk = outer_face_walk(graph);
    const std::vector<Cell> cells = distinct(walk);
    const int k = uniform(rng, 1, std::min<int>(max_k, static_cast<int>(cells.size()) / 2));
    std::vector<Cell> face = order_on_walk(walk, sample(cells, static_cast<std::size_t>(2 * k), rng), rng);
    // Start anywhere and walk either way.
    std::rotate(face.begin(), face.begin() + uniform(rng, 0, 2 * k - 1), face.end());
    if (uniform(rng, 0, 1) == 1) std::reverse(face.begin(), face.end());
    const Integer direct = count_tilings_dp(delete_vertices(graph, face).vertices());
    std::string label = "ciucu AD(" + std::to_string(a) + ")";
    for (const Cell& c : face) label += to_string(c);
    try {
      const Rational got = ciucu_condensation_count(graph, face);
      report.record(got == Rational(direct), label + ": " + to_string(got) + " vs " + show(direct));
    } catch (const Error& e) {
      report.record(false, label + ": " + e.what());
    }
  }
}

void verify_generalized(VerifyReport& report, int max_a, int max_k, int trials,
                        std::mt19937& rng) {
  int cond_done = 0;
  int ck3_done = 0;
  for (int attempt = 0; (cond_done < trials || ck3_done < trials) && attempt < trials * 100;
       ++attempt) {
    const int a = uniform(rng, 1, max_a);
    const int k = uniform(rng, 1, max_k);
    const Region host_region = region_ar_k(a, k);
    const DualGraph host = build_dual(host_region);
    const std::vector<Cell> walk = outer_face_walk(host);
    const std::vector<Cell> cells = distinct(walk);
    // Drop some gamma squares and as many white boundary cells.
    std::vector<Cell> dropped;
    for (int p = 1; p <= k; ++p) {
      if (uniform(rng, 0, 1) == 1) dropped.push_back(boundary_cell(a, a + k, gamma_defect(p)));
    }
    for (const DefectSpec& d :
         sample(white_cells(a, a + k), dropped.size(), rng)) {
      dropped.push_back(boundary_cell(a, a + k, d));
    }
    std::vector<Cell> base;
    for (const Cell& c : host.vertices()) {
      if (std::find(dropped.begin(), dropped.end(), c) == dropped.end()) base.push_back(c);
    }
    const int m = uniform(rng, 1, std::min<int>(3, static_cast<int>(cells.size()) / 2));
    const std::vector<Cell> face =
        order_on_walk(walk, sample(cells, static_cast<std::size_t>(2 * m), rng), rng);

    std::string label = "AR^" + std::to_string(k) + "(" + std::to_string(a) + ") drop";
    for (const Cell& c : dropped) label += to_string(c);
    label += " face";
    for (const Cell& c : face) label += to_string(c);

    if (ck3_done < trials) {
      try {
        report.record(check_prop_ck3(host, base, face), "ck3 " + label);
      } catch (const Error& e) {
        report.record(false, "ck3 " + label + ": " + e.what());
      }
      ++ck3_done;
    }
    if (cond_done < trials) {
      if (count_tilings_dp(base) == 0) continue;
      const DualGraph target = symmetric_difference(host, base, face);
      const Integer direct = count_tilings_dp(target.vertices());
      try {
        const Rational got = generalized_condensation_count(host, base, face);
        report.record(got == Rational(direct),
                      "cond2 " + label + ": " + to_string(got) + " vs " + show(direct));
      } catch (const Error& e) {
        report.record(false, "cond2 " + label + ": " + e.what());
      }
      ++cond_done;
    }
  }
  if (cond_done < trials || ck3_done < trials) {
    report.record(false, "generalized: could not generate enough triples");
  }
}

void verify_mt3(VerifyReport& report, int max_a, int max_n, int trials, std::mt19937& rng,
                const PfaffianOptions& options) {
  for (int t = 0; t < trials; ++t) {
    const int a = uniform(rng, 1, max_a);
    const int n = uniform(rng, 1, std::min(max_n, 2 * a));
    DefectConfiguration config;
    config.region = make_aztec_diamond(a);
    config.betas = sample(white_cells(a, a), static_cast<std::size_t>(n), rng);
    config.alphas = sample(black_cells(a, true), static_cast<std::size_t>(n), rng);
    check_configuration(report, config, "mt3",
                        [&](const DefectConfiguration& c) { return count_mt3(c, options); });
  }
}

void verify_mt1(VerifyReport& report, int max_a, int max_k, int max_n,
                const PfaffianOptions& options) {
  for (int a = 1; a <= max_a; ++a) {
    for (int k = 0; k <= max_k; ++k) {
      const int b = a + k;
      const std::vector<DefectSpec> whites = white_cells(a, b);
      const std::vector<DefectSpec> blacks = black_cells(a, false);
      for (int n = 0; n <= std::min(max_n, a); ++n) {
        for_each_combination(static_cast<int>(whites.size()), n + k, [&](const std::vector<int>& wp) {
          for_each_combination(a, n, [&](const std::vector<int>& bp) {
            DefectConfiguration config;
            config.region = make_aztec_rectangle(a, b);
            for (int x : wp) config.betas.push_back(whites[static_cast<std::size_t>(x)]);
            for (int x : bp) config.alphas.push_back(blacks[static_cast<std::size_t>(x)]);
            check_configuration(report, config, "mt1",
                                [&](const DefectConfiguration& c) { return count_mt1(c, options); });
          });
        });
      }
    }
  }
}

void verify_mt2(VerifyReport& report, int max_a, int max_k, int max_n,
                const PfaffianOptions& options) {
  for (int a = 1; a <= max_a; ++a) {
    for (int k = 0; k <= max_k; ++k) {
      const int b = a + k;
      const std::vector<DefectSpec> whites = white_cells(a, b);
      const std::vector<DefectSpec> blacks = black_cells(a, true);
      for (int n = 0; n <= std::min(max_n, 2 * a); ++n) {
        for_each_combination(static_cast<int>(whites.size()), n + k, [&](const std::vector<int>& wp) {
          for_each_combination(2 * a, n, [&](const std::vector<int>& bp) {
            DefectConfiguration config;
            config.region = make_aztec_rectangle(a, b);
            for (int x : wp) config.betas.push_back(whites[static_cast<std::size_t>(x)]);
            for (int x : bp) config.alphas.push_back(blacks[static_cast<std::size_t>(x)]);
            check_configuration(report, config, "mt2",
                                [&](const DefectConfiguration& c) { return count_mt2(c, options); });
          });
        });
      }
    }
  }
}

void verify_pfaffian(VerifyReport& report, int max_dim, int trials, std::mt19937& rng) {
  for (int t = 0; t < trials; ++t) {
    const int dim = 2 * uniform(rng, 0, max_dim / 2);
    SkewMatrix m(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        // Sparse now and then, to exercise the pivot search.
        if (uniform(rng, 0, 4) == 0) continue;
        m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
              fraction(uniform(rng, -9, 9), uniform(rng, 1, 6)));
      }
    }
    const Rational pf = pfaffian(m);
    const Rational det = determinant(m);
    const std::string label = "pfaffian dim " + std::to_string(dim) + " trial " + std::to_string(t);
    report.record(pf * pf == det, label + ": pf^2 " + to_string(pf * pf) + ", det " + to_string(det));
    if (dim >= 2) {
      const Rational expanded = pfaffian_expand_first_row(m);
      report.record(expanded == pf, label + ": expansion " + to_string(expanded) + ", elimination " +
                                        to_string(pf));
    }
  }
}

VerifyReport run_verify(std::string_view suite, const VerifyOptions& o) {
  VerifyReport report;
  report.suite = std::string(suite);
  std::mt19937 rng(o.seed);
  const int max_k = std::max(1, o.max_b - o.max_a);
  if (suite == "formulas") {
    verify_ar_se(report, o.max_b, oracle_cell_limit());
    verify_corollaries(report, o.max_a, o.max_b);
    verify_ad_adjacent(report, o.max_a);
    verify_ar_i_j(report, o.max_a);
    verify_ar_k_j(report, o.max_a, max_k);
    verify_ar_k1_i(report, o.max_a, max_k, o.printed);
    verify_recurrence_ll(report, o.max_a + 1);
    verify_recursion_ep31(report, o.max_a, max_k + 1);
  } else if (suite == "kuo") {
    for (KuoVariant v : {KuoVariant::kKk1, KuoVariant::kKk, KuoVariant::kKj, KuoVariant::kCondCor}) {
      verify_kuo(report, v, o.max_a, o.trials, rng);
    }
  } else if (suite == "ciucu") {
    verify_ciucu(report, o.max_a, 3, o.trials, rng);
    verify_generalized(report, o.max_a, 2, o.trials, rng);
  } else if (suite == "mt") {
    PfaffianOptions options;
    options.printed_exponent = o.printed;
    if (o.inject_fault) {
      options.matrix_hook = [](SkewMatrix& m) {
        if (m.dim() >= 2) m.set(0, 1, m(0, 1) + 1);
      };
    }
    verify_mt3(report, o.max_a, 3, o.trials, rng, options);
    verify_mt1(report, o.max_a, std::min(2, max_k), 2, options);
    verify_mt2(report, std::min(o.max_a, 3), std::min(2, max_k), 2, options);
  } else {
    throw Error(ErrorCode::kInvalidParameter, "unknown suite '" + std::string(suite) + "'");
  }
  return report;
}

}  // namespace aztec
