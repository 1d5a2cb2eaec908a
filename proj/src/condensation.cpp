#include "aztec/condensation.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "aztec/errors.hpp"
#include "aztec/families.hpp"
#include "aztec/formulas.hpp"

namespace aztec {

namespace {

Rational count_of(const DualGraph& graph, Engine engine) { return count_matchings(graph, engine); }

void check_face(const DualGraph& host, std::span<const Cell> face) {
  if (face.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidParameter, "need an even number of face vertices");
  }
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (!host.contains(face[i])) {
      throw Error(ErrorCode::kInvalidParameter, to_string(face[i]) + " is not a vertex");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (face[i] == face[j]) {
        throw Error(ErrorCode::kInvalidParameter, to_string(face[i]) + " listed twice");
      }
    }
  }
  const std::vector<Cell> cycle = outer_face_walk(host);
  if (!in_cyclic_order(cycle, face)) {
    throw Error(ErrorCode::kInvalidOrder, "vertices are not in cyclic order on the outer face");
  }
}

Rational finish(const Rational& pf, const Rational& base, long exponent, bool integral) {
  if (base == 0 && exponent != 0) {
    throw Error(ErrorCode::kCondensationInapplicable, "M(G) = 0");
  }
  const Rational value = pf / pow(base, exponent);
  if (value < 0 || (integral && !is_integral(value))) {
    throw Error(ErrorCode::kInternalInconsistency,
                "condensation produced " + to_string(value));
  }
  return value;
}

std::vector<Cell> pair_of(const Cell& p, const Cell& q) { return {p, q}; }

}  // namespace

Rational ciucu_condensation_count(const DualGraph& graph, std::span<const Cell> face_vertices,
                                  Engine engine) {
  check_face(graph, face_vertices);
  const Rational mg = count_of(graph, engine);
  if (mg == 0) throw Error(ErrorCode::kCondensationInapplicable, "M(G) = 0");
  const std::size_t m = face_vertices.size();
  SkewMatrix a(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::vector<Cell> doomed = pair_of(face_vertices[i], face_vertices[j]);
      a.set(i, j, count_of(delete_vertices(graph, doomed), engine));
    }
  }
  const long k = static_cast<long>(m / 2);
  return finish(pfaffian(a), mg, k - 1, !graph.weighted());
}

Rational generalized_condensation_count(const DualGraph& host, std::span<const Cell> base,
                                        std::span<const Cell> face_vertices, Engine engine) {
  check_face(host, face_vertices);
  const Rational mg = count_of(host.induced(base), engine);
  if (mg == 0) throw Error(ErrorCode::kCondensationInapplicable, "M(G) = 0");
  const std::size_t m = face_vertices.size();
  SkewMatrix a(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const std::vector<Cell> w = pair_of(face_vertices[i], face_vertices[j]);
      a.set(i, j, count_of(symmetric_difference(host, base, w), engine));
    }
  }
  const long k = static_cast<long>(m / 2);
  return finish(pfaffian(a), mg, k - 1, !host.weighted());
}

bool check_prop_ck3(const DualGraph& host, std::span<const Cell> base,
                    std::span<const Cell> vertices, Engine engine) {
  check_face(host, vertices);
  auto plus = [&](const std::vector<Cell>& w) -> Rational {
    return count_of(symmetric_difference(host, base, w), engine);
  };
  const std::size_t m = vertices.size();
  auto pair_and_rest = [&](std::size_t i) -> Rational {
    std::vector<Cell> rest;
    for (std::size_t t = 1; t < m; ++t) {
      if (t != i) rest.push_back(vertices[t]);
    }
    return plus(pair_of(vertices[0], vertices[i])) * plus(rest);
  };
  const std::vector<Cell> all(vertices.begin(), vertices.end());
  Rational lhs = plus({}) * plus(all);
  Rational rhs = 0;
  // 0-based: a_{2l-1} is index 2l-2, a_{2l} is index 2l-1.
  for (std::size_t i = 2; i < m; i += 2) lhs += pair_and_rest(i);
  for (std::size_t i = 1; i < m; i += 2) rhs += pair_and_rest(i);
  return lhs == rhs;
}

bool check_kuo_identity(KuoVariant variant, const DualGraph& graph, const Cell& w, const Cell& x,
                        const Cell& y, const Cell& z, Engine engine) {
  const std::vector<Cell> quad{w, x, y, z};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!graph.contains(quad[i])) {
      throw Error(ErrorCode::kInvalidConfiguration, to_string(quad[i]) + " is not a vertex");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (quad[i] == quad[j]) {
        throw Error(ErrorCode::kInvalidConfiguration, "vertices must be distinct");
      }
    }
  }
  if (!in_cyclic_order(outer_face_walk(graph), quad)) {
    throw Error(ErrorCode::kInvalidConfiguration,
                "vertices are not in cyclic order on the outer face");
  }
  long whites = 0;
  for (const Cell& c : graph.vertices()) whites += c.white() ? 1 : 0;
  const long blacks = static_cast<long>(graph.vertex_count()) - whites;
  // Surplus of w's colour class over the other one.
  const long surplus = w.white() ? whites - blacks : blacks - whites;
  auto same = [](const Cell& p, const Cell& q) { return p.white() == q.white(); };

  bool fits = false;
  switch (variant) {
    case KuoVariant::kKk1:
      fits = surplus == 0 && same(w, x) && same(y, z) && !same(w, y);
      break;
    case KuoVariant::kKk:
      fits = surplus == 2 && same(w, x) && same(w, y) && same(w, z);
      break;
    case KuoVariant::kKj:
      fits = surplus == 0 && same(w, y) && same(x, z) && !same(w, x);
      break;
    case KuoVariant::kCondCor:
      fits = surplus == 1 && same(w, x) && same(w, y) && !same(w, z);
      break;
  }
  if (!fits) {
    throw Error(ErrorCode::kInvalidConfiguration, "colour pattern does not fit the variant");
  }

  auto m = [&](std::initializer_list<Cell> cells) {
    const std::vector<Cell> doomed(cells);
    return count_of(delete_vertices(graph, doomed), engine);
  };
  switch (variant) {
    case KuoVariant::kKk1:
      return m({w, z}) * m({x, y}) == m({}) * m({w, x, y, z}) + m({w, y}) * m({x, z});
    case KuoVariant::kKk:
      return m({w, y}) * m({x, z}) == m({w, x}) * m({y, z}) + m({w, z}) * m({x, y});
    case KuoVariant::kKj:
      return m({}) * m({w, x, y, z}) == m({w, x}) * m({y, z}) + m({w, z}) * m({x, y});
    case KuoVariant::kCondCor:
      return m({w}) * m({x, y, z}) + m({y}) * m({w, x, z}) ==
             m({x}) * m({w, y, z}) + m({z}) * m({w, x, y});
  }
  return false;
}

// ---------------------------------------------------------------------------
// Boundary-defect configurations

DefectConfiguration make_configuration(Region region, std::span<const DefectSpec> defects) {
  DefectConfiguration config;
  config.region = std::move(region);
  std::vector<Cell> seen;
  for (const DefectSpec& spec : defects) {
    const Cell cell = boundary_cell(config.region, spec);
    if (std::find(seen.begin(), seen.end(), cell) != seen.end()) {
      throw Error(ErrorCode::kInvalidDefect, to_string(spec) + " listed twice");
    }
    seen.push_back(cell);
    if (spec.defect_class == DefectClass::kBeta) config.betas.push_back(spec);
    else if (spec.defect_class == DefectClass::kAlpha) config.alphas.push_back(spec);
    else throw Error(ErrorCode::kInvalidDefect, "gamma squares cannot be removed");
  }
  return config;
}

Region residual_region(const DefectConfiguration& config) {
  std::vector<DefectSpec> all = config.betas;
  all.insert(all.end(), config.alphas.begin(), config.alphas.end());
  return remove_defects(config.region, all);
}

namespace {

Integer ad_power(int a) { return pow2(static_cast<unsigned long>(a) * (a + 1) / 2); }

// Position along the boundary walk: SE upwards from the south corner with the
// gamma squares interleaved, then NE, NW and SW.
std::pair<int, int> cyclic_key(int a, int b, const DefectSpec& d) {
  if (d.defect_class == DefectClass::kGamma) return {0, 2 * d.position - 1};
  switch (d.side) {
    case Side::kSE: return {0, 2 * d.position};
    case Side::kNE: return {1, a - d.position};
    case Side::kNW: return {2, b - d.position};
    case Side::kSW: return {3, a - d.position};
  }
  return {4, 0};
}

void sort_cyclic(int a, int b, std::vector<DefectSpec>& ds) {
  std::sort(ds.begin(), ds.end(), [&](const DefectSpec& l, const DefectSpec& r) {
    return cyclic_key(a, b, l) < cyclic_key(a, b, r);
  });
}

bool is_white(const DefectSpec& d) {
  return d.defect_class == DefectClass::kBeta;
}

void validate_defects(const DefectConfiguration& config) {
  const RegionMeta& meta = config.region.meta();
  if (!meta.gamma_positions.empty()) {
    throw Error(ErrorCode::kOutOfScopeConfiguration,
                "defect theorems take the plain rectangle; gamma squares are implicit");
  }
  if (!meta.removed.empty()) {
    throw Error(ErrorCode::kInvalidConfiguration, "region already has defects removed");
  }
  std::vector<Cell> seen;
  auto visit = [&](const DefectSpec& d, DefectClass want) {
    if (d.defect_class != want || white_side(d.side) != (want == DefectClass::kBeta)) {
      throw Error(ErrorCode::kInvalidConfiguration, to_string(d) + " has the wrong colour");
    }
    const Cell cell = boundary_cell(meta.a, meta.b, d);
    if (std::find(seen.begin(), seen.end(), cell) != seen.end()) {
      throw Error(ErrorCode::kInvalidConfiguration, to_string(d) + " collides with another defect");
    }
    seen.push_back(cell);
  };
  for (const DefectSpec& d : config.betas) visit(d, DefectClass::kBeta);
  for (const DefectSpec& d : config.alphas) visit(d, DefectClass::kAlpha);
}

void require_balance(const DefectConfiguration& config) {
  const int k = config.region.meta().b - config.region.meta().a;
  if (config.betas.size() != config.alphas.size() + static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kInvalidConfiguration,
                "need n+k betas and n alphas with k = b-a (got " +
                    std::to_string(config.betas.size()) + " and " +
                    std::to_string(config.alphas.size()) + ")");
  }
}

Integer as_count(const Rational& value) {
  if (!is_integral(value) || value < 0) {
    throw Error(ErrorCode::kInternalInconsistency, "Pfaffian quotient " + to_string(value));
  }
  return value.get_num();
}

// M(AR^k \ {d1, d2}) from the closed forms, k = b - a.
Integer mt1_formula_entry(int a, int k, const DefectSpec& d1, const DefectSpec& d2) {
  if (is_white(d1) == is_white(d2)) return 0;
  const DefectSpec& w = is_white(d1) ? d1 : d2;
  const DefectSpec& o = is_white(d1) ? d2 : d1;
  if (o.defect_class == DefectClass::kAlpha) {
    const int j = o.position;
    if (w.side == Side::kSE) {
      return w.position <= k ? Integer(0) : count_prop_ad_adjacent(a, w.position - k, j);
    }
    return w.position <= k ? Integer(0) : count_prop_ad_adjacent(a, w.position - k, a - j + 1);
  }
  const int p = o.position;
  if (w.side == Side::kSE) {
    const int s = w.position;
    if (s < p) return 0;
    if (s == p) return ad_power(a);
    return count_prop_ar_k_j(a, k - p + 1, s - p + 1);
  }
  // NW: gamma_1..gamma_{p-1} are forced; what is left is a gamma string,
  // expanded along its first square.
  const int i = w.position - p + 1;
  if (i < 1) return 0;
  Integer total = 0;
  for (int l = 0; l <= k - p; ++l) {
    if (i - l >= 1) total += count_prop_ar_k1_i(a, k - p + 1 - l, i - l);
  }
  return total;
}

Rational pf_with_hook(SkewMatrix m, const PfaffianOptions& options) {
  if (options.matrix_hook) options.matrix_hook(m);
  return pfaffian(m);
}

}  // namespace

Integer count_mt1(const DefectConfiguration& config, const PfaffianOptions& options) {
  validate_defects(config);
  require_balance(config);
  const int a = config.region.meta().a;
  const int b = config.region.meta().b;
  const int k = b - a;
  const long n = static_cast<long>(config.alphas.size());
  for (const DefectSpec& d : config.alphas) {
    if (d.side == Side::kSW) {
      throw Error(ErrorCode::kOutOfScopeConfiguration, "alpha defects must sit on the NE side");
    }
  }
  std::vector<DefectSpec> deltas = config.betas;
  deltas.insert(deltas.end(), config.alphas.begin(), config.alphas.end());
  for (int p = 1; p <= k; ++p) deltas.push_back(gamma_defect(p));
  sort_cyclic(a, b, deltas);

  const bool formula = options.source == EntrySource::kFormula;
  const Region host = formula ? Region() : region_ar_k(a, k);
  const std::size_t m = deltas.size();
  SkewMatrix matrix(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (formula) {
        matrix.set(i, j, mt1_formula_entry(a, k, deltas[i], deltas[j]));
      } else {
        const std::vector<DefectSpec> pair{deltas[i], deltas[j]};
        matrix.set(i, j, count_tilings_dp(remove_defects(host, pair)));
      }
    }
  }
  const Integer base = formula ? ad_power(a) : count_tilings_dp(host);
  const long exponent = options.printed_exponent ? n - k + 1 : n + k - 1;
  return as_count(finish(pf_with_hook(std::move(matrix), options), base, exponent, false));
}

Integer count_mt2(const DefectConfiguration& config, const PfaffianOptions& options) {
  validate_defects(config);
  require_balance(config);
  const int a = config.region.meta().a;
  const int b = config.region.meta().b;
  const std::size_t k = static_cast<std::size_t>(b - a);
  const long n = static_cast<long>(config.alphas.size());
  const Region rectangle = make_aztec_rectangle(a, b);

  PfaffianOptions inner = options;
  inner.matrix_hook = nullptr;
  // M(AR(a,b) minus the given defects), through mt1 after turning any SW
  // alphas onto NE.
  auto three_sided = [&](std::vector<DefectSpec> bs, std::vector<DefectSpec> as) -> Integer {
    if (options.source == EntrySource::kEngine) {
      std::vector<DefectSpec> all = bs;
      all.insert(all.end(), as.begin(), as.end());
      return count_tilings_dp(remove_defects(rectangle, all));
    }
    const bool on_sw = std::any_of(as.begin(), as.end(),
                                   [](const DefectSpec& d) { return d.side == Side::kSW; });
    if (on_sw) {
      for (DefectSpec& d : bs) d = rotate_half_turn(a, b, d);
      for (DefectSpec& d : as) d = rotate_half_turn(a, b, d);
    }
    return count_mt1({rectangle, std::move(bs), std::move(as)}, inner);
  };

  std::vector<DefectSpec> betas = config.betas;
  sort_cyclic(a, b, betas);
  if (n == 0) return three_sided(betas, {});

  // Pick the first k betas (in lexicographic order of index sets) whose
  // removal leaves a tileable base.
  std::vector<std::size_t> pick(k);
  for (std::size_t t = 0; t < k; ++t) pick[t] = t;
  std::vector<DefectSpec> chosen;
  Integer base = 0;
  std::vector<DefectSpec> first_choice;
  while (true) {
    chosen.clear();
    for (std::size_t t : pick) chosen.push_back(betas[t]);
    if (first_choice.empty() && k > 0) first_choice = chosen;
    base = three_sided(chosen, {});
    if (base != 0) break;
    // Advance to the next k-subset.
    std::size_t t = k;
    while (t > 0 && pick[t - 1] == betas.size() - k + t - 1) --t;
    if (t == 0) break;
    ++pick[t - 1];
    for (std::size_t u = t; u < k; ++u) pick[u] = pick[u - 1] + 1;
  }
  if (base == 0) {
    if (n >= 2) {
      throw Error(ErrorCode::kCondensationInapplicable,
                  "no choice of k betas leaves a tileable base region");
    }
    chosen = first_choice;
  }

  std::vector<DefectSpec> outer;
  for (const DefectSpec& d : betas) {
    if (std::find(chosen.begin(), chosen.end(), d) == chosen.end()) outer.push_back(d);
  }
  outer.insert(outer.end(), config.alphas.begin(), config.alphas.end());
  sort_cyclic(a, b, outer);

  const std::size_t m = outer.size();
  SkewMatrix matrix(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (is_white(outer[i]) == is_white(outer[j])) continue;
      const DefectSpec& beta = is_white(outer[i]) ? outer[i] : outer[j];
      const DefectSpec& alpha = is_white(outer[i]) ? outer[j] : outer[i];
      std::vector<DefectSpec> bs = chosen;
      bs.push_back(beta);
      matrix.set(i, j, three_sided(std::move(bs), {alpha}));
    }
  }
  return as_count(finish(pf_with_hook(std::move(matrix), options), base, n - 1, false));
}

namespace {

// M(AD(a) \ {beta, alpha}) by moving the pair onto SE/NE.
Integer ad_pair(int a, const DefectSpec& beta, const DefectSpec& alpha) {
  const int p = beta.position;
  const int q = alpha.position;
  if (beta.side == Side::kSE) {
    return alpha.side == Side::kNE ? count_prop_ad_adjacent(a, p, q)
                                   : count_prop_ad_adjacent(a, a - p + 1, a - q + 1);
  }
  return alpha.side == Side::kNE ? count_prop_ad_adjacent(a, p, a - q + 1)
                                 : count_prop_ad_adjacent(a, a - p + 1, q);
}

}  // namespace

Integer count_mt3(const DefectConfiguration& config, const PfaffianOptions& options) {
  validate_defects(config);
  const int a = config.region.meta().a;
  if (config.region.meta().b != a) {
    throw Error(ErrorCode::kInvalidConfiguration, "needs an Aztec diamond");
  }
  if (config.betas.size() != config.alphas.size()) {
    throw Error(ErrorCode::kInvalidConfiguration, "needs as many betas as alphas");
  }
  const long n = static_cast<long>(config.alphas.size());
  std::vector<DefectSpec> deltas = config.betas;
  deltas.insert(deltas.end(), config.alphas.begin(), config.alphas.end());
  sort_cyclic(a, a, deltas);

  const bool formula = options.source == EntrySource::kFormula;
  const std::size_t m = deltas.size();
  SkewMatrix matrix(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (is_white(deltas[i]) == is_white(deltas[j])) continue;
      if (formula) {
        const DefectSpec& beta = is_white(deltas[i]) ? deltas[i] : deltas[j];
        const DefectSpec& alpha = is_white(deltas[i]) ? deltas[j] : deltas[i];
        matrix.set(i, j, ad_pair(a, beta, alpha));
      } else {
        const std::vector<DefectSpec> pair{deltas[i], deltas[j]};
        matrix.set(i, j, count_tilings_dp(remove_defects(config.region, pair)));
      }
    }
  }
  const Integer base = formula ? ad_power(a) : count_tilings_dp(config.region);
  return as_count(finish(pf_with_hook(std::move(matrix), options), base, n - 1, false));
}

Integer count_mt3(int a, std::span<const DefectSpec> betas, std::span<const DefectSpec> alphas,
                  const PfaffianOptions& options) {
  DefectConfiguration config;
  config.region = make_aztec_diamond(a);
  config.betas.assign(betas.begin(), betas.end());
  config.alphas.assign(alphas.begin(), alphas.end());
  return count_mt3(config, options);
}

}  // namespace aztec
