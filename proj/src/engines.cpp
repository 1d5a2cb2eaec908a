#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "aztec/cli.hpp"
#include "aztec/counting.hpp"
#include "aztec/formulas.hpp"

namespace aztec {

CountEngine parse_engine(std::string_view name) {
  if (name == "dp") return CountEngine::kDp;
  if (name == "brute") return CountEngine::kBrute;
  if (name == "formula") return CountEngine::kFormula;
  if (name == "pfaffian") return CountEngine::kPfaffian;
  throw Error(ErrorCode::kInvalidParameter, "unknown engine '" + std::string(name) + "'");
}

std::string_view engine_name(CountEngine engine) {
  switch (engine) {
    case CountEngine::kDp: return "dp";
    case CountEngine::kBrute: return "brute";
    case CountEngine::kFormula: return "formula";
    case CountEngine::kPfaffian: return "pfaffian";
  }
  return "?";
}

std::size_t oracle_cell_limit() {
  if (const char* env = std::getenv("AZTEC_ORACLE_CELL_LIMIT")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return value;
  }
  return 36;
}

bool is_inapplicable(ErrorCode code) {
  return code == ErrorCode::kUnsupportedRegion || code == ErrorCode::kCondensationInapplicable ||
         code == ErrorCode::kOutOfScopeConfiguration || code == ErrorCode::kInvalidOrder;
}

namespace {

[[noreturn]] void no_formula() {
  throw Error(ErrorCode::kUnsupportedRegion, "no closed form covers this configuration");
}

std::vector<int> positions_on(const std::vector<DefectSpec>& ds, Side side) {
  std::vector<int> out;
  for (const DefectSpec& d : ds) {
    if (d.side == side) out.push_back(d.position);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int p = lo; p <= hi; ++p) out.push_back(p);
  return out;
}

Integer formula_count(const DefectConfiguration& config) {
  const RegionMeta& meta = config.region.meta();
  const int a = meta.a;
  const int b = meta.b;
  const int k = b - a;
  const std::vector<int>& gammas = meta.gamma_positions;
  const auto& betas = config.betas;
  const auto& alphas = config.alphas;
  const std::vector<int> se = positions_on(betas, Side::kSE);
  const std::vector<int> nw = positions_on(betas, Side::kNW);

  if (!gammas.empty()) {
    if (!alphas.empty()) no_formula();
    if (gammas == range(1, k) && betas.empty()) return count_ad(a);
    if (k >= 2 && gammas == range(2, k) && nw.empty() && se.size() == 1) {
      return count_prop_ar_k_j(a, k, se[0]);
    }
    no_formula();
  }
  if (alphas.empty() && nw.empty() && static_cast<int>(se.size()) == k) {
    std::vector<int> kept;
    for (int p = 1; p <= b; ++p) {
      if (!std::binary_search(se.begin(), se.end(), p)) kept.push_back(p);
    }
    return count_ar_se(a, b, kept);
  }
  if (k == 0 && betas.size() == 1 && alphas.size() == 1) {
    const int p = betas[0].position;
    const int q = alphas[0].position;
    const bool ne = alphas[0].side == Side::kNE;
    if (betas[0].side == Side::kSE) {
      return ne ? count_prop_ad_adjacent(a, p, q) : count_prop_ad_adjacent(a, a - p + 1, a - q + 1);
    }
    return ne ? count_prop_ad_adjacent(a, p, a - q + 1) : count_prop_ad_adjacent(a, a - p + 1, q);
  }
  if (alphas.empty() && nw.size() == 1) {
    if (k == 2 && se.size() == 1) return count_prop_ar_i_j(a, se[0], nw[0]);
    if (k >= 1 && se == range(2, k)) return count_prop_ar_k1_i(a, k, nw[0]);
  }
  no_formula();
}

Integer pfaffian_count(const DefectConfiguration& config) {
  const RegionMeta& meta = config.region.meta();
  if (meta.gamma_positions.empty()) {
    if (meta.a == meta.b) return count_mt3(config);
    const bool all_ne = std::all_of(config.alphas.begin(), config.alphas.end(),
                                    [](const DefectSpec& d) { return d.side == Side::kNE; });
    return all_ne ? count_mt1(config) : count_mt2(config);
  }
  // Gamma-augmented: plain condensation on the augmented region with the
  // removed cells taken in boundary order.
  const DualGraph graph = build_dual(config.region);
  const std::vector<Cell> cycle = outer_face_walk(graph);
  std::vector<std::pair<std::size_t, Cell>> placed;
  for (const auto* group : {&config.betas, &config.alphas}) {
    for (const DefectSpec& d : *group) {
      const Cell cell = boundary_cell(config.region, d);
      const auto it = std::find(cycle.begin(), cycle.end(), cell);
      if (it == cycle.end()) {
        throw Error(ErrorCode::kInvalidOrder, to_string(d) + " is not on the outer face");
      }
      placed.emplace_back(static_cast<std::size_t>(it - cycle.begin()), cell);
    }
  }
  if (placed.size() % 2 != 0) {
    throw Error(ErrorCode::kCondensationInapplicable, "odd number of removed cells");
  }
  std::sort(placed.begin(), placed.end());
  std::vector<Cell> face;
  for (const auto& [index, cell] : placed) face.push_back(cell);
  return ciucu_condensation_count(graph, face).get_num();
}

}  // namespace

Integer count_configuration(const DefectConfiguration& config, CountEngine engine) {
  const Region residual = residual_region(config);
  if (residual.white_count() != residual.black_count()) return 0;
  switch (engine) {
    case CountEngine::kDp:
      return count_tilings_dp(residual);
    case CountEngine::kBrute: {
      const std::size_t limit = oracle_cell_limit();
      if (residual.size() > limit) {
        throw Error(ErrorCode::kUnsupportedRegion,
                    std::to_string(residual.size()) + " cells exceed the oracle limit of " +
                        std::to_string(limit));
      }
      return count_matchings_brute(build_dual(residual)).get_num();
    }
    case CountEngine::kFormula:
      return formula_count(config);
    case CountEngine::kPfaffian:
      return pfaffian_count(config);
  }
  return 0;
}

}  // namespace aztec
