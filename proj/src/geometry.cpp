#include "aztec/geometry.hpp"

#include <algorithm>
#include <cstdlib>

#include "aztec/errors.hpp"

namespace aztec {

std::string to_string(const Cell& cell) {
  return "(" + std::to_string(cell.u) + "," + std::to_string(cell.v) + ")";
}

bool adjacent(const Cell& p, const Cell& q) {
  return std::abs(p.u - q.u) == 1 && std::abs(p.v - q.v) == 1;
}

std::vector<Cell> lattice_neighbours(const Cell& cell) {
  // E, N, W, S in ordinary coordinates.
  return {{cell.u + 1, cell.v + 1},
          {cell.u + 1, cell.v - 1},
          {cell.u - 1, cell.v - 1},
          {cell.u - 1, cell.v + 1}};
}

std::string_view side_name(Side side) {
  switch (side) {
    case Side::kNW: return "NW";
    case Side::kNE: return "NE";
    case Side::kSE: return "SE";
    case Side::kSW: return "SW";
  }
  return "?";
}

std::optional<Side> parse_side(std::string_view text) {
  if (text == "NW") return Side::kNW;
  if (text == "NE") return Side::kNE;
  if (text == "SE") return Side::kSE;
  if (text == "SW") return Side::kSW;
  return std::nullopt;
}

std::string to_string(const DefectSpec& spec) {
  std::string prefix = spec.defect_class == DefectClass::kGamma ? "gamma " : "";
  return prefix + std::string(side_name(spec.side)) + ":" +
         std::to_string(spec.position);
}

DefectSpec boundary_defect(Side side, int position) {
  return {side, position,
          white_side(side) ? DefectClass::kBeta : DefectClass::kAlpha};
}

DefectSpec gamma_defect(int position) {
  return {Side::kSE, position, DefectClass::kGamma};
}

Region::Region(std::vector<Cell> cells, RegionMeta meta)
    : cells_(std::move(cells)), meta_(std::move(meta)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Region::contains(const Cell& cell) const {
  return std::binary_search(cells_.begin(), cells_.end(), cell);
}

std::size_t Region::white_count() const {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(),
                    [](const Cell& c) { return c.white(); }));
}

std::size_t Region::black_count() const { return size() - white_count(); }

Region make_aztec_rectangle(int a, int b) {
  if (a < 1 || b < 1) {
    throw Error(ErrorCode::kInvalidParameter,
                "Aztec rectangle needs a, b >= 1");
  }
  if (a > b) {
    throw Error(ErrorCode::kInvalidParameter,
                "Aztec rectangle needs a <= b (got a=" + std::to_string(a) +
                    ", b=" + std::to_string(b) + ")");
  }
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(2 * a * b + a + b));
  for (int v = 0; v <= 2 * a; ++v) {
    for (int u = (v + 1) % 2; u <= 2 * b; u += 2) cells.push_back({u, v});
  }
  RegionMeta meta;
  meta.kind = a == b ? RegionKind::kDiamond : RegionKind::kRectangle;
  meta.a = a;
  meta.b = b;
  return Region(std::move(cells), std::move(meta));
}

Region make_aztec_diamond(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameter, "Aztec diamond needs n >= 1");
  return make_aztec_rectangle(n, n);
}

Cell boundary_cell(int a, int b, const DefectSpec& spec) {
  const int p = spec.position;
  auto out_of_range = [&](int limit) {
    return Error(ErrorCode::kInvalidDefect,
                 to_string(spec) + " is outside 1.." + std::to_string(limit));
  };
  if (spec.defect_class == DefectClass::kGamma) {
    if (spec.side != Side::kSE) {
      throw Error(ErrorCode::kInvalidDefect, "gamma squares only exist on the SE side");
    }
    if (p < 1 || p > b) throw out_of_range(b);
    return {2 * p - 2, 2 * a + 1};
  }
  const bool wants_white = spec.defect_class == DefectClass::kBeta;
  if (wants_white != white_side(spec.side)) {
    throw Error(ErrorCode::kInvalidDefect,
                to_string(spec) + (wants_white ? " is a black side but beta defects are white"
                                               : " is a white side but alpha defects are black"));
  }
  switch (spec.side) {
    case Side::kSE:
      if (p < 1 || p > b) throw out_of_range(b);
      return {2 * p - 1, 2 * a};
    case Side::kNW:
      if (p < 1 || p > b) throw out_of_range(b);
      return {2 * p - 1, 0};
    case Side::kNE:
      if (p < 1 || p > a) throw out_of_range(a);
      return {2 * b, 2 * p - 1};
    case Side::kSW:
      if (p < 1 || p > a) throw out_of_range(a);
      return {0, 2 * a - 2 * p + 1};
  }
  throw Error(ErrorCode::kInvalidDefect, "unknown side");
}

Cell boundary_cell(const Region& region, const DefectSpec& spec) {
  return boundary_cell(region.meta().a, region.meta().b, spec);
}

Region add_gamma_squares(const Region& region, int k, int start) {
  if (k < 0) throw Error(ErrorCode::kInvalidParameter, "gamma count must be >= 0");
  if (k == 0) return region;
  const int a = region.meta().a;
  const int b = region.meta().b;
  if (start < 1 || start + k - 1 > b) {
    throw Error(ErrorCode::kInvalidParameter,
                "gamma positions " + std::to_string(start) + ".." +
                    std::to_string(start + k - 1) + " exceed 1.." + std::to_string(b));
  }
  std::vector<Cell> cells(region.cells().begin(), region.cells().end());
  RegionMeta meta = region.meta();
  for (int p = start; p < start + k; ++p) {
    const Cell cell = boundary_cell(a, b, gamma_defect(p));
    if (region.contains(cell)) {
      throw Error(ErrorCode::kInvalidParameter,
                  "gamma square " + std::to_string(p) + " already present");
    }
    cells.push_back(cell);
    meta.gamma_positions.push_back(p);
  }
  return Region(std::move(cells), std::move(meta));
}

Region remove_defects(const Region& region, std::span<const DefectSpec> defects) {
  std::vector<Cell> doomed;
  doomed.reserve(defects.size());
  for (const DefectSpec& spec : defects) {
    const Cell cell = boundary_cell(region, spec);
    if (!region.contains(cell)) {
      throw Error(ErrorCode::kInvalidDefect, to_string(spec) + " is not in the region");
    }
    if (std::find(doomed.begin(), doomed.end(), cell) != doomed.end()) {
      throw Error(ErrorCode::kInvalidDefect, to_string(spec) + " listed twice");
    }
    doomed.push_back(cell);
  }
  std::vector<Cell> cells;
  cells.reserve(region.size() - doomed.size());
  for (const Cell& c : region.cells()) {
    if (std::find(doomed.begin(), doomed.end(), c) == doomed.end()) cells.push_back(c);
  }
  RegionMeta meta = region.meta();
  meta.removed.insert(meta.removed.end(), defects.begin(), defects.end());
  return Region(std::move(cells), std::move(meta));
}

DefectSpec rotate_half_turn([[maybe_unused]] int a, int b, const DefectSpec& spec) {
  if (spec.defect_class == DefectClass::kGamma) {
    throw Error(ErrorCode::kInvalidDefect, "gamma squares have no half-turn image");
  }
  switch (spec.side) {
    case Side::kSE: return boundary_defect(Side::kNW, b - spec.position + 1);
    case Side::kNW: return boundary_defect(Side::kSE, b - spec.position + 1);
    case Side::kNE: return boundary_defect(Side::kSW, spec.position);
    case Side::kSW: return boundary_defect(Side::kNE, spec.position);
  }
  return spec;
}

}  // namespace aztec
