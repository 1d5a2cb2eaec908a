#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "aztec/cli.hpp"

namespace aztec {

namespace {

int floor_half(int value) { return value >= 0 ? value / 2 : -((-value + 1) / 2); }

constexpr int kMaxExtent = 200;

}  // namespace

std::string render_region(const DefectConfiguration& config) {
  // Lattice column/row of each cell; the centre is ((u+v)/2, (u-v)/2).
  std::map<std::pair<int, int>, char> marks;
  for (const Cell& c : config.region.cells()) marks[{c.x2(), c.y2()}] = c.white() ? 'W' : 'B';
  const RegionMeta& meta = config.region.meta();
  for (int p : meta.gamma_positions) {
    const Cell c = boundary_cell(meta.a, meta.b, gamma_defect(p));
    marks[{c.x2(), c.y2()}] = 'G';
  }
  for (const auto* group : {&config.betas, &config.alphas}) {
    for (const DefectSpec& d : *group) {
      const Cell c = boundary_cell(config.region, d);
      marks[{c.x2(), c.y2()}] = '-';
    }
  }
  if (marks.empty()) return "";

  int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const auto& [key, mark] : marks) {
    const int x = floor_half(key.first);
    const int y = floor_half(key.second);
    if (first) {
      min_x = max_x = x;
      min_y = max_y = y;
      first = false;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  if (max_x - min_x + 1 > kMaxExtent || max_y - min_y + 1 > kMaxExtent) {
    throw Error(ErrorCode::kInvalidParameter, "region exceeds the 200x200 drawing limit");
  }
  std::vector<std::string> rows(static_cast<std::size_t>(max_y - min_y + 1),
                                std::string(static_cast<std::size_t>(max_x - min_x + 1), ' '));
  for (const auto& [key, mark] : marks) {
    const int x = floor_half(key.first) - min_x;
    const int y = max_y - floor_half(key.second);
    rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = mark;
  }
  std::string out;
  for (std::string& row : rows) {
    row.erase(row.find_last_not_of(' ') + 1);
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace aztec
