#pragma once

// Aztec regions on the square lattice.
//
// Cells are addressed by the diagonal coordinates of their centres,
// u = x + y and v = x - y, so u + v is always odd. In these coordinates the
// Aztec rectangle AR(a,b) is the box 0 <= u <= 2b, 0 <= v <= 2a, which makes
// side/position addressing closed-form:
//
//   NW side  v = 0     white, positions 1..b counted from the west corner
//   SE side  v = 2a    white, positions 1..b counted from the south corner
//   SW side  u = 0     black, positions 1..a counted from the south corner
//   NE side  u = 2b    black, positions 1..a counted from the north corner
//
// A cell is white when u is odd. Gamma squares are black cells glued below
// the SE side: gamma position p is Cell(2p - 2, 2a + 1), directly beneath SE
// cell p, so p = 1 sits past the south corner.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aztec {

struct Cell {
  int u = 0;
  int v = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  // Vertex order used everywhere: by v, then by u.
  friend auto operator<=>(const Cell& lhs, const Cell& rhs) {
    if (auto c = lhs.v <=> rhs.v; c != 0) return c;
    return lhs.u <=> rhs.u;
  }

  bool white() const { return (u & 1) != 0; }
  bool black() const { return !white(); }
  // Centre in ordinary lattice coordinates, doubled to stay integral.
  int x2() const { return u + v; }
  int y2() const { return u - v; }
};

std::string to_string(const Cell& cell);

bool adjacent(const Cell& p, const Cell& q);

// The four lattice neighbours, counterclockwise starting with east.
std::vector<Cell> lattice_neighbours(const Cell& cell);

enum class Side { kNW, kNE, kSE, kSW };
enum class DefectClass { kAlpha, kBeta, kGamma };

std::string_view side_name(Side side);
std::optional<Side> parse_side(std::string_view text);

// True for the sides that carry white boundary cells.
inline bool white_side(Side side) { return side == Side::kNW || side == Side::kSE; }

struct DefectSpec {
  Side side = Side::kSE;
  int position = 1;
  DefectClass defect_class = DefectClass::kBeta;

  friend bool operator==(const DefectSpec&, const DefectSpec&) = default;
};

std::string to_string(const DefectSpec& spec);

// Beta for white sides, alpha for black ones.
DefectSpec boundary_defect(Side side, int position);
DefectSpec gamma_defect(int position);

enum class RegionKind { kDiamond, kRectangle };

struct RegionMeta {
  RegionKind kind = RegionKind::kRectangle;
  int a = 0;
  int b = 0;
  std::vector<int> gamma_positions;  // in order gamma_1..gamma_k
  std::vector<DefectSpec> removed;
};

class Region {
 public:
  Region() = default;
  Region(std::vector<Cell> cells, RegionMeta meta);

  std::span<const Cell> cells() const { return cells_; }
  const RegionMeta& meta() const { return meta_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(const Cell& cell) const;

  std::size_t white_count() const;
  std::size_t black_count() const;

 private:
  std::vector<Cell> cells_;  // sorted, duplicate-free
  RegionMeta meta_;
};

Region make_aztec_diamond(int n);
Region make_aztec_rectangle(int a, int b);

// Address of a boundary (or gamma) cell; independent of whether the cell is
// still present in the region.
Cell boundary_cell(int a, int b, const DefectSpec& spec);
Cell boundary_cell(const Region& region, const DefectSpec& spec);

Region add_gamma_squares(const Region& region, int k, int start);
Region remove_defects(const Region& region, std::span<const DefectSpec> defects);

// Half-turn of AR(a,b) onto itself: SE p <-> NW b-p+1, NE j <-> SW j.
DefectSpec rotate_half_turn(int a, int b, const DefectSpec& spec);

}  // namespace aztec
