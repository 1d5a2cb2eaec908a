#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "aztec/geometry.hpp"
#include "aztec/numeric.hpp"

namespace aztec {

// Planar dual of a lattice region: one vertex per cell, one edge per pair of
// edge-adjacent cells. Vertices are kept in Cell order (v, then u), so the
// vertex index of a cell is its rank in that order.
class DualGraph {
 public:
  struct Edge {
    std::size_t p = 0;  // p < q
    std::size_t q = 0;
    Rational weight = 1;
  };

  DualGraph() = default;
  explicit DualGraph(std::span<const Cell> cells);

  std::span<const Cell> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> index_of(const Cell& cell) const;
  bool contains(const Cell& cell) const { return index_of(cell).has_value(); }

  // Adjacency lists as (neighbour, edge index) pairs.
  const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& adjacency() const {
    return adjacency_;
  }

  bool weighted() const;
  void set_weight(const Cell& p, const Cell& q, Rational weight);
  const Rational& weight(const Cell& p, const Cell& q) const;

  // Induced subgraph on the given cells (which must all be vertices); edge
  // weights are carried over.
  DualGraph induced(std::span<const Cell> cells) const;

 private:
  std::size_t edge_index(const Cell& p, const Cell& q) const;

  std::vector<Cell> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
};

DualGraph build_dual(const Region& region);

// Closed walk around the outer face, counterclockwise, starting from the
// lowest cell. Cut vertices appear once per visit.
std::vector<Cell> outer_face_walk(std::span<const Cell> cells);
std::vector<Cell> outer_face_walk(const DualGraph& graph);

// Cells on the outer face, each listed once in order of first visit along
// the face walk.
std::vector<Cell> boundary_cycle(std::span<const Cell> cells);
std::vector<Cell> boundary_cycle(const Region& region);
std::vector<Cell> boundary_cycle(const DualGraph& graph);

DualGraph delete_vertices(const DualGraph& graph, std::span<const Cell> cells);

// Induced subgraph of host on base_vertices symmetric-difference w.
DualGraph symmetric_difference(const DualGraph& host,
                               std::span<const Cell> base_vertices,
                               std::span<const Cell> w);

// True when the distinct cells of `sequence` can be met in that cyclic order,
// in either direction, going once around `walk` (a cycle or a face walk that
// repeats cut vertices).
bool in_cyclic_order(std::span<const Cell> walk, std::span<const Cell> sequence);

}  // namespace aztec
