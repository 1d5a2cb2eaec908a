#include "aztec/dualgraph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <iterator>

#include "aztec/errors.hpp"

namespace aztec {

namespace {

std::vector<Cell> sorted_unique(std::span<const Cell> cells) {
  std::vector<Cell> out(cells.begin(), cells.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool sorted_contains(const std::vector<Cell>& sorted, const Cell& cell) {
  return std::binary_search(sorted.begin(), sorted.end(), cell);
}

// Direction d in {E, N, W, S} = {0, 1, 2, 3}, counterclockwise.
Cell step(const Cell& c, int d) {
  static constexpr std::array<std::array<int, 2>, 4> kDelta = {
      {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}};
  return {c.u + kDelta[d][0], c.v + kDelta[d][1]};
}

bool connected(const std::vector<Cell>& cells) {
  if (cells.empty()) return true;
  std::vector<char> seen(cells.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Cell c = cells[queue.front()];
    queue.pop_front();
    for (int d = 0; d < 4; ++d) {
      const Cell n = step(c, d);
      auto it = std::lower_bound(cells.begin(), cells.end(), n);
      if (it == cells.end() || *it != n) continue;
      const auto idx = static_cast<std::size_t>(it - cells.begin());
      if (!seen[idx]) {
        seen[idx] = 1;
        ++reached;
        queue.push_back(idx);
      }
    }
  }
  return reached == cells.size();
}

}  // namespace

DualGraph::DualGraph(std::span<const Cell> cells) : vertices_(sorted_unique(cells)) {
  adjacency_.resize(vertices_.size());
  for (std::size_t p = 0; p < vertices_.size(); ++p) {
    for (int d = 0; d < 4; ++d) {
      const auto q = index_of(step(vertices_[p], d));
      if (!q || *q <= p) continue;
      adjacency_[p].emplace_back(*q, edges_.size());
      adjacency_[*q].emplace_back(p, edges_.size());
      edges_.push_back({p, *q, 1});
    }
  }
}

std::optional<std::size_t> DualGraph::index_of(const Cell& cell) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), cell);
  if (it == vertices_.end() || *it != cell) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool DualGraph::weighted() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.weight != 1; });
}

std::size_t DualGraph::edge_index(const Cell& p, const Cell& q) const {
  const auto ip = index_of(p);
  const auto iq = index_of(q);
  if (ip && iq) {
    for (const auto& [n, e] : adjacency_[*ip]) {
      if (n == *iq) return e;
    }
  }
  throw Error(ErrorCode::kInvalidParameter,
              "no edge between " + to_string(p) + " and " + to_string(q));
}

void DualGraph::set_weight(const Cell& p, const Cell& q, Rational weight) {
  edges_[edge_index(p, q)].weight = std::move(weight);
}

const Rational& DualGraph::weight(const Cell& p, const Cell& q) const {
  return edges_[edge_index(p, q)].weight;
}

DualGraph DualGraph::induced(std::span<const Cell> cells) const {
  for (const Cell& c : cells) {
    if (!contains(c)) {
      throw Error(ErrorCode::kInvalidParameter, to_string(c) + " is not a vertex");
    }
  }
  DualGraph sub(cells);
  for (Edge& e : sub.edges_) {
    e.weight = weight(sub.vertices_[e.p], sub.vertices_[e.q]);
  }
  return sub;
}

DualGraph build_dual(const Region& region) { return DualGraph(region.cells()); }

std::vector<Cell> outer_face_walk(std::span<const Cell> cells) {
  const std::vector<Cell> sorted = sorted_unique(cells);
  if (sorted.empty()) return {};
  if (!connected(sorted)) {
    throw Error(ErrorCode::kUnsupportedRegion, "region is not connected");
  }
  // Lowest cell, leftmost among the lowest, is on the outer face.
  const Cell start = *std::min_element(sorted.begin(), sorted.end(),
                                       [](const Cell& l, const Cell& r) {
                                         if (l.y2() != r.y2()) return l.y2() < r.y2();
                                         return l.x2() < r.x2();
                                       });
  if (sorted.size() == 1) return {start};

  // Walk with the outer face on the right: at each vertex take the first
  // neighbour counterclockwise from the edge we arrived on.
  auto next_dir = [&](const Cell& at, int back) {
    for (int turn = 1; turn <= 4; ++turn) {
      const int d = (back + turn) % 4;
      if (sorted_contains(sorted, step(at, d))) return d;
    }
    return -1;
  };
  const int first_dir = next_dir(start, 3);
  std::vector<Cell> walk{start};
  Cell at = start;
  int dir = first_dir;
  while (true) {
    at = step(at, dir);
    dir = next_dir(at, (dir + 2) % 4);
    if (at == start && dir == first_dir) break;
    walk.push_back(at);
  }
  return walk;
}

std::vector<Cell> outer_face_walk(const DualGraph& graph) {
  return outer_face_walk(graph.vertices());
}

std::vector<Cell> boundary_cycle(std::span<const Cell> cells) {
  std::vector<Cell> order;
  for (const Cell& c : outer_face_walk(cells)) {
    if (std::find(order.begin(), order.end(), c) == order.end()) order.push_back(c);
  }
  return order;
}

std::vector<Cell> boundary_cycle(const Region& region) {
  return boundary_cycle(region.cells());
}

std::vector<Cell> boundary_cycle(const DualGraph& graph) {
  return boundary_cycle(graph.vertices());
}

DualGraph delete_vertices(const DualGraph& graph, std::span<const Cell> cells) {
  const std::vector<Cell> doomed = sorted_unique(cells);
  for (const Cell& c : doomed) {
    if (!graph.contains(c)) {
      throw Error(ErrorCode::kInvalidDefect, to_string(c) + " is not a vertex");
    }
  }
  std::vector<Cell> keep;
  for (const Cell& c : graph.vertices()) {
    if (!sorted_contains(doomed, c)) keep.push_back(c);
  }
  return graph.induced(keep);
}

DualGraph symmetric_difference(const DualGraph& host,
                               std::span<const Cell> base_vertices,
                               std::span<const Cell> w) {
  const std::vector<Cell> base = sorted_unique(base_vertices);
  const std::vector<Cell> toggle = sorted_unique(w);
  for (const auto* set : {&base, &toggle}) {
    for (const Cell& c : *set) {
      if (!host.contains(c)) {
        throw Error(ErrorCode::kInvalidParameter,
                    to_string(c) + " is not a vertex of the host graph");
      }
    }
  }
  std::vector<Cell> result;
  std::set_symmetric_difference(base.begin(), base.end(), toggle.begin(), toggle.end(),
                                std::back_inserter(result));
  return host.induced(result);
}

bool in_cyclic_order(std::span<const Cell> walk, std::span<const Cell> sequence) {
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (std::find(walk.begin(), walk.end(), sequence[i]) == walk.end()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (sequence[i] == sequence[j]) return false;
    }
  }
  if (sequence.size() <= 2) return true;
  const std::size_t len = walk.size();
  // Pick occurrences greedily: from each occurrence of the first element,
  // take the earliest later occurrence of every following one.
  auto fits = [&](auto at) {
    for (std::size_t s = 0; s < len; ++s) {
      if (at(s) != sequence[0]) continue;
      std::size_t offset = 0;
      bool ok = true;
      for (std::size_t t = 1; t < sequence.size() && ok; ++t) {
        do {
          ++offset;
        } while (offset < len && at((s + offset) % len) != sequence[t]);
        ok = offset < len;
      }
      if (ok) return true;
    }
    return false;
  };
  return fits([&](std::size_t i) { return walk[i]; }) ||
         fits([&](std::size_t i) { return walk[len - 1 - i]; });
}

}  // namespace aztec
