#include "aztec/counting.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <type_traits>
#include <unordered_map>

#include "aztec/errors.hpp"

namespace aztec {

namespace {

// Fixed-width vertex set sized for one graph.
struct VertexSet {
  std::vector<std::uint64_t> words;

  bool test(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool empty() const {
    return std::all_of(words.begin(), words.end(), [](std::uint64_t w) { return w == 0; });
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  std::size_t lowest() const {
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words[i]));
    }
    return words.size() * 64;
  }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const {
    std::size_t h = 1469598103934665603ULL;
    for (std::uint64_t w : s.words) h = (h ^ w) * 1099511628211ULL;
    return h;
  }
};

template <class Value>
class BruteCounter {
 public:
  BruteCounter(const DualGraph& graph, bool use_weights)
      : graph_(graph), use_weights_(use_weights) {}

  Value run() {
    VertexSet all{std::vector<std::uint64_t>((graph_.vertex_count() + 63) / 64, 0)};
    for (std::size_t i = 0; i < graph_.vertex_count(); ++i) all.set(i);
    return solve(all);
  }

 private:
  Value edge_weight(std::size_t e) const {
    if constexpr (std::is_same_v<Value, Rational>) {
      if (use_weights_) return graph_.edges()[e].weight;
    }
    return Value(1);
  }

  VertexSet component_of(const VertexSet& remaining, std::size_t seed) const {
    VertexSet comp{std::vector<std::uint64_t>(remaining.words.size(), 0)};
    std::vector<std::size_t> stack{seed};
    comp.set(seed);
    while (!stack.empty()) {
      const std::size_t p = stack.back();
      stack.pop_back();
      for (const auto& [q, e] : graph_.adjacency()[p]) {
        if (remaining.test(q) && !comp.test(q)) {
          comp.set(q);
          stack.push_back(q);
        }
      }
    }
    return comp;
  }

  Value solve(const VertexSet& remaining) {
    if (remaining.empty()) return Value(1);
    if (remaining.count() % 2 != 0) return Value(0);
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;

    Value result(0);
    const std::size_t first = remaining.lowest();
    VertexSet comp = component_of(remaining, first);
    if (comp != remaining) {
      VertexSet rest = remaining;
      for (std::size_t i = 0; i < rest.words.size(); ++i) rest.words[i] &= ~comp.words[i];
      const Value left = solve(comp);
      result = left == 0 ? Value(0) : Value(left * solve(rest));
    } else {
      VertexSet next = remaining;
      next.reset(first);
      for (const auto& [q, e] : graph_.adjacency()[first]) {
        if (!remaining.test(q)) continue;
        next.reset(q);
        const Value sub = solve(next);
        if (sub != 0) result += edge_weight(e) * sub;
        next.set(q);
      }
    }
    memo_.emplace(remaining, result);
    return result;
  }

  const DualGraph& graph_;
  bool use_weights_;
  std::unordered_map<VertexSet, Value, VertexSetHash> memo_;
};

}  // namespace

Rational count_matchings_brute(const DualGraph& graph) {
  if (graph.weighted()) return BruteCounter<Rational>(graph, true).run();
  return Rational(BruteCounter<Integer>(graph, false).run());
}

Rational count_matchings_weighted(const DualGraph& graph) {
  for (const auto& e : graph.edges()) {
    if (e.weight <= 0) {
      throw Error(ErrorCode::kInvalidParameter,
                  "edge weight " + to_string(e.weight) + " is not positive");
    }
  }
  return count_matchings_brute(graph);
}

Integer count_tilings_dp(std::span<const Cell> cells) {
  if (cells.empty()) return 1;
  const auto whites = std::count_if(cells.begin(), cells.end(),
                                    [](const Cell& c) { return c.white(); });
  if (2 * static_cast<std::size_t>(whites) != cells.size()) return 0;

  // Columns keyed by u (or v); neighbours always sit in the adjacent column
  // at row +-1, so the two sweeps are interchangeable.
  auto build_columns = [&](bool by_u) {
    std::map<int, std::vector<int>> columns;
    for (const Cell& c : cells) {
      columns[by_u ? c.u : c.v].push_back(by_u ? c.v : c.u);
    }
    for (auto& [key, rows] : columns) {
      std::sort(rows.begin(), rows.end());
      rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    }
    return columns;
  };
  auto tallest = [](const std::map<int, std::vector<int>>& columns) {
    std::size_t h = 0;
    for (const auto& [key, rows] : columns) h = std::max(h, rows.size());
    return h;
  };
  std::map<int, std::vector<int>> by_u = build_columns(true);
  std::map<int, std::vector<int>> by_v = build_columns(false);
  const std::map<int, std::vector<int>>& columns =
      tallest(by_u) <= tallest(by_v) ? by_u : by_v;
  if (tallest(columns) > 64) {
    throw Error(ErrorCode::kUnsupportedRegion, "columns longer than 64 cells");
  }

  const int first_key = columns.begin()->first;
  const int last_key = columns.rbegin()->first;
  static const std::vector<int> kEmpty;
  auto column = [&](int key) -> const std::vector<int>& {
    auto it = columns.find(key);
    return it == columns.end() ? kEmpty : it->second;
  };

  std::unordered_map<std::uint64_t, Integer> states{{0, 1}};
  for (int key = first_key; key <= last_key && !states.empty(); ++key) {
    const std::vector<int>& here = column(key);
    const std::vector<int>& next = column(key + 1);
    auto next_index = [&](int row) -> int {
      auto it = std::lower_bound(next.begin(), next.end(), row);
      return it != next.end() && *it == row ? static_cast<int>(it - next.begin()) : -1;
    };
    // For each cell of this column, the indices of its two right neighbours.
    std::vector<std::array<int, 2>> targets(here.size());
    for (std::size_t i = 0; i < here.size(); ++i) {
      targets[i] = {next_index(here[i] - 1), next_index(here[i] + 1)};
    }
    const std::uint64_t full =
        here.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << here.size()) - 1;

    std::unordered_map<std::uint64_t, Integer> upcoming;
    for (const auto& [covered, ways] : states) {
      const std::uint64_t pending = full & ~covered;
      // Every pending cell takes a distinct right neighbour.
      auto place = [&](auto&& self, std::uint64_t rest, std::uint64_t taken) -> void {
        if (rest == 0) {
          upcoming[taken] += ways;
          return;
        }
        const int i = std::countr_zero(rest);
        const std::uint64_t after = rest & (rest - 1);
        for (int t : targets[static_cast<std::size_t>(i)]) {
          if (t < 0) continue;
          const std::uint64_t bit = std::uint64_t{1} << t;
          if (taken & bit) continue;
          self(self, after, taken | bit);
        }
      };
      place(place, pending, 0);
    }
    states = std::move(upcoming);
  }
  auto it = states.find(0);
  return it == states.end() ? Integer(0) : it->second;
}

Integer count_tilings_dp(const Region& region) { return count_tilings_dp(region.cells()); }

Rational count_matchings(const DualGraph& graph, Engine engine) {
  if (engine == Engine::kBrute || graph.weighted()) return count_matchings_brute(graph);
  return Rational(count_tilings_dp(graph.vertices()));
}

}  // namespace aztec
