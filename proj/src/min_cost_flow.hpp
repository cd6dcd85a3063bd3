#pragma once

#include <limits>
#include <vector>

namespace cellrim::detail {

// Successive shortest paths with Bellman-Ford; unit augmentations.
class MinCostFlow {
 public:
  explicit MinCostFlow(int vertices) : graph_(static_cast<std::size_t>(vertices)) {}

  void add_edge(int from, int to, int capacity, long long cost) {
    graph_[static_cast<std::size_t>(from)].push_back(
        {to, static_cast<int>(graph_[static_cast<std::size_t>(to)].size()), capacity, cost});
    graph_[static_cast<std::size_t>(to)].push_back(
        {from, static_cast<int>(graph_[static_cast<std::size_t>(from)].size()) - 1, 0, -cost});
  }

  // Pushes one unit along a cheapest residual path; false if none exists.
  bool augment(int source, int sink, long long& cost) {
    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    const std::size_t n = graph_.size();
    std::vector<long long> dist(n, kInf);
    std::vector<int> prev_vertex(n, -1);
    std::vector<int> prev_edge(n, -1);
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t round = 0; round < n; ++round) {
      bool changed = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (dist[v] == kInf) continue;
        for (std::size_t e = 0; e < graph_[v].size(); ++e) {
          const Edge& edge = graph_[v][e];
          const auto to = static_cast<std::size_t>(edge.to);
          if (edge.capacity > 0 && dist[v] + edge.cost < dist[to]) {
            dist[to] = dist[v] + edge.cost;
            prev_vertex[to] = static_cast<int>(v);
            prev_edge[to] = static_cast<int>(e);
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[static_cast<std::size_t>(sink)] == kInf) return false;
    for (int v = sink; v != source; v = prev_vertex[static_cast<std::size_t>(v)]) {
      auto& edge = graph_[static_cast<std::size_t>(prev_vertex[static_cast<std::size_t>(v)])]
                         [static_cast<std::size_t>(prev_edge[static_cast<std::size_t>(v)])];
      edge.capacity -= 1;
      graph_[static_cast<std::size_t>(v)][static_cast<std::size_t>(edge.reverse)].capacity += 1;
    }
    cost += dist[static_cast<std::size_t>(sink)];
    return true;
  }

 private:
  struct Edge {
    int to;
    int reverse;
    int capacity;
    long long cost;
  };
  std::vector<std::vector<Edge>> graph_;
};

}  // namespace cellrim::detail
