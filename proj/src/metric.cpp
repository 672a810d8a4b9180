#include "cayley_ricci/metric.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace ricci {

DistanceMatrix::DistanceMatrix(std::size_t size, std::vector<int> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_) throw std::invalid_argument("distance matrix must be square");
}

int DistanceMatrix::diameter() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

std::vector<int> sssp(const CayleyGraph& graph, std::size_t x) {
  std::vector<int> dist(graph.vertex_count(), -1);
  std::queue<std::size_t> frontier;
  dist.at(x) = 0;
  frontier.push(x);
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v : graph.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs(const CayleyGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<int> entries;
  entries.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto row = sssp(graph, x);
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {n, std::move(entries)};
}

}  // namespace ricci
