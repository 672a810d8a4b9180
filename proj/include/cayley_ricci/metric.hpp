#pragma once

#include <cstddef>
#include <vector>

#include "cayley_ricci/cayley.hpp"

namespace ricci {

/// Hop distances between all vertex pairs, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t size, std::vector<int> entries);

  std::size_t size() const { return size_; }
  int operator()(std::size_t x, std::size_t y) const { return entries_[x * size_ + y]; }
  int diameter() const;

 private:
  std::size_t size_ = 0;
  std::vector<int> entries_;
};

/// Breadth-first distances from x.
std::vector<int> sssp(const CayleyGraph& graph, std::size_t x);

DistanceMatrix all_pairs(const CayleyGraph& graph);

}  // namespace ricci
