#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace dotscape {

// Disjoint sets over 0..n-1 whose representative is always the smallest
// member, which is the elder-rule survivor when every element is born at 0.
class union_find {
 public:
  explicit union_find(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) noexcept {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // Merges the sets of a and b. Returns the root that stopped being a
  // representative, or size() if they were already joined.
  std::size_t unite(std::size_t a, std::size_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return parent_.size();
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return b;
  }

  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace dotscape
