#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <string>
#include <vector>

namespace nbpoly {

/// A set of vertex indices stored as a strictly increasing sequence.
/// Immutable after construction; all set algebra returns new values.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> xs) : v_(xs) { normalize(); }

  /// Wraps a strictly increasing sequence without copying checks in release builds.
  static VertexSet from_sorted(std::vector<int> xs) {
    assert(std::is_sorted(xs.begin(), xs.end()) &&
           std::adjacent_find(xs.begin(), xs.end()) == xs.end());
    VertexSet s;
    s.v_ = std::move(xs);
    return s;
  }

  /// Sorts and removes duplicates.
  static VertexSet from_unsorted(std::vector<int> xs) {
    VertexSet s;
    s.v_ = std::move(xs);
    s.normalize();
    return s;
  }

  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  int front() const { return v_.front(); }
  int back() const { return v_.back(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<int>& values() const { return v_; }

  bool contains(int x) const { return std::binary_search(v_.begin(), v_.end(), x); }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.v_ == b.v_; }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return a.v_ != b.v_; }

  /// "{0, 2, 5}" — for diagnostics and traces.
  std::string to_string() const;

 private:
  void normalize() {
    std::sort(v_.begin(), v_.end());
    v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
  }

  std::vector<int> v_;
};

/// Total order on vertex sets: by size, then lexicographic.
/// Keeps anchor-map iteration (and any emitted traces) deterministic.
struct VertexSetOrder {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

VertexSet intersect(const VertexSet& a, const VertexSet& b);
VertexSet difference(const VertexSet& a, const VertexSet& b);
VertexSet unite(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);

/// a ∪ {v}.
VertexSet with_vertex(const VertexSet& a, int v);

}  // namespace nbpoly
