#include "nbpoly/vertex_set.hpp"

#include <sstream>

namespace nbpoly {

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) os << ", ";
    os << v_[i];
  }
  os << '}';
  return os.str();
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet difference(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

VertexSet with_vertex(const VertexSet& a, int v) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(a.size()) + 1);
  bool placed = false;
  for (int x : a) {
    if (!placed && v < x) {
      out.push_back(v);
      placed = true;
    }
    if (x == v) placed = true;
    out.push_back(x);
  }
  if (!placed) out.push_back(v);
  return VertexSet::from_sorted(std::move(out));
}

}  // namespace nbpoly
