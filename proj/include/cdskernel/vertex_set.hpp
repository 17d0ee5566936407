#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

namespace cdskernel {

// Set of vertex ids, kept sorted and duplicate-free. Value type; cheap to
// copy at the instance sizes this library targets.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<int> ids) : ids_(std::move(ids)) { normalize(); }

  static VertexSet full(int n) {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    return VertexSet(std::move(ids));
  }

  bool contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }

  void insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }

  void erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
  }

  VertexSet unions(const VertexSet& other) const {
    std::vector<int> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(out));
    return VertexSet(std::move(out), already_sorted{});
  }

  VertexSet intersect(const VertexSet& other) const {
    std::vector<int> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(out));
    return VertexSet(std::move(out), already_sorted{});
  }

  VertexSet minus(const VertexSet& other) const {
    std::vector<int> out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out));
    return VertexSet(std::move(out), already_sorted{});
  }

  bool subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }

  const std::vector<int>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  // Membership bitmap over 0..n-1 for BFS-style loops.
  std::vector<char> marks(int n) const {
    std::vector<char> m(n, 0);
    for (int v : ids_)
      if (v >= 0 && v < n) m[v] = 1;
    return m;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.ids_ <=> b.ids_;
  }

private:
  struct already_sorted {};
  VertexSet(std::vector<int> ids, already_sorted) : ids_(std::move(ids)) {}

  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<int> ids_;
};

}  // namespace cdskernel
