#pragma once

// Bruhat order, Bruhat intervals and the Bruhat graph.
//
// Comparisons are memoized per top element: the column for w records u <= w
// for every u, and is derived from the column for ws (s the smallest right
// descent of w) by the lifting property
//     u <= w  <=>  min(u, us) <= ws.
// Filling is lazy, so a BruhatOrder is not safe to share between threads
// while it is being queried; give each thread its own, or fill every column
// first with fill_all().

#include "coxkl/coxeter.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace coxkl {

struct BruhatEdge {
  ElementId from = 0;
  ElementId to = 0;
  friend bool operator==(const BruhatEdge&, const BruhatEdge&) = default;
};

struct IntervalData {
  ElementId bottom = 0;
  ElementId top = 0;
  std::vector<ElementId> members;  // sorted by length, then id
  std::vector<BruhatEdge> edges;   // x -> y with x^{-1}y in T, l(x) < l(y)
  int abs_len = 0;                 // a(u, w)
  std::vector<ElementId> nbhd;     // { v : u -> v <= w }
  int defect = 0;                  // |nbhd| - l(u, w)
};

class BruhatOrder {
 public:
  explicit BruhatOrder(const GroupContext& ctx);

  const GroupContext& group() const { return *ctx_; }

  bool le(ElementId u, ElementId w);
  bool lt(ElementId u, ElementId w) { return u != w && le(u, w); }
  // u -> v: v = ut for a reflection t and l(u) < l(v).
  bool is_edge(ElementId u, ElementId v) const;

  void fill_all();

  // All v <= w, ascending id (hence ascending length).
  std::vector<ElementId> lower_set(ElementId w);

  // Throws UsageError when u is not <= w.
  IntervalData interval(ElementId u, ElementId w);
  int absolute_length(ElementId u, ElementId w);
  std::vector<ElementId> neighborhood(ElementId u, ElementId w);
  int defect(ElementId u, ElementId w);
  // |{ v : u -> v -> w }|; requires a(u, w) = 2.
  int m_count(ElementId u, ElementId w);

  // Bruhat-graph distance from u to every element (-1 if unreachable).
  // Since every Bruhat path is an increasing chain, the distance to w is
  // a(u, w) whenever u <= w.
  std::vector<int> distances_from(ElementId u) const;

 private:
  const std::vector<std::uint8_t>& column(ElementId w);
  void require_le(ElementId u, ElementId w, const char* op);

  const GroupContext* ctx_;
  std::vector<std::vector<std::uint8_t>> below_;  // below_[w][u] = (u <= w)
};

// Edges of the Bruhat graph induced on a set of elements.
std::vector<BruhatEdge> bruhat_edges(const GroupContext& ctx,
                                     std::span<const ElementId> members);

// Shortest directed path length from `from` to `to` using only `edges`;
// -1 if there is none.
int bfs_distance(std::span<const BruhatEdge> edges, ElementId from, ElementId to);

}  // namespace coxkl
