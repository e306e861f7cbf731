#include "coxkl/bruhat.hpp"

#include "coxkl/error.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace coxkl {

BruhatOrder::BruhatOrder(const GroupContext& ctx) : ctx_(&ctx), below_(ctx.size()) {}

const std::vector<std::uint8_t>& BruhatOrder::column(ElementId w) {
  if (!below_[w].empty()) return below_[w];
  const std::size_t n = ctx_->size();
  std::vector<std::uint8_t> col(n, 0);
  if (w == ctx_->identity()) {
    col[ctx_->identity()] = 1;
  } else {
    const Generator s = ctx_->first_right_descent(w);
    const ElementId ws = ctx_->right_mult(w, s);
    const auto& lower = column(ws);
    for (ElementId u = 0; u < n; ++u) {
      const ElementId us = ctx_->right_mult(u, s);
      const ElementId m = ctx_->length(us) < ctx_->length(u) ? us : u;
      col[u] = lower[m];
    }
  }
  below_[w] = std::move(col);
  return below_[w];
}

bool BruhatOrder::le(ElementId u, ElementId w) {
  ctx_->check_id(u);
  ctx_->check_id(w);
  if (u == ctx_->identity() || u == w) return true;
  if (ctx_->length(u) >= ctx_->length(w)) return false;
  return column(w)[u] != 0;
}

bool BruhatOrder::is_edge(ElementId u, ElementId v) const {
  return ctx_->length(u) < ctx_->length(v) &&
         ctx_->is_reflection(ctx_->multiply(ctx_->inverse(u), v));
}

void BruhatOrder::fill_all() {
  for (ElementId w = 0; w < ctx_->size(); ++w) column(w);
}

std::vector<ElementId> BruhatOrder::lower_set(ElementId w) {
  ctx_->check_id(w);
  const auto& col = column(w);
  std::vector<ElementId> out;
  for (ElementId u = 0; u < col.size(); ++u)
    if (col[u]) out.push_back(u);
  return out;
}

void BruhatOrder::require_le(ElementId u, ElementId w, const char* op) {
  if (!le(u, w))
    throw UsageError(std::string(op) + ": " + ctx_->format_element(u) +
                     " is not below " + ctx_->format_element(w) + " (incomparable)");
}

std::vector<BruhatEdge> bruhat_edges(const GroupContext& ctx,
                                     std::span<const ElementId> members) {
  std::unordered_set<ElementId> in(members.begin(), members.end());
  std::vector<BruhatEdge> edges;
  for (ElementId x : members)
    for (std::size_t i = 0; i < ctx.reflections().size(); ++i) {
      const ElementId y = ctx.right_mult_reflection(x, i);
      if (ctx.length(y) > ctx.length(x) && in.count(y)) edges.push_back({x, y});
    }
  std::sort(edges.begin(), edges.end(), [&](const BruhatEdge& a, const BruhatEdge& b) {
    return std::pair(a.from, a.to) < std::pair(b.from, b.to);
  });
  return edges;
}

int bfs_distance(std::span<const BruhatEdge> edges, ElementId from, ElementId to) {
  std::unordered_map<ElementId, std::vector<ElementId>> adj;
  for (const auto& e : edges) adj[e.from].push_back(e.to);
  std::unordered_map<ElementId, int> dist{{from, 0}};
  std::deque<ElementId> queue{from};
  while (!queue.empty()) {
    const ElementId x = queue.front();
    queue.pop_front();
    if (x == to) return dist[x];
    for (ElementId y : adj[x])
      if (dist.try_emplace(y, dist[x] + 1).second) queue.push_back(y);
  }
  return -1;
}

IntervalData BruhatOrder::interval(ElementId u, ElementId w) {
  require_le(u, w, "interval");
  IntervalData d;
  d.bottom = u;
  d.top = w;
  const int lo = ctx_->length(u), hi = ctx_->length(w);
  for (ElementId v = 0; v < ctx_->size(); ++v) {
    const int lv = ctx_->length(v);
    if (lv < lo || lv > hi) continue;
    if (le(u, v) && le(v, w)) d.members.push_back(v);
  }
  d.edges = bruhat_edges(*ctx_, d.members);
  d.abs_len = bfs_distance(d.edges, u, w);
  for (const auto& e : d.edges)
    if (e.from == u) d.nbhd.push_back(e.to);
  d.defect = static_cast<int>(d.nbhd.size()) - (hi - lo);
  return d;
}

int BruhatOrder::absolute_length(ElementId u, ElementId w) {
  require_le(u, w, "absolute_length");
  if (u == w) return 0;
  const auto members = interval(u, w).members;
  return bfs_distance(bruhat_edges(*ctx_, members), u, w);
}

std::vector<ElementId> BruhatOrder::neighborhood(ElementId u, ElementId w) {
  require_le(u, w, "neighborhood");
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < ctx_->reflections().size(); ++i) {
    const ElementId v = ctx_->right_mult_reflection(u, i);
    if (ctx_->length(v) > ctx_->length(u) && le(v, w)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int BruhatOrder::defect(ElementId u, ElementId w) {
  return static_cast<int>(neighborhood(u, w).size()) -
         (ctx_->length(w) - ctx_->length(u));
}

int BruhatOrder::m_count(ElementId u, ElementId w) {
  if (absolute_length(u, w) != 2)
    throw UsageError("m_count: requires absolute length a(u, w) = 2");
  int m = 0;
  for (ElementId v : neighborhood(u, w))
    if (is_edge(v, w)) ++m;
  return m;
}

std::vector<int> BruhatOrder::distances_from(ElementId u) const {
  ctx_->check_id(u);
  std::vector<int> dist(ctx_->size(), -1);
  dist[u] = 0;
  std::deque<ElementId> queue{u};
  while (!queue.empty()) {
    const ElementId x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < ctx_->reflections().size(); ++i) {
      const ElementId y = ctx_->right_mult_reflection(x, i);
      if (ctx_->length(y) > ctx_->length(x) && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

}  // namespace coxkl
