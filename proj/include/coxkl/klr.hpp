#pragma once

// R-, R~- and Kazhdan-Lusztig polynomials of a finite Weyl group.
//
// Each polynomial family is a dense |W| x |W| table filled one column (top
// element w) at a time.  A column only reads columns of shorter elements, so
// filling in order of increasing l(w) is always safe; within a column, KL
// entries are produced in order of decreasing l(u).

#include "coxkl/bruhat.hpp"
#include "coxkl/coxeter.hpp"
#include "coxkl/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace coxkl {

enum class PolyKind { R, Rtilde, KL };

const char* kind_name(PolyKind k);  // "R", "Rt", "KL"
PolyKind parse_kind(std::string_view s);

class PolyTable {
 public:
  PolyTable(PolyKind kind, std::size_t group_size);

  PolyKind kind() const { return kind_; }
  std::size_t group_size() const { return n_; }
  bool column_done(ElementId w) const { return done_[w] != 0; }
  const IntPoly& at(ElementId u, ElementId w) const { return entries_[w * n_ + u]; }

 private:
  friend class KLContext;
  IntPoly& slot(ElementId u, ElementId w) { return entries_[w * n_ + u]; }

  PolyKind kind_;
  std::size_t n_;
  std::vector<IntPoly> entries_;
  std::vector<char> done_;
  std::vector<std::size_t> seeded_;  // cache entries received per column
};

// R_uw = (q-1)^a * sum_i f_{i-1} (q-1)^{d-i} = (q-1)^a * sum_i h_i q^{d-i}.
struct FHDecomposition {
  int a = 0;  // absolute length
  int d = 0;  // l(u, w) - a
  std::vector<Integer> f;  // f[i] holds f_{i-1}, i = 0..d
  std::vector<Integer> h;  // h[i] holds h_i, i = 0..d
};

class KLContext {
 public:
  explicit KLContext(const GroupContext& ctx);

  const GroupContext& group() const { return *ctx_; }
  BruhatOrder& order() { return order_; }

  const IntPoly& r_poly(ElementId u, ElementId w);
  const IntPoly& rtilde_poly(ElementId u, ElementId w);
  // Read off from the top half of sum_{u<v<=w} R_uv P_vw, then re-verified
  // against the full defining identity; InvariantError if that fails.
  const IntPoly& kl_poly(ElementId u, ElementId w);
  Integer kl_at_one(ElementId u, ElementId w) { return eval_int(kl_poly(u, w), 1); }

  const PolyTable& table(PolyKind k) const;
  // Compute every column of the requested family.
  void fill(PolyKind k);

  // Rebuilds R from the R~ coefficients c_l, c_{l-2}, ..., c_a.  Requires
  // u < w.  Throws InvariantError when R~ has a coefficient of the wrong
  // parity; returns false when the reconstruction disagrees with R.
  bool check_r_rtilde_link(ElementId u, ElementId w);

  // Requires u < w; all structural invariants are enforced (InvariantError).
  FHDecomposition fh_vectors(ElementId u, ElementId w);
  // Same decomposition without any invariant checks.
  FHDecomposition fh_vectors_raw(ElementId u, ElementId w);

  // sum_{x <= v <= w} R_xv.  Requires x <= w.
  IntPoly sum_r_over(ElementId x, ElementId w);

  // df(x, w) = 0 for every x in [u, w).  Requires u <= w.
  bool is_rationally_smooth(ElementId u, ElementId w);
  // P_uw != 1.  Requires u <= w.
  bool is_singular(ElementId u, ElementId w);

  // { v in N(u, w) : P_uw(1) > P_vw(1) }.  Requires u <= w.
  std::vector<ElementId> strict_edges(ElementId u, ElementId w);
  // u = v_0 -> v_1 -> ... -> v_d along strict edges, ending at the first
  // vertex with P_{v,w} = 1.  Requires P_uw(1) > 1.
  std::vector<ElementId> strict_path_to_smooth(ElementId u, ElementId w);

  // Pre-load a cached entry.  Returns false (and stores nothing) when the
  // polynomial fails the invariants of its family.
  bool seed(PolyKind k, ElementId u, ElementId w, IntPoly p);

 private:
  void ensure_r(ElementId w);
  void ensure_rtilde(ElementId w);
  void ensure_kl(ElementId w);
  PolyTable& mutable_table(PolyKind k);
  void require_le(ElementId u, ElementId w, const char* op);
  void require_lt(ElementId u, ElementId w, const char* op);

  const GroupContext* ctx_;
  BruhatOrder order_;
  PolyTable r_;
  PolyTable rt_;
  PolyTable kl_;
  std::vector<std::size_t> lower_count_;  // |{u <= w}|, 0 until computed
};

}  // namespace coxkl
