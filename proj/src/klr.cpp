#include "coxkl/klr.hpp"

#include "coxkl/error.hpp"

#include <algorithm>

namespace coxkl {

const char* kind_name(PolyKind k) {
  switch (k) {
    case PolyKind::R: return "R";
    case PolyKind::Rtilde: return "Rt";
    case PolyKind::KL: return "KL";
  }
  return "?";
}

PolyKind parse_kind(std::string_view s) {
  if (s == "R") return PolyKind::R;
  if (s == "Rt") return PolyKind::Rtilde;
  if (s == "KL") return PolyKind::KL;
  throw UsageError("unknown polynomial kind '" + std::string(s) + "'");
}

PolyTable::PolyTable(PolyKind kind, std::size_t group_size)
    : kind_(kind),
      n_(group_size),
      entries_(group_size * group_size),
      done_(group_size, 0),
      seeded_(group_size, 0) {}

KLContext::KLContext(const GroupContext& ctx)
    : ctx_(&ctx),
      order_(ctx),
      r_(PolyKind::R, ctx.size()),
      rt_(PolyKind::Rtilde, ctx.size()),
      kl_(PolyKind::KL, ctx.size()),
      lower_count_(ctx.size(), 0) {}

PolyTable& KLContext::mutable_table(PolyKind k) {
  switch (k) {
    case PolyKind::R: return r_;
    case PolyKind::Rtilde: return rt_;
    case PolyKind::KL: return kl_;
  }
  throw UsageError("unknown polynomial kind");
}

const PolyTable& KLContext::table(PolyKind k) const {
  return const_cast<KLContext*>(this)->mutable_table(k);
}

void KLContext::require_le(ElementId u, ElementId w, const char* op) {
  if (!order_.le(u, w))
    throw UsageError(std::string(op) + ": " + ctx_->format_element(u) +
                     " is not below " + ctx_->format_element(w) + " (incomparable)");
}

void KLContext::require_lt(ElementId u, ElementId w, const char* op) {
  require_le(u, w, op);
  if (u == w) throw UsageError(std::string(op) + ": requires u < w");
}

namespace {

const IntPoly kOne{1};
const IntPoly kQ{0, 1};
const IntPoly kQMinusOne{-1, 1};

}  // namespace

void KLContext::ensure_r(ElementId w) {
  if (r_.column_done(w)) return;
  const std::size_t n = ctx_->size();
  if (w == ctx_->identity()) {
    for (ElementId u = 0; u < n; ++u) r_.slot(u, w) = IntPoly();
    r_.slot(w, w) = kOne;
  } else {
    const Generator s = ctx_->first_right_descent(w);
    const ElementId ws = ctx_->right_mult(w, s);
    ensure_r(ws);
    for (ElementId u = 0; u < n; ++u) {
      IntPoly& out = r_.slot(u, w);
      if (!order_.le(u, w)) {
        out = IntPoly();
      } else if (u == w) {
        out = kOne;
      } else {
        const ElementId us = ctx_->right_mult(u, s);
        if (ctx_->length(us) < ctx_->length(u))
          out = r_.at(us, ws);
        else
          out = kQ * r_.at(us, ws) + kQMinusOne * r_.at(u, ws);
      }
    }
  }
  r_.done_[w] = 1;
}

void KLContext::ensure_rtilde(ElementId w) {
  if (rt_.column_done(w)) return;
  const std::size_t n = ctx_->size();
  if (w == ctx_->identity()) {
    for (ElementId u = 0; u < n; ++u) rt_.slot(u, w) = IntPoly();
    rt_.slot(w, w) = kOne;
  } else {
    const Generator s = ctx_->first_right_descent(w);
    const ElementId ws = ctx_->right_mult(w, s);
    ensure_rtilde(ws);
    for (ElementId u = 0; u < n; ++u) {
      IntPoly& out = rt_.slot(u, w);
      if (!order_.le(u, w)) {
        out = IntPoly();
      } else if (u == w) {
        out = kOne;
      } else {
        const ElementId us = ctx_->right_mult(u, s);
        if (ctx_->length(us) < ctx_->length(u))
          out = rt_.at(us, ws);
        else
          out = rt_.at(us, ws) + rt_.at(u, ws).shifted_up(1);
      }
    }
  }
  rt_.done_[w] = 1;
}

void KLContext::ensure_kl(ElementId w) {
  if (kl_.column_done(w)) return;
  const std::vector<ElementId> lower = order_.lower_set(w);
  for (ElementId v : lower) ensure_r(v);
  for (ElementId u = 0; u < ctx_->size(); ++u) kl_.slot(u, w) = IntPoly();
  kl_.slot(w, w) = kOne;

  // q^D P_uw(1/q) - P_uw(q) = F := sum_{u<v<=w} R_uv P_vw.  With
  // deg P_uw <= (D-1)/2 the two left-hand terms live in disjoint degree
  // ranges, so [q^j]P_uw = [q^{D-j}]F for j <= (D-1)/2.
  for (std::size_t k = lower.size(); k-- > 0;) {
    const ElementId u = lower[k];
    if (u == w) continue;
    IntPoly sum;
    for (std::size_t m = k + 1; m < lower.size(); ++m) {
      const ElementId v = lower[m];
      if (!order_.le(u, v)) continue;
      sum += r_.at(u, v) * kl_.at(v, w);
    }
    const int D = ctx_->length(w) - ctx_->length(u);
    std::vector<Integer> p((D - 1) / 2 + 1);
    for (int j = 0; j <= (D - 1) / 2; ++j) p[j] = sum.coeff(D - j);
    IntPoly P(std::move(p));

    std::vector<Integer> flipped(D + 1);
    for (int j = 0; j <= P.degree(); ++j) flipped[D - j] = P.coeff(j);
    if (IntPoly(std::move(flipped)) != P + sum || P.coeff(0) != 1)
      throw InvariantError("KL polynomial for (" + ctx_->format_element(u) + ", " +
                           ctx_->format_element(w) +
                           ") fails the defining identity");
    kl_.slot(u, w) = std::move(P);
  }
  kl_.done_[w] = 1;
}

const IntPoly& KLContext::r_poly(ElementId u, ElementId w) {
  ctx_->check_id(u);
  ctx_->check_id(w);
  ensure_r(w);
  return r_.at(u, w);
}

const IntPoly& KLContext::rtilde_poly(ElementId u, ElementId w) {
  ctx_->check_id(u);
  ctx_->check_id(w);
  ensure_rtilde(w);
  return rt_.at(u, w);
}

const IntPoly& KLContext::kl_poly(ElementId u, ElementId w) {
  ctx_->check_id(u);
  ctx_->check_id(w);
  ensure_kl(w);
  return kl_.at(u, w);
}

void KLContext::fill(PolyKind k) {
  for (ElementId w = 0; w < ctx_->size(); ++w) {
    switch (k) {
      case PolyKind::R: ensure_r(w); break;
      case PolyKind::Rtilde: ensure_rtilde(w); break;
      case PolyKind::KL: ensure_kl(w); break;
    }
  }
}

bool KLContext::check_r_rtilde_link(ElementId u, ElementId w) {
  require_lt(u, w, "check_r_rtilde_link");
  const IntPoly& rt = rtilde_poly(u, w);
  const int len = ctx_->length(w) - ctx_->length(u);
  for (int k = 0; k <= rt.degree(); ++k)
    if (rt.coeff(k) != 0 && (len - k) % 2 != 0)
      throw InvariantError("R~ for (" + ctx_->format_element(u) + ", " +
                           ctx_->format_element(w) + ") has a term q^" +
                           std::to_string(k) + " of the wrong parity");
  const int a = order_.absolute_length(u, w);
  IntPoly rebuilt;
  for (int k = a; k <= len; k += 2) {
    const Integer& c = rt.coeff(k);
    if (c <= 0) return false;
    rebuilt += (q_power((len - k) / 2) * q_minus_one_power(k)) * IntPoly::constant(c);
  }
  for (int k = 0; k < a; ++k)
    if (rt.coeff(k) != 0) return false;
  return rebuilt == r_poly(u, w);
}

FHDecomposition KLContext::fh_vectors_raw(ElementId u, ElementId w) {
  require_lt(u, w, "fh_vectors");
  const auto split = split_q_minus_one(r_poly(u, w));
  FHDecomposition fh;
  fh.a = static_cast<int>(split.power);
  fh.d = split.cofactor.degree();
  const IntPoly shifted = to_shifted(split.cofactor);
  for (int i = 0; i <= fh.d; ++i) {
    fh.f.push_back(shifted.coeff(fh.d - i));
    fh.h.push_back(split.cofactor.coeff(fh.d - i));
  }
  return fh;
}

FHDecomposition KLContext::fh_vectors(ElementId u, ElementId w) {
  FHDecomposition fh = fh_vectors_raw(u, w);
  auto fail = [&](const std::string& what) {
    throw InvariantError("f/h decomposition of (" + ctx_->format_element(u) + ", " +
                         ctx_->format_element(w) + "): " + what);
  };
  if (fh.a != order_.absolute_length(u, w))
    fail("(q-1)-adic valuation differs from the absolute length");
  if (fh.a + fh.d != ctx_->length(w) - ctx_->length(u)) fail("degree mismatch");
  if (fh.f.front() != 1 || fh.h.front() != 1) fail("f_{-1} or h_0 is not 1");
  for (const auto& f : fh.f)
    if (f <= 0) fail("non-positive f entry");
  if (!std::equal(fh.h.begin(), fh.h.end(), fh.h.rbegin())) fail("h is not palindromic");
  return fh;
}

IntPoly KLContext::sum_r_over(ElementId x, ElementId w) {
  require_le(x, w, "sum_r_over");
  IntPoly sum;
  for (ElementId v : order_.lower_set(w))
    if (order_.le(x, v)) sum += r_poly(x, v);
  return sum;
}

bool KLContext::is_rationally_smooth(ElementId u, ElementId w) {
  require_le(u, w, "is_rationally_smooth");
  for (ElementId x : order_.lower_set(w))
    if (x != w && order_.le(u, x) && order_.defect(x, w) != 0) return false;
  return true;
}

bool KLContext::is_singular(ElementId u, ElementId w) {
  require_le(u, w, "is_singular");
  return !kl_poly(u, w).is_one();
}

std::vector<ElementId> KLContext::strict_edges(ElementId u, ElementId w) {
  require_le(u, w, "strict_edges");
  const Integer pu = kl_at_one(u, w);
  std::vector<ElementId> out;
  for (ElementId v : order_.neighborhood(u, w))
    if (pu > kl_at_one(v, w)) out.push_back(v);
  return out;
}

std::vector<ElementId> KLContext::strict_path_to_smooth(ElementId u, ElementId w) {
  require_le(u, w, "strict_path_to_smooth");
  if (kl_at_one(u, w) <= 1)
    throw UsageError("strict_path_to_smooth: P_uw(1) = 1, (u, w) is rationally smooth");
  std::vector<ElementId> path{u};
  while (kl_at_one(path.back(), w) > 1) {
    const auto strict = strict_edges(path.back(), w);
    if (strict.empty())
      throw TheoremViolation("no strict edge at singular vertex " +
                             ctx_->format_element(path.back()) + " under " +
                             ctx_->format_element(w));
    // strict_edges is sorted by id, so min_element breaks ties by id.
    path.push_back(*std::min_element(strict.begin(), strict.end(),
                                     [&](ElementId a, ElementId b) {
                                       return kl_at_one(a, w) < kl_at_one(b, w);
                                     }));
  }
  return path;
}

bool KLContext::seed(PolyKind k, ElementId u, ElementId w, IntPoly p) {
  ctx_->check_id(u);
  ctx_->check_id(w);
  if (!order_.le(u, w) || p.basis() != Basis::PowerQ) return false;
  const int len = ctx_->length(w) - ctx_->length(u);
  if (u == w) {
    if (!p.is_one()) return false;
  } else {
    switch (k) {
      case PolyKind::R:
        if (p.degree() != len || p.coeff(len) != 1 || eval_int(p, 1) != 0) return false;
        break;
      case PolyKind::Rtilde:
        if (p.degree() != len || p.coeff(len) != 1) return false;
        for (const auto& c : p.coeffs())
          if (c < 0) return false;
        break;
      case PolyKind::KL:
        if (p.coeff(0) != 1 || p.degree() > (len - 1) / 2) return false;
        for (const auto& c : p.coeffs())
          if (c < 0) return false;
        break;
    }
  }
  PolyTable& t = mutable_table(k);
  if (t.column_done(w)) return true;
  if (t.at(u, w).is_zero()) ++t.seeded_[w];
  t.slot(u, w) = std::move(p);
  if (lower_count_[w] == 0) lower_count_[w] = order_.lower_set(w).size();
  if (t.seeded_[w] == lower_count_[w]) t.done_[w] = 1;
  return true;
}

}  // namespace coxkl
