#include "coxkl/theorems.hpp"

#include "coxkl/error.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iomanip>
#include <sstream>

namespace coxkl {

namespace {

constexpr std::array<std::string_view, 23> kChecks = {
    "r_basics",        "r_inverse_symmetry", "r_alternating_sum", "r_functional_equation",
    "r_derivative_edge", "shifted_nonneg",   "divisibility_order", "fh_structure",
    "boolean_criterion", "binomial_bounds",  "brenti_scan",        "deodhar",
    "dvc_linear",      "nth2_quadratic",     "le1_le2_le3",        "kl_basics",
    "kl_nonneg",       "kl_monotone",        "mono_equiv",         "lemma_lm",
    "nth3_strict_edges", "strict_path",      "smoothness_equivalence"};

// Comparability, absolute lengths and neighborhood sizes for every pair,
// computed once per check from the Bruhat graph alone.
struct GroupFacts {
  std::size_t n = 0;
  std::vector<std::uint8_t> le;  // [w * n + u]
  std::vector<int> abs;          // a(u, w), -1 when u is not <= w
  std::vector<int> nbar;         // |N(u, w)|, -1 when u is not <= w
  std::vector<std::vector<ElementId>> lower;

  bool leq(ElementId u, ElementId w) const { return le[w * n + u] != 0; }
  int a(ElementId u, ElementId w) const { return abs[w * n + u]; }
  int lbar(ElementId u, ElementId w) const { return nbar[w * n + u]; }
};

GroupFacts build_facts(KLContext& kl) {
  const GroupContext& ctx = kl.group();
  BruhatOrder& order = kl.order();
  GroupFacts f;
  f.n = ctx.size();
  f.le.assign(f.n * f.n, 0);
  f.abs.assign(f.n * f.n, -1);
  f.nbar.assign(f.n * f.n, -1);
  f.lower.resize(f.n);
  for (ElementId w = 0; w < f.n; ++w) {
    f.lower[w] = order.lower_set(w);
    for (ElementId u : f.lower[w]) f.le[w * f.n + u] = 1;
  }
  for (ElementId u = 0; u < f.n; ++u) {
    const auto dist = order.distances_from(u);
    std::vector<ElementId> up;
    for (std::size_t i = 0; i < ctx.reflections().size(); ++i) {
      const ElementId v = ctx.right_mult_reflection(u, i);
      if (ctx.length(v) > ctx.length(u)) up.push_back(v);
    }
    for (ElementId w = 0; w < f.n; ++w) {
      if (!f.leq(u, w)) continue;
      f.abs[w * f.n + u] = dist[w];
      int count = 0;
      for (ElementId v : up) count += f.leq(v, w);
      f.nbar[w * f.n + u] = count;
    }
  }
  return f;
}

class Checker {
 public:
  Checker(std::string_view name, KLContext& kl) : kl_(kl), ctx_(kl.group()) {
    report_.check_name = std::string(name);
    report_.group = ctx_.name();
    report_.stats["witnesses_total"] = 0;
  }

  const GroupContext& ctx() const { return ctx_; }
  KLContext& kl() { return kl_; }
  int len(ElementId u, ElementId w) const { return ctx_.length(w) - ctx_.length(u); }
  std::string pair(ElementId u, ElementId w) const {
    return "(u=" + ctx_.format_element(u) + ", w=" + ctx_.format_element(w) + ")";
  }

  void tested(std::uint64_t k = 1) { report_.pairs_tested += k; }
  void not_applicable() { ++report_.stats["not_applicable"]; }
  void count(const std::string& stat, std::int64_t by = 1) { report_.stats[stat] += by; }
  void maximize(const std::string& stat, std::int64_t v) {
    auto [it, fresh] = report_.stats.try_emplace(stat, v);
    if (!fresh) it->second = std::max(it->second, v);
  }
  void minimize(const std::string& stat, std::int64_t v) {
    auto [it, fresh] = report_.stats.try_emplace(stat, v);
    if (!fresh) it->second = std::min(it->second, v);
  }
  void note(std::string text) {
    if (report_.notes.size() < kWitnessCap) report_.notes.push_back(std::move(text));
  }
  void fail(std::string text) {
    report_.passed = false;
    ++report_.stats["witnesses_total"];
    if (report_.witnesses.size() < kWitnessCap) report_.witnesses.push_back(std::move(text));
  }
  void expect(bool ok, const std::function<std::string()>& describe) {
    if (!ok) fail(describe());
  }

  CheckReport finish() { return std::move(report_); }

 private:
  KLContext& kl_;
  const GroupContext& ctx_;
  CheckReport report_;
};

std::string str(const IntPoly& p) { return to_string(p); }
std::string str(const Integer& x) { return x.str(); }

// sum_{x <= v <= w} R_xv for every x <= w, indexed [w * n + x].
std::vector<IntPoly> r_sums(KLContext& kl, const GroupFacts& f) {
  std::vector<IntPoly> out(f.n * f.n);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId x : f.lower[w]) {
      IntPoly s;
      for (ElementId v : f.lower[w])
        if (f.leq(x, v)) s += kl.r_poly(x, v);
      out[w * f.n + x] = std::move(s);
    }
  return out;
}

// For every u <= w: does some x with u <= x < w carry the flag?
template <class Flag>
bool flagged_below(const GroupFacts& f, ElementId u, ElementId w, Flag&& flag) {
  for (ElementId x : f.lower[w])
    if (x != w && f.leq(u, x) && flag(x)) return true;
  return false;
}

bool is_boolean_interval(const GroupContext& ctx, const GroupFacts& f, ElementId u,
                         ElementId w) {
  const int len = ctx.length(w) - ctx.length(u);
  if (len > 20) return false;
  std::vector<ElementId> members;
  for (ElementId v : f.lower[w])
    if (f.leq(u, v)) members.push_back(v);
  if (members.size() != (std::size_t{1} << len)) return false;
  std::vector<ElementId> atoms;
  for (ElementId v : members)
    if (ctx.length(v) == ctx.length(u) + 1) atoms.push_back(v);
  if (atoms.size() != static_cast<std::size_t>(len)) return false;
  std::vector<std::uint32_t> mask(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t k = 0; k < atoms.size(); ++k)
      if (f.leq(atoms[k], members[i])) mask[i] |= 1u << k;
  std::vector<std::uint32_t> sorted = mask;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      const bool subset = (mask[i] & ~mask[j]) == 0;
      if (subset != f.leq(members[i], members[j])) return false;
    }
  return true;
}

// q^len * p(1/q), as a coefficient vector of length len + 1.
IntPoly reflect_to_degree(const IntPoly& p, int len) {
  std::vector<Integer> c(len + 1);
  for (int j = 0; j <= p.degree() && j <= len; ++j) c[len - j] = p.coeff(j);
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------- R level

CheckReport r_basics(KLContext& kl) {
  Checker c("r_basics", kl);
  const auto& ctx = c.ctx();
  auto& order = kl.order();
  for (ElementId w = 0; w < ctx.size(); ++w)
    for (ElementId u = 0; u < ctx.size(); ++u) {
      c.tested();
      const IntPoly& r = kl.r_poly(u, w);
      const IntPoly& rt = kl.rtilde_poly(u, w);
      if (!order.le(u, w)) {
        c.expect(r.is_zero() && rt.is_zero(), [&] {
          return c.pair(u, w) + ": incomparable but R = " + str(r) + ", R~ = " + str(rt);
        });
        continue;
      }
      c.count("comparable_pairs");
      if (u == w) {
        c.expect(r.is_one() && rt.is_one(), [&] { return c.pair(u, w) + ": R_ww != 1"; });
        continue;
      }
      const int len = c.len(u, w);
      c.expect(r.degree() == len && r.coeff(len) == 1, [&] {
        return c.pair(u, w) + ": R = " + str(r) + " is not monic of degree " +
               std::to_string(len);
      });
      c.expect(eval_int(r, 1) == 0,
               [&] { return c.pair(u, w) + ": R(1) != 0 for R = " + str(r); });
      bool rt_ok = rt.degree() == len && rt.coeff(len) == 1;
      for (const auto& x : rt.coeffs()) rt_ok = rt_ok && x >= 0;
      c.expect(rt_ok, [&] {
        return c.pair(u, w) + ": R~ = " + str(rt) + " is not a nonnegative monic of degree " +
               std::to_string(len);
      });
      bool linked = false;
      std::string why;
      try {
        linked = kl.check_r_rtilde_link(u, w);
      } catch (const InvariantError& e) {
        why = e.what();
      }
      c.count("rtilde_links_checked");
      c.expect(linked, [&] {
        return c.pair(u, w) + ": R~ = " + str(rt) + " does not rebuild R = " + str(r) +
               (why.empty() ? "" : " (" + why + ")");
      });
    }
  return c.finish();
}

CheckReport r_inverse_symmetry(KLContext& kl) {
  Checker c("r_inverse_symmetry", kl);
  const auto& ctx = c.ctx();
  for (ElementId w = 0; w < ctx.size(); ++w)
    for (ElementId u = 0; u < ctx.size(); ++u) {
      c.tested();
      const IntPoly& a = kl.r_poly(u, w);
      const IntPoly& b = kl.r_poly(ctx.inverse(u), ctx.inverse(w));
      c.expect(a == b, [&] {
        return c.pair(u, w) + ": R = " + str(a) + " but R for inverses = " + str(b);
      });
    }
  return c.finish();
}

CheckReport r_alternating_sum(KLContext& kl) {
  Checker c("r_alternating_sum", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      IntPoly sum;
      for (ElementId v : f.lower[w]) {
        if (!f.leq(u, v)) continue;
        IntPoly term = kl.r_poly(u, v) * kl.r_poly(v, w);
        if (c.len(u, v) % 2) term = -term;
        sum += term;
      }
      const IntPoly expected = u == w ? IntPoly{1} : IntPoly();
      c.expect(sum == expected, [&] {
        return c.pair(u, w) + ": alternating sum = " + str(sum);
      });
    }
  return c.finish();
}

CheckReport r_functional_equation(KLContext& kl) {
  Checker c("r_functional_equation", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      const int len = c.len(u, w);
      const IntPoly& r = kl.r_poly(u, w);
      IntPoly rhs = len % 2 ? -r : r;
      c.expect(reflect_to_degree(r, len) == rhs, [&] {
        return c.pair(u, w) + ": q^l R(1/q) != (-1)^l R for R = " + str(r);
      });
    }
  return c.finish();
}

CheckReport r_derivative_edge(KLContext& kl) {
  Checker c("r_derivative_edge", kl);
  const auto& ctx = c.ctx();
  for (ElementId w = 0; w < ctx.size(); ++w)
    for (ElementId u = 0; u < ctx.size(); ++u) {
      c.tested();
      const bool edge = ctx.length(u) < ctx.length(w) &&
                        ctx.is_reflection(ctx.multiply(ctx.inverse(u), w));
      const Integer d = derivative_at_one(kl.r_poly(u, w), 1);
      if (edge) c.count("edges");
      c.expect(d == (edge ? 1 : 0), [&] {
        return c.pair(u, w) + ": R'(1) = " + str(d) + (edge ? " on an edge" : " off an edge");
      });
    }
  return c.finish();
}

CheckReport shifted_nonneg(KLContext& kl) {
  Checker c("shifted_nonneg", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      if (u == w) {
        c.not_applicable();
        continue;
      }
      const int a = f.a(u, w), len = c.len(u, w);
      const IntPoly s = to_shifted(kl.r_poly(u, w));
      for (int k = 0; k <= std::max(len, s.degree()); ++k) {
        const Integer& x = s.coeff(k);
        const bool inside = k >= a && k <= len;
        c.expect(inside ? x > 0 : x == 0, [&] {
          return c.pair(u, w) + ": [(q-1)^" + std::to_string(k) + "]R = " + str(x) +
                 " with a = " + std::to_string(a) + ", l = " + std::to_string(len);
        });
      }
      c.maximize("max_shifted_coefficient",
                 static_cast<std::int64_t>(*std::max_element(s.coeffs().begin(), s.coeffs().end())));
    }
  return c.finish();
}

CheckReport divisibility_order(KLContext& kl) {
  Checker c("divisibility_order", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      if (u == w) {
        c.not_applicable();
        continue;
      }
      const int a = f.a(u, w), len = c.len(u, w);
      const auto split = split_q_minus_one(kl.r_poly(u, w));
      c.expect(static_cast<int>(split.power) == a, [&] {
        return c.pair(u, w) + ": (q-1)-valuation " + std::to_string(split.power) +
               " != a(u, w) = " + std::to_string(a);
      });
      c.expect(a >= 1 && a <= len && (len - a) % 2 == 0, [&] {
        return c.pair(u, w) + ": a = " + std::to_string(a) + " vs l = " + std::to_string(len);
      });
      if (a < len) c.count("pairs_a_below_l");
      c.maximize("max_abs_len", a);
    }
  return c.finish();
}

CheckReport fh_structure(KLContext& kl) {
  Checker c("fh_structure", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      if (u == w) {
        c.not_applicable();
        continue;
      }
      const FHDecomposition fh = kl.fh_vectors_raw(u, w);
      const int a = f.a(u, w);
      const int d = c.len(u, w) - a;
      const auto where = [&] { return c.pair(u, w) + ": "; };
      c.expect(fh.a == a && fh.d == d, [&] {
        return where() + "a/d = " + std::to_string(fh.a) + "/" + std::to_string(fh.d);
      });
      if (fh.a != a || fh.d != d) continue;
      c.expect(fh.f[0] == 1 && fh.h[0] == 1, [&] { return where() + "f_{-1} or h_0 != 1"; });
      for (int i = 0; i <= d; ++i)
        c.expect(fh.f[i] > 0, [&] {
          return where() + "f_" + std::to_string(i - 1) + " = " + str(fh.f[i]);
        });
      c.expect(std::equal(fh.h.begin(), fh.h.end(), fh.h.rbegin()),
               [&] { return where() + "h not palindromic"; });
      IntPoly by_f, by_h;
      for (int i = 0; i <= d; ++i) {
        by_f += q_minus_one_power(d - i) * IntPoly::constant(fh.f[i]);
        by_h += IntPoly::monomial(d - i, fh.h[i]);
      }
      const IntPoly lead = q_minus_one_power(a);
      const IntPoly& r = kl.r_poly(u, w);
      c.expect(lead * by_f == r && lead * by_h == r,
               [&] { return where() + "decomposition does not rebuild R = " + str(r); });
      for (int i = 0; i <= d; ++i) {
        Integer h = 0;
        for (int j = 0; j <= i; ++j) {
          const Integer t = binomial(d - j, d - i) * fh.f[j];
          h += (i - j) % 2 ? -t : t;
        }
        c.expect(h == fh.h[i], [&] {
          return where() + "h_" + std::to_string(i) + " != linear combination of f";
        });
      }
      if (std::any_of(fh.h.begin(), fh.h.end(), [](const Integer& x) { return x < 0; }))
        c.count("pairs_with_negative_h");
      c.maximize("max_d", d);
    }
  return c.finish();
}

CheckReport boolean_criterion(KLContext& kl) {
  Checker c("boolean_criterion", kl);
  const auto f = build_facts(kl);
  const auto& ctx = c.ctx();
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      if (u == w) {
        c.not_applicable();
        continue;
      }
      const int len = c.len(u, w);
      const bool pure = kl.r_poly(u, w) == q_minus_one_power(len);
      const bool full = f.a(u, w) == len;
      bool long_edge = false;
      for (ElementId x : f.lower[w]) {
        if (!f.leq(u, x)) continue;
        for (ElementId y : f.lower[w])
          if (f.leq(x, y) && ctx.length(y) - ctx.length(x) == 3 &&
              ctx.is_reflection(ctx.multiply(ctx.inverse(x), y)))
            long_edge = true;
        if (long_edge) break;
      }
      c.expect(pure == full && full == !long_edge, [&] {
        return c.pair(u, w) + ": R == (q-1)^l is " + (pure ? "true" : "false") +
               ", a == l is " + (full ? "true" : "false") + ", length-3 edge " +
               (long_edge ? "present" : "absent");
      });
      if (full) c.count("pairs_a_equals_l");
      else c.count("pairs_a_below_l");
      if (is_boolean_interval(ctx, f, u, w)) {
        c.count("boolean_intervals");
        c.expect(pure, [&] { return c.pair(u, w) + ": boolean interval but R != (q-1)^l"; });
      }
    }
  return c.finish();
}

CheckReport binomial_bounds(KLContext& kl) {
  Checker c("binomial_bounds", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      if (u == w) {
        c.not_applicable();
        continue;
      }
      const int len = c.len(u, w);
      const IntPoly& r = kl.r_poly(u, w);
      c.expect(coeff_dominated(q_minus_one_power(len), r, Basis::ShiftedQ1) &&
                   coeff_dominated(r, q_power(len), Basis::ShiftedQ1),
               [&] { return c.pair(u, w) + ": R = " + str(r) + " escapes the binomial bounds"; });
    }
  return c.finish();
}

CheckReport brenti_scan(KLContext& kl) {
  Checker c("brenti_scan", kl);
  const auto f = build_facts(kl);
  std::int64_t worst = std::numeric_limits<std::int64_t>::min();
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      if (u == w) {
        c.not_applicable();
        continue;
      }
      const int len = c.len(u, w);
      const IntPoly& r = kl.r_poly(u, w);
      for (int k = 0; k <= len; ++k) {
        const Integer excess = abs(r.coeff(k)) - binomial(len, k);
        worst = std::max(worst, static_cast<std::int64_t>(excess));
        if (excess > 0)
          c.note(c.pair(u, w) + ": |[q^" + std::to_string(k) + "]R| exceeds binom(" +
                 std::to_string(len) + ", " + std::to_string(k) + ") by " + str(excess));
      }
    }
  if (worst != std::numeric_limits<std::int64_t>::min()) c.count("max_excess", worst);
  c.count("excess_found", worst > 0);
  return c.finish();
}

// ------------------------------------------------------- defect and sums

CheckReport deodhar(KLContext& kl) {
  Checker c("deodhar", kl);
  const auto f = build_facts(kl);
  auto& order = kl.order();
  c.maximize("max_defect", 0);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      const int df = f.lbar(u, w) - c.len(u, w);
      c.expect(df >= 0, [&] { return c.pair(u, w) + ": defect " + std::to_string(df); });
      c.expect(df == order.defect(u, w), [&] {
        return c.pair(u, w) + ": neighborhood count disagrees with the defect query";
      });
      c.maximize("max_defect", df);
      if (df > 0) c.count("pairs_with_positive_defect");
    }
  return c.finish();
}

// Shared by the linear and quadratic coefficient theorems.
CheckReport sum_coefficient_check(std::string_view name, KLContext& kl, int degree) {
  Checker c(name, kl);
  const auto f = build_facts(kl);
  const auto sums = r_sums(kl, f);
  std::vector<std::uint8_t> strict(f.n * f.n, 0);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId x : f.lower[w]) {
      if (x == w) continue;
      const int len = c.len(x, w);
      const IntPoly s = to_shifted(sums[w * f.n + x]);
      const Integer excess = s.coeff(degree) - binomial(len, degree);
      c.expect(excess >= 0, [&] {
        return c.pair(x, w) + ": [(q-1)^" + std::to_string(degree) + "] of the R-sum is " +
               str(s.coeff(degree)) + " < binom(" + std::to_string(len) + ", " +
               std::to_string(degree) + ")";
      });
      if (degree == 1) {
        // The linear coefficient counts the outgoing edges at x.
        c.expect(s.coeff(1) == f.lbar(x, w), [&] {
          return c.pair(x, w) + ": [(q-1)](R-sum) = " + str(s.coeff(1)) +
                 " but |N(x, w)| = " + std::to_string(f.lbar(x, w));
        });
      }
      strict[w * f.n + x] = excess > 0;
      c.maximize("max_excess", static_cast<std::int64_t>(excess));
    }
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      const bool by_sum =
          flagged_below(f, u, w, [&](ElementId x) { return strict[w * f.n + x] != 0; });
      const bool by_kl = !kl.kl_poly(u, w).is_one();
      if (by_kl) c.count("singular_intervals");
      c.expect(by_sum == by_kl, [&] {
        return c.pair(u, w) + ": strict somewhere is " + (by_sum ? "true" : "false") +
               " but P_uw = " + str(kl.kl_poly(u, w));
      });
    }
  return c.finish();
}

CheckReport le1_le2_le3(KLContext& kl) {
  Checker c("le1_le2_le3", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      const int a = f.a(u, w), len = c.len(u, w);
      const IntPoly& r = kl.r_poly(u, w);
      if (a == 1) {
        c.count("edges");
        const IntPoly diff = r - q_power((len - 1) / 2) * IntPoly{-1, 1};
        c.expect(diff.is_zero() || split_q_minus_one(diff).power >= 2, [&] {
          return c.pair(u, w) + ": (q-1)^2 does not divide R - q^((l-1)/2)(q-1)";
        });
        c.expect(kl.rtilde_poly(u, w).coeff(1) == 1, [&] {
          return c.pair(u, w) + ": [q]R~ = " + str(kl.rtilde_poly(u, w).coeff(1));
        });
        c.expect(derivative_at_one(r, 2) == len - 1, [&] {
          return c.pair(u, w) + ": R''(1) = " + str(derivative_at_one(r, 2)) +
                 " on an edge of length " + std::to_string(len);
        });
      } else if (a == 2) {
        c.count("distance_two_pairs");
        int m = 0;
        for (ElementId v : f.lower[w])
          if (f.leq(u, v) && f.a(u, v) == 1 && f.a(v, w) == 1) ++m;
        c.expect(derivative_at_one(r, 2) == m, [&] {
          return c.pair(u, w) + ": R''(1) = " + str(derivative_at_one(r, 2)) +
                 " but m(u, w) = " + std::to_string(m);
        });
        c.maximize("max_m", m);
      } else {
        c.not_applicable();
      }
    }
  return c.finish();
}

// --------------------------------------------------------------- KL level

CheckReport kl_basics(KLContext& kl) {
  Checker c("kl_basics", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u = 0; u < f.n; ++u) {
      c.tested();
      const IntPoly& p = kl.kl_poly(u, w);
      if (!f.leq(u, w)) {
        c.expect(p.is_zero(), [&] { return c.pair(u, w) + ": incomparable but P = " + str(p); });
        continue;
      }
      const int len = c.len(u, w);
      if (u == w) {
        c.expect(p.is_one(), [&] { return c.pair(u, w) + ": P_ww = " + str(p); });
        continue;
      }
      c.expect(p.coeff(0) == 1 && 2 * p.degree() <= len - 1, [&] {
        return c.pair(u, w) + ": P = " + str(p) + " violates the degree bound or [q^0]P = 1";
      });
      IntPoly rhs;
      for (ElementId v : f.lower[w])
        if (f.leq(u, v)) rhs += kl.r_poly(u, v) * kl.kl_poly(v, w);
      c.expect(reflect_to_degree(p, len) == rhs, [&] {
        return c.pair(u, w) + ": q^l P(1/q) != sum R_uv P_vw for P = " + str(p);
      });
      c.maximize("max_degree", p.degree());
    }
  return c.finish();
}

CheckReport kl_nonneg(KLContext& kl) {
  Checker c("kl_nonneg", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      const IntPoly& p = kl.kl_poly(u, w);
      c.expect(std::all_of(p.coeffs().begin(), p.coeffs().end(),
                           [](const Integer& x) { return x >= 0; }),
               [&] { return c.pair(u, w) + ": P = " + str(p); });
      c.maximize("max_coefficient", static_cast<std::int64_t>(
                                        *std::max_element(p.coeffs().begin(), p.coeffs().end())));
    }
  return c.finish();
}

CheckReport kl_monotone(KLContext& kl) {
  Checker c("kl_monotone", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w])
      for (ElementId v : f.lower[w]) {
        if (!f.leq(u, v)) continue;
        c.tested();
        const IntPoly& pu = kl.kl_poly(u, w);
        const IntPoly& pv = kl.kl_poly(v, w);
        c.expect(coeff_dominated(pv, pu, Basis::PowerQ), [&] {
          return c.pair(u, w) + " v=" + c.ctx().format_element(v) + ": P_uw = " + str(pu) +
                 " < P_vw = " + str(pv);
        });
      }
  return c.finish();
}

CheckReport mono_equiv(KLContext& kl) {
  Checker c("mono_equiv", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w])
      for (ElementId v : f.lower[w]) {
        if (u == v || !f.leq(u, v)) continue;
        c.tested();
        const IntPoly& pu = kl.kl_poly(u, w);
        const IntPoly& pv = kl.kl_poly(v, w);
        const bool coeffwise = coeff_dominated(pv, pu, Basis::PowerQ) && pu != pv;
        const bool at_one = eval_int(pu, 1) > eval_int(pv, 1);
        if (coeffwise) c.count("strict_triples");
        c.expect(coeffwise == at_one, [&] {
          return c.pair(u, w) + " v=" + c.ctx().format_element(v) + ": P_uw = " + str(pu) +
                 ", P_vw = " + str(pv);
        });
      }
  return c.finish();
}

CheckReport lemma_lm(KLContext& kl) {
  Checker c("lemma_lm", kl);
  const auto f = build_facts(kl);
  auto& order = kl.order();
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      const IntPoly& p = kl.kl_poly(u, w);
      const Integer lhs = c.len(u, w) * eval_int(p, 1) - 2 * derivative_at_one(p, 1);
      Integer rhs = 0;
      for (ElementId v : order.neighborhood(u, w)) rhs += eval_int(kl.kl_poly(v, w), 1);
      c.expect(lhs == rhs, [&] {
        return c.pair(u, w) + ": l P(1) - 2P'(1) = " + str(lhs) + " but neighbor sum = " +
               str(rhs);
      });
      if (!p.is_one())
        c.expect(derivative_at_one(p, 1) > 0,
                 [&] { return c.pair(u, w) + ": singular with P'(1) = 0"; });
    }
  return c.finish();
}

CheckReport nth3_strict_edges(KLContext& kl) {
  Checker c("nth3_strict_edges", kl);
  const auto f = build_facts(kl);
  const auto& ctx = c.ctx();
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      const Integer pu = kl.kl_at_one(u, w);
      if (pu <= 1) {
        c.not_applicable();
        continue;
      }
      c.count("singular_pairs");
      const int df = f.lbar(u, w) - c.len(u, w);
      int strict = 0;
      bool witnessed = false;
      for (const auto& t : ctx.reflections()) {
        const ElementId v = ctx.multiply(u, t.element);
        if (ctx.length(v) <= ctx.length(u) || !f.leq(v, w)) continue;
        const Integer pv = kl.kl_at_one(v, w);
        if (pu > pv) {
          ++strict;
          witnessed = witnessed || pv > 0;
        }
      }
      c.expect(witnessed && strict >= df + 1, [&] {
        return c.pair(u, w) + ": " + std::to_string(strict) + " strict edges, df = " +
               std::to_string(df);
      });
      c.minimize("min_slack", strict - df - 1);
    }
  return c.finish();
}

CheckReport strict_path(KLContext& kl) {
  Checker c("strict_path", kl);
  const auto f = build_facts(kl);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      if (kl.kl_at_one(u, w) <= 1) {
        c.not_applicable();
        continue;
      }
      std::vector<ElementId> path;
      try {
        path = kl.strict_path_to_smooth(u, w);
      } catch (const TheoremViolation& e) {
        c.fail(c.pair(u, w) + ": " + e.what());
        continue;
      }
      bool ok = path.size() >= 2 && path.front() == u && f.leq(path.back(), w) &&
                kl.kl_poly(path.back(), w).is_one();
      for (std::size_t i = 0; ok && i + 1 < path.size(); ++i)
        ok = f.a(path[i], path[i + 1]) == 1 &&
             kl.kl_at_one(path[i], w) > kl.kl_at_one(path[i + 1], w);
      c.expect(ok, [&] { return c.pair(u, w) + ": greedy path is not a strict path to a smooth vertex"; });
      c.maximize("max_path_length", static_cast<std::int64_t>(path.size()) - 1);
    }
  return c.finish();
}

CheckReport smoothness_equivalence(KLContext& kl) {
  Checker c("smoothness_equivalence", kl);
  const auto f = build_facts(kl);
  const auto sums = r_sums(kl, f);
  for (ElementId w = 0; w < f.n; ++w)
    for (ElementId u : f.lower[w]) {
      c.tested();
      const bool by_sum = !flagged_below(f, u, w, [&](ElementId x) {
        return sums[w * f.n + x] != q_power(c.len(x, w));
      });
      const bool by_defect = !flagged_below(
          f, u, w, [&](ElementId x) { return f.lbar(x, w) != c.len(x, w); });
      const bool by_kl = kl.kl_poly(u, w).is_one();
      if (!by_kl) c.count("singular_intervals");
      c.expect(by_sum == by_defect && by_defect == by_kl, [&] {
        return c.pair(u, w) + ": R-sum smooth " + (by_sum ? "yes" : "no") + ", defect smooth " +
               (by_defect ? "yes" : "no") + ", P = " + str(kl.kl_poly(u, w));
      });
    }
  return c.finish();
}

using CheckFn = CheckReport (*)(KLContext&);

CheckFn lookup(std::string_view name) {
  static const std::map<std::string_view, CheckFn> table = {
      {"r_basics", r_basics},
      {"r_inverse_symmetry", r_inverse_symmetry},
      {"r_alternating_sum", r_alternating_sum},
      {"r_functional_equation", r_functional_equation},
      {"r_derivative_edge", r_derivative_edge},
      {"shifted_nonneg", shifted_nonneg},
      {"divisibility_order", divisibility_order},
      {"fh_structure", fh_structure},
      {"boolean_criterion", boolean_criterion},
      {"binomial_bounds", binomial_bounds},
      {"brenti_scan", brenti_scan},
      {"deodhar", deodhar},
      {"dvc_linear", check_dvc},
      {"nth2_quadratic", check_nth2},
      {"le1_le2_le3", le1_le2_le3},
      {"kl_basics", kl_basics},
      {"kl_nonneg", kl_nonneg},
      {"kl_monotone", kl_monotone},
      {"mono_equiv", mono_equiv},
      {"lemma_lm", lemma_lm},
      {"nth3_strict_edges", nth3_strict_edges},
      {"strict_path", strict_path},
      {"smoothness_equivalence", smoothness_equivalence},
  };
  auto it = table.find(name);
  if (it == table.end()) throw UsageError("unknown check '" + std::string(name) + "'");
  return it->second;
}

}  // namespace

std::span<const std::string_view> registered_checks() { return kChecks; }

bool is_registered_check(std::string_view name) {
  return std::find(kChecks.begin(), kChecks.end(), name) != kChecks.end();
}

CheckReport check_dvc(KLContext& kl) { return sum_coefficient_check("dvc_linear", kl, 1); }
CheckReport check_nth2(KLContext& kl) { return sum_coefficient_check("nth2_quadratic", kl, 2); }

CheckReport run_check(std::string_view name, KLContext& kl) { return lookup(name)(kl); }

CheckReport run_check(std::string_view name, const GroupContext& ctx) {
  const CheckFn fn = lookup(name);
  KLContext kl(ctx);
  return fn(kl);
}

std::vector<CheckReport> run_suite(KLContext& kl, std::span<const std::string> selection) {
  std::vector<std::string_view> names;
  if (selection.size() == 1 && selection[0] == "all") {
    names.assign(kChecks.begin(), kChecks.end());
  } else {
    for (const auto& s : selection) {
      lookup(s);
      names.push_back(s);
    }
  }
  std::vector<CheckReport> out;
  out.reserve(names.size());
  for (auto name : names) out.push_back(run_check(name, kl));
  return out;
}

bool all_passed(std::span<const CheckReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.passed; });
}

nlohmann::json report_to_json(const CheckReport& r) {
  nlohmann::json j = {{"check", r.check_name},
                      {"group", r.group},
                      {"pairs", r.pairs_tested},
                      {"passed", r.passed},
                      {"witnesses", r.witnesses},
                      {"stats", r.stats}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string summary_table(std::span<const CheckReport> reports) {
  std::ostringstream os;
  os << std::left << std::setw(26) << "check" << std::setw(7) << "group" << std::right
     << std::setw(10) << "pairs" << "  result  stats\n";
  for (const auto& r : reports) {
    os << std::left << std::setw(26) << r.check_name << std::setw(7) << r.group << std::right
       << std::setw(10) << r.pairs_tested << "  " << (r.passed ? "pass  " : "FAIL  ") << " ";
    bool first = true;
    for (const auto& [k, v] : r.stats) {
      if (k == "witnesses_total" && v == 0) continue;
      os << (first ? "" : ", ") << k << "=" << v;
      first = false;
    }
    os << '\n';
    for (const auto& w : r.witnesses) os << "    witness " << w << '\n';
    for (const auto& n : r.notes) os << "    note " << n << '\n';
  }
  return os.str();
}

}  // namespace coxkl
