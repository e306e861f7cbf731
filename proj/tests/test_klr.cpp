#include "coxkl/error.hpp"
#include "coxkl/klr.hpp"
#include "oracle/kl_oracle.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <utility>

using namespace coxkl;

TEST_CASE("A2 frozen values") {
  const auto g = GroupContext::build("A2");
  KLContext kl(g);
  const ElementId e = g.identity(), w0 = g.longest();
  CHECK(kl.r_poly(e, w0) == IntPoly{-1, 2, -2, 1});
  CHECK(to_shifted(kl.r_poly(e, w0)) == IntPoly({0, 1, 1, 1}, Basis::ShiftedQ1));
  CHECK(kl.rtilde_poly(e, w0) == IntPoly{0, 1, 0, 1});
  CHECK(kl.r_poly(e, g.simple(0)) == IntPoly{-1, 1});
  CHECK(kl.sum_r_over(e, w0) == q_power(3));
  CHECK(kl.kl_poly(e, w0).is_one());

  const auto fh = kl.fh_vectors(e, w0);
  CHECK(fh.a == 1);
  CHECK(fh.d == 2);
  CHECK(fh.f == std::vector<Integer>{1, 1, 1});
  CHECK(fh.h == std::vector<Integer>{1, -1, 1});
  CHECK(kl.check_r_rtilde_link(e, w0));
}

TEST_CASE("A3 frozen values") {
  const auto g = GroupContext::build("A3");
  KLContext kl(g);
  const ElementId e = g.identity();
  const ElementId w = g.parse_element("2 1 3 2");
  CHECK(kl.r_poly(e, w) == IntPoly{1, -3, 4, -3, 1});
  CHECK(to_shifted(kl.r_poly(e, w)) == IntPoly({0, 0, 1, 1, 1}, Basis::ShiftedQ1));
  CHECK(kl.kl_poly(e, w) == IntPoly{1, 1});
  CHECK(kl.sum_r_over(e, w) == IntPoly{0, 0, -1, 1, 1});
  CHECK(to_shifted(kl.sum_r_over(e, w)) == IntPoly({1, 5, 8, 5, 1}, Basis::ShiftedQ1));
  CHECK(kl.order().neighborhood(e, w).size() == 5);
  CHECK(kl.order().defect(e, w) == 1);

  const auto fh = kl.fh_vectors(e, w);
  CHECK(fh.a == 2);
  CHECK(fh.f == std::vector<Integer>{1, 1, 1});

  CHECK(kl.is_singular(e, w));
  CHECK_FALSE(kl.is_rationally_smooth(e, w));
  CHECK(kl.strict_edges(e, w).size() >= 2);
  const auto path = kl.strict_path_to_smooth(e, w);
  REQUIRE(path.size() >= 2);
  CHECK(path.front() == e);
  CHECK(kl.kl_at_one(path.back(), w) == 1);
  for (std::size_t i = 1; i < path.size(); ++i) {
    CHECK(kl.order().is_edge(path[i - 1], path[i]));
    CHECK(kl.kl_at_one(path[i], w) < kl.kl_at_one(path[i - 1], w));
  }
  CHECK_THROWS_AS(kl.strict_path_to_smooth(e, g.longest()), UsageError);
}

TEST_CASE("A3 singular locus") {
  const auto g = GroupContext::build("A3");
  KLContext kl(g);
  const std::set<std::pair<std::string, std::string>> expected{
      {"e", "2 1 3 2"}, {"2", "2 1 3 2"}, {"e", "1 2 3 2 1"},
      {"1", "1 2 3 2 1"}, {"3", "1 2 3 2 1"}, {"1 3", "1 2 3 2 1"}};
  std::set<std::pair<std::string, std::string>> found;
  std::size_t comparable = 0;
  for (ElementId w = 0; w < g.size(); ++w)
    for (ElementId u = 0; u < g.size(); ++u) {
      if (!kl.order().le(u, w)) continue;
      ++comparable;
      if (kl.is_singular(u, w)) {
        CHECK(kl.kl_poly(u, w) == IntPoly{1, 1});
        found.emplace(g.format_element(u), g.format_element(w));
      }
      CHECK(kl.is_singular(u, w) == !kl.is_rationally_smooth(u, w));
    }
  CHECK(comparable == 213);
  CHECK(found == expected);
}

TEST_CASE("tables agree with the oracle") {
  for (const char* spec : {"A3", "B2", "G2", "B3"}) {
    CAPTURE(spec);
    const auto g = GroupContext::build(spec);
    const auto t = oracle::build_tables(g);
    KLContext kl(g);
    for (ElementId w = 0; w < g.size(); ++w)
      for (ElementId u = 0; u < g.size(); ++u) {
        if (!t.leq(u, w)) continue;
        REQUIRE(kl.r_poly(u, w) == t.R(u, w));
        REQUIRE(kl.kl_poly(u, w) == t.P(u, w));
      }
  }
}

TEST_CASE("fill marks every column") {
  const auto g = GroupContext::build("B2");
  KLContext kl(g);
  kl.fill(PolyKind::KL);
  for (ElementId w = 0; w < g.size(); ++w) {
    CHECK(kl.table(PolyKind::KL).column_done(w));
    CHECK(kl.table(PolyKind::R).column_done(w));
  }
}

TEST_CASE("incomparable pairs") {
  const auto g = GroupContext::build("A2");
  KLContext kl(g);
  const ElementId s1 = g.simple(0), s2 = g.simple(1);
  CHECK(kl.r_poly(s1, s2).is_zero());
  CHECK(kl.kl_poly(s1, s2).is_zero());
  CHECK_THROWS_AS(kl.sum_r_over(s1, s2), UsageError);
  CHECK_THROWS_AS(kl.fh_vectors(s1, s2), UsageError);
}

TEST_CASE("seeding") {
  const auto g = GroupContext::build("A2");
  KLContext kl(g);
  const ElementId e = g.identity(), w0 = g.longest();
  CHECK_FALSE(kl.seed(PolyKind::R, e, w0, IntPoly{1, 1}));
  CHECK_FALSE(kl.seed(PolyKind::KL, e, w0, IntPoly{1, -1}));
  CHECK_FALSE(kl.seed(PolyKind::KL, g.simple(0), g.simple(1), IntPoly{1}));
  CHECK(kl.seed(PolyKind::R, e, w0, IntPoly{-1, 2, -2, 1}));
}

TEST_CASE("kind names") {
  CHECK(std::string(kind_name(PolyKind::Rtilde)) == "Rt");
  CHECK(parse_kind("KL") == PolyKind::KL);
  CHECK_THROWS_AS(parse_kind("S"), UsageError);
}
