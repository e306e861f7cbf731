#include "coxkl/bruhat.hpp"
#include "coxkl/error.hpp"
#include "oracle/kl_oracle.hpp"

#include <doctest.h>

#include <string>

using namespace coxkl;

TEST_CASE("A2 interval graph") {
  const auto g = GroupContext::build("A2");
  BruhatOrder b(g);
  const auto full = b.interval(g.identity(), g.longest());
  CHECK(full.members.size() == 6);
  CHECK(full.edges.size() == 9);
  CHECK(full.abs_len == 1);
  CHECK(full.nbhd.size() == 3);
  CHECK(full.defect == 0);
  const auto small = b.interval(g.identity(), g.parse_element("1 2"));
  CHECK(small.members.size() == 4);
  CHECK(small.edges.size() == 4);
  CHECK(small.abs_len == 2);
}

TEST_CASE("boolean interval of length 3 in A3") {
  const auto g = GroupContext::build("A3");
  BruhatOrder b(g);
  const auto d = b.interval(g.identity(), g.parse_element("1 2 3"));
  CHECK(d.members.size() == 8);
  CHECK(d.edges.size() == 12);
  CHECK(d.abs_len == 3);
}

TEST_CASE("comparability agrees with reachability") {
  for (const char* spec : {"A3", "B3", "G2"}) {
    CAPTURE(spec);
    const auto g = GroupContext::build(spec);
    const auto le = oracle::bruhat_by_reachability(g);
    BruhatOrder b(g);
    const std::size_t n = g.size();
    for (ElementId w = 0; w < n; ++w)
      for (ElementId u = 0; u < n; ++u) REQUIRE(b.le(u, w) == (le[w * n + u] != 0));
  }
}

TEST_CASE("absolute length") {
  const auto g = GroupContext::build("B3");
  BruhatOrder b(g);
  for (ElementId u = 0; u < g.size(); u += 5) {
    const auto dist = b.distances_from(u);
    for (ElementId w = 0; w < g.size(); ++w) {
      if (!b.le(u, w)) continue;
      const int a = b.absolute_length(u, w);
      const int l = g.length(w) - g.length(u);
      CHECK(a == dist[w]);
      CHECK(a <= l);
      CHECK((l - a) % 2 == 0);
      CHECK((a == 1) == g.reflection_between(u, w).has_value());
      CHECK(b.defect(u, w) >= 0);
    }
  }
}

TEST_CASE("interval distance equals whole-graph distance") {
  const auto g = GroupContext::build("A3");
  BruhatOrder b(g);
  for (ElementId u = 0; u < g.size(); ++u)
    for (ElementId w = 0; w < g.size(); ++w) {
      if (!b.le(u, w)) continue;
      const auto d = b.interval(u, w);
      CHECK(bfs_distance(d.edges, u, w) == d.abs_len);
    }
}

TEST_CASE("m_count") {
  const auto g = GroupContext::build("A2");
  BruhatOrder b(g);
  // Length-2 intervals have two atoms and two 2-paths.
  CHECK(b.m_count(g.identity(), g.parse_element("1 2")) == 2);
  CHECK_THROWS_AS(b.m_count(g.identity(), g.longest()), UsageError);
}

TEST_CASE("incomparable pairs are rejected") {
  const auto g = GroupContext::build("A2");
  BruhatOrder b(g);
  const ElementId s1 = g.simple(0), s2 = g.simple(1);
  CHECK_FALSE(b.le(s1, s2));
  try {
    b.interval(s1, s2);
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("incomparable") != std::string::npos);
  }
  CHECK_THROWS_AS(b.absolute_length(s1, s2), UsageError);
  CHECK_THROWS_AS(b.le(0, 99), UsageError);
}
