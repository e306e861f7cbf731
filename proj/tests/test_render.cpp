#include "coxkl/render.hpp"

#include <doctest.h>

#include <sstream>

using namespace coxkl;

TEST_CASE("integer json") {
  CHECK(integer_to_json(Integer(-7)) == nlohmann::json(-7));
  const Integer big = Integer(1) << 100;
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(integer_from_json(nlohmann::json(12)) == 12);
}

TEST_CASE("polynomial json round trip") {
  const IntPoly p{-1, 2, -2, 1};
  const auto j = poly_to_json(p);
  CHECK(j["basis"] == "q");
  CHECK(j["coeffs"] == nlohmann::json::array({-1, 2, -2, 1}));
  CHECK(poly_from_json(j) == p);
  const IntPoly s = to_shifted(p);
  CHECK(poly_to_json(s)["basis"] == "q-1");
  CHECK(poly_from_json(poly_to_json(s)) == s);
  CHECK(poly_from_json(poly_to_json(IntPoly())).is_zero());
}

TEST_CASE("interval export") {
  const auto g = GroupContext::build("A2");
  BruhatOrder b(g);
  const auto d = b.interval(g.identity(), g.longest());
  const auto j = interval_to_json(g, d);
  CHECK(j["vertices"] == 6);
  CHECK(j["edge_count"] == 9);
  CHECK(j["edges"].size() == 9);
  CHECK(j["abs_len"] == 1);
  CHECK(j["group"] == "A2");
  const std::string dot = interval_to_dot(g, d);
  CHECK(dot.rfind("// 6 vertices, 9 edges", 0) == 0);
  CHECK(dot.find("digraph") != std::string::npos);
}

TEST_CASE("cache round trip") {
  const auto g = GroupContext::build("A3");
  std::stringstream buf;
  {
    KLContext kl(g);
    kl.fill(PolyKind::KL);
    CHECK(save_cache(buf, kl) > 0);
  }
  const std::string saved = buf.str();
  KLContext fresh(g);
  std::istringstream in(saved + "not json\n{\"group\":\"B2\",\"kind\":\"R\"}\n");
  const auto st = load_cache(in, fresh);
  CHECK(st.rejected == 1);
  CHECK(st.foreign == 1);
  CHECK(st.accepted > 0);
  for (ElementId w = 0; w < g.size(); ++w) CHECK(fresh.table(PolyKind::KL).column_done(w));
  KLContext ref(g);
  CHECK(fresh.kl_poly(g.identity(), g.parse_element("2 1 3 2")) == IntPoly{1, 1});
  CHECK(fresh.r_poly(g.identity(), g.longest()) == ref.r_poly(g.identity(), g.longest()));
}

TEST_CASE("corrupted cache entries are rejected") {
  const auto g = GroupContext::build("A2");
  KLContext kl(g);
  std::istringstream in(
      R"({"kind":"KL","group":"A2","u":"e","w":"1 2 1","coeffs":[1,-1]})"
      "\n"
      R"({"kind":"R","group":"A2","u":"1","w":"2","coeffs":[-1,1]})"
      "\n");
  const auto st = load_cache(in, kl);
  CHECK(st.accepted == 0);
  CHECK(st.rejected == 2);
  CHECK(kl.kl_poly(g.identity(), g.longest()).is_one());
}
