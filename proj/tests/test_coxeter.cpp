#include "coxkl/coxeter.hpp"
#include "coxkl/error.hpp"

#include <doctest.h>

#include <string>

using namespace coxkl;

TEST_CASE("group orders and reflection counts") {
  struct Row {
    const char* spec;
    std::size_t order;
    std::size_t refl;
  };
  for (const Row& r : {Row{"A1", 2, 1}, Row{"A2", 6, 3}, Row{"A3", 24, 6}, Row{"A4", 120, 10},
                       Row{"B2", 8, 4}, Row{"C3", 48, 9}, Row{"B3", 48, 9}, Row{"G2", 12, 6},
                       Row{"D4", 192, 12}, Row{"F4", 1152, 24}}) {
    CAPTURE(r.spec);
    const auto g = GroupContext::build(r.spec, 2000);
    CHECK(g.size() == r.order);
    CHECK(g.reflections().size() == r.refl);
    CHECK(static_cast<std::size_t>(g.max_length()) == r.refl);
    CHECK(g.length(g.longest()) == g.max_length());
    CHECK(weyl_group_order(g.datum()) == r.order);
  }
}

TEST_CASE("orders of exceptional types without building") {
  CHECK(weyl_group_order(parse_group_spec("E6")) == 51840);
  CHECK(weyl_group_order(parse_group_spec("E7")) == 2903040);
  CHECK(weyl_group_order(parse_group_spec("E8")) == 696729600);
}

TEST_CASE("coxeter relations") {
  for (const char* spec : {"A3", "B3", "G2", "D4"}) {
    CAPTURE(spec);
    const auto g = GroupContext::build(spec);
    for (int i = 0; i < g.rank(); ++i) {
      CHECK(g.multiply(g.simple(i), g.simple(i)) == g.identity());
      for (int j = 0; j < g.rank(); ++j) {
        const int m = g.datum().coxeter_label(i, j);
        ElementId x = g.identity();
        const ElementId st = g.multiply(g.simple(i), g.simple(j));
        for (int k = 0; k < m; ++k) {
          if (i != j) CHECK((k == 0 || x != g.identity()));
          x = g.multiply(x, st);
        }
        CHECK(x == g.identity());
      }
    }
  }
}

TEST_CASE("group invariants") {
  const auto g = GroupContext::build("B3");
  for (ElementId w = 0; w < g.size(); ++w) {
    CHECK(g.multiply(w, g.inverse(w)) == g.identity());
    CHECK(g.length(g.inverse(w)) == g.length(w));
    CHECK(g.word_of(w).size() == static_cast<std::size_t>(g.length(w)));
    CHECK(g.from_word(g.word_of(w)) == w);
    CHECK(g.parse_element(g.format_element(w)) == w);
    for (Generator s = 0; s < g.rank(); ++s) {
      CHECK(g.right_mult(w, s) == g.multiply(w, g.simple(s)));
      CHECK(g.left_mult(s, w) == g.multiply(g.simple(s), w));
      CHECK(g.is_right_descent(w, s) == (g.length(g.right_mult(w, s)) < g.length(w)));
    }
    if (w > 0) CHECK(g.length(w - 1) <= g.length(w));
    for (std::size_t i = 0; i < g.reflections().size(); ++i)
      CHECK(g.right_mult_reflection(w, i) == g.multiply(w, g.reflections()[i].element));
  }
  for (const auto& t : g.reflections()) {
    CHECK(g.multiply(t.element, t.element) == g.identity());
    CHECK(g.length(t.element) % 2 == 1);
    CHECK(g.is_reflection(t.element));
  }
  // Right descents of w0 are all generators.
  CHECK(g.right_descents(g.longest()).size() == 3);
  CHECK_THROWS_AS(g.first_right_descent(g.identity()), UsageError);
}

TEST_CASE("element parsing") {
  const auto g = GroupContext::build("A3");
  CHECK(g.parse_element("e") == g.identity());
  CHECK(g.parse_element("2 1 3 2") == g.parse_element("2,1,3,2"));
  CHECK(g.length(g.parse_element("2 1 3 2")) == 4);
  CHECK(g.format_element(g.parse_element("3 1")) == "1 3");
  CHECK(g.format_element(g.identity()) == "e");
  CHECK_THROWS_AS(g.parse_element("1 1"), UsageError);
  CHECK_THROWS_AS(g.parse_element("4"), UsageError);
  CHECK_THROWS_AS(g.parse_element("x"), UsageError);
  try {
    g.parse_element("1 zz");
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("zz") != std::string::npos);
  }
}

TEST_CASE("group spec errors") {
  CHECK(parse_group_spec("b3").name() == "B3");
  CHECK_THROWS_AS(parse_group_spec("Z9"), UsageError);
  CHECK_THROWS_AS(parse_group_spec("A"), UsageError);
  CHECK_THROWS_AS(parse_group_spec("G3"), UsageError);
  CHECK_THROWS_AS(parse_group_spec("D2"), UsageError);
  CHECK_THROWS_AS(GroupContext::build("A7"), UsageError);  // over the default guard
  CHECK_THROWS_AS(GroupContext::build("A5", 100), UsageError);
}

TEST_CASE("reflection_between") {
  const auto g = GroupContext::build("A2");
  const ElementId w0 = g.longest();
  CHECK(g.reflection_between(g.identity(), w0).has_value());
  CHECK_FALSE(g.reflection_between(g.identity(), g.parse_element("1 2")).has_value());
  CHECK(g.reflection_between(g.simple(0), g.parse_element("1 2")).has_value());
}
