#include "coxkl/error.hpp"
#include "coxkl/polynomial.hpp"
#include "oracle/kl_oracle.hpp"

#include <doctest.h>

#include <random>

using namespace coxkl;

namespace {

const IntPoly kQm1{-1, 1};

IntPoly random_poly(std::mt19937_64& rng, int max_degree = 8, int max_coeff = 50) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<int> coef(-max_coeff, max_coeff);
  const int d = deg(rng);
  std::vector<Integer> c;
  for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("add") {
  CHECK(kQm1 + kQm1 == IntPoly{-2, 2});
  const IntPoly p{3, 0, -7};
  CHECK(p + IntPoly() == p);
  CHECK(IntPoly{1, -1, 1} + kQm1 == IntPoly{0, 0, 1});
  CHECK((p - p).is_zero());
  CHECK_THROWS_AS(p + IntPoly({1}, Basis::ShiftedQ1), UsageError);
}

TEST_CASE("mul") {
  CHECK(kQm1 * IntPoly{1, -1, 1} == IntPoly{-1, 2, -2, 1});
  const IntPoly p{4, 0, 5, -1};
  CHECK(p * IntPoly{1} == p);
  CHECK(kQm1 * kQm1 * kQm1 == IntPoly{-1, 3, -3, 1});
  CHECK((p * IntPoly()).is_zero());
  CHECK_THROWS_AS(mul(p, IntPoly({1}, Basis::ShiftedQ1)), UsageError);
}

TEST_CASE("to_shifted and from_shifted") {
  CHECK(to_shifted(IntPoly{1, -1, 1}) == IntPoly({1, 1, 1}, Basis::ShiftedQ1));
  CHECK(to_shifted(IntPoly{1}) == IntPoly({1}, Basis::ShiftedQ1));
  CHECK(to_shifted(IntPoly{0, 0, 0, 1}) == IntPoly({1, 3, 3, 1}, Basis::ShiftedQ1));
  CHECK(to_shifted(IntPoly()).is_zero());

  CHECK(from_shifted(IntPoly({0, 1, 1, 1}, Basis::ShiftedQ1)) == IntPoly{-1, 2, -2, 1});
  CHECK(from_shifted(IntPoly({-9}, Basis::ShiftedQ1)) == IntPoly{-9});
  CHECK(from_shifted(IntPoly::monomial(5, 1, Basis::ShiftedQ1)) ==
        IntPoly{-1, 5, -10, 10, -5, 1});

  CHECK_THROWS_AS(to_shifted(IntPoly({1}, Basis::ShiftedQ1)), UsageError);
  CHECK_THROWS_AS(from_shifted(IntPoly{1}), UsageError);
}

TEST_CASE("derivative_at_one") {
  const IntPoly r{-1, 2, -2, 1};
  CHECK(derivative_at_one(r, 1) == 1);
  CHECK(derivative_at_one(r, 2) == 2);
  CHECK(derivative_at_one(r, 3) == 6);
  CHECK(derivative_at_one(r, 4) == 0);
  CHECK(derivative_at_one(IntPoly(), 0) == 0);
  // Shifted representation gives the same answer.
  CHECK(derivative_at_one(to_shifted(r), 2) == 2);
}

TEST_CASE("eval_int") {
  for (std::size_t l = 1; l < 7; ++l) CHECK(eval_int(q_minus_one_power(l), 1) == 0);
  CHECK(eval_int(IntPoly{1, 1}, 1) == 2);
  CHECK(eval_int(IntPoly{-1, 2, -2, 1}, 2) == 3);
  CHECK(eval_int(IntPoly({0, 1, 1, 1}, Basis::ShiftedQ1), 2) == 3);
  CHECK(eval_int(IntPoly(), 17) == 0);
}

TEST_CASE("is_palindromic") {
  CHECK(is_palindromic(IntPoly{1, -1, 1}));
  CHECK(is_palindromic(IntPoly{1, 1}));
  CHECK_FALSE(is_palindromic(IntPoly{1, 2}));
  CHECK(is_palindromic(IntPoly{7}));
  CHECK_THROWS_AS(is_palindromic(IntPoly()), UsageError);
  CHECK_THROWS_AS(is_palindromic(IntPoly({1, 1}, Basis::ShiftedQ1)), UsageError);
}

TEST_CASE("coeff_dominated") {
  const IntPoly r{-1, 2, -2, 1};
  CHECK(coeff_dominated(q_minus_one_power(3), r, Basis::ShiftedQ1));
  CHECK(coeff_dominated(r, r, Basis::PowerQ));
  CHECK(coeff_dominated(r, r, Basis::ShiftedQ1));
  CHECK(coeff_dominated(r, q_power(3), Basis::ShiftedQ1));
  CHECK_FALSE(coeff_dominated(q_power(3), r, Basis::ShiftedQ1));
  // In the q basis r has a -2 where q^3 has 0, and a +2 where q^3 has 0.
  CHECK_FALSE(coeff_dominated(r, q_power(3), Basis::PowerQ));
  CHECK(coeff_dominated(IntPoly(), IntPoly{0, 1}, Basis::PowerQ));
}

TEST_CASE("split_q_minus_one") {
  const auto s = split_q_minus_one(IntPoly{-1, 2, -2, 1});
  CHECK(s.power == 1);
  CHECK(s.cofactor == IntPoly{1, -1, 1});
  CHECK(split_q_minus_one(q_minus_one_power(4)).power == 4);
  CHECK(split_q_minus_one(q_minus_one_power(4)).cofactor == IntPoly{1});
  CHECK(split_q_minus_one(IntPoly{3}).power == 0);
  CHECK_THROWS_AS(split_q_minus_one(IntPoly()), UsageError);
}

TEST_CASE("rendering") {
  CHECK(to_string(IntPoly{-1, 2, -2, 1}) == "q^3 - 2*q^2 + 2*q - 1");
  CHECK(to_string(IntPoly({0, 1, 1, 1}, Basis::ShiftedQ1)) == "(q-1)^3 + (q-1)^2 + (q-1)");
  CHECK(to_string(IntPoly()) == "0");
  CHECK(to_string(IntPoly{0, -1}) == "-q");
  CHECK(to_string(IntPoly{1, 1}) == "q + 1");
}

TEST_CASE("coefficients do not overflow") {
  IntPoly p = q_power(1) + IntPoly{1};
  for (int i = 0; i < 7; ++i) p = p * p;  // (q+1)^128
  CHECK(p.degree() == 128);
  CHECK(p.coeff(64) == binomial(128, 64));
  CHECK(eval_int(p, 1) == Integer(1) << 128);
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("randomized properties") {
  std::mt19937_64 rng(20121025);
  for (int trial = 0; trial < 2000; ++trial) {
    const IntPoly p = random_poly(rng);
    const IntPoly r = random_poly(rng);
    const IntPoly sp = to_shifted(p);
    REQUIRE(from_shifted(sp) == p);
    REQUIRE(sp.degree() == p.degree());
    REQUIRE(to_shifted(p * r) == mul(sp, to_shifted(r)));
    REQUIRE(to_shifted(p + r) == sp + to_shifted(r));
    REQUIRE(eval_int(p, 1) == sp.coeff(0));
    for (std::size_t k = 0; k <= 9; ++k) {
      REQUIRE(derivative_at_one(p, k) == factorial(k) * sp.coeff(k));
      REQUIRE(derivative_at_one(p, k) == oracle::formal_derivative_at_one(p, k));
    }
  }
}
