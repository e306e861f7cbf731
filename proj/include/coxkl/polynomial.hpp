#pragma once

// Dense univariate polynomials with exact integer coefficients.
//
// A polynomial is stored relative to one of two bases: powers of q, or
// powers of (q-1).  Both views describe the same element of Z[q]; the
// conversion between them is exact and division-free (iterated synthetic
// division by q-1).  The zero polynomial has an empty coefficient vector and
// degree -1.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace coxkl {

using Integer = boost::multiprecision::cpp_int;

enum class Basis { PowerQ, ShiftedQ1 };

const char* basis_name(Basis b);  // "q" or "q-1"

class IntPoly {
 public:
  IntPoly() = default;  // zero in the q basis
  explicit IntPoly(std::vector<Integer> coeffs, Basis basis = Basis::PowerQ);
  IntPoly(std::initializer_list<long long> coeffs, Basis basis = Basis::PowerQ);

  static IntPoly constant(const Integer& c, Basis basis = Basis::PowerQ);
  // c * X^n where X is q or (q-1) depending on the basis.
  static IntPoly monomial(std::size_t n, const Integer& c = 1,
                          Basis basis = Basis::PowerQ);

  Basis basis() const { return basis_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of X^n; zero past the degree.
  const Integer& coeff(std::size_t n) const;
  std::span<const Integer> coeffs() const { return coeffs_; }

  // Multiply by X^k.
  IntPoly shifted_up(std::size_t k) const;

  IntPoly& operator+=(const IntPoly& r);
  IntPoly& operator-=(const IntPoly& r);
  IntPoly& operator*=(const IntPoly& r);
  IntPoly operator-() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();
  void require_same_basis(const IntPoly& r, const char* op) const;

  std::vector<Integer> coeffs_;
  Basis basis_ = Basis::PowerQ;
};

IntPoly add(const IntPoly& p, const IntPoly& r);
IntPoly sub(const IntPoly& p, const IntPoly& r);
IntPoly mul(const IntPoly& p, const IntPoly& r);

inline IntPoly operator+(IntPoly p, const IntPoly& r) { return p += r; }
inline IntPoly operator-(IntPoly p, const IntPoly& r) { return p -= r; }
inline IntPoly operator*(const IntPoly& p, const IntPoly& r) { return mul(p, r); }

// Rewrite a q-basis polynomial in powers of (q-1).  Coefficient n of the
// result is the n-th Taylor coefficient at q = 1.  Throws UsageError on a
// polynomial that is already shifted.
IntPoly to_shifted(const IntPoly& p);
// Inverse of to_shifted.
IntPoly from_shifted(const IntPoly& p);
// Either of the above, or a copy when p is already in the requested basis.
IntPoly in_basis(const IntPoly& p, Basis b);

// p^{(k)}(1), exactly.  Equals k! times the (q-1)^k coefficient.
Integer derivative_at_one(const IntPoly& p, std::size_t k);
// Value of p at q = c (whatever basis p is stored in).
Integer eval_int(const IntPoly& p, const Integer& c);

// Coefficients read the same reversed, from degree 0 up to deg p.
// q basis only; zero polynomial is a usage error.
bool is_palindromic(const IntPoly& p);

// Every coefficient of p is <= the matching coefficient of r, both read in
// basis b.
bool coeff_dominated(const IntPoly& p, const IntPoly& r, Basis b);

// Largest a with (q-1)^a dividing p, and p / (q-1)^a in the q basis.
// Zero polynomial is a usage error.
struct QMinusOneSplit {
  std::size_t power = 0;
  IntPoly cofactor;
};
QMinusOneSplit split_q_minus_one(const IntPoly& p);

// X^deg * p(1/X): the coefficient vector reversed.
IntPoly reciprocal(const IntPoly& p);

// q^n expanded in the requested basis.
IntPoly q_power(std::size_t n, Basis b = Basis::PowerQ);
// (q-1)^n expanded in the requested basis.
IntPoly q_minus_one_power(std::size_t n, Basis b = Basis::PowerQ);

Integer binomial(long long n, long long k);
Integer factorial(std::size_t n);

// "q^3 - 2*q^2 + 2*q - 1" or "(q-1)^3 + (q-1)^2 + (q-1)".
std::string to_string(const IntPoly& p);

}  // namespace coxkl
