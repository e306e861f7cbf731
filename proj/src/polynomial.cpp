#include "coxkl/polynomial.hpp"

#include "coxkl/error.hpp"

#include <algorithm>
#include <sstream>

namespace coxkl {

const char* basis_name(Basis b) { return b == Basis::PowerQ ? "q" : "q-1"; }

IntPoly::IntPoly(std::vector<Integer> coeffs, Basis basis)
    : coeffs_(std::move(coeffs)), basis_(basis) {
  normalize();
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs, Basis basis)
    : basis_(basis) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c, Basis basis) {
  return IntPoly(std::vector<Integer>{c}, basis);
}

IntPoly IntPoly::monomial(std::size_t n, const Integer& c, Basis basis) {
  std::vector<Integer> v(n + 1);
  v[n] = c;
  return IntPoly(std::move(v), basis);
}

bool IntPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Integer& IntPoly::coeff(std::size_t n) const {
  static const Integer zero = 0;
  return n < coeffs_.size() ? coeffs_[n] : zero;
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v), basis_);
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void IntPoly::require_same_basis(const IntPoly& r, const char* op) const {
  if (basis_ != r.basis_)
    throw UsageError(std::string("IntPoly ") + op + ": basis mismatch (" +
                     basis_name(basis_) + " vs " + basis_name(r.basis_) + ")");
}

IntPoly& IntPoly::operator+=(const IntPoly& r) {
  require_same_basis(r, "add");
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& r) {
  require_same_basis(r, "sub");
  if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& r) { return *this = mul(*this, r); }

IntPoly IntPoly::operator-() const {
  IntPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

IntPoly add(const IntPoly& p, const IntPoly& r) { return p + r; }
IntPoly sub(const IntPoly& p, const IntPoly& r) { return p - r; }

IntPoly mul(const IntPoly& p, const IntPoly& r) {
  if (p.basis() != r.basis())
    throw UsageError(std::string("IntPoly mul: basis mismatch (") +
                     basis_name(p.basis()) + " vs " + basis_name(r.basis()) + ")");
  if (p.is_zero() || r.is_zero()) return IntPoly({}, p.basis());
  auto a = p.coeffs();
  auto b = r.coeffs();
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return IntPoly(std::move(out), p.basis());
}

IntPoly to_shifted(const IntPoly& p) {
  if (p.basis() != Basis::PowerQ)
    throw UsageError("to_shifted: polynomial is already in the (q-1) basis");
  // Each synthetic division by (q-1) peels off the next Taylor coefficient
  // at 1 as the remainder.
  std::vector<Integer> rest(p.coeffs().begin(), p.coeffs().end());
  std::vector<Integer> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    for (std::size_t i = rest.size() - 1; i > 0; --i) rest[i - 1] += rest[i];
    out.push_back(rest.front());
    rest.erase(rest.begin());
  }
  return IntPoly(std::move(out), Basis::ShiftedQ1);
}

IntPoly from_shifted(const IntPoly& p) {
  if (p.basis() != Basis::ShiftedQ1)
    throw UsageError("from_shifted: polynomial is not in the (q-1) basis");
  auto c = p.coeffs();
  std::vector<Integer> acc;
  for (std::size_t k = c.size(); k-- > 0;) {
    // acc <- acc * (q - 1) + c[k]
    acc.insert(acc.begin(), Integer(0));
    for (std::size_t i = 0; i + 1 < acc.size(); ++i) acc[i] -= acc[i + 1];
    acc[0] += c[k];
  }
  return IntPoly(std::move(acc), Basis::PowerQ);
}

IntPoly in_basis(const IntPoly& p, Basis b) {
  if (p.basis() == b) return p;
  return b == Basis::ShiftedQ1 ? to_shifted(p) : from_shifted(p);
}

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer derivative_at_one(const IntPoly& p, std::size_t k) {
  const IntPoly s = in_basis(p, Basis::ShiftedQ1);
  if (static_cast<int>(k) > s.degree()) return 0;
  return factorial(k) * s.coeff(k);
}

Integer eval_int(const IntPoly& p, const Integer& c) {
  const Integer x = p.basis() == Basis::PowerQ ? c : c - 1;
  Integer v = 0;
  auto cs = p.coeffs();
  for (std::size_t k = cs.size(); k-- > 0;) v = v * x + cs[k];
  return v;
}

bool is_palindromic(const IntPoly& p) {
  if (p.is_zero()) throw UsageError("is_palindromic: zero polynomial");
  if (p.basis() != Basis::PowerQ)
    throw UsageError("is_palindromic: polynomial must be in the q basis");
  auto c = p.coeffs();
  return std::equal(c.begin(), c.begin() + c.size() / 2, c.rbegin());
}

bool coeff_dominated(const IntPoly& p, const IntPoly& r, Basis b) {
  const IntPoly x = in_basis(p, b);
  const IntPoly y = in_basis(r, b);
  const std::size_t n = std::max(x.coeffs().size(), y.coeffs().size());
  for (std::size_t i = 0; i < n; ++i)
    if (x.coeff(i) > y.coeff(i)) return false;
  return true;
}

QMinusOneSplit split_q_minus_one(const IntPoly& p) {
  if (p.is_zero()) throw UsageError("split_q_minus_one: zero polynomial");
  const IntPoly pq = in_basis(p, Basis::PowerQ);
  std::vector<Integer> rest(pq.coeffs().begin(), pq.coeffs().end());
  QMinusOneSplit out;
  for (;;) {
    std::vector<Integer> quot = rest;
    for (std::size_t i = quot.size() - 1; i > 0; --i) quot[i - 1] += quot[i];
    if (quot.front() != 0) break;  // remainder p(1) is nonzero

    quot.erase(quot.begin());
    rest = std::move(quot);
    ++out.power;
  }
  out.cofactor = IntPoly(std::move(rest), Basis::PowerQ);
  return out;
}

IntPoly reciprocal(const IntPoly& p) {
  std::vector<Integer> c(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(c), p.basis());
}

IntPoly q_power(std::size_t n, Basis b) {
  return in_basis(IntPoly::monomial(n, 1, Basis::PowerQ), b);
}

IntPoly q_minus_one_power(std::size_t n, Basis b) {
  return in_basis(IntPoly::monomial(n, 1, Basis::ShiftedQ1), b);
}

namespace {

std::string power_term(Basis b, std::size_t n) {
  const std::string x = b == Basis::PowerQ ? "q" : "(q-1)";
  if (n == 1) return x;
  return x + "^" + std::to_string(n);
}

}  // namespace

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto c = p.coeffs();
  for (std::size_t n = c.size(); n-- > 0;) {
    if (c[n] == 0) continue;
    Integer mag = abs(c[n]);
    if (first) {
      if (c[n] < 0) os << "-";
    } else {
      os << (c[n] < 0 ? " - " : " + ");
    }
    first = false;
    if (n == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << power_term(p.basis(), n);
    }
  }
  return os.str();
}

}  // namespace coxkl
