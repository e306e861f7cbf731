#pragma once

// JSON and DOT renderings of polynomials and intervals, plus the
// newline-delimited JSON polynomial cache.

#include "coxkl/bruhat.hpp"
#include "coxkl/klr.hpp"
#include "coxkl/polynomial.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace coxkl {

// Integers that fit in 64 bits become JSON numbers, larger ones decimal
// strings.  integer_from_json accepts both.
nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

// {"basis":"q"|"q-1","coeffs":[c0,c1,...]}
nlohmann::json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);

nlohmann::json interval_to_json(const GroupContext& ctx, const IntervalData& d);
// Vertices labeled by reduced word and grouped by rank; every edge carries
// len = l(y) - l(x).  The first line is a comment with the counts.
std::string interval_to_dot(const GroupContext& ctx, const IntervalData& d);

struct CacheLoadStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;  // malformed or failing invariants
  std::size_t foreign = 0;   // records for another group
};

// Records: {"kind":"R"|"Rt"|"KL","group":"A3","u":"<word>","w":"<word>",
// "coeffs":[...]} with coefficients in the q basis.  Only comparable pairs
// from completed columns are written.
std::size_t save_cache(std::ostream& os, const KLContext& kl);
CacheLoadStats load_cache(std::istream& is, KLContext& kl);

}  // namespace coxkl
