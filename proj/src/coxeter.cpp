#include "coxkl/coxeter.hpp"

#include "coxkl/error.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

namespace coxkl {

namespace {

struct RankRange {
  int lo, hi;
};

RankRange supported_ranks(Family f) {
  switch (f) {
    case Family::A: return {1, 7};
    case Family::B:
    case Family::C: return {2, 5};
    case Family::D: return {4, 5};
    case Family::E: return {6, 8};
    case Family::F: return {4, 4};
    case Family::G: return {2, 2};
  }
  return {0, -1};
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

void link(std::vector<int>& c, int n, int i, int j, int aij = -1, int aji = -1) {
  c[i * n + j] = aij;
  c[j * n + i] = aji;
}

constexpr std::size_t kReflectionTableLimit = std::size_t{1} << 24;

}  // namespace

CoxeterDatum CoxeterDatum::make(Family family, int rank) {
  const RankRange r = supported_ranks(family);
  if (rank < r.lo || rank > r.hi) {
    std::ostringstream os;
    os << "rank " << rank << " out of supported range " << r.lo << ".." << r.hi
       << " for type " << family_letter(family);
    throw UsageError(os.str());
  }
  CoxeterDatum d;
  d.family = family;
  d.rank = rank;
  const int n = rank;
  d.cartan.assign(n * n, 0);
  for (int i = 0; i < n; ++i) d.cartan[i * n + i] = 2;
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(d.cartan, n, i, i + 1);
      break;
    case Family::B:
      // alpha_n short: s_n(alpha_{n-1}) = alpha_{n-1} + 2 alpha_n.
      for (int i = 0; i + 2 < n; ++i) link(d.cartan, n, i, i + 1);
      link(d.cartan, n, n - 2, n - 1, -1, -2);
      break;
    case Family::C:
      for (int i = 0; i + 2 < n; ++i) link(d.cartan, n, i, i + 1);
      link(d.cartan, n, n - 2, n - 1, -2, -1);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(d.cartan, n, i, i + 1);
      link(d.cartan, n, n - 3, n - 1);
      break;
    case Family::E:
      // Bourbaki numbering: 1-3-4-5-6(-7-8), 2 attached to 4.
      link(d.cartan, n, 0, 2);
      link(d.cartan, n, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(d.cartan, n, i, i + 1);
      break;
    case Family::F:
      link(d.cartan, n, 0, 1);
      link(d.cartan, n, 1, 2, -1, -2);
      link(d.cartan, n, 2, 3);
      break;
    case Family::G:
      link(d.cartan, n, 0, 1, -3, -1);
      break;
  }
  return d;
}

int CoxeterDatum::coxeter_label(int i, int j) const {
  if (i == j) return 1;
  switch (cartan_at(i, j) * cartan_at(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw InvariantError("Cartan matrix is not of finite crystallographic type");
}

std::string CoxeterDatum::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

CoxeterDatum parse_group_spec(std::string_view spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2) throw UsageError("invalid group spec '" + std::string(spec) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  const std::string_view letters = "ABCDEFG";
  const auto pos = letters.find(letter);
  if (pos == std::string_view::npos)
    throw UsageError("unknown Coxeter family '" + std::string(1, s[0]) + "' in '" +
                     std::string(spec) + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])) || rank > 100)
      throw UsageError("invalid rank '" + s.substr(1) + "' in '" + std::string(spec) + "'");
    rank = rank * 10 + (s[i] - '0');
  }
  return CoxeterDatum::make(static_cast<Family>(pos), rank);
}

std::uint64_t weyl_group_order(const CoxeterDatum& d) {
  auto fact = [](int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const int n = d.rank;
  switch (d.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * fact(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

std::size_t GroupContext::MatrixHash::operator()(const std::vector<int>& m) const {
  return boost::hash_range(m.begin(), m.end());
}

std::vector<int> GroupContext::matmul(const std::vector<int>& a,
                                      const std::vector<int>& b) const {
  const int n = rank();
  std::vector<int> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

int GroupContext::compute_length(const std::vector<int>& m) const {
  const int n = rank();
  int inversions = 0;
  for (const auto& beta : roots_) {
    // Image of a root is a root, so the sign of any nonzero coordinate decides.
    for (int i = 0; i < n; ++i) {
      int v = 0;
      for (int j = 0; j < n; ++j) v += m[i * n + j] * beta[j];
      if (v != 0) {
        inversions += v < 0;
        break;
      }
    }
  }
  return inversions;
}

GroupContext GroupContext::build(std::string_view spec, std::uint64_t guard) {
  return build(parse_group_spec(spec), guard);
}

GroupContext GroupContext::build(const CoxeterDatum& datum, std::uint64_t guard) {
  const RankRange r = supported_ranks(datum.family);
  if (datum.rank < r.lo || datum.rank > r.hi ||
      datum.cartan.size() != static_cast<std::size_t>(datum.rank * datum.rank))
    throw UsageError("unsupported Coxeter datum " + datum.name());
  if (CoxeterDatum::make(datum.family, datum.rank).cartan != datum.cartan)
    throw UsageError("Cartan matrix does not match type " + datum.name());
  const std::uint64_t order = weyl_group_order(datum);
  if (order > guard)
    throw UsageError("group " + datum.name() + " has order " + std::to_string(order) +
                     ", exceeding the order guard " + std::to_string(guard));

  GroupContext g;
  g.datum_ = datum;
  const int n = datum.rank;
  // Throws on a Cartan matrix outside finite type.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) datum.coxeter_label(i, j);

  // s_i fixes every alpha_j except for the alpha_i component.
  for (int i = 0; i < n; ++i) {
    std::vector<int> m(n * n, 0);
    for (int j = 0; j < n; ++j) m[j * n + j] = 1;
    for (int j = 0; j < n; ++j) m[i * n + j] -= datum.cartan_at(i, j);
    g.simple_matrices_.push_back(std::move(m));
  }

  // Positive roots, each with the matrix of its reflection.
  std::vector<std::vector<int>> root_reflections;
  std::map<std::vector<int>, std::size_t> root_seen;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    root_seen.emplace(e, g.roots_.size());
    g.roots_.push_back(std::move(e));
    root_reflections.push_back(g.simple_matrices_[i]);
  }
  for (std::size_t k = 0; k < g.roots_.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      const std::vector<int> beta = g.roots_[k];
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += datum.cartan_at(i, j) * beta[j];
      if (pairing == 0) continue;
      std::vector<int> image = beta;
      image[i] -= pairing;
      if (std::any_of(image.begin(), image.end(), [](int c) { return c < 0; }))
        continue;  // beta was alpha_i itself
      if (root_seen.count(image)) continue;
      root_seen.emplace(image, g.roots_.size());
      g.roots_.push_back(std::move(image));
      root_reflections.push_back(
          g.matmul(g.matmul(g.simple_matrices_[i], root_reflections[k]),
                   g.simple_matrices_[i]));
    }
  }

  // Breadth-first enumeration by right multiplication.
  std::vector<int> id(n * n, 0);
  for (int j = 0; j < n; ++j) id[j * n + j] = 1;
  g.elements_.push_back({id, 0});
  g.index_.emplace(std::move(id), 0);
  std::vector<ElementId> parent{0};
  std::vector<Generator> last_gen{-1};
  g.right_simple_.reserve(order * n);
  for (std::size_t k = 0; k < g.elements_.size(); ++k) {
    if (g.elements_.size() > order)
      throw InvariantError("enumeration exceeded the expected group order");
    for (Generator s = 0; s < n; ++s) {
      std::vector<int> m = g.matmul(g.elements_[k].matrix, g.simple_matrices_[s]);
      auto [it, inserted] =
          g.index_.try_emplace(m, static_cast<ElementId>(g.elements_.size()));
      if (inserted) {
        const int len = g.compute_length(m);
        g.elements_.push_back({std::move(m), len});
        parent.push_back(static_cast<ElementId>(k));
        last_gen.push_back(s);
      }
      g.right_simple_.push_back(it->second);
    }
  }
  if (g.elements_.size() != order)
    throw InvariantError("enumerated " + std::to_string(g.elements_.size()) +
                         " elements, expected " + std::to_string(order));
  for (std::size_t k = 1; k < g.elements_.size(); ++k)
    if (g.elements_[k].length < g.elements_[k - 1].length)
      throw InvariantError("element ids are not sorted by length");

  g.simples_.resize(n);
  for (Generator s = 0; s < n; ++s) g.simples_[s] = g.right_simple_[s];

  g.left_simple_.resize(order * n);
  for (std::size_t k = 0; k < g.elements_.size(); ++k)
    for (Generator s = 0; s < n; ++s)
      g.left_simple_[k * n + s] =
          g.index_.at(g.matmul(g.simple_matrices_[s], g.elements_[k].matrix));

  // w = parent * s  =>  w^{-1} = s * parent^{-1}.
  g.inverse_.resize(order);
  g.inverse_[0] = 0;
  for (std::size_t k = 1; k < g.elements_.size(); ++k)
    g.inverse_[k] = g.left_mult(last_gen[k], g.inverse_[parent[k]]);

  g.reflection_index_.assign(order, -1);
  for (std::size_t k = 0; k < g.roots_.size(); ++k) {
    const ElementId t = g.index_.at(root_reflections[k]);
    if (g.reflection_index_[t] >= 0)
      throw InvariantError("two positive roots share a reflection");
    g.reflection_index_[t] = static_cast<int>(g.reflections_.size());
    g.reflections_.push_back({t, k});
  }

  const std::size_t nt = g.reflections_.size();
  if (order * nt <= kReflectionTableLimit) {
    g.right_reflection_.resize(order * nt);
    for (std::size_t k = 0; k < g.elements_.size(); ++k)
      for (std::size_t i = 0; i < nt; ++i)
        g.right_reflection_[k * nt + i] = g.multiply(
            static_cast<ElementId>(k), g.reflections_[i].element);
  }
  return g;
}

void GroupContext::check_id(ElementId w) const {
  if (w >= size())
    throw UsageError("element id " + std::to_string(w) + " does not belong to group " +
                     name());
}

ElementId GroupContext::multiply(ElementId a, ElementId b) const {
  check_id(a);
  check_id(b);
  return index_.at(matmul(elements_[a].matrix, elements_[b].matrix));
}

ElementId GroupContext::right_mult_reflection(ElementId w, std::size_t i) const {
  if (!right_reflection_.empty()) return right_reflection_[w * reflections_.size() + i];
  return multiply(w, reflections_[i].element);
}

bool GroupContext::is_right_descent(ElementId w, Generator s) const {
  // Column s of the matrix is w(alpha_s); roots are sign-coherent.
  const int n = rank();
  const auto& m = elements_[w].matrix;
  for (int i = 0; i < n; ++i) {
    const int v = m[i * n + s];
    if (v != 0) return v < 0;
  }
  return false;
}

std::vector<Generator> GroupContext::right_descents(ElementId w) const {
  std::vector<Generator> out;
  for (Generator s = 0; s < rank(); ++s)
    if (is_right_descent(w, s)) out.push_back(s);
  return out;
}

Generator GroupContext::first_right_descent(ElementId w) const {
  for (Generator s = 0; s < rank(); ++s)
    if (is_right_descent(w, s)) return s;
  throw UsageError("the identity has no right descent");
}

std::optional<ElementId> GroupContext::reflection_between(ElementId u, ElementId w) const {
  const ElementId t = multiply(inverse(u), w);
  if (is_reflection(t)) return t;
  return std::nullopt;
}

std::vector<Generator> GroupContext::word_of(ElementId w) const {
  check_id(w);
  std::vector<Generator> word;
  while (w != identity()) {
    Generator s = 0;
    while (!is_left_descent(s, w)) ++s;
    word.push_back(s);
    w = left_mult(s, w);
  }
  return word;
}

ElementId GroupContext::from_word(std::span<const Generator> word) const {
  ElementId w = identity();
  for (Generator s : word) {
    if (s < 0 || s >= rank())
      throw UsageError("generator " + std::to_string(s + 1) + " out of range for " + name());
    w = right_mult(w, s);
  }
  return w;
}

std::optional<ElementId> GroupContext::find(const std::vector<int>& matrix) const {
  auto it = index_.find(matrix);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId GroupContext::parse_element(std::string_view text) const {
  std::string buf(text);
  for (char& c : buf)
    if (c == ',') c = ' ';
  std::istringstream is(buf);
  std::vector<std::string> tokens;
  for (std::string tok; is >> tok;) tokens.push_back(tok);
  if (tokens.empty() || (tokens.size() == 1 && (tokens[0] == "e" || tokens[0] == "E")))
    return identity();
  ElementId w = identity();
  for (const auto& tok : tokens) {
    int s = 0;
    bool ok = !tok.empty() && tok.size() < 4;
    for (char c : tok) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (ok) s = std::stoi(tok);
    if (!ok || s < 1 || s > rank())
      throw UsageError("invalid generator '" + tok + "' for group " + name() +
                       " (expected 1.." + std::to_string(rank()) + ")");
    const ElementId next = right_mult(w, s - 1);
    if (length(next) < length(w))
      throw UsageError("word '" + std::string(text) + "' is not reduced at generator '" +
                       tok + "'");
    w = next;
  }
  return w;
}

std::string GroupContext::format_element(ElementId w) const {
  const auto word = word_of(w);
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i] + 1);
  }
  return out;
}

}  // namespace coxkl
