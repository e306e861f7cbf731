#pragma once

// Finite crystallographic Coxeter (Weyl) groups, built from the integer
// geometric representation on simple-root coordinates.
//
// Every element is interned in a GroupContext and referred to by a dense
// ElementId.  Ids are assigned breadth-first from the identity by right
// multiplication with simple reflections, so they are sorted by length:
// id 0 is e and the last id is the longest element.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace coxkl {

using ElementId = std::uint32_t;
// Simple generator index, 0-based internally and printed 1-based.
using Generator = int;

enum class Family { A, B, C, D, E, F, G };

inline constexpr std::uint64_t kDefaultOrderGuard = 10000;

struct CoxeterDatum {
  Family family = Family::A;
  int rank = 0;
  // Row-major rank x rank Cartan matrix: s_i(alpha_j) = alpha_j - a_ij alpha_i.
  std::vector<int> cartan;

  static CoxeterDatum make(Family family, int rank);
  int cartan_at(int i, int j) const { return cartan[i * rank + j]; }
  // Coxeter label m(s_i, s_j), derived from the Cartan product a_ij a_ji.
  int coxeter_label(int i, int j) const;
  std::string name() const;  // "A3", "G2", ...
};

// Parses "A3", "b2", "G2", ... case-insensitively.
CoxeterDatum parse_group_spec(std::string_view spec);
std::uint64_t weyl_group_order(const CoxeterDatum& datum);

struct GroupElement {
  std::vector<int> matrix;  // row-major; column j is the image of alpha_j
  int length = 0;
};

struct Reflection {
  ElementId element = 0;
  std::size_t root = 0;  // index into GroupContext::positive_roots()
};

class GroupContext {
 public:
  // Throws UsageError on an unsupported family/rank or when the group order
  // exceeds max_order_guard.
  static GroupContext build(const CoxeterDatum& datum,
                            std::uint64_t max_order_guard = kDefaultOrderGuard);
  static GroupContext build(std::string_view spec,
                            std::uint64_t max_order_guard = kDefaultOrderGuard);

  GroupContext(GroupContext&&) = default;
  GroupContext& operator=(GroupContext&&) = default;
  GroupContext(const GroupContext&) = delete;
  GroupContext& operator=(const GroupContext&) = delete;

  const CoxeterDatum& datum() const { return datum_; }
  std::string name() const { return datum_.name(); }
  int rank() const { return datum_.rank; }
  std::size_t size() const { return elements_.size(); }

  const GroupElement& element(ElementId w) const { return elements_.at(w); }
  int length(ElementId w) const { return elements_[w].length; }
  ElementId identity() const { return 0; }
  ElementId simple(Generator s) const { return simples_.at(s); }
  ElementId longest() const { return static_cast<ElementId>(size() - 1); }
  int max_length() const { return static_cast<int>(roots_.size()); }

  std::span<const std::vector<int>> positive_roots() const { return roots_; }
  std::span<const Reflection> reflections() const { return reflections_; }
  bool is_reflection(ElementId w) const { return reflection_index_[w] >= 0; }
  // Position of w in reflections(), or -1.
  int reflection_index(ElementId w) const { return reflection_index_[w]; }

  // Matrix product, looked up in the element table.
  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId w) const { return inverse_[w]; }
  ElementId right_mult(ElementId w, Generator s) const {
    return right_simple_[w * rank() + s];
  }
  ElementId left_mult(Generator s, ElementId w) const {
    return left_simple_[w * rank() + s];
  }
  // w * t for the i-th reflection.
  ElementId right_mult_reflection(ElementId w, std::size_t i) const;

  // ws < w  <=>  w(alpha_s) is a negative root.
  bool is_right_descent(ElementId w, Generator s) const;
  bool is_left_descent(Generator s, ElementId w) const {
    return is_right_descent(inverse_[w], s);
  }
  std::vector<Generator> right_descents(ElementId w) const;
  // Smallest-index right descent; w must not be e.
  Generator first_right_descent(ElementId w) const;

  // u^{-1} w when that is a reflection.
  std::optional<ElementId> reflection_between(ElementId u, ElementId w) const;

  // Lexicographically smallest reduced word (0-based generators).
  std::vector<Generator> word_of(ElementId w) const;
  // Product of an arbitrary word.
  ElementId from_word(std::span<const Generator> word) const;
  std::optional<ElementId> find(const std::vector<int>& matrix) const;

  // "1 2 1" (1-based) or "e".  Rejects unknown tokens and non-reduced words
  // with a UsageError naming the offending token.
  ElementId parse_element(std::string_view text) const;
  std::string format_element(ElementId w) const;

  void check_id(ElementId w) const;

 private:
  GroupContext() = default;

  struct MatrixHash {
    std::size_t operator()(const std::vector<int>& m) const;
  };

  int compute_length(const std::vector<int>& matrix) const;
  std::vector<int> matmul(const std::vector<int>& a,
                          const std::vector<int>& b) const;

  CoxeterDatum datum_;
  std::vector<std::vector<int>> simple_matrices_;
  std::vector<std::vector<int>> roots_;
  std::vector<GroupElement> elements_;
  std::unordered_map<std::vector<int>, ElementId, MatrixHash> index_;
  std::vector<ElementId> simples_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> right_simple_;
  std::vector<ElementId> left_simple_;
  std::vector<Reflection> reflections_;
  std::vector<int> reflection_index_;
  // |W| x |T| products, filled only when small enough.
  std::vector<ElementId> right_reflection_;
};

}  // namespace coxkl
