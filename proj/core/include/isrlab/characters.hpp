#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isrlab/expectation.hpp"

namespace isrlab {

// Closed-form characters. An empty k means infinity.
struct CharacterSpec {
  enum class Kind : std::uint8_t { AffineGL, GLOnly, CantorSym, Regular };
  Kind kind = Kind::Regular;
  std::optional<int> k;  // the GLOnly parameter m is stored here too
  int d = 1;

  static CharacterSpec affine(std::optional<int> k, int d) { return {Kind::AffineGL, k, d}; }
  static CharacterSpec gl_only(std::optional<int> m) { return {Kind::GLOnly, m, 1}; }
  static CharacterSpec cantor(std::optional<int> k) { return {Kind::CantorSym, k, 1}; }
  static CharacterSpec regular() { return {}; }

  // "affine:k=1,d=0", "gl:m=2", "cantor:k=inf", "regular"
  static CharacterSpec parse(std::string_view s);
  std::string name() const;
  friend bool operator==(const CharacterSpec&, const CharacterSpec&) = default;
};

// chi_{k,1}(g v) = 2^{-k rank(g-I)}; chi_{k,0} agrees when v is in R(g-I) and is 0 otherwise.
// GLOnly needs v = 0 and CantorSym a pure permutation (HypothesisViolated otherwise).
mpq_class evaluate(const CharacterSpec& spec, const GroupElement& g);

// Exact symmetric elimination: a negative pivot, or a zero pivot with a
// nonzero entry left in its row, means not positive semidefinite.
bool is_psd(std::vector<std::vector<mpq_class>> m);
// PSD test of [chi(g_i^-1 g_j)]
bool is_positive_definite(const CharacterSpec& spec, const std::vector<GroupElement>& sample);
bool is_central(const CharacterSpec& spec, const std::vector<std::pair<GroupElement, GroupElement>>& pairs);
bool match_expectation_character(const SubalgebraSpec& spec, const CharacterSpec& cand,
                                 const std::vector<GroupElement>& sample);

}  // namespace isrlab
