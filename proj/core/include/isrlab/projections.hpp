#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isrlab/group_algebra.hpp"

namespace isrlab {

// f_g = (1/#R) sum_{v in R(g-I)} u_v
AlgebraElement make_f(const F2Matrix& g, std::uint64_t cap = kDefaultRangeCap);

enum class Letter : std::uint8_t { Zero, One, Star };

class CylinderWord {
 public:
  CylinderWord() = default;
  explicit CylinderWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static CylinderWord parse(std::string_view s);  // over {0,1,*}

  const std::vector<Letter>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  Letter at(int i) const;  // 1-based, Star past the end
  bool fully_specified() const;
  CylinderWord padded(int n) const;  // extends with stars
  std::string to_string() const;

  // trailing stars do not change [w]
  friend bool operator==(const CylinderWord& a, const CylinderWord& b);

 private:
  std::vector<Letter> letters_;
};

// prod over specified j of (1 + (-1)^{w_j} u_{e_j}) / 2, in the Affine or Wreath family
AlgebraElement make_cylinder(const CylinderWord& w, Family family = Family::Affine);
// [w][v]: nullopt when some coordinate is specified differently (the product is 0)
std::optional<CylinderWord> cylinder_product(const CylinderWord& a, const CylinderWord& b);
// w·g^{-1} with star arithmetic; HypothesisViolated unless every starred row of g^{-1} has one entry
CylinderWord act_on_word(const CylinderWord& w, const F2Matrix& g);
bool cylinder_conjugation_check(const CylinderWord& w, const F2Matrix& g);
// does (w, g) satisfy the star-row hypothesis?
bool cylinder_hypothesis_holds(const CylinderWord& w, const F2Matrix& g);

enum class QSign : std::uint8_t { Plus, Minus };
// prod_{n in A} (1 +- u_{z^(n)}) / 2 in the Wreath family
AlgebraElement make_q_power(QSign sign, const std::vector<int>& a);

class PartitionSpec {
 public:
  PartitionSpec() = default;
  // blocks must be disjoint, nonempty and cover 1..n
  explicit PartitionSpec(std::vector<std::vector<int>> blocks);
  static PartitionSpec singletons(int n);
  static std::vector<PartitionSpec> all(int n);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int n() const { return n_; }
  PartitionSpec join(const PartitionSpec& o) const;  // finest common coarsening
  // image of the partition under s
  PartitionSpec image(const Permutation& s) const;
  std::string to_string() const;
  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
  int n_ = 0;
};

// s * prod_K (P1^K + sign(s|_K) P2^K) with P1 = (1+u_z)/2, P2 = (1-u_z)/2
AlgebraElement make_part_generator(const Permutation& s, const PartitionSpec& k);

// |Fix(sigma)| / 2^level for the permutation part of a Cantor element; level
// defaults to the canonical one
mpq_class mu_fix(const GroupElement& g, std::optional<int> level = std::nullopt);

}  // namespace isrlab
