#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "isrlab/group_algebra.hpp"

namespace isrlab {

// Orthogonal projection onto the span of a finite family. Elements whose
// supports never overlap are orthogonal, so the family is split into
// support-connected components and each is orthogonalized on its own.
class SpanProjector {
 public:
  explicit SpanProjector(const std::vector<AlgebraElement>& family);

  AlgebraElement project(const AlgebraElement& x) const;
  bool contains(const AlgebraElement& x) const { return project(x) == x; }
  std::size_t rank() const { return rank_; }
  // members of the input family that were linearly independent of their predecessors
  const std::vector<std::size_t>& independent() const { return independent_; }

 private:
  struct Component {
    std::vector<AlgebraElement> q;  // pairwise orthogonal
    std::vector<mpq_class> q_norm;
  };
  std::vector<Component> components_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> where_;
  std::vector<std::size_t> independent_;
  std::size_t rank_ = 0;
};

class SubalgebraSpec {
 public:
  SubalgebraSpec(std::string label, Truncation truncation, std::vector<AlgebraElement> basis,
                 std::vector<GroupElement> window);

  const std::string& label() const { return label_; }
  Family family() const { return truncation_.family; }
  Truncation truncation() const { return truncation_; }
  const std::vector<AlgebraElement>& basis() const { return basis_; }
  const std::vector<GroupElement>& window() const { return window_; }
  bool in_window(const GroupElement& g) const { return window_set_.contains(g); }
  bool supported_in_window(const AlgebraElement& x) const;

  // built on first use; safe to share across threads afterwards
  const SpanProjector& projector() const;
  std::vector<AlgebraElement> independent_basis() const;

 private:
  std::string label_;
  Truncation truncation_;
  std::vector<AlgebraElement> basis_;
  std::vector<GroupElement> window_;  // sorted
  std::unordered_set<GroupElement, GroupElementHash> window_set_;

  struct Memo;
  std::shared_ptr<Memo> memo_;
};

struct ExpectationReport {
  AlgebraElement input;
  AlgebraElement output;
  mpq_class residual_norm_sq;
  GaussianRational character_value;  // <x, E(x)>; tau(g^-1 E(g)) when x = u_g
};

bool verify_invariance(const SubalgebraSpec& spec, const std::vector<GroupElement>& conjugators);
bool verify_closure(const SubalgebraSpec& spec);
ExpectationReport conditional_expectation(const AlgebraElement& x, const SubalgebraSpec& spec);
inline ExpectationReport conditional_expectation(const GroupElement& g, const SubalgebraSpec& spec) {
  return conditional_expectation(AlgebraElement::unit(g), spec);
}
GaussianRational character_of(const SubalgebraSpec& spec, const GroupElement& g);

struct EPropertyFailure {
  int item = 0;
  GroupElement g, s;
};
// items (1)-(3) on all ordered sample pairs and item (5) on each sample;
// pairs leaving the window are skipped
std::vector<EPropertyFailure> e_property_failures(const SubalgebraSpec& spec,
                                                  const std::vector<GroupElement>& samples);
inline bool check_E_properties(const SubalgebraSpec& spec, const std::vector<GroupElement>& samples) {
  return e_property_failures(spec, samples).empty();
}

// E(span a) in span a, E(span s) in span s + span a and tau(s_i a_j) = 0 are
// verified first; HypothesisViolated names the first that fails.
bool check_ES_subset_S(const SubalgebraSpec& spec, const std::vector<AlgebraElement>& a,
                       const std::vector<AlgebraElement>& s);

}  // namespace isrlab
