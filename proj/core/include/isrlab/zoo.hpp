#pragma once

#include <vector>

#include "isrlab/characters.hpp"
#include "isrlab/projections.hpp"
#include "isrlab/report.hpp"

namespace isrlab {

// Reference subalgebras
SubalgebraSpec build_scalars(Truncation t);          // span{1}
SubalgebraSpec build_vector_algebra(int n);          // L(F2^n) inside the affine truncation

// span{u_g f_g u_v} over GL(n, F2) x F2^n; window GL(n, F2) x| F2^n, 2 <= n <= 4
SubalgebraSpec build_mexo(int n);
// tau(x^* b) = 0 for x = u_t(u_0 - u_e1), t = I + E12, over the whole basis, tau(x^* u_t) != 0,
// and the subalgebra differs from C1, L(F2^n) and L(G)
bool mexo_exoticness_witness(int n, ScenarioReport* report = nullptr);
// prod_i f(t_i^-1 s_i t_i) = f_g for the transvection factorization g = s_1 ... s_k, t_i = s_{i+1} ... s_k
bool mexo_fproduct_identity(const F2Matrix& g);

// span{u_s Q^{supp s} u_v} in the wreath truncation S_n x| Z2^n
SubalgebraSpec build_mq(int n, QSign sign = QSign::Plus);
// span of the Part-generators s prod_K (P1^K + sign(s|K) P2^K)
SubalgebraSpec build_mpart(int n);
// P1^K + P2^K
AlgebraElement mpart_center_witness(const std::vector<int>& block);

// the two displayed rows of the level-3 computation differ, for both signs
bool cantor_case3_witness(ScenarioReport* report = nullptr);
// symbolic expansion of A_g h^-1 A_g h and of the commutation law over the
// 16 ordered coefficient pairs, compared to the displayed monomials
bool affine_e12_vanishing_check(ScenarioReport* report = nullptr);

// finite-cyclic analog Z2 wr Z/m, 3 <= m <= 8
ScenarioReport lamplighter_scenarios(int m);

// centralizer of a pure permutation in the cantor truncation at `level`,
// from its cycle structure; needs a fixed point
std::vector<GroupElement> cantor_permutation_centralizer_generators(const GroupElement& s, int level);

struct FpcTableRow {
  std::string lemma;
  std::string label;
  bool member = false;
  std::vector<int> truncations;
  std::vector<std::size_t> orbit_sizes;
};

// optionally collects the orbit-size table behind the checks
ScenarioReport fpc_growth_suite(std::vector<FpcTableRow>* table = nullptr);

}  // namespace isrlab
