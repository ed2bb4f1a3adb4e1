#include "isrlab/zoo.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace isrlab {

namespace {

AlgebraElement u(const GroupElement& g) { return AlgebraElement::unit(g); }

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string yes(bool b) { return b ? "true" : "false"; }

void check_dimension(int n, const char* what) {
  if (n < 2 || n > 4) throw DimensionOutOfRange(std::string(what) + " needs 2 <= n <= 4, got " + std::to_string(n));
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- reference algebras

SubalgebraSpec build_scalars(Truncation t) {
  const int modulus = t.family == Family::Lamplighter ? t.n : 1;
  return SubalgebraSpec("scalars", t, {AlgebraElement::identity(t.family, modulus)}, enumerate_group(t));
}

SubalgebraSpec build_vector_algebra(int n) {
  std::vector<AlgebraElement> basis;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) basis.push_back(u(make_vector(F2Vector(v))));
  return SubalgebraSpec("L(F2^" + std::to_string(n) + ")", {Family::Affine, n}, std::move(basis),
                        enumerate_group({Family::Affine, n}));
}

// ---------------------------------------------------------------- M_exo

SubalgebraSpec build_mexo(int n) {
  check_dimension(n, "M_exo");
  const std::uint64_t nv = std::uint64_t{1} << n;
  std::vector<AlgebraElement> basis;
  for (const F2Matrix& g : general_linear_group(n)) {
    const auto range = range_subgroup(g);
    const AlgebraElement gf = u(make_affine(g)) * make_f(g);
    // u_g f_g u_v only depends on the coset v + R(g - I)
    std::vector<bool> covered(nv, false);
    for (std::uint64_t v = 0; v < nv; ++v) {
      if (covered[v]) continue;
      for (F2Vector r : range) covered[v ^ r.bits()] = true;
      basis.push_back(gf * u(make_vector(F2Vector(v))));
    }
  }
  return SubalgebraSpec("M_exo(n=" + std::to_string(n) + ")", {Family::Affine, n}, std::move(basis),
                        enumerate_group({Family::Affine, n}));
}

bool mexo_exoticness_witness(int n, ScenarioReport* report) {
  ScenarioReport local;
  ScenarioReport& r = report ? *report : local;
  const SubalgebraSpec spec = build_mexo(n);
  const GroupElement t = make_affine(F2Matrix::elementary(1, 2));
  const GroupElement e1 = make_vector(F2Vector::unit(1));
  const AlgebraElement x = u(t) * (AlgebraElement::identity(Family::Affine) - u(e1));

  std::size_t nonzero = 0;
  for (const auto& b : spec.basis()) nonzero += !inner_product(x, b).is_zero();
  bool ok = r.check("tau(x* b) over the basis: nonzero count", "0", std::to_string(nonzero), nonzero == 0);
  const GaussianRational against_t = inner_product(x, u(t));
  ok &= r.check("tau(x* u_t)", "1", against_t.to_string(), against_t == GaussianRational(1));

  const SpanProjector& p = spec.projector();
  ok &= r.check_true("u_t lies outside the span (not L(G))", !p.contains(u(t)));
  ok &= r.check_true("u_e1 lies in the span (not C1)", p.contains(u(e1)));
  ok &= r.check_true("u_t f_t lies in the span", p.contains(u(t) * make_f(F2Matrix::elementary(1, 2))));
  const SpanProjector vectors(build_vector_algebra(n).basis());
  ok &= r.check_true("u_t f_t lies outside L(F2^n)", !vectors.contains(u(t) * make_f(F2Matrix::elementary(1, 2))));
  return ok;
}

bool mexo_fproduct_identity(const F2Matrix& g) {
  const auto s = transvection_factorize(g);
  AlgebraElement prod = AlgebraElement::identity(Family::Affine);
  for (std::size_t i = 0; i < s.size(); ++i) {
    F2Matrix t;
    for (std::size_t j = i + 1; j < s.size(); ++j) t = t * s[j];
    prod = prod * make_f(mat_inverse(t) * s[i] * t);
  }
  return prod == make_f(g);
}

// ---------------------------------------------------------------- M_Q and M_Part

SubalgebraSpec build_mq(int n, QSign sign) {
  check_dimension(n, "M_Q");
  std::vector<AlgebraElement> basis;
  for (const auto& images : all_permutations(n)) {
    const Permutation s(images);
    const AlgebraElement sq = u(make_wreath(s)) * make_q_power(sign, s.support());
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
      basis.push_back(sq * u(make_wreath(Permutation{}, F2Vector(v))));
  }
  return SubalgebraSpec(std::string("M_Q") + (sign == QSign::Plus ? "+" : "-") + "(n=" + std::to_string(n) + ")",
                        {Family::Wreath, n}, std::move(basis), enumerate_group({Family::Wreath, n}));
}

SubalgebraSpec build_mpart(int n) {
  check_dimension(n, "M_Part");
  std::vector<AlgebraElement> basis;
  const auto perms = all_permutations(n);
  for (const PartitionSpec& k : PartitionSpec::all(n))
    for (const auto& images : perms) {
      const Permutation s(images);
      if (k.image(s) == k &&
          std::all_of(k.blocks().begin(), k.blocks().end(), [&](const std::vector<int>& b) {
            return std::all_of(b.begin(), b.end(), [&](int x) { return std::binary_search(b.begin(), b.end(), s(x)); });
          }))
        basis.push_back(make_part_generator(s, k));
    }
  return SubalgebraSpec("M_Part(n=" + std::to_string(n) + ")", {Family::Wreath, n}, std::move(basis),
                        enumerate_group({Family::Wreath, n}));
}

AlgebraElement mpart_center_witness(const std::vector<int>& block) {
  AlgebraElement p1 = AlgebraElement::identity(Family::Wreath), p2 = p1;
  const AlgebraElement one = p1;
  for (int x : block) {
    const AlgebraElement z = u(make_wreath(Permutation{}, F2Vector::unit(x)));
    p1 = p1 * (GaussianRational::frac(1, 2) * (one + z));
    p2 = p2 * (GaussianRational::frac(1, 2) * (one - z));
  }
  return p1 + p2;
}

// ---------------------------------------------------------------- Cantor case 3

bool cantor_case3_witness(ScenarioReport* report) {
  ScenarioReport local;
  ScenarioReport& r = report ? *report : local;
  auto f = [](std::initializer_list<int> words) {  // f~ of a union of level-3 cylinders
    std::uint64_t mask = 0;
    for (int w : words) mask |= std::uint64_t{1} << w;
    return u(make_cantor_function(3, mask));
  };
  const GroupElement g = make_cantor_transposition(2, parse_word("11"), parse_word("10"));
  const AlgebraElement one = AlgebraElement::identity(Family::Cantor);
  const AlgebraElement f_supp_g = u(make_cantor_function(1, std::uint64_t{1} << parse_word("1")));  // [11] u [10]
  const AlgebraElement f_s = f({parse_word("000"), parse_word("100")});
  const GaussianRational half = GaussianRational::frac(1, 2);

  bool ok = true;
  for (int sign : {1, -1}) {
    const std::string tag = sign > 0 ? "+" : "-";
    const AlgebraElement e_g = half * (u(g) * combine(1, one, sign, f_supp_g));
    const AlgebraElement left = e_g * f_s;
    const AlgebraElement right = f_s * e_g;
    // 1/2 g (f~_[000]u[100] +- f~_[11]u[101]u[000])
    const AlgebraElement row1 =
        half * (u(g) * combine(1, f_s, sign, f({parse_word("110"), parse_word("111"), parse_word("101"), parse_word("000")})));
    // 1/2 g (f~_[000]u[110] +- f~_[111]u[10]u[000])
    const AlgebraElement row2 =
        half * (u(g) * combine(1, f({parse_word("000"), parse_word("110")}), sign,
                               f({parse_word("111"), parse_word("100"), parse_word("101"), parse_word("000")})));
    ok &= r.check_equal("E(g) f~_S, sign " + tag, row1.to_string(), left.to_string());
    ok &= r.check_equal("f~_S E(g), sign " + tag, row2.to_string(), right.to_string());
    ok &= r.check_true("rows differ, sign " + tag, !(left == right));
  }
  return ok;
}

// ---------------------------------------------------------------- affine (01 10) vanishing

namespace {

constexpr Letter kStar = Letter::Star;
Letter bit_letter(int b) { return b ? Letter::One : Letter::Zero; }

CylinderWord word3(Letter a, Letter b, Letter c) { return CylinderWord({a, b, c}); }

std::string pair_name(int a) { return std::to_string(a >> 1) + std::to_string(a & 1); }

// coefficient of [w] (fully specified, length 3) in x: 8 tau([w] x)
GaussianRational word_coefficient(const CylinderWord& w, const AlgebraElement& x) {
  return GaussianRational(8) * trace(make_cylinder(w) * x);
}

// For each fully specified word, the ordered pairs (a, b) of coefficient
// labels contributing to sum_a c_a X_a * sum_b c_b Y_b, with multiplicity.
std::map<std::string, std::vector<std::string>> expand(const std::vector<AlgebraElement>& x,
                                                        const std::vector<AlgebraElement>& y) {
  std::map<std::string, std::vector<std::string>> out;
  for (int w = 0; w < 8; ++w) {
    const CylinderWord word = word3(bit_letter(w >> 2), bit_letter((w >> 1) & 1), bit_letter(w & 1));
    auto& terms = out[word.to_string()];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const GaussianRational c = word_coefficient(word, x[a] * y[b]);
        if (c.is_zero()) continue;
        std::string mono = "c" + pair_name(a) + "c" + pair_name(b);
        if (!(c == GaussianRational(1))) mono = c.to_string() + "*" + mono;
        terms.push_back(mono);
      }
  }
  return out;
}

std::string monomial(int a, int b) { return "c" + pair_name(a) + "c" + pair_name(b); }

}  // namespace

bool affine_e12_vanishing_check(ScenarioReport* report) {
  ScenarioReport local;
  ScenarioReport& r = report ? *report : local;
  bool ok = true;
  const F2Matrix omega = F2Matrix::permutation({2, 3, 1});
  const F2Matrix s = F2Matrix::permutation({2, 1});
  const F2Matrix g = F2Matrix::from_bitstring("1011", 2);
  const F2Matrix t = F2Matrix::from_bitstring("0111", 2);
  ok &= r.check_equal("omega", "001100010", omega.to_bitstring(3));

  const F2Matrix conj1 = omega * s * g * mat_inverse(s) * mat_inverse(omega);
  ok &= r.check_equal("omega s g s^-1 omega^-1", "100011001", conj1.to_bitstring(3));
  ok &= r.check_true("case 1: C_13 = 1", (s * g * conj1).get(1, 3));
  const F2Matrix h1 = mat_inverse(omega * s * g);
  ok &= r.check_equal("case 1: h = (omega s g)^-1", "001011100", h1.to_bitstring(3));
  const F2Matrix conj2 = omega * g * t * mat_inverse(g) * mat_inverse(omega);
  ok &= r.check_true("case 2: C_13 = 1", (s * t * conj2).get(1, 3));
  const F2Matrix h2 = mat_inverse(omega * g * t);
  ok &= r.check_equal("case 2: h = (omega g t)^-1", "001010100", h2.to_bitstring(3));

  std::vector<AlgebraElement> first;
  std::vector<CylinderWord> first_words;
  for (int a = 0; a < 4; ++a) {
    first_words.push_back(word3(bit_letter(a >> 1), bit_letter(a & 1), kStar));
    first.push_back(make_cylinder(first_words.back()));
  }

  struct Case {
    const char* name;
    F2Matrix h;
    std::vector<std::string> second_words;         // displayed [(i,j,*) h], indexed by ij
    std::vector<std::pair<std::string, int>> mono;  // word -> ordered pair code a*4+b
  };
  const std::vector<Case> cases = {
      {"case 1", h1, {"*00", "*11", "*01", "*10"},
       {{"000", 0}, {"011", 5}, {"101", 10}, {"110", 15}, {"001", 2}, {"010", 7}, {"100", 8}, {"111", 13}}},
      {"case 2", h2, {"*00", "*10", "*01", "*11"},
       {{"000", 0}, {"010", 5}, {"101", 10}, {"111", 15}, {"001", 2}, {"011", 7}, {"100", 8}, {"110", 13}}},
  };
  for (const Case& c : cases) {
    const GroupElement h_inv = make_affine(mat_inverse(c.h));
    std::vector<AlgebraElement> second;
    for (int a = 0; a < 4; ++a) {
      const CylinderWord image = act_on_word(first_words[a], mat_inverse(c.h));
      ok &= r.check_equal(std::string(c.name) + ": (" + first_words[a].to_string() + ")h", c.second_words[a],
                          image.to_string());
      second.push_back(ad(h_inv, first[a]));
      ok &= r.check_true(std::string(c.name) + ": h^-1 [" + first_words[a].to_string() + "] h is a cylinder",
                         second.back() == make_cylinder(image));
    }
    const auto expansion = expand(first, second);
    for (const auto& [word, code] : c.mono) {
      const auto& got = expansion.at(word);
      const std::string actual = got.size() == 1 ? got.front() : "[" + std::to_string(got.size()) + " terms]";
      ok &= r.check_equal(std::string(c.name) + ": coefficient of [" + word + "]", monomial(code >> 2, code & 3),
                          actual);
    }
  }

  // commutation law: sum c_ij [j,*,i] * sum c_kl [k,l,*] vs sum c_kl [k,l,*] * sum c_ij [*,j,i]
  const GroupElement omega_inv = make_affine(mat_inverse(omega));
  const GroupElement s_omega_inv = make_affine(s * mat_inverse(omega));
  std::vector<AlgebraElement> rotated, swapped;
  for (int a = 0; a < 4; ++a) {
    const Letter i = bit_letter(a >> 1), j = bit_letter(a & 1);
    rotated.push_back(ad(omega_inv, first[a]));
    swapped.push_back(ad(s_omega_inv, first[a]));
    ok &= r.check_true("omega^-1 [" + first_words[a].to_string() + "] omega = [j,*,i]",
                       rotated.back() == make_cylinder(word3(j, kStar, i)));
    ok &= r.check_true("s omega^-1 [" + first_words[a].to_string() + "] omega s^-1 = [*,j,i]",
                       swapped.back() == make_cylinder(word3(kStar, j, i)));
  }
  const auto lhs = expand(rotated, first);
  const auto rhs = expand(first, swapped);
  for (int w = 0; w < 8; ++w) {
    const int k = w >> 2, l = (w >> 1) & 1, i = w & 1;
    const std::string word = std::to_string(k) + std::to_string(l) + std::to_string(i);
    const auto& lt = lhs.at(word);
    const auto& rt = rhs.at(word);
    ok &= r.check_equal("law at [" + word + "]: left", monomial(i * 2 + k, k * 2 + l),
                        lt.size() == 1 ? lt.front() : "[" + std::to_string(lt.size()) + " terms]");
    ok &= r.check_equal("law at [" + word + "]: right", monomial(k * 2 + l, i * 2 + l),
                        rt.size() == 1 ? rt.front() : "[" + std::to_string(rt.size()) + " terms]");
  }
  return ok;
}

// ---------------------------------------------------------------- lamplighter

ScenarioReport lamplighter_scenarios(int m) {
  if (m < 3 || m > 8) throw ModulusOutOfRange("lamplighter scenarios need 3 <= m <= 8, got " + std::to_string(m));
  ScenarioReport r;
  r.name = "lamplighter(m=" + std::to_string(m) + ")";
  r.paper_anchor =
      "finite-cyclic analog of Z2 wr Z: invariant subalgebras generated by shift-invariant function algebras and "
      "u_{s^k}; the normal closure of delta_0 s is not (N cap A) x| kZ in the Z case";
  r.parameters["m"] = m;
  const Truncation tr{Family::Lamplighter, m};
  const auto window = enumerate_group(tr);
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  auto rot = [&](std::uint64_t v, int t) { return ((v << t) | (v >> (m - t))) & full; };
  auto lamp = [&](std::uint64_t v, int t) { return make_lamplighter(m, v, t); };

  std::vector<std::pair<std::string, std::vector<AlgebraElement>>> ys;
  ys.push_back({"scalars", {u(lamp(0, 0))}});
  {
    std::vector<AlgebraElement> sums;
    std::vector<bool> seen(full + 1, false);
    for (std::uint64_t v = 0; v <= full; ++v) {
      if (seen[v]) continue;
      std::vector<AlgebraElement::Term> terms;
      for (int t = 0; t < m; ++t) {
        const std::uint64_t w = rot(v, t);
        if (!seen[w]) terms.push_back({lamp(w, 0), 1});
        seen[w] = true;
      }
      sums.push_back(AlgebraElement::from_terms(std::move(terms)));
    }
    ys.push_back({"shift-invariant", std::move(sums)});
  }
  {
    std::vector<AlgebraElement> even, all;
    for (std::uint64_t v = 0; v <= full; ++v) {
      all.push_back(u(lamp(v, 0)));
      if (std::popcount(v) % 2 == 0) even.push_back(u(lamp(v, 0)));
    }
    ys.push_back({"even-support", std::move(even)});
    ys.push_back({"full", std::move(all)});
  }

  const std::vector<GroupElement> shift{lamp(0, 1)};
  const auto gens = group_generators(tr);
  for (const auto& [yname, y] : ys)
    for (int k = 1; k <= m; ++k) {
      if (m % k) continue;
      std::vector<AlgebraElement> basis;
      for (int j = 0; j < m / k; ++j)
        for (const auto& b : y) basis.push_back(u(lamp(0, j * k)) * b);
      const SubalgebraSpec spec(yname + ",k=" + std::to_string(k), tr, std::move(basis), window);
      const std::string tag = "Y=" + yname + ", k=" + std::to_string(k);
      r.check_true(tag + ": closed *-subalgebra", verify_closure(spec));
      r.check_true(tag + ": invariant under the shift", verify_invariance(spec, shift));
      // conjugating u_{s^jk} y by delta_0 multiplies it by u_w, w = delta_0 + delta_{-jk}, an even vector
      const bool predicted = k == m || yname == "even-support" || yname == "full";
      r.check_equal(tag + ": invariant under all of G", yes(predicted), yes(verify_invariance(spec, gens)));
      if (yname == "full" && k == 1) {
        bool identity = true;
        for (const auto& x : window) identity &= conditional_expectation(x, spec).output == u(x);
        r.check_true(tag + ": E is the identity", identity);
      }
    }

  const GroupElement d0s = lamp(1, 1);
  const auto n = normal_closure({d0s}, tr);
  if (!r.check_true("normal closure of delta_0 s computed", n.has_value())) return r;
  std::vector<GroupElement> in_a;
  std::set<int> shifts;
  for (const auto& x : *n) {
    if (x.lamplighter().t == 0) in_a.push_back(x);
    shifts.insert(x.lamplighter().t);
  }
  r.check_equal("|N| = |N cap A| * |pi(N)|", std::to_string(n->size()), std::to_string(in_a.size() * shifts.size()));
  bool normal = true;
  for (const auto& x : *n)
    for (const auto& c : gens) normal &= std::binary_search(n->begin(), n->end(), conjugate(c, x));
  r.check_true("N is normal", normal);

  std::size_t even_in = 0;
  bool only_even = true;
  for (const auto& x : in_a) {
    const bool even = std::popcount(x.lamplighter().v) % 2 == 0;
    even_in += even;
    only_even &= even;
  }
  const bool n_cap_a_is_even = only_even && even_in == (std::size_t{1} << (m - 1));
  std::optional<int> split_k;
  for (int k = 1; k <= m && !split_k; ++k) {
    if (m % k) continue;
    std::set<GroupElement> semi;
    for (const auto& a : in_a)
      for (int j = 0; j < m / k; ++j) semi.insert(a * lamp(0, j * k));
    if (semi.size() == n->size() && std::equal(semi.begin(), semi.end(), n->begin())) split_k = k;
  }
  r.observe("|N|", std::to_string(n->size()));
  r.observe("|N cap A|", std::to_string(in_a.size()));
  r.observe("|even-support subgroup|", std::to_string(std::size_t{1} << (m - 1)));
  r.observe("N cap A equals the even-support subgroup", yes(n_cap_a_is_even));
  r.observe("delta_0 in N", yes(std::binary_search(n->begin(), n->end(), lamp(1, 0))));
  GroupElement power = lamp(0, 0);
  for (int k = 0; k < m; ++k) power = power * d0s;
  r.observe("(delta_0 s)^m", power.to_string());
  r.observe("N = (N cap A) x| <s^k>", split_k ? "yes, k=" + std::to_string(*split_k) : "no k");
  r.observe("caveat", "finite-cyclic truncation: (delta_0 s)^m is the all-ones vector, so the closure can differ "
                      "from the Z case; reported, not asserted");
  return r;
}

// ---------------------------------------------------------------- fpc growth

std::vector<GroupElement> cantor_permutation_centralizer_generators(const GroupElement& s, int level) {
  const CantorPart c = cantor_at_level(s.cantor(), level);
  if (c.subset != 0) throw HypothesisViolated("expected a pure permutation, got " + s.to_string());
  const int words = 1 << level;
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(static_cast<std::size_t>(words), false);
  for (int x = 0; x < words; ++x) {
    if (seen[x]) continue;
    std::vector<int> cyc;
    for (int y = x; !seen[y]; y = c.perm[y]) {
      seen[y] = true;
      cyc.push_back(y);
    }
    cycles.push_back(std::move(cyc));
  }
  if (std::none_of(cycles.begin(), cycles.end(), [](const auto& cyc) { return cyc.size() == 1; }))
    throw HypothesisViolated("permutation without fixed points: f~_A with s(A) = A^c is not covered");

  std::vector<GroupElement> out;
  std::vector<int> id(static_cast<std::size_t>(words));
  std::iota(id.begin(), id.end(), 0);
  std::map<std::size_t, const std::vector<int>*> last_of_length;
  for (const auto& cyc : cycles) {
    std::uint64_t mask = 0;
    for (int x : cyc) mask |= std::uint64_t{1} << x;
    out.push_back(make_cantor_function(level, mask));
    if (cyc.size() > 1) {
      auto p = id;
      for (std::size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
      out.push_back(make_cantor(level, p));
    }
    // aligned swap with the previous cycle of the same length
    if (auto it = last_of_length.find(cyc.size()); it != last_of_length.end()) {
      auto p = id;
      const auto& prev = *it->second;
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        p[prev[k]] = cyc[k];
        p[cyc[k]] = prev[k];
      }
      out.push_back(make_cantor(level, p));
    }
    last_of_length[cyc.size()] = &cyc;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove_if(out.begin(), out.end(), [](const GroupElement& g) { return g.is_identity(); }), out.end());
  return out;
}

namespace {

struct FpcRow {
  std::string label;
  GroupElement h;
  bool member;
};

std::size_t orbit_size(const GroupElement& h, const std::vector<GroupElement>& gens) {
  const auto orbit = orbit_under_generators(h, gens);
  if (!orbit) throw GroupTooLarge("orbit of " + h.to_string() + " exceeds the cap");
  return orbit->size();
}

void fpc_rows(ScenarioReport& r, std::vector<FpcTableRow>* table, const std::string& lemma,
              const std::vector<FpcRow>& rows, const std::vector<std::vector<GroupElement>>& gens_per_truncation,
              const std::vector<int>& truncations) {
  for (const auto& row : rows) {
    std::vector<std::size_t> sizes;
    for (const auto& gens : gens_per_truncation) sizes.push_back(orbit_size(row.h, gens));
    std::string where;
    for (std::size_t k = 0; k < truncations.size(); ++k) where += (k ? "," : "") + std::to_string(truncations[k]);
    const std::string desc = lemma + ": " + row.label + " at " + where;
    if (table) table->push_back({lemma, row.label, row.member, truncations, sizes});
    if (row.member) {
      const bool small = std::all_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s <= 2; });
      r.check(desc + " (member, orbit <= 2)", "<= 2", join_sizes(sizes), small);
    } else {
      const bool growing = std::adjacent_find(sizes.begin(), sizes.end(), std::greater_equal<>()) == sizes.end();
      r.check(desc + " (non-member, strictly increasing)", "increasing", join_sizes(sizes), growing);
    }
  }
}

}  // namespace

ScenarioReport fpc_growth_suite(std::vector<FpcTableRow>* table) {
  ScenarioReport r;
  r.name = "fpc-growth";
  r.paper_anchor =
      "fpc(v) = {v, e}; fpc(f~_A) = {e, f~_A}; fpc(s) = {e, s, f~_supp(s), s f~_supp(s)}: "
      "members have bounded centralizer orbits, other elements have orbits growing with the truncation";

  {  // affine, C(e1)
    const std::vector<int> ns{3, 4, 5};
    r.parameters["affine_n"] = ns;
    const GroupElement v = make_vector(F2Vector::unit(1));
    std::vector<std::vector<GroupElement>> gens;
    for (int n : ns) gens.push_back(centralizer_generators(v, {Family::Affine, n}));
    const std::vector<FpcRow> rows = {
        {"v = e1", v, true},
        {"e", GroupElement{}, true},
        {"e2", make_vector(F2Vector::unit(2)), false},
        {"(12)", make_affine(F2Matrix::permutation({2, 1})), false},
    };
    fpc_rows(r, table, "fpc(v)", rows, gens, ns);
    const auto brute = centralizer(v, {Family::Affine, 3});
    for (const auto& row : rows)
      r.check_equal("fpc(v): Schreier vs brute-force orbit of " + row.label + " at n=3",
                    std::to_string(orbit_under(row.h, brute)->size()), std::to_string(orbit_size(row.h, gens[0])));
  }

  const std::vector<int> ms{2, 3, 4};
  r.parameters["cantor_m"] = ms;
  {  // cantor, C(f~_A) with A = [0]
    const GroupElement fa = make_cantor_function(1, 1);
    std::vector<std::vector<GroupElement>> gens;
    for (int m : ms) gens.push_back(centralizer_generators(fa, {Family::Cantor, m}));
    const std::vector<FpcRow> rows = {
        {"f~_[0]", fa, true},
        {"e", GroupElement::identity(Family::Cantor), true},
        {"f~_[00]", make_cantor_function(2, 1u << parse_word("00")), false},
        {"f~_[00]u[10]", make_cantor_function(2, (1u << parse_word("00")) | (1u << parse_word("10"))), false},
    };
    fpc_rows(r, table, "fpc(f~_A)", rows, gens, ms);
    const auto brute = centralizer(fa, {Family::Cantor, 2});
    for (const auto& row : rows)
      r.check_equal("fpc(f~_A): Schreier vs brute-force orbit of " + row.label + " at m=2",
                    std::to_string(orbit_under(row.h, brute)->size()), std::to_string(orbit_size(row.h, gens[0])));
  }
  {  // cantor, C(s) with s = (00, 01)
    const GroupElement s = make_cantor_transposition(2, parse_word("00"), parse_word("01"));
    const GroupElement f_supp = make_cantor_function(1, 1);  // supp(s) = [0]
    std::vector<std::vector<GroupElement>> gens;
    for (int m : ms) gens.push_back(cantor_permutation_centralizer_generators(s, m));
    const std::vector<FpcRow> rows = {
        {"e", GroupElement::identity(Family::Cantor), true},
        {"s", s, true},
        {"f~_supp(s)", f_supp, true},
        {"s f~_supp(s)", s * f_supp, true},
        {"f~_[10]", make_cantor_function(2, 1u << parse_word("10")), false},
        {"(10,11)", make_cantor_transposition(2, parse_word("10"), parse_word("11")), false},
    };
    fpc_rows(r, table, "fpc(s)", rows, gens, ms);
    const auto brute = centralizer(s, {Family::Cantor, 2});
    for (std::size_t k = 0; k < 2; ++k) {
      const auto schreier = centralizer_generators(s, {Family::Cantor, ms[k]});
      for (const auto& row : rows)
        r.check_equal("fpc(s): cycle-structure vs Schreier orbit of " + row.label + " at m=" + std::to_string(ms[k]),
                      std::to_string(orbit_size(row.h, schreier)), std::to_string(orbit_size(row.h, gens[k])));
    }
    for (const auto& row : rows)
      r.check_equal("fpc(s): brute-force orbit of " + row.label + " at m=2",
                    std::to_string(orbit_under(row.h, brute)->size()), std::to_string(orbit_size(row.h, gens[0])));
  }
  return r;
}

}  // namespace isrlab
