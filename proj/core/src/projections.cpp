#include "isrlab/projections.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace isrlab {

namespace {

GroupElement basis_vector(Family family, int j) {
  if (family == Family::Affine) return make_vector(F2Vector::unit(j));
  if (family == Family::Wreath) return make_wreath(Permutation{}, F2Vector::unit(j));
  throw FamilyMismatch("coordinate idempotents live in the affine or wreath family");
}

// (1 + sign u_x) / 2
AlgebraElement half_projection(const GroupElement& x, int sign) {
  return AlgebraElement::from_terms({{GroupElement::identity(x.family()), GaussianRational::frac(1, 2)},
                                     {x, GaussianRational::frac(sign, 2)}});
}

constexpr int kMaxSpecified = 16;

}  // namespace

AlgebraElement make_f(const F2Matrix& g, std::uint64_t cap) {
  const auto range = range_subgroup(g, cap);
  const GaussianRational c(mpq_class(1, static_cast<unsigned long>(range.size())));
  std::vector<AlgebraElement::Term> terms;
  terms.reserve(range.size());
  for (F2Vector v : range) terms.push_back({make_vector(v), c});
  return AlgebraElement::from_terms(std::move(terms));
}

// ---------------------------------------------------------------- cylinders

CylinderWord CylinderWord::parse(std::string_view s) {
  std::vector<Letter> out;
  for (char c : s) {
    if (c == '0') out.push_back(Letter::Zero);
    else if (c == '1') out.push_back(Letter::One);
    else if (c == '*') out.push_back(Letter::Star);
    else if (c != ',' && c != ' ') throw ParseError("bad cylinder letter '" + std::string(1, c) + "'");
  }
  if (out.size() > static_cast<std::size_t>(kMaxDimension)) throw DimensionOutOfRange("cylinder word too long");
  return CylinderWord(std::move(out));
}

Letter CylinderWord::at(int i) const { return i <= size() ? letters_[i - 1] : Letter::Star; }

bool CylinderWord::fully_specified() const {
  return std::none_of(letters_.begin(), letters_.end(), [](Letter l) { return l == Letter::Star; });
}

CylinderWord CylinderWord::padded(int n) const {
  auto l = letters_;
  if (static_cast<int>(l.size()) < n) l.resize(static_cast<std::size_t>(n), Letter::Star);
  return CylinderWord(std::move(l));
}

std::string CylinderWord::to_string() const {
  std::string out;
  for (Letter l : letters_) out.push_back(l == Letter::Zero ? '0' : l == Letter::One ? '1' : '*');
  return out;
}

bool operator==(const CylinderWord& a, const CylinderWord& b) {
  const int n = std::max(a.size(), b.size());
  for (int i = 1; i <= n; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

AlgebraElement make_cylinder(const CylinderWord& w, Family family) {
  int specified = 0;
  for (Letter l : w.letters()) specified += l != Letter::Star;
  if (specified > kMaxSpecified)
    throw RangeTooLarge("cylinder with " + std::to_string(specified) + " specified letters");
  AlgebraElement out = AlgebraElement::identity(family);
  for (int j = 1; j <= w.size(); ++j) {
    if (w.at(j) == Letter::Star) continue;
    out = out * half_projection(basis_vector(family, j), w.at(j) == Letter::Zero ? 1 : -1);
  }
  return out;
}

std::optional<CylinderWord> cylinder_product(const CylinderWord& a, const CylinderWord& b) {
  const int n = std::max(a.size(), b.size());
  std::vector<Letter> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Letter x = a.at(i), y = b.at(i);
    if (x == Letter::Star) out[i - 1] = y;
    else if (y == Letter::Star || x == y) out[i - 1] = x;
    else return std::nullopt;
  }
  return CylinderWord(std::move(out));
}

bool cylinder_hypothesis_holds(const CylinderWord& w, const F2Matrix& g) {
  const F2Matrix gi = mat_inverse(g);
  const int n = std::max(w.size(), g.dim());
  for (int i = 1; i <= n; ++i)
    if (w.at(i) == Letter::Star && std::popcount(gi.row(i)) != 1) return false;
  return true;
}

CylinderWord act_on_word(const CylinderWord& w, const F2Matrix& g) {
  const F2Matrix gi = mat_inverse(g);
  const int n = std::max(w.size(), g.dim());
  for (int i = 1; i <= n; ++i)
    if (w.at(i) == Letter::Star && std::popcount(gi.row(i)) != 1)
      throw HypothesisViolated("row " + std::to_string(i) + " of g^-1 must have exactly one nonzero entry "
                               "where w has a star (w=" + w.to_string() + ")");
  // (w g^-1)_j = sum_i w_i (g^-1)_ij with star*0 = 0, star*1 = star, star + x = star
  std::vector<Letter> out(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    bool star = false;
    int bit = 0;
    for (int i = 1; i <= n; ++i) {
      if (!gi.get(i, j)) continue;
      if (w.at(i) == Letter::Star) star = true;
      else bit ^= w.at(i) == Letter::One;
    }
    out[j - 1] = star ? Letter::Star : bit ? Letter::One : Letter::Zero;
  }
  return CylinderWord(std::move(out));
}

bool cylinder_conjugation_check(const CylinderWord& w, const F2Matrix& g) {
  const CylinderWord image = act_on_word(w, g);
  return ad(make_affine(g), make_cylinder(w)) == make_cylinder(image);
}

// ---------------------------------------------------------------- Q and Part generators

AlgebraElement make_q_power(QSign sign, const std::vector<int>& a) {
  std::vector<int> idx(a);
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) throw ParseError("repeated index in Q^A");
  AlgebraElement out = AlgebraElement::identity(Family::Wreath);
  for (int n : idx) out = out * half_projection(basis_vector(Family::Wreath, n), sign == QSign::Plus ? 1 : -1);
  return out;
}

PartitionSpec::PartitionSpec(std::vector<std::vector<int>> blocks) {
  std::vector<int> all;
  for (auto& b : blocks) {
    if (b.empty()) throw ParseError("empty block in partition");
    std::sort(b.begin(), b.end());
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] != static_cast<int>(k) + 1)
      throw ParseError("partition blocks must cover 1..n exactly once");
  std::sort(blocks.begin(), blocks.end());
  blocks_ = std::move(blocks);
  n_ = static_cast<int>(all.size());
}

PartitionSpec PartitionSpec::singletons(int n) {
  std::vector<std::vector<int>> b;
  for (int i = 1; i <= n; ++i) b.push_back({i});
  return PartitionSpec(std::move(b));
}

std::vector<PartitionSpec> PartitionSpec::all(int n) {
  // restricted growth strings
  std::vector<PartitionSpec> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i == n) {
      std::vector<std::vector<int>> b(static_cast<std::size_t>(maxb + 1));
      for (int k = 0; k < n; ++k) b[a[k]].push_back(k + 1);
      out.emplace_back(std::move(b));
      return;
    }
    for (int v = 0; v <= maxb + 1; ++v) {
      a[i] = v;
      rec(i + 1, std::max(maxb, v));
    }
  };
  if (n == 0) return {PartitionSpec{}};
  a[0] = 0;
  rec(1, 0);
  return out;
}

PartitionSpec PartitionSpec::join(const PartitionSpec& o) const {
  const int n = std::max(n_, o.n_);
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto* p : {this, &o})
    for (const auto& b : p->blocks_)
      for (int x : b) parent[find(x)] = find(b.front());
  std::map<int, std::vector<int>> groups;
  for (int x = 1; x <= n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<int>> blocks;
  for (auto& [_, b] : groups) blocks.push_back(std::move(b));
  return PartitionSpec(std::move(blocks));
}

PartitionSpec PartitionSpec::image(const Permutation& s) const {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : blocks_) {
    std::vector<int> img;
    for (int x : b) img.push_back(s(x));
    blocks.push_back(std::move(img));
  }
  return PartitionSpec(std::move(blocks));
}

std::string PartitionSpec::to_string() const {
  std::string out = "{";
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k) out += ",";
    out += "{";
    for (std::size_t j = 0; j < blocks_[k].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(blocks_[k][j]);
    }
    out += "}";
  }
  return out + "}";
}

AlgebraElement make_part_generator(const Permutation& s, const PartitionSpec& k) {
  if (s.degree() > k.n())
    throw BlockNotInvariant("permutation " + s.to_cycle_string() + " moves points outside 1.." +
                            std::to_string(k.n()));
  AlgebraElement out = AlgebraElement::unit(make_wreath(s));
  for (const auto& block : k.blocks()) {
    std::vector<int> img(static_cast<std::size_t>(k.n()));
    std::iota(img.begin(), img.end(), 1);
    for (int x : block) {
      int y = s(x);
      if (!std::binary_search(block.begin(), block.end(), y))
        throw BlockNotInvariant("block of " + k.to_string() + " containing " + std::to_string(x) +
                                " is not invariant under " + s.to_cycle_string());
      img[x - 1] = y;
    }
    const int sign = Permutation(img).sign();
    AlgebraElement p1 = AlgebraElement::identity(Family::Wreath), p2 = p1;
    for (int x : block) {
      p1 = p1 * half_projection(basis_vector(Family::Wreath, x), 1);
      p2 = p2 * half_projection(basis_vector(Family::Wreath, x), -1);
    }
    out = out * combine(1, p1, sign, p2);
  }
  return out;
}

mpq_class mu_fix(const GroupElement& g, std::optional<int> level) {
  const CantorPart& c = g.cantor();
  if (c.subset != 0)
    throw HypothesisViolated("mu_fix takes a pure permutation; element has a nontrivial f~ part");
  const CantorPart at = cantor_at_level(c, level.value_or(c.level));
  unsigned long fixed = 0;
  for (std::size_t x = 0; x < at.perm.size(); ++x) fixed += at.perm[x] == x;
  mpq_class mu(fixed, static_cast<unsigned long>(at.perm.size()));
  mu.canonicalize();
  return mu;
}

}  // namespace isrlab
