#include "isrlab/expectation.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace isrlab {

// ---------------------------------------------------------------- projector

SpanProjector::SpanProjector(const std::vector<AlgebraElement>& family) {
  std::vector<GroupElement> keys;
  for (const auto& b : family)
    for (const auto& t : b.terms()) keys.push_back(t.g);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index;
  index.reserve(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);

  std::vector<std::size_t> parent(keys.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& b : family) {
    if (b.is_zero()) continue;
    const std::size_t root = find(index.at(b.terms().front().g));
    for (const auto& t : b.terms()) parent[find(index.at(t.g))] = root;
  }

  std::unordered_map<std::size_t, std::size_t> comp_of_root;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, fresh] = comp_of_root.emplace(find(i), components_.size());
    if (fresh) components_.emplace_back();
    where_.emplace(keys[i], it->second);
  }

  for (std::size_t k = 0; k < family.size(); ++k) {
    const auto& b = family[k];
    if (b.is_zero()) continue;
    Component& c = components_[where_.at(b.terms().front().g)];
    AlgebraElement r = b;
    for (std::size_t j = 0; j < c.q.size(); ++j) {
      const GaussianRational coef = inner_product(c.q[j], b) / GaussianRational(c.q_norm[j]);
      if (!coef.is_zero()) r = combine(1, r, -coef, c.q[j]);
    }
    if (r.is_zero()) continue;
    c.q_norm.push_back(norm_sq(r));
    c.q.push_back(std::move(r));
    independent_.push_back(k);
    ++rank_;
  }
}

AlgebraElement SpanProjector::project(const AlgebraElement& x) const {
  std::vector<std::size_t> touched;
  for (const auto& t : x.terms())
    if (auto it = where_.find(t.g); it != where_.end()) touched.push_back(it->second);
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  AlgebraElement out;
  for (std::size_t ci : touched) {
    const Component& c = components_[ci];
    for (std::size_t j = 0; j < c.q.size(); ++j) {
      const GaussianRational coef = inner_product(c.q[j], x) / GaussianRational(c.q_norm[j]);
      if (!coef.is_zero()) out = combine(1, out, coef, c.q[j]);
    }
  }
  return out;
}

// ---------------------------------------------------------------- spec

struct SubalgebraSpec::Memo {
  std::once_flag once;
  std::unique_ptr<SpanProjector> projector;
};

SubalgebraSpec::SubalgebraSpec(std::string label, Truncation truncation, std::vector<AlgebraElement> basis,
                               std::vector<GroupElement> window)
    : label_(std::move(label)),
      truncation_(truncation),
      basis_(std::move(basis)),
      window_(std::move(window)),
      memo_(std::make_shared<Memo>()) {
  std::sort(window_.begin(), window_.end());
  window_.erase(std::unique(window_.begin(), window_.end()), window_.end());
  window_set_.reserve(window_.size());
  for (const auto& g : window_) {
    if (g.family() != truncation_.family)
      throw FamilyMismatch("window element " + g.to_string() + " is not in the " +
                           std::string(family_name(truncation_.family)) + " family");
    window_set_.insert(g);
  }
  const int modulus = truncation_.family == Family::Lamplighter ? truncation_.n : 1;
  if (!in_window(GroupElement::identity(truncation_.family, modulus)))
    throw HypothesisViolated("window of '" + label_ + "' must contain the identity");
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (!supported_in_window(basis_[k]))
      throw HypothesisViolated("basis element " + std::to_string(k) + " of '" + label_ +
                               "' is not supported in the window");
}

bool SubalgebraSpec::supported_in_window(const AlgebraElement& x) const {
  return std::all_of(x.terms().begin(), x.terms().end(), [&](const auto& t) { return in_window(t.g); });
}

const SpanProjector& SubalgebraSpec::projector() const {
  std::call_once(memo_->once, [&] { memo_->projector = std::make_unique<SpanProjector>(basis_); });
  return *memo_->projector;
}

std::vector<AlgebraElement> SubalgebraSpec::independent_basis() const {
  std::vector<AlgebraElement> out;
  for (std::size_t k : projector().independent()) out.push_back(basis_[k]);
  return out;
}

// ---------------------------------------------------------------- checks

bool verify_invariance(const SubalgebraSpec& spec, const std::vector<GroupElement>& conjugators) {
  for (const auto& c : conjugators)
    for (const auto& w : spec.window())
      if (!spec.in_window(conjugate(c, w)))
        throw WindowNotNormalized(c.to_string() + " conjugates " + w.to_string() + " out of the window of '" +
                                  spec.label() + "'");
  const SpanProjector& p = spec.projector();
  for (const auto& b : spec.independent_basis())
    for (const auto& c : conjugators)
      if (!p.contains(ad(c, b))) return false;
  return true;
}

bool verify_closure(const SubalgebraSpec& spec) {
  const SpanProjector& p = spec.projector();
  const auto basis = spec.independent_basis();
  for (const auto& a : basis) {
    const AlgebraElement star = adjoint(a);
    if (!spec.supported_in_window(star) || !p.contains(star)) return false;
    for (const auto& b : basis) {
      const AlgebraElement ab = a * b;
      if (!spec.supported_in_window(ab) || !p.contains(ab)) return false;
    }
  }
  return true;
}

ExpectationReport conditional_expectation(const AlgebraElement& x, const SubalgebraSpec& spec) {
  if (auto f = x.family(); f && *f != spec.family())
    throw FamilyMismatch("element family " + std::string(family_name(*f)) + " vs spec family " +
                         std::string(family_name(spec.family())));
  ExpectationReport r;
  r.input = x;
  r.output = spec.projector().project(x);
  r.residual_norm_sq = norm_sq(x - r.output);
  r.character_value = inner_product(x, r.output);
  return r;
}

GaussianRational character_of(const SubalgebraSpec& spec, const GroupElement& g) {
  return conditional_expectation(g, spec).character_value;
}

std::vector<EPropertyFailure> e_property_failures(const SubalgebraSpec& spec,
                                                  const std::vector<GroupElement>& samples) {
  std::vector<EPropertyFailure> out;
  std::unordered_map<GroupElement, AlgebraElement, GroupElementHash> memo;
  auto e = [&](const GroupElement& g) -> const AlgebraElement& {
    auto it = memo.find(g);
    if (it == memo.end()) it = memo.emplace(g, spec.projector().project(AlgebraElement::unit(g))).first;
    return it->second;
  };
  const auto basis = spec.independent_basis();

  for (const auto& g : samples) {
    const GaussianRational chi = inner_product(AlgebraElement::unit(g), e(g));
    const bool zero_ok = e(g).is_zero() == chi.is_zero();
    const bool unit_ok = (e(g) == AlgebraElement::unit(g)) == (chi == GaussianRational(1));
    if (!zero_ok || !unit_ok) out.push_back({5, g, g});

    if (spec.in_window(inverse(g))) {
      const AlgebraElement m = AlgebraElement::unit(g) * e(inverse(g));
      for (const auto& b : basis)
        if (!commutator(m, b).is_zero()) {
          out.push_back({3, g, g});
          break;
        }
    }
    for (const auto& s : samples) {
      const AlgebraElement us = AlgebraElement::unit(s);
      const GaussianRational a = trace(e(g) * us);
      const GaussianRational b = trace(e(g) * e(s));
      const GaussianRational c = trace(AlgebraElement::unit(g) * e(s));
      if (!(a == b && b == c)) out.push_back({1, g, s});
      const GroupElement sgs = conjugate(s, g);
      if (spec.in_window(sgs) && !(ad(s, e(g)) == e(sgs))) out.push_back({2, g, s});
    }
  }
  return out;
}

bool check_ES_subset_S(const SubalgebraSpec& spec, const std::vector<AlgebraElement>& a,
                       const std::vector<AlgebraElement>& s) {
  const SpanProjector& p = spec.projector();
  const SpanProjector span_a(a);
  for (const auto& x : a)
    if (!span_a.contains(p.project(x))) throw HypothesisViolated("E(span A) is not contained in span A");
  std::vector<AlgebraElement> sa = s;
  sa.insert(sa.end(), a.begin(), a.end());
  const SpanProjector span_sa(sa);
  for (const auto& x : s)
    if (!span_sa.contains(p.project(x))) throw HypothesisViolated("E(span S) is not contained in span S + span A");
  for (const auto& x : s)
    for (const auto& y : a)
      if (!trace(x * y).is_zero()) throw HypothesisViolated("tau does not vanish on S*A");
  const SpanProjector span_s(s);
  return std::all_of(s.begin(), s.end(), [&](const auto& x) { return span_s.contains(p.project(x)); });
}

}  // namespace isrlab
