#include "isrlab/group_algebra.hpp"

#include <algorithm>

namespace isrlab {

// ---------------------------------------------------------------- GaussianRational

namespace {

mpq_class parse_rational(std::string_view s) {
  mpq_class q;
  std::string str(s);
  if (str.empty() || q.set_str(str, 10) != 0 || sgn(q.get_den()) == 0)
    throw ParseError("bad rational '" + str + "'");
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view re, std::string_view im) {
  return GaussianRational(parse_rational(re), parse_rational(im));
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

std::string GaussianRational::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out = sgn(re_) ? re_.get_str() : "";
  if (sgn(im_) > 0 && !out.empty()) out += "+";
  return out + im_.get_str() + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class d = o.norm_sq();
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

// ---------------------------------------------------------------- AlgebraElement

namespace {

bool key_less(const AlgebraElement::Term& a, const AlgebraElement::Term& b) { return a.g < b.g; }

void require_compatible(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.is_zero() || y.is_zero()) return;
  if (!compatible(x.terms().front().g, y.terms().front().g))
    throw FamilyMismatch("algebra elements over different groups: " + x.terms().front().g.to_string() +
                         " vs " + y.terms().front().g.to_string());
}

}  // namespace

AlgebraElement AlgebraElement::unit(const GroupElement& g, GaussianRational c) {
  AlgebraElement x;
  if (!c.is_zero()) x.terms_.push_back({g, std::move(c)});
  return x;
}

AlgebraElement AlgebraElement::from_terms(std::vector<Term> terms) {
  for (std::size_t k = 1; k < terms.size(); ++k)
    if (!compatible(terms[0].g, terms[k].g))
      throw FamilyMismatch("mixed families in one algebra element");
  std::stable_sort(terms.begin(), terms.end(), key_less);
  AlgebraElement x;
  for (Term& t : terms) {
    if (!x.terms_.empty() && x.terms_.back().g == t.g) {
      x.terms_.back().c += t.c;
    } else {
      if (!x.terms_.empty() && x.terms_.back().c.is_zero()) x.terms_.pop_back();
      x.terms_.push_back(std::move(t));
    }
  }
  if (!x.terms_.empty() && x.terms_.back().c.is_zero()) x.terms_.pop_back();
  return x;
}

GaussianRational AlgebraElement::coefficient(const GroupElement& g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Term& t, const GroupElement& k) { return t.g < k; });
  if (it != terms_.end() && it->g == g) return it->c;
  return {};
}

std::vector<GroupElement> AlgebraElement::support() const {
  std::vector<GroupElement> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(t.g);
  return out;
}

std::optional<Family> AlgebraElement::family() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().g.family();
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.c.to_string() + ")" + t.g.to_string();
  }
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!(a.terms_[k].g == b.terms_[k].g) || !(a.terms_[k].c == b.terms_[k].c)) return false;
  return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) { return *this = combine(1, *this, 1, o); }
AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this = combine(1, *this, -1, o); }

AlgebraElement combine(const GaussianRational& alpha, const AlgebraElement& x, const GaussianRational& beta,
                       const AlgebraElement& y) {
  require_compatible(x, y);
  std::vector<AlgebraElement::Term> out;
  out.reserve(x.size() + y.size());
  const auto &a = x.terms(), &b = y.terms();
  std::size_t i = 0, j = 0;
  auto push = [&out](const GroupElement& g, GaussianRational c) {
    if (!c.is_zero()) out.push_back({g, std::move(c)});
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].g < b[j].g)) {
      push(a[i].g, alpha * a[i].c);
      ++i;
    } else if (i == a.size() || b[j].g < a[i].g) {
      push(b[j].g, beta * b[j].c);
      ++j;
    } else {
      push(a[i].g, alpha * a[i].c + beta * b[j].c);
      ++i;
      ++j;
    }
  }
  return AlgebraElement::from_terms(std::move(out));
}

AlgebraElement scale(const GaussianRational& alpha, const AlgebraElement& x) {
  if (alpha.is_zero()) return {};
  std::vector<AlgebraElement::Term> out;
  out.reserve(x.size());
  for (const auto& t : x.terms()) out.push_back({t.g, alpha * t.c});
  return AlgebraElement::from_terms(std::move(out));
}

AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y) {
  require_compatible(x, y);
  std::vector<AlgebraElement::Term> out;
  out.reserve(x.size() * y.size());
  for (const auto& s : x.terms())
    for (const auto& t : y.terms()) out.push_back({multiply(s.g, t.g), s.c * t.c});
  return AlgebraElement::from_terms(std::move(out));
}

AlgebraElement adjoint(const AlgebraElement& x) {
  std::vector<AlgebraElement::Term> out;
  out.reserve(x.size());
  for (const auto& t : x.terms()) out.push_back({inverse(t.g), t.c.conj()});
  return AlgebraElement::from_terms(std::move(out));
}

GaussianRational trace(const AlgebraElement& x) {
  for (const auto& t : x.terms())
    if (t.g.is_identity()) return t.c;
  return {};
}

GaussianRational inner_product(const AlgebraElement& x, const AlgebraElement& y) {
  require_compatible(x, y);
  GaussianRational acc;
  const auto &a = x.terms(), &b = y.terms();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].g < b[j].g) {
      ++i;
    } else if (b[j].g < a[i].g) {
      ++j;
    } else {
      acc += a[i].c.conj() * b[j].c;
      ++i;
      ++j;
    }
  }
  return acc;
}

mpq_class norm_sq(const AlgebraElement& x) {
  mpq_class acc = 0;
  for (const auto& t : x.terms()) acc += t.c.norm_sq();
  return acc;
}

AlgebraElement ad(const GroupElement& g, const AlgebraElement& x) {
  if (!x.is_zero() && !compatible(g, x.terms().front().g))
    throw FamilyMismatch("cannot conjugate by " + g.to_string());
  const GroupElement gi = inverse(g);
  std::vector<AlgebraElement::Term> out;
  out.reserve(x.size());
  for (const auto& t : x.terms()) out.push_back({multiply(multiply(g, t.g), gi), t.c});
  return AlgebraElement::from_terms(std::move(out));
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) { return x * y - y * x; }

}  // namespace isrlab
