#pragma once

// Finitely supported elements of C[G] with Gaussian-rational coefficients.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isrlab/groups.hpp"

namespace isrlab {

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  static GaussianRational frac(long p, long q) { return GaussianRational(mpq_class(p, q)); }
  static GaussianRational parse(std::string_view re, std::string_view im = "0");

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  mpq_class norm_sq() const { return re_ * re_ + im_ * im_; }
  std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::string rational_string(const mpq_class& q);

class AlgebraElement {
 public:
  struct Term {
    GroupElement g;
    GaussianRational c;
  };

  AlgebraElement() = default;  // zero
  static AlgebraElement unit(const GroupElement& g, GaussianRational c = 1);
  static AlgebraElement identity(Family f, int modulus = 1) { return unit(GroupElement::identity(f, modulus)); }
  // merges repeated keys and drops zeros
  static AlgebraElement from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  GaussianRational coefficient(const GroupElement& g) const;
  std::vector<GroupElement> support() const;
  std::optional<Family> family() const;
  std::string to_string() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);

 private:
  std::vector<Term> terms_;  // sorted by g, coefficients nonzero
};

AlgebraElement combine(const GaussianRational& alpha, const AlgebraElement& x, const GaussianRational& beta,
                       const AlgebraElement& y);
AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement adjoint(const AlgebraElement& x);
GaussianRational trace(const AlgebraElement& x);
// <x, y> = tau(x* y), linear in y
GaussianRational inner_product(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement ad(const GroupElement& g, const AlgebraElement& x);  // u_g x u_g^*
AlgebraElement scale(const GaussianRational& alpha, const AlgebraElement& x);
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);
mpq_class norm_sq(const AlgebraElement& x);

inline AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) { return combine(1, x, 1, y); }
inline AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return combine(1, x, -1, y); }
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return convolve(x, y); }
inline AlgebraElement operator*(const GaussianRational& a, const AlgebraElement& x) { return scale(a, x); }

}  // namespace isrlab
