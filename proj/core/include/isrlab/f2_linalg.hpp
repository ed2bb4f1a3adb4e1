#pragma once

// Finitary GF(2) vectors and matrices. Everything is stored in canonical
// form: the minimal n beyond which a vector is zero / a matrix is the
// identity, so equality is plain member equality.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isrlab/errors.hpp"

namespace isrlab {

inline constexpr int kMaxDimension = 64;
inline constexpr std::uint64_t kDefaultRangeCap = std::uint64_t{1} << 16;

// Coordinates are 1-based; coordinate i lives in bit i-1.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::uint64_t bits) : bits_(bits) {}

  static F2Vector unit(int i);
  // "0110" means e2 + e3; leftmost character is coordinate 1.
  static F2Vector from_bitstring(std::string_view s);

  bool get(int i) const { return (bits_ >> (i - 1)) & 1u; }
  F2Vector flipped(int i) const { return F2Vector(bits_ ^ (std::uint64_t{1} << (i - 1))); }
  int dim() const;
  int weight() const;
  bool is_zero() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  std::string to_bitstring(int n) const;

  F2Vector operator+(F2Vector o) const { return F2Vector(bits_ ^ o.bits_); }
  F2Vector& operator+=(F2Vector o) {
    bits_ ^= o.bits_;
    return *this;
  }
  friend bool operator==(F2Vector, F2Vector) = default;
  friend auto operator<=>(F2Vector, F2Vector) = default;

 private:
  std::uint64_t bits_ = 0;
};

int dot(F2Vector a, F2Vector b);

class F2Matrix {
 public:
  F2Matrix() = default;  // identity

  // rows[i] holds row i+1; bit j-1 of a row is entry (i+1, j).
  static F2Matrix from_rows(std::vector<std::uint64_t> rows);
  // row-major n*n characters
  static F2Matrix from_bitstring(std::string_view s, int n);
  static F2Matrix elementary(int i, int j);  // I + E_ij, i != j
  // permutation matrix sending e_k to e_{images[k-1]}
  static F2Matrix permutation(const std::vector<int>& images);

  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_identity() const { return rows_.empty(); }
  std::uint64_t row(int i) const;
  bool get(int i, int j) const { return (row(i) >> (j - 1)) & 1u; }
  F2Vector column(int j) const;

  F2Vector apply(F2Vector v) const;      // g(v), column convention
  F2Vector apply_row(F2Vector w) const;  // w·g, row convention
  std::string to_bitstring(int n) const;
  const std::vector<std::uint64_t>& rows() const { return rows_; }

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;
  friend auto operator<=>(const F2Matrix&, const F2Matrix&) = default;

 private:
  explicit F2Matrix(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}
  void canonicalize();
  std::vector<std::uint64_t> rows_;
};

F2Matrix mat_mul(const F2Matrix& a, const F2Matrix& b);
inline F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) { return mat_mul(a, b); }
F2Matrix mat_inverse(const F2Matrix& a);
F2Matrix transpose(const F2Matrix& a);

int rank_defect(const F2Matrix& g);
// Echelon basis of R(g - I).
std::vector<F2Vector> range_basis(const F2Matrix& g);
// All of R(g - I), sorted by bit pattern.
std::vector<F2Vector> range_subgroup(const F2Matrix& g, std::uint64_t cap = kDefaultRangeCap);
std::vector<F2Vector> span_of(const std::vector<F2Vector>& gens);
int rank_of(std::vector<F2Vector> vs);

// involution with rank(t - I) = 1
bool is_transvection(const F2Matrix& t);
std::vector<F2Matrix> transvection_factorize(const F2Matrix& g);

// GL(n, F2) for n <= 4, sorted.
const std::vector<F2Matrix>& general_linear_group(int n);
std::uint64_t gl_order(int n);

}  // namespace isrlab
