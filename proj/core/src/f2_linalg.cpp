#include "isrlab/f2_linalg.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <string>

namespace isrlab {
namespace {

std::uint64_t unit_bit(int i) { return std::uint64_t{1} << (i - 1); }

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_index(int i) {
  if (i < 1 || i > kMaxDimension)
    throw DimensionOutOfRange("coordinate " + std::to_string(i) + " outside 1.." +
                              std::to_string(kMaxDimension));
}

}  // namespace

// ---------------------------------------------------------------- F2Vector

F2Vector F2Vector::unit(int i) {
  check_index(i);
  return F2Vector(unit_bit(i));
}

F2Vector F2Vector::from_bitstring(std::string_view s) {
  if (s.size() > static_cast<std::size_t>(kMaxDimension))
    throw DimensionOutOfRange("bitstring longer than " + std::to_string(kMaxDimension));
  std::uint64_t bits = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '1')
      bits |= std::uint64_t{1} << k;
    else if (s[k] != '0')
      throw ParseError("bad bit '" + std::string(1, s[k]) + "' in vector");
  }
  return F2Vector(bits);
}

int F2Vector::dim() const { return 64 - std::countl_zero(bits_); }
int F2Vector::weight() const { return std::popcount(bits_); }

std::string F2Vector::to_bitstring(int n) const {
  std::string out(static_cast<std::size_t>(std::max(n, dim())), '0');
  for (std::size_t k = 0; k < out.size(); ++k)
    if ((bits_ >> k) & 1u) out[k] = '1';
  return out;
}

int dot(F2Vector a, F2Vector b) { return std::popcount(a.bits() & b.bits()) & 1; }

// ---------------------------------------------------------------- F2Matrix

void F2Matrix::canonicalize() {
  int n = 0;
  for (int i = 1; i <= static_cast<int>(rows_.size()); ++i) {
    std::uint64_t diff = rows_[i - 1] ^ unit_bit(i);
    if (diff) n = std::max({n, i, 64 - std::countl_zero(diff)});
  }
  std::size_t old = rows_.size();
  rows_.resize(static_cast<std::size_t>(n));
  for (std::size_t i = old; i < rows_.size(); ++i) rows_[i] = unit_bit(static_cast<int>(i) + 1);
}

F2Matrix F2Matrix::from_rows(std::vector<std::uint64_t> rows) {
  if (rows.size() > static_cast<std::size_t>(kMaxDimension))
    throw DimensionOutOfRange("matrix larger than " + std::to_string(kMaxDimension));
  F2Matrix m(std::move(rows));
  m.canonicalize();
  return m;
}

F2Matrix F2Matrix::from_bitstring(std::string_view s, int n) {
  if (n < 0 || n > kMaxDimension) throw DimensionOutOfRange("matrix dimension " + std::to_string(n));
  if (s.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw ParseError("matrix bitstring has " + std::to_string(s.size()) + " characters, expected " +
                     std::to_string(n * n));
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      char c = s[static_cast<std::size_t>(i * n + j)];
      if (c == '1')
        rows[i] |= std::uint64_t{1} << j;
      else if (c != '0')
        throw ParseError("bad bit '" + std::string(1, c) + "' in matrix");
    }
  return from_rows(std::move(rows));
}

F2Matrix F2Matrix::elementary(int i, int j) {
  check_index(i);
  check_index(j);
  if (i == j) throw SingularMatrix("I + E_ii is singular over GF(2)");
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(std::max(i, j)));
  for (int k = 1; k <= static_cast<int>(rows.size()); ++k) rows[k - 1] = unit_bit(k);
  rows[i - 1] |= unit_bit(j);
  return from_rows(std::move(rows));
}

F2Matrix F2Matrix::permutation(const std::vector<int>& images) {
  // column k has its single 1 in row images[k-1]
  std::vector<std::uint64_t> rows(images.size(), 0);
  for (std::size_t k = 0; k < images.size(); ++k) {
    int r = images[k];
    if (r < 1 || r > static_cast<int>(images.size()) || rows[r - 1])
      throw ParseError("not a permutation of 1.." + std::to_string(images.size()));
    rows[r - 1] = std::uint64_t{1} << k;
  }
  return from_rows(std::move(rows));
}

std::uint64_t F2Matrix::row(int i) const {
  return i <= dim() ? rows_[i - 1] : unit_bit(i);
}

F2Vector F2Matrix::column(int j) const {
  if (j > dim()) return F2Vector(unit_bit(j));
  std::uint64_t bits = 0;
  for (int i = 1; i <= dim(); ++i)
    if ((rows_[i - 1] >> (j - 1)) & 1u) bits |= unit_bit(i);
  return F2Vector(bits);
}

F2Vector F2Matrix::apply(F2Vector v) const {
  const int n = dim();
  std::uint64_t out = v.bits() & ~low_mask(n);
  for (int i = 1; i <= n; ++i)
    if (std::popcount(rows_[i - 1] & v.bits()) & 1) out |= unit_bit(i);
  return F2Vector(out);
}

F2Vector F2Matrix::apply_row(F2Vector w) const {
  const int n = dim();
  std::uint64_t out = w.bits() & ~low_mask(n);
  for (int i = 1; i <= n; ++i)
    if (w.get(i)) out ^= rows_[i - 1];
  return F2Vector(out);
}

std::string F2Matrix::to_bitstring(int n) const {
  n = std::max(n, dim());
  std::string out;
  out.reserve(static_cast<std::size_t>(n * n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(get(i, j) ? '1' : '0');
  return out;
}

F2Matrix mat_mul(const F2Matrix& a, const F2Matrix& b) {
  const int n = std::max(a.dim(), b.dim());
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::uint64_t ra = a.row(i), acc = 0;
    while (ra) {
      int j = std::countr_zero(ra) + 1;
      acc ^= b.row(j);
      ra &= ra - 1;
    }
    rows[i - 1] = acc;
  }
  return F2Matrix::from_rows(std::move(rows));
}

F2Matrix mat_inverse(const F2Matrix& a) {
  const int n = a.dim();
  std::vector<std::uint64_t> lhs(a.rows()), rhs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rhs[i] = std::uint64_t{1} << i;
  for (int c = 0; c < n; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    int p = c;
    while (p < n && !(lhs[p] & bit)) ++p;
    if (p == n) throw SingularMatrix("matrix has rank < " + std::to_string(n));
    std::swap(lhs[p], lhs[c]);
    std::swap(rhs[p], rhs[c]);
    for (int r = 0; r < n; ++r)
      if (r != c && (lhs[r] & bit)) {
        lhs[r] ^= lhs[c];
        rhs[r] ^= rhs[c];
      }
  }
  return F2Matrix::from_rows(std::move(rhs));
}

F2Matrix transpose(const F2Matrix& a) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(a.dim()));
  for (int j = 1; j <= a.dim(); ++j) rows[j - 1] = a.column(j).bits();
  return F2Matrix::from_rows(std::move(rows));
}

// ---------------------------------------------------------------- ranges

namespace {

// Reduced echelon form keyed by leading (highest) bit, ascending.
std::vector<std::uint64_t> reduce_basis(const std::vector<std::uint64_t>& vs) {
  std::array<std::uint64_t, 64> piv{};
  for (std::uint64_t v : vs) {
    for (int b = 63; b >= 0 && v; --b) {
      if (!((v >> b) & 1u)) continue;
      if (!piv[b]) {
        piv[b] = v;
        v = 0;
      } else {
        v ^= piv[b];
      }
    }
  }
  for (int b = 0; b < 64; ++b) {
    if (!piv[b]) continue;
    for (int c = b + 1; c < 64; ++c)
      if (piv[c] && ((piv[c] >> b) & 1u)) piv[c] ^= piv[b];
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : piv)
    if (p) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> difference_columns(const F2Matrix& g) {
  std::vector<std::uint64_t> cols;
  for (int j = 1; j <= g.dim(); ++j) cols.push_back(g.column(j).bits() ^ unit_bit(j));
  return cols;
}

}  // namespace

std::vector<F2Vector> range_basis(const F2Matrix& g) {
  std::vector<F2Vector> out;
  for (std::uint64_t b : reduce_basis(difference_columns(g))) out.emplace_back(b);
  return out;
}

int rank_defect(const F2Matrix& g) { return static_cast<int>(range_basis(g).size()); }

int rank_of(std::vector<F2Vector> vs) {
  std::vector<std::uint64_t> raw;
  for (F2Vector v : vs) raw.push_back(v.bits());
  return static_cast<int>(reduce_basis(raw).size());
}

std::vector<F2Vector> span_of(const std::vector<F2Vector>& gens) {
  std::vector<std::uint64_t> raw;
  for (F2Vector v : gens) raw.push_back(v.bits());
  auto basis = reduce_basis(raw);
  std::vector<F2Vector> out;
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  out.reserve(count);
  for (std::uint64_t m = 0; m < count; ++m) {
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if ((m >> k) & 1u) v ^= basis[k];
    out.emplace_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<F2Vector> range_subgroup(const F2Matrix& g, std::uint64_t cap) {
  auto basis = range_basis(g);
  if (basis.size() >= 64 || (std::uint64_t{1} << basis.size()) > cap)
    throw RangeTooLarge("R(g-I) has 2^" + std::to_string(basis.size()) + " elements, cap is " +
                        std::to_string(cap));
  return span_of(basis);
}

bool is_transvection(const F2Matrix& t) {
  return !t.is_identity() && (t * t).is_identity() && rank_defect(t) == 1;
}

// ---------------------------------------------------------------- GL(n) tables

namespace {

// r x r matrices packed row-major into r*r bits (row i at bits r*i .. r*i+r-1).
using Code = std::uint32_t;

Code encode(const F2Matrix& m, int r) {
  Code c = 0;
  for (int i = 1; i <= r; ++i) c |= static_cast<Code>(m.row(i) & low_mask(r)) << (r * (i - 1));
  return c;
}

F2Matrix decode(Code c, int r) {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) rows[i] = (c >> (r * i)) & low_mask(r);
  return F2Matrix::from_rows(std::move(rows));
}

Code code_mul(Code a, Code b, int r) {
  const Code m = static_cast<Code>(low_mask(r));
  Code out = 0;
  for (int i = 0; i < r; ++i) {
    Code ra = (a >> (r * i)) & m, acc = 0;
    for (int j = 0; j < r; ++j)
      if ((ra >> j) & 1u) acc ^= (b >> (r * j)) & m;
    out |= acc << (r * i);
  }
  return out;
}

bool code_invertible(Code a, int r) {
  std::vector<std::uint64_t> rows;
  for (int i = 0; i < r; ++i) rows.push_back((a >> (r * i)) & low_mask(r));
  return static_cast<int>(reduce_basis(rows).size()) == r;
}

Code code_identity(int r) {
  Code c = 0;
  for (int i = 0; i < r; ++i) c |= Code{1} << (r * i + i);
  return c;
}

constexpr int kSearchMax = 4;

// Breadth-first tree of GL(r) under right multiplication by transvections.
struct ShortestWords {
  std::vector<Code> transvections;
  std::vector<std::int32_t> parent;  // -1 unvisited, root points to itself
  std::vector<std::uint8_t> via;     // index into transvections
};

const ShortestWords& shortest_words(int r) {
  static std::array<std::once_flag, kSearchMax + 1> once;
  static std::array<ShortestWords, kSearchMax + 1> tables;
  std::call_once(once[r], [r] {
    ShortestWords& t = tables[r];
    const Code total = Code{1} << (r * r);
    const Code id = code_identity(r);
    for (Code c = 0; c < total; ++c) {
      if (c == id || code_mul(c, c, r) != id) continue;
      if (is_transvection(decode(c, r))) t.transvections.push_back(c);
    }
    t.parent.assign(total, -1);
    t.via.assign(total, 0);
    std::vector<Code> frontier{id};
    t.parent[id] = static_cast<std::int32_t>(id);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      Code x = frontier[head];
      for (std::size_t k = 0; k < t.transvections.size(); ++k) {
        Code y = code_mul(x, t.transvections[k], r);
        if (t.parent[y] != -1) continue;
        t.parent[y] = static_cast<std::int32_t>(x);
        t.via[y] = static_cast<std::uint8_t>(k);
        frontier.push_back(y);
      }
    }
  });
  return tables[r];
}

std::vector<F2Matrix> factor_block(const F2Matrix& g1, int r) {
  std::vector<F2Matrix> out;
  if (g1.is_identity()) return out;
  if (r <= kSearchMax) {
    const ShortestWords& t = shortest_words(r);
    const Code id = code_identity(r);
    Code c = encode(g1, r);
    while (c != id) {
      out.push_back(decode(t.transvections[t.via[c]], r));
      c = static_cast<Code>(t.parent[c]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }
  // Gauss-Jordan with row additions; E_k...E_1 g1 = I gives g1 = E_1...E_k.
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) rows[i - 1] = g1.row(i);
  for (int c = 1; c <= r; ++c) {
    const std::uint64_t bit = unit_bit(c);
    if (!(rows[c - 1] & bit)) {
      int p = c + 1;
      while (!(rows[p - 1] & bit)) ++p;
      rows[c - 1] ^= rows[p - 1];
      out.push_back(F2Matrix::elementary(c, p));
    }
    for (int i = 1; i <= r; ++i)
      if (i != c && (rows[i - 1] & bit)) {
        rows[i - 1] ^= rows[c - 1];
        out.push_back(F2Matrix::elementary(i, c));
      }
  }
  return out;
}

}  // namespace

std::vector<F2Matrix> transvection_factorize(const F2Matrix& g) {
  if (g.is_identity()) throw IdentityInput("transvection_factorize needs g != I");
  mat_inverse(g);  // certifies invertibility
  const int n = g.dim();
  auto basis = range_basis(g);
  const int r = static_cast<int>(basis.size());

  // P sends e_i to the i-th basis vector of W = R(g - I), completed by unit vectors.
  std::vector<std::uint64_t> cols;
  for (F2Vector b : basis) cols.push_back(b.bits());
  for (int j = 1; j <= n && static_cast<int>(cols.size()) < n; ++j) {
    auto trial = cols;
    trial.push_back(unit_bit(j));
    if (reduce_basis(trial).size() == trial.size()) cols.push_back(unit_bit(j));
  }
  std::vector<std::uint64_t> prow(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if ((cols[j] >> i) & 1u) prow[i] |= std::uint64_t{1} << j;
  const F2Matrix p = F2Matrix::from_rows(prow);
  const F2Matrix p_inv = mat_inverse(p);
  const F2Matrix gp = p_inv * g * p;  // [[g1, m], [0, I]]

  std::vector<F2Matrix> local;
  for (int i = 1; i <= r; ++i)
    for (int j = r + 1; j <= n; ++j)
      if (gp.get(i, j)) local.push_back(F2Matrix::elementary(i, j));
  std::vector<std::uint64_t> top(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) top[i - 1] = gp.row(i) & low_mask(r);
  for (F2Matrix& s : factor_block(F2Matrix::from_rows(top), r)) local.push_back(std::move(s));

  std::vector<F2Matrix> out;
  out.reserve(local.size());
  for (const F2Matrix& s : local) out.push_back(p * s * p_inv);
  return out;
}

const std::vector<F2Matrix>& general_linear_group(int n) {
  if (n < 0 || n > kSearchMax)
    throw GroupTooLarge("GL(" + std::to_string(n) + ",2) is only enumerated for n <= 4");
  static std::array<std::once_flag, kSearchMax + 1> once;
  static std::array<std::vector<F2Matrix>, kSearchMax + 1> groups;
  std::call_once(once[n], [n] {
    const Code total = Code{1} << (n * n);
    for (Code c = 0; c < total; ++c)
      if (code_invertible(c, n)) groups[n].push_back(decode(c, n));
    std::sort(groups[n].begin(), groups[n].end());
  });
  return groups[n];
}

std::uint64_t gl_order(int n) {
  unsigned __int128 acc = 1;
  for (int i = 0; i < n; ++i) {
    acc *= (static_cast<unsigned __int128>(1) << n) - (static_cast<unsigned __int128>(1) << i);
    if (acc > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace isrlab
