#include "isrlab/groups.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace isrlab {

struct ElementAccess {
  static GroupElement wrap(GroupElement::Payload p) { return GroupElement(std::move(p)); }
};

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t v) { return mix(seed ^ mix(v)); }

std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::uint64_t rotate(std::uint64_t v, int t, int m) {
  t %= m;
  if (t == 0) return v;
  const std::uint64_t mask = low_mask(m);
  return ((v << t) | (v >> (m - t))) & mask;
}

[[noreturn]] void mismatch(const GroupElement& a, const GroupElement& b) {
  throw FamilyMismatch("cannot combine " + std::string(family_name(a.family())) + " element " +
                       a.to_string() + " with " + std::string(family_name(b.family())) +
                       " element " + b.to_string());
}

// ---- Cantor canonical form

void canonicalize(CantorPart& c) {
  const std::size_t words = std::size_t{1} << c.level;
  if (c.subset & 1u) c.subset = ~c.subset & low_mask(static_cast<int>(words));
  while (c.level > 0) {
    const std::size_t half = std::size_t{1} << (c.level - 1);
    bool descends = true;
    for (std::size_t x = 0; x < half && descends; ++x) {
      const int p0 = c.perm[2 * x], p1 = c.perm[2 * x + 1];
      descends = (p0 % 2 == 0) && p1 == p0 + 1 &&
                 (((c.subset >> (2 * x)) & 1u) == ((c.subset >> (2 * x + 1)) & 1u));
    }
    if (!descends) break;
    std::vector<std::uint8_t> perm(half);
    std::uint64_t subset = 0;
    for (std::size_t x = 0; x < half; ++x) {
      perm[x] = static_cast<std::uint8_t>(c.perm[2 * x] / 2);
      if ((c.subset >> (2 * x)) & 1u) subset |= std::uint64_t{1} << x;
    }
    c.perm = std::move(perm);
    c.subset = subset;
    --c.level;
  }
}

CantorPart refine(const CantorPart& c) {
  CantorPart out;
  out.level = c.level + 1;
  const std::size_t words = std::size_t{1} << c.level;
  out.perm.resize(2 * words);
  for (std::size_t x = 0; x < words; ++x)
    for (int b = 0; b < 2; ++b) {
      out.perm[2 * x + b] = static_cast<std::uint8_t>(2 * c.perm[x] + b);
      if ((c.subset >> x) & 1u) out.subset |= std::uint64_t{1} << (2 * x + b);
    }
  return out;
}

std::uint64_t image_of_subset(const std::vector<std::uint8_t>& perm, std::uint64_t a) {
  std::uint64_t out = 0;
  while (a) {
    int x = std::countr_zero(a);
    out |= std::uint64_t{1} << perm[x];
    a &= a - 1;
  }
  return out;
}

std::uint64_t preimage_of_subset(const std::vector<std::uint8_t>& perm, std::uint64_t a) {
  std::uint64_t out = 0;
  for (std::size_t y = 0; y < perm.size(); ++y)
    if ((a >> perm[y]) & 1u) out |= std::uint64_t{1} << y;
  return out;
}

std::vector<std::uint8_t> invert(const std::vector<std::uint8_t>& p) {
  std::vector<std::uint8_t> q(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) q[p[x]] = static_cast<std::uint8_t>(x);
  return q;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Affine: return "affine";
    case Family::Wreath: return "wreath";
    case Family::Lamplighter: return "lamplighter";
    case Family::Cantor: return "cantor";
  }
  return "?";
}

Family parse_family(std::string_view s) {
  for (Family f : {Family::Affine, Family::Wreath, Family::Lamplighter, Family::Cantor})
    if (family_name(f) == s) return f;
  throw ParseError("unknown group family '" + std::string(s) + "'");
}

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(const std::vector<int>& images) {
  if (images.size() > static_cast<std::size_t>(kMaxDimension))
    throw DimensionOutOfRange("permutation degree above " + std::to_string(kMaxDimension));
  std::vector<bool> seen(images.size(), false);
  img_.resize(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    int x = images[i];
    if (x < 1 || x > static_cast<int>(images.size()) || seen[x - 1])
      throw ParseError("not a permutation of 1.." + std::to_string(images.size()));
    seen[x - 1] = true;
    img_[i] = static_cast<std::uint8_t>(x - 1);
  }
  trim();
}

void Permutation::trim() {
  while (!img_.empty() && img_.back() == img_.size() - 1) img_.pop_back();
}

Permutation Permutation::transposition(int a, int b) {
  std::vector<int> img(static_cast<std::size_t>(std::max(a, b)));
  std::iota(img.begin(), img.end(), 1);
  std::swap(img[a - 1], img[b - 1]);
  return Permutation(img);
}

Permutation Permutation::cycle(const std::vector<int>& points) {
  int n = points.empty() ? 0 : *std::max_element(points.begin(), points.end());
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  for (std::size_t k = 0; k < points.size(); ++k) img[points[k] - 1] = points[(k + 1) % points.size()];
  return Permutation(img);
}

int Permutation::operator()(int i) const { return i <= degree() ? img_[i - 1] + 1 : i; }

std::vector<int> Permutation::one_line(int n) const {
  std::vector<int> out(static_cast<std::size_t>(std::max(n, degree())));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(static_cast<int>(i) + 1);
  return out;
}

std::vector<int> Permutation::support() const {
  std::vector<int> out;
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) out.push_back(i);
  return out;
}

int Permutation::sign() const {
  std::vector<bool> seen(img_.size(), false);
  int parity = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j], ++len) seen[j] = true;
    parity ^= static_cast<int>((len + 1) & 1u);
  }
  return parity ? -1 : 1;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_ = invert(img_);
  return out;
}

F2Vector Permutation::act(F2Vector v) const {
  std::uint64_t out = v.bits() & ~low_mask(degree());
  for (int i = 1; i <= degree(); ++i)
    if (v.get(i)) out |= std::uint64_t{1} << img_[i - 1];
  return F2Vector(out);
}

std::string Permutation::to_cycle_string() const {
  if (is_identity()) return "e";
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (j != i) out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  const int n = std::max(a.degree(), b.degree());
  Permutation out;
  out.img_.resize(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.img_[i - 1] = static_cast<std::uint8_t>(a(b(i)) - 1);
  out.trim();
  return out;
}

// ---------------------------------------------------------------- GroupElement

GroupElement GroupElement::identity(Family f, int modulus) {
  switch (f) {
    case Family::Affine: return make_affine(F2Matrix{});
    case Family::Wreath: return make_wreath(Permutation{});
    case Family::Lamplighter: return make_lamplighter(modulus, 0, 0);
    case Family::Cantor: return ElementAccess::wrap(CantorPart{});
  }
  return {};
}

const AffinePart& GroupElement::affine() const {
  if (auto* p = std::get_if<AffinePart>(&payload_)) return *p;
  throw FamilyMismatch("expected an affine element, got " + to_string());
}
const WreathPart& GroupElement::wreath() const {
  if (auto* p = std::get_if<WreathPart>(&payload_)) return *p;
  throw FamilyMismatch("expected a wreath element, got " + to_string());
}
const LamplighterPart& GroupElement::lamplighter() const {
  if (auto* p = std::get_if<LamplighterPart>(&payload_)) return *p;
  throw FamilyMismatch("expected a lamplighter element, got " + to_string());
}
const CantorPart& GroupElement::cantor() const {
  if (auto* p = std::get_if<CantorPart>(&payload_)) return *p;
  throw FamilyMismatch("expected a cantor element, got " + to_string());
}

bool GroupElement::is_identity() const {
  return std::visit(
      [](const auto& p) -> bool {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, AffinePart>) return p.g.is_identity() && p.v.is_zero();
        else if constexpr (std::is_same_v<T, WreathPart>) return p.sigma.is_identity() && p.v.is_zero();
        else if constexpr (std::is_same_v<T, LamplighterPart>) return p.v == 0 && p.t == 0;
        else return p.level == 0;
      },
      payload_);
}

std::size_t GroupElement::hash() const {
  std::uint64_t h = payload_.index();
  std::visit(
      [&h](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, AffinePart>) {
          for (std::uint64_t r : p.g.rows()) h = combine(h, r);
          h = combine(h, p.v.bits());
        } else if constexpr (std::is_same_v<T, WreathPart>) {
          for (int x : p.sigma.one_line(0)) h = combine(h, static_cast<std::uint64_t>(x));
          h = combine(h, p.v.bits());
        } else if constexpr (std::is_same_v<T, LamplighterPart>) {
          h = combine(combine(combine(h, static_cast<std::uint64_t>(p.m)), p.v),
                      static_cast<std::uint64_t>(p.t));
        } else {
          h = combine(h, static_cast<std::uint64_t>(p.level));
          std::uint64_t packed = 0;
          for (std::size_t x = 0; x < p.perm.size(); ++x) {
            packed = packed * 131 + p.perm[x];
            if (x % 8 == 7) h = combine(h, packed), packed = 0;
          }
          h = combine(combine(h, packed), p.subset);
        }
      },
      payload_);
  return static_cast<std::size_t>(h);
}

std::string word_string(int x, int level) {
  std::string out(static_cast<std::size_t>(level), '0');
  for (int k = 0; k < level; ++k)
    if ((x >> (level - 1 - k)) & 1) out[static_cast<std::size_t>(k)] = '1';
  return out;
}

int parse_word(std::string_view w) {
  if (w.size() > static_cast<std::size_t>(kMaxCantorLevel))
    throw DimensionOutOfRange("cantor word longer than " + std::to_string(kMaxCantorLevel));
  int x = 0;
  for (char c : w) {
    if (c != '0' && c != '1') throw ParseError("bad letter '" + std::string(1, c) + "' in word");
    x = 2 * x + (c - '0');
  }
  return x;
}

std::string GroupElement::to_string() const {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, AffinePart>) {
          const int n = std::max({p.g.dim(), p.v.dim(), 1});
          std::string g;
          for (int i = 1; i <= n; ++i) {
            if (i > 1) g += "|";
            for (int j = 1; j <= n; ++j) g += p.g.get(i, j) ? '1' : '0';
          }
          return "[" + g + "]v" + p.v.to_bitstring(n);
        } else if constexpr (std::is_same_v<T, WreathPart>) {
          const int n = std::max({p.sigma.degree(), p.v.dim(), 1});
          return p.sigma.to_cycle_string() + "z" + p.v.to_bitstring(n);
        } else if constexpr (std::is_same_v<T, LamplighterPart>) {
          std::string v;
          for (int i = 0; i < p.m; ++i) v += ((p.v >> i) & 1u) ? '1' : '0';
          return v + "s^" + std::to_string(p.t);
        } else {
          std::string s = "[";
          for (std::size_t x = 0; x < p.perm.size(); ++x) {
            if (x) s += ",";
            s += word_string(p.perm[x], p.level);
          }
          s += "]{";
          bool first = true;
          for (std::size_t x = 0; x < p.perm.size(); ++x)
            if ((p.subset >> x) & 1u) {
              if (!first) s += ",";
              s += word_string(static_cast<int>(x), p.level);
              first = false;
            }
          return s + "}";
        }
      },
      payload_);
}

GroupElement make_affine(const F2Matrix& g, F2Vector v) {
  return ElementAccess::wrap(AffinePart{g, mat_inverse(g), v});
}

GroupElement make_wreath(Permutation s, F2Vector v) {
  if (v.dim() > kMaxDimension) throw DimensionOutOfRange("wreath vector too long");
  return ElementAccess::wrap(WreathPart{std::move(s), v});
}

GroupElement make_lamplighter(int m, std::uint64_t v, int t) {
  if (m < 1 || m > kMaxModulus) throw ModulusOutOfRange("modulus " + std::to_string(m));
  if (v & ~low_mask(m)) throw ParseError("lamplighter lamps beyond modulus");
  t %= m;
  if (t < 0) t += m;
  return ElementAccess::wrap(LamplighterPart{m, v, t});
}

GroupElement make_cantor(int level, const std::vector<int>& perm, std::uint64_t subset) {
  if (level < 0 || level > kMaxCantorLevel)
    throw DimensionOutOfRange("cantor level " + std::to_string(level));
  const std::size_t words = std::size_t{1} << level;
  if (perm.size() != words) throw ParseError("cantor permutation must list 2^level images");
  if (subset & ~low_mask(static_cast<int>(words))) throw ParseError("cantor subset beyond level");
  CantorPart c;
  c.level = level;
  c.perm.assign(words, 0);
  std::vector<bool> seen(words, false);
  for (std::size_t x = 0; x < words; ++x) {
    int y = perm[x];
    if (y < 0 || static_cast<std::size_t>(y) >= words || seen[y])
      throw ParseError("cantor images are not a permutation of the level words");
    seen[y] = true;
    c.perm[x] = static_cast<std::uint8_t>(y);
  }
  c.subset = subset;
  canonicalize(c);
  return ElementAccess::wrap(std::move(c));
}

GroupElement make_cantor_function(int level, std::uint64_t subset) {
  std::vector<int> id(std::size_t{1} << std::max(level, 0));
  std::iota(id.begin(), id.end(), 0);
  return make_cantor(level, id, subset);
}

GroupElement make_cantor_transposition(int level, int x, int y) {
  std::vector<int> p(std::size_t{1} << std::max(level, 0));
  std::iota(p.begin(), p.end(), 0);
  std::swap(p.at(static_cast<std::size_t>(x)), p.at(static_cast<std::size_t>(y)));
  return make_cantor(level, p, 0);
}

CantorPart cantor_at_level(const CantorPart& c, int level) {
  if (level < c.level || level > kMaxCantorLevel)
    throw DimensionOutOfRange("cannot present a level-" + std::to_string(c.level) +
                              " element at level " + std::to_string(level));
  CantorPart out = c;
  while (out.level < level) out = refine(out);
  return out;
}

bool compatible(const GroupElement& a, const GroupElement& b) {
  if (a.family() != b.family()) return false;
  if (a.family() == Family::Lamplighter) return a.lamplighter().m == b.lamplighter().m;
  return true;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (!compatible(a, b)) mismatch(a, b);
  switch (a.family()) {
    case Family::Affine: {
      const AffinePart &x = a.affine(), &y = b.affine();
      return ElementAccess::wrap(AffinePart{x.g * y.g, y.g_inv * x.g_inv, y.g_inv.apply(x.v) + y.v});
    }
    case Family::Wreath: {
      const WreathPart &x = a.wreath(), &y = b.wreath();
      return ElementAccess::wrap(WreathPart{x.sigma * y.sigma, y.sigma.inverse().act(x.v) + y.v});
    }
    case Family::Lamplighter: {
      const LamplighterPart &x = a.lamplighter(), &y = b.lamplighter();
      return ElementAccess::wrap(
          LamplighterPart{x.m, x.v ^ rotate(y.v, x.t, x.m), (x.t + y.t) % x.m});
    }
    case Family::Cantor: {
      const int level = std::max(a.cantor().level, b.cantor().level);
      CantorPart x = cantor_at_level(a.cantor(), level), y = cantor_at_level(b.cantor(), level);
      CantorPart out;
      out.level = level;
      out.perm.resize(x.perm.size());
      for (std::size_t w = 0; w < x.perm.size(); ++w) out.perm[w] = x.perm[y.perm[w]];
      out.subset = preimage_of_subset(y.perm, x.subset) ^ y.subset;
      canonicalize(out);
      return ElementAccess::wrap(std::move(out));
    }
  }
  return {};
}

GroupElement inverse(const GroupElement& a) {
  switch (a.family()) {
    case Family::Affine: {
      const AffinePart& x = a.affine();
      return ElementAccess::wrap(AffinePart{x.g_inv, x.g, x.g.apply(x.v)});
    }
    case Family::Wreath: {
      const WreathPart& x = a.wreath();
      return ElementAccess::wrap(WreathPart{x.sigma.inverse(), x.sigma.act(x.v)});
    }
    case Family::Lamplighter: {
      const LamplighterPart& x = a.lamplighter();
      const int back = (x.m - x.t) % x.m;
      return ElementAccess::wrap(LamplighterPart{x.m, rotate(x.v, back, x.m), back});
    }
    case Family::Cantor: {
      const CantorPart& x = a.cantor();
      CantorPart out{x.level, invert(x.perm), image_of_subset(x.perm, x.subset)};
      canonicalize(out);
      return ElementAccess::wrap(std::move(out));
    }
  }
  return {};
}

GroupElement conjugate(const GroupElement& g, const GroupElement& h) {
  return multiply(multiply(g, h), inverse(g));
}

// ---------------------------------------------------------------- truncations

std::uint64_t default_cap() {
  if (const char* env = std::getenv("ISRLAB_CAP")) {
    std::uint64_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return kDefaultCap;
}

namespace {

constexpr std::uint64_t kSaturated = ~std::uint64_t{0};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  return p > kSaturated ? kSaturated : static_cast<std::uint64_t>(p);
}

std::uint64_t sat_pow2(int k) { return k >= 64 ? kSaturated : std::uint64_t{1} << k; }

std::uint64_t sat_factorial(std::uint64_t n) {
  std::uint64_t acc = 1;
  for (std::uint64_t k = 2; k <= n && acc != kSaturated; ++k) acc = sat_mul(acc, k);
  return acc;
}

void check_truncation(Truncation t) {
  switch (t.family) {
    case Family::Affine:
    case Family::Wreath:
      if (t.n < 0 || t.n > kMaxDimension) throw DimensionOutOfRange("truncation n=" + std::to_string(t.n));
      break;
    case Family::Lamplighter:
      if (t.n < 1 || t.n > kMaxModulus) throw ModulusOutOfRange("modulus m=" + std::to_string(t.n));
      break;
    case Family::Cantor:
      if (t.n < 0 || t.n > kMaxCantorLevel) throw DimensionOutOfRange("cantor level m=" + std::to_string(t.n));
      break;
  }
}

}  // namespace

std::uint64_t group_order(Truncation t) {
  check_truncation(t);
  switch (t.family) {
    case Family::Affine: return sat_mul(gl_order(t.n), sat_pow2(t.n));
    case Family::Wreath: return sat_mul(sat_factorial(static_cast<std::uint64_t>(t.n)), sat_pow2(t.n));
    case Family::Lamplighter: return sat_mul(static_cast<std::uint64_t>(t.n), sat_pow2(t.n));
    case Family::Cantor: {
      const int words = 1 << t.n;
      return sat_mul(sat_factorial(static_cast<std::uint64_t>(words)), sat_pow2(words - 1));
    }
  }
  return 0;
}

std::vector<GroupElement> enumerate_group(Truncation t, std::uint64_t cap) {
  const std::uint64_t order = group_order(t);
  if (order > cap)
    throw GroupTooLarge(std::string(family_name(t.family)) + " truncation n=" + std::to_string(t.n) +
                        " has " + (order == kSaturated ? std::string(">2^64") : std::to_string(order)) +
                        " elements, cap is " + std::to_string(cap));
  std::vector<GroupElement> out;
  out.reserve(order);
  switch (t.family) {
    case Family::Affine:
      for (const F2Matrix& g : general_linear_group(t.n))
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << t.n); ++v) out.push_back(make_affine(g, F2Vector(v)));
      break;
    case Family::Wreath: {
      std::vector<int> img(static_cast<std::size_t>(t.n));
      std::iota(img.begin(), img.end(), 1);
      do {
        Permutation s(img);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << t.n); ++v) out.push_back(make_wreath(s, F2Vector(v)));
      } while (std::next_permutation(img.begin(), img.end()));
      break;
    }
    case Family::Lamplighter:
      for (int k = 0; k < t.n; ++k)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << t.n); ++v)
          out.push_back(make_lamplighter(t.n, v, k));
      break;
    case Family::Cantor: {
      const int words = 1 << t.n;
      std::vector<int> img(static_cast<std::size_t>(words));
      std::iota(img.begin(), img.end(), 0);
      do {
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << (words - 1)); ++a)
          out.push_back(make_cantor(t.n, img, a << 1));
      } while (std::next_permutation(img.begin(), img.end()));
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> group_generators(Truncation t) {
  check_truncation(t);
  std::vector<GroupElement> out;
  switch (t.family) {
    case Family::Affine: {
      if (t.n >= 2) {
        out.push_back(make_affine(F2Matrix::elementary(1, 2)));
        std::vector<int> img(static_cast<std::size_t>(t.n));
        for (int k = 1; k <= t.n; ++k) img[k - 1] = k % t.n + 1;
        out.push_back(make_affine(F2Matrix::permutation(img)));
      }
      if (t.n >= 1) out.push_back(make_vector(F2Vector::unit(1)));
      break;
    }
    case Family::Wreath: {
      if (t.n >= 2) out.push_back(make_wreath(Permutation::transposition(1, 2)));
      if (t.n >= 3) {
        std::vector<int> pts(static_cast<std::size_t>(t.n));
        std::iota(pts.begin(), pts.end(), 1);
        out.push_back(make_wreath(Permutation::cycle(pts)));
      }
      if (t.n >= 1) out.push_back(make_wreath(Permutation{}, F2Vector::unit(1)));
      break;
    }
    case Family::Lamplighter:
      out.push_back(make_lamplighter(t.n, 0, 1));
      out.push_back(make_lamplighter(t.n, 1, 0));
      break;
    case Family::Cantor: {
      if (t.n >= 1) {
        const int words = 1 << t.n;
        out.push_back(make_cantor_transposition(t.n, 0, 1));
        if (words >= 3) {
          std::vector<int> img(static_cast<std::size_t>(words));
          for (int x = 0; x < words; ++x) img[x] = (x + 1) % words;
          out.push_back(make_cantor(t.n, img));
        }
        out.push_back(make_cantor_function(t.n, 2));
      }
      break;
    }
  }
  return out;
}

bool in_truncation(const GroupElement& g, Truncation t) {
  if (g.family() != t.family) return false;
  switch (t.family) {
    case Family::Affine: return g.affine().g.dim() <= t.n && g.affine().v.dim() <= t.n;
    case Family::Wreath: return g.wreath().sigma.degree() <= t.n && g.wreath().v.dim() <= t.n;
    case Family::Lamplighter: return g.lamplighter().m == t.n;
    case Family::Cantor: return g.cantor().level <= t.n;
  }
  return false;
}

GroupElement random_element(Truncation t, Rng& rng) {
  check_truncation(t);
  auto shuffled = [&rng](int n, int base) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), base);
    for (int i = n - 1; i > 0; --i)
      std::swap(p[i], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return p;
  };
  switch (t.family) {
    case Family::Affine: {
      for (;;) {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(t.n));
        for (auto& r : rows) r = rng.next() & low_mask(t.n);
        F2Matrix g = F2Matrix::from_rows(rows);
        if (rank_of([&] {
              std::vector<F2Vector> vs;
              for (auto r : rows) vs.emplace_back(r);
              return vs;
            }()) == t.n)
          return make_affine(g, F2Vector(rng.next() & low_mask(t.n)));
      }
    }
    case Family::Wreath:
      return make_wreath(Permutation(shuffled(t.n, 1)), F2Vector(rng.next() & low_mask(t.n)));
    case Family::Lamplighter:
      return make_lamplighter(t.n, rng.next() & low_mask(t.n), static_cast<int>(rng.below(static_cast<std::uint64_t>(t.n))));
    case Family::Cantor: {
      const int words = 1 << t.n;
      return make_cantor(t.n, shuffled(words, 0), rng.next() & low_mask(words));
    }
  }
  return {};
}

std::vector<GroupElement> centralizer(const GroupElement& g, Truncation t, std::uint64_t cap) {
  std::vector<GroupElement> out;
  for (const GroupElement& x : enumerate_group(t, cap))
    if (multiply(g, x) == multiply(x, g)) out.push_back(x);
  return out;
}

std::vector<GroupElement> centralizer_generators(const GroupElement& g, Truncation t, std::uint64_t cap) {
  const auto gens = group_generators(t);
  // transversal: rep[x] conjugates g to x
  std::unordered_map<GroupElement, GroupElement, GroupElementHash> rep;
  std::vector<GroupElement> order{g};
  rep.emplace(g, GroupElement::identity(g.family(), t.family == Family::Lamplighter ? t.n : 1));
  std::unordered_set<GroupElement, GroupElementHash> schreier;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const GroupElement x = order[head];
    const GroupElement ux = rep.at(x);
    for (const GroupElement& c : gens) {
      GroupElement y = conjugate(c, x);
      GroupElement cu = multiply(c, ux);
      auto it = rep.find(y);
      if (it == rep.end()) {
        if (order.size() >= cap)
          throw GroupTooLarge("conjugacy orbit of " + g.to_string() + " exceeds cap " + std::to_string(cap));
        rep.emplace(y, cu);
        order.push_back(y);
      } else {
        GroupElement s = multiply(inverse(it->second), cu);
        if (!s.is_identity()) schreier.insert(std::move(s));
      }
    }
  }
  std::vector<GroupElement> out(schreier.begin(), schreier.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<GroupElement>> orbit_under(const GroupElement& h, const std::vector<GroupElement>& c,
                                                     std::uint64_t cap) {
  std::unordered_set<GroupElement, GroupElementHash> members(c.begin(), c.end());
  for (const GroupElement& x : c)
    if (!members.count(inverse(x)))
      throw NotSymmetric("conjugator set lacks the inverse of " + x.to_string());
  std::unordered_set<GroupElement, GroupElementHash> orbit;
  for (const GroupElement& x : c) {
    orbit.insert(multiply(multiply(inverse(x), h), x));
    if (orbit.size() > cap) return std::nullopt;
  }
  std::vector<GroupElement> out(orbit.begin(), orbit.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<GroupElement>> orbit_under_generators(const GroupElement& h,
                                                                const std::vector<GroupElement>& gens,
                                                                std::uint64_t cap) {
  std::vector<GroupElement> inv;
  for (const GroupElement& t : gens) inv.push_back(inverse(t));
  std::unordered_set<GroupElement, GroupElementHash> seen{h};
  std::vector<GroupElement> order{h};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      GroupElement y = multiply(multiply(inv[k], order[head]), gens[k]);
      if (seen.insert(y).second) {
        if (seen.size() > cap) return std::nullopt;
        order.push_back(std::move(y));
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::optional<std::vector<GroupElement>> generated_subgroup(const std::vector<GroupElement>& gens,
                                                            std::uint64_t cap) {
  if (gens.empty()) throw HypothesisViolated("generated_subgroup needs a nonempty generating set");
  const GroupElement e = multiply(gens.front(), inverse(gens.front()));
  std::unordered_set<GroupElement, GroupElementHash> seen{e};
  std::vector<GroupElement> order{e};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const GroupElement& t : gens) {
      GroupElement y = multiply(order[head], t);
      if (seen.insert(y).second) {
        if (seen.size() > cap) return std::nullopt;
        order.push_back(std::move(y));
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::optional<std::vector<GroupElement>> normal_closure(const std::vector<GroupElement>& gens, Truncation t,
                                                        std::uint64_t cap) {
  if (gens.empty()) throw HypothesisViolated("normal_closure needs a nonempty generating set");
  const auto ambient = group_generators(t);
  for (const GroupElement& g : gens)
    if (!in_truncation(g, t))
      throw FamilyMismatch(g.to_string() + " is not in the " + std::string(family_name(t.family)) +
                           " truncation n=" + std::to_string(t.n));
  // conjugation-closed generating set, then the subgroup it generates
  std::unordered_set<GroupElement, GroupElementHash> seen(gens.begin(), gens.end());
  std::vector<GroupElement> order(seen.begin(), seen.end());
  std::sort(order.begin(), order.end());
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const GroupElement& c : ambient) {
      GroupElement y = conjugate(c, order[head]);
      if (seen.insert(y).second) {
        if (seen.size() > cap) return std::nullopt;
        order.push_back(std::move(y));
      }
    }
  }
  return generated_subgroup(order, cap);
}

}  // namespace isrlab
