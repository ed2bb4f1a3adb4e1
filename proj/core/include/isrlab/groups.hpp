#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "isrlab/f2_linalg.hpp"
#include "isrlab/random.hpp"

namespace isrlab {

enum class Family : std::uint8_t { Affine, Wreath, Lamplighter, Cantor };

std::string_view family_name(Family f);
Family parse_family(std::string_view s);

// Finitary permutation of {1, 2, ...}, trailing fixed points trimmed.
class Permutation {
 public:
  Permutation() = default;
  // one-line notation, 1-based: images[i-1] = sigma(i)
  explicit Permutation(const std::vector<int>& images);
  static Permutation transposition(int a, int b);
  static Permutation cycle(const std::vector<int>& points);

  int operator()(int i) const;
  int degree() const { return static_cast<int>(img_.size()); }
  bool is_identity() const { return img_.empty(); }
  std::vector<int> one_line(int n) const;
  std::vector<int> support() const;
  int sign() const;
  Permutation inverse() const;
  // vector permuted as the permutation matrix: sigma(v)_{sigma(i)} = v_i
  F2Vector act(F2Vector v) const;
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);  // a after b
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  void trim();
  std::vector<std::uint8_t> img_;  // 0-based
};

struct AffinePart {
  F2Matrix g;
  F2Matrix g_inv;  // cached certificate, not part of identity
  F2Vector v;
  friend bool operator==(const AffinePart& a, const AffinePart& b) { return a.g == b.g && a.v == b.v; }
  friend std::strong_ordering operator<=>(const AffinePart& a, const AffinePart& b) {
    if (auto c = a.g <=> b.g; c != 0) return c;
    return a.v <=> b.v;
  }
};

struct WreathPart {
  Permutation sigma;
  F2Vector v;
  friend bool operator==(const WreathPart&, const WreathPart&) = default;
  friend auto operator<=>(const WreathPart&, const WreathPart&) = default;
};

// v * s^t in Z2 wr Z/m; bit i of v is the lamp at i.
struct LamplighterPart {
  int m = 1;
  std::uint64_t v = 0;
  int t = 0;
  friend bool operator==(const LamplighterPart&, const LamplighterPart&) = default;
  friend auto operator<=>(const LamplighterPart&, const LamplighterPart&) = default;
};

// sigma * f~_A. Words of length `level` are integers read MSB-first, so the
// children of word x are 2x and 2x+1. Bit x of `subset` marks x in A.
struct CantorPart {
  int level = 0;
  std::vector<std::uint8_t> perm{0};
  std::uint64_t subset = 0;
  friend bool operator==(const CantorPart&, const CantorPart&) = default;
  friend auto operator<=>(const CantorPart&, const CantorPart&) = default;
};

inline constexpr int kMaxCantorLevel = 6;
inline constexpr int kMaxModulus = 64;

class GroupElement {
 public:
  using Payload = std::variant<AffinePart, WreathPart, LamplighterPart, CantorPart>;

  GroupElement() = default;  // Affine identity
  static GroupElement identity(Family f, int modulus = 1);

  Family family() const { return static_cast<Family>(payload_.index()); }
  const Payload& payload() const { return payload_; }
  const AffinePart& affine() const;
  const WreathPart& wreath() const;
  const LamplighterPart& lamplighter() const;
  const CantorPart& cantor() const;

  bool is_identity() const;
  std::size_t hash() const;
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  explicit GroupElement(Payload p) : payload_(std::move(p)) {}
  Payload payload_;

  friend struct ElementAccess;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

GroupElement make_affine(const F2Matrix& g, F2Vector v = {});  // SingularMatrix
inline GroupElement make_vector(F2Vector v) { return make_affine(F2Matrix{}, v); }
GroupElement make_wreath(Permutation s, F2Vector v = {});
GroupElement make_lamplighter(int m, std::uint64_t v, int t);
// perm[x] = image of word x at the given level; A given as a bitmask over words
GroupElement make_cantor(int level, const std::vector<int>& perm, std::uint64_t subset = 0);
GroupElement make_cantor_function(int level, std::uint64_t subset);  // f~_A
GroupElement make_cantor_transposition(int level, int x, int y);

// word "0110" -> (level 4, value 6)
int parse_word(std::string_view w);
std::string word_string(int x, int level);
// the same element presented at a level >= its canonical level
CantorPart cantor_at_level(const CantorPart& c, int level);

bool compatible(const GroupElement& a, const GroupElement& b);
GroupElement multiply(const GroupElement& a, const GroupElement& b);  // FamilyMismatch
GroupElement inverse(const GroupElement& a);
GroupElement conjugate(const GroupElement& g, const GroupElement& h);  // g h g^-1
inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return multiply(a, b); }

// ---------------------------------------------------------------- truncations

// n is the dimension (Affine), degree (Wreath), modulus (Lamplighter) or level (Cantor).
struct Truncation {
  Family family = Family::Affine;
  int n = 1;
};

inline constexpr std::uint64_t kDefaultCap = 1'000'000;
// kDefaultCap unless ISRLAB_CAP is set
std::uint64_t default_cap();

std::uint64_t group_order(Truncation t);  // saturates at 2^64-1
std::vector<GroupElement> enumerate_group(Truncation t, std::uint64_t cap = default_cap());
std::vector<GroupElement> group_generators(Truncation t);
bool in_truncation(const GroupElement& g, Truncation t);
GroupElement random_element(Truncation t, Rng& rng);

std::vector<GroupElement> centralizer(const GroupElement& g, Truncation t,
                                      std::uint64_t cap = default_cap());
// Schreier generators of C(g), from the conjugation orbit of g under the
// truncation's generators. Works far past the enumeration cap.
std::vector<GroupElement> centralizer_generators(const GroupElement& g, Truncation t,
                                                 std::uint64_t cap = default_cap());

// {t^-1 h t : t in C}, sorted; nullopt when the orbit exceeds cap.
std::optional<std::vector<GroupElement>> orbit_under(const GroupElement& h,
                                                     const std::vector<GroupElement>& c,
                                                     std::uint64_t cap = default_cap());
// Orbit under the group generated by gens.
std::optional<std::vector<GroupElement>> orbit_under_generators(const GroupElement& h,
                                                                const std::vector<GroupElement>& gens,
                                                                std::uint64_t cap = default_cap());
std::optional<std::vector<GroupElement>> normal_closure(const std::vector<GroupElement>& gens,
                                                        Truncation t,
                                                        std::uint64_t cap = default_cap());
// Subgroup generated by gens (finite groups only).
std::optional<std::vector<GroupElement>> generated_subgroup(const std::vector<GroupElement>& gens,
                                                            std::uint64_t cap = default_cap());

}  // namespace isrlab
