#include "isrlab/characters.hpp"

#include <charconv>

#include "isrlab/projections.hpp"

namespace isrlab {

namespace {

std::optional<int> parse_param(std::string_view v) {
  if (v == "inf" || v == "oo" || v == "infinity") return std::nullopt;
  int out = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size() || out < 0)
    throw ParseError("bad character parameter '" + std::string(v) + "'");
  return out;
}

std::string param_string(std::optional<int> k) { return k ? std::to_string(*k) : "inf"; }

mpq_class pow2_neg(long e) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return mpq_class(mpz_class(1), den);
}

bool in_range(const F2Matrix& g, F2Vector v) {
  auto basis = range_basis(g);
  const int r = static_cast<int>(basis.size());
  basis.push_back(v);
  return rank_of(std::move(basis)) == r;
}

}  // namespace

CharacterSpec CharacterSpec::parse(std::string_view s) {
  if (s == "regular") return regular();
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) throw ParseError("bad character spec '" + std::string(s) + "'");
  const std::string_view kind = s.substr(0, colon);
  std::string_view rest = s.substr(colon + 1);
  std::optional<int> k = 0;
  bool have_k = false;
  int d = 1;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view kv = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value in '" + std::string(s) + "'");
    const std::string_view key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "k" || key == "m") {
      k = parse_param(val);
      have_k = true;
    } else if (key == "d") {
      if (val != "0" && val != "1") throw ParseError("d must be 0 or 1");
      d = val == "1";
    } else {
      throw ParseError("unknown character parameter '" + std::string(key) + "'");
    }
  }
  if (!have_k) throw ParseError("character spec '" + std::string(s) + "' needs a k (or m) parameter");
  if (kind == "affine") return affine(k, d);
  if (kind == "gl") return gl_only(k);
  if (kind == "cantor") return cantor(k);
  throw ParseError("unknown character family '" + std::string(kind) + "'");
}

std::string CharacterSpec::name() const {
  switch (kind) {
    case Kind::AffineGL: return "affine:k=" + param_string(k) + ",d=" + std::to_string(d);
    case Kind::GLOnly: return "gl:m=" + param_string(k);
    case Kind::CantorSym: return "cantor:k=" + param_string(k);
    case Kind::Regular: break;
  }
  return "regular";
}

mpq_class evaluate(const CharacterSpec& spec, const GroupElement& g) {
  switch (spec.kind) {
    case CharacterSpec::Kind::Regular:
      return g.is_identity() ? 1 : 0;
    case CharacterSpec::Kind::AffineGL: {
      const AffinePart& a = g.affine();
      if (spec.d == 0 && !in_range(a.g, a.v)) return 0;
      if (!spec.k) return a.g.is_identity() ? 1 : 0;
      return pow2_neg(static_cast<long>(*spec.k) * rank_defect(a.g));
    }
    case CharacterSpec::Kind::GLOnly: {
      const AffinePart& a = g.affine();
      if (!a.v.is_zero()) throw HypothesisViolated("gl characters take elements of GL only, got " + g.to_string());
      if (!spec.k) return a.g.is_identity() ? 1 : 0;
      return pow2_neg(static_cast<long>(*spec.k) * rank_defect(a.g));
    }
    case CharacterSpec::Kind::CantorSym: {
      const CantorPart& c = g.cantor();
      if (c.subset != 0)
        throw HypothesisViolated("cantor characters take pure permutations, got " + g.to_string());
      if (!spec.k) return g.is_identity() ? 1 : 0;
      const mpq_class mu = mu_fix(g);
      mpq_class out = 1;
      for (int i = 0; i < *spec.k; ++i) out *= mu;
      return out;
    }
  }
  return 0;
}

bool is_psd(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] != m[j][i]) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const mpq_class p = m[k][k];
    if (sgn(p) < 0) return false;
    if (sgn(p) == 0) {
      for (std::size_t j = k + 1; j < n; ++j)
        if (sgn(m[k][j]) != 0) return false;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m[i][k]) == 0) continue;
      const mpq_class f = m[i][k] / p;
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

bool is_positive_definite(const CharacterSpec& spec, const std::vector<GroupElement>& sample) {
  const std::size_t n = sample.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const GroupElement gi = inverse(sample[i]);
    for (std::size_t j = 0; j < n; ++j) m[i][j] = evaluate(spec, gi * sample[j]);
  }
  return is_psd(std::move(m));
}

bool is_central(const CharacterSpec& spec, const std::vector<std::pair<GroupElement, GroupElement>>& pairs) {
  for (const auto& [g, h] : pairs)
    if (evaluate(spec, conjugate(h, g)) != evaluate(spec, g)) return false;
  return true;
}

bool match_expectation_character(const SubalgebraSpec& spec, const CharacterSpec& cand,
                                 const std::vector<GroupElement>& sample) {
  for (const auto& g : sample)
    if (character_of(spec, g) != GaussianRational(evaluate(cand, g))) return false;
  return true;
}

}  // namespace isrlab
