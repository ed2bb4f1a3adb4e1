#include "isrlab/serialize.hpp"

namespace isrlab {

namespace {

std::string lamp_string(std::uint64_t v, int m) {
  std::string s;
  for (int i = 0; i < m; ++i) s += ((v >> i) & 1u) ? '1' : '0';
  return s;
}

std::uint64_t parse_lamps(const std::string& s) {
  if (s.size() > static_cast<std::size_t>(kMaxModulus)) throw ParseError("too many lamps");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') v |= std::uint64_t{1} << i;
    else if (s[i] != '0') throw ParseError("bad lamp string '" + s + "'");
  }
  return v;
}

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const GroupElement& g) {
  Json out;
  out["family"] = family_name(g.family());
  switch (g.family()) {
    case Family::Affine: {
      const auto& a = g.affine();
      const int n = std::max({a.g.dim(), a.v.dim(), 1});
      out["n"] = n;
      out["g"] = a.g.to_bitstring(n);
      out["v"] = a.v.to_bitstring(n);
      break;
    }
    case Family::Wreath: {
      const auto& w = g.wreath();
      const int n = std::max({w.sigma.degree(), w.v.dim(), 1});
      out["n"] = n;
      out["perm"] = w.sigma.one_line(n);
      out["v"] = w.v.to_bitstring(n);
      break;
    }
    case Family::Lamplighter: {
      const auto& l = g.lamplighter();
      out["m"] = l.m;
      out["v"] = lamp_string(l.v, l.m);
      out["t"] = l.t;
      break;
    }
    case Family::Cantor: {
      const CantorPart c = cantor_at_level(g.cantor(), std::max(g.cantor().level, 1));
      out["m"] = c.level;
      Json perm = Json::array(), a = Json::array();
      for (std::size_t x = 0; x < c.perm.size(); ++x) {
        perm.push_back(word_string(c.perm[x], c.level));
        if ((c.subset >> x) & 1u) a.push_back(word_string(static_cast<int>(x), c.level));
      }
      out["perm"] = perm;
      out["A"] = a;
      break;
    }
  }
  return out;
}

GroupElement element_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("group element must be a JSON object");
  const Family f = parse_family(field<std::string>(j, "family"));
  switch (f) {
    case Family::Affine: {
      const int n = field<int>(j, "n");
      if (n < 1 || n > kMaxDimension) throw DimensionOutOfRange("affine n=" + std::to_string(n));
      const F2Matrix g = j.contains("g") ? F2Matrix::from_bitstring(field<std::string>(j, "g"), n) : F2Matrix{};
      const F2Vector v = j.contains("v") ? F2Vector::from_bitstring(field<std::string>(j, "v")) : F2Vector{};
      return make_affine(g, v);
    }
    case Family::Wreath: {
      const Permutation s = j.contains("perm") ? Permutation(field<std::vector<int>>(j, "perm")) : Permutation{};
      const F2Vector v = j.contains("v") ? F2Vector::from_bitstring(field<std::string>(j, "v")) : F2Vector{};
      return make_wreath(s, v);
    }
    case Family::Lamplighter: {
      const int m = field<int>(j, "m");
      const std::string v = j.contains("v") ? field<std::string>(j, "v") : std::string{};
      if (static_cast<int>(v.size()) > m) throw ParseError("more lamps than the modulus");
      return make_lamplighter(m, parse_lamps(v), j.contains("t") ? field<int>(j, "t") : 0);
    }
    case Family::Cantor: {
      const int m = field<int>(j, "m");
      if (m < 0 || m > kMaxCantorLevel) throw DimensionOutOfRange("cantor level " + std::to_string(m));
      const std::size_t words = std::size_t{1} << m;
      std::vector<int> perm(words);
      if (j.contains("perm")) {
        const auto images = field<std::vector<std::string>>(j, "perm");
        if (images.size() != words) throw ParseError("cantor perm must list 2^m words");
        for (std::size_t x = 0; x < words; ++x) {
          if (static_cast<int>(images[x].size()) != m) throw ParseError("cantor word of the wrong length");
          perm[x] = parse_word(images[x]);
        }
      } else {
        for (std::size_t x = 0; x < words; ++x) perm[x] = static_cast<int>(x);
      }
      std::uint64_t subset = 0;
      if (j.contains("A"))
        for (const auto& w : field<std::vector<std::string>>(j, "A")) {
          if (static_cast<int>(w.size()) != m) throw ParseError("cantor word of the wrong length");
          subset |= std::uint64_t{1} << parse_word(w);
        }
      return make_cantor(m, perm, subset);
    }
  }
  throw ParseError("unreachable family");
}

Json to_json(const AlgebraElement& x) {
  Json out = Json::array();
  for (const auto& t : x.terms())
    out.push_back(Json::array({to_json(t.g), rational_string(t.c.re()), rational_string(t.c.im())}));
  return out;
}

AlgebraElement algebra_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("algebra element must be an array of [element, re, im]");
  std::vector<AlgebraElement::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() < 2 || t.size() > 3) throw ParseError("bad algebra term");
    auto num = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    terms.push_back({element_from_json(t[0]),
                     GaussianRational::parse(num(t[1]), t.size() == 3 ? num(t[2]) : std::string("0"))});
  }
  return AlgebraElement::from_terms(std::move(terms));
}

Json to_json(const SubalgebraSpec& spec) {
  Json basis = Json::array(), window = Json::array();
  for (const auto& b : spec.basis()) basis.push_back(to_json(b));
  for (const auto& g : spec.window()) window.push_back(to_json(g));
  return {{"label", spec.label()},
          {"family", family_name(spec.family())},
          {"truncation", spec.truncation().n},
          {"basis", basis},
          {"window", window}};
}

SubalgebraSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("spec must be a JSON object");
  const Truncation t{parse_family(field<std::string>(j, "family")), field<int>(j, "truncation")};
  std::vector<AlgebraElement> basis;
  for (const auto& b : field<nlohmann::json>(j, "basis")) basis.push_back(algebra_from_json(b));
  std::vector<GroupElement> window;
  for (const auto& g : field<nlohmann::json>(j, "window")) window.push_back(element_from_json(g));
  return SubalgebraSpec(j.contains("label") ? field<std::string>(j, "label") : std::string("spec"), t,
                        std::move(basis), std::move(window));
}

}  // namespace isrlab
