#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "orbitkit/branching.hpp"
#include "orbitkit/cg.hpp"
#include "orbitkit/cone.hpp"
#include "orbitkit/sympair.hpp"

namespace orbitkit::io {

using json = nlohmann::ordered_json;

/// Parse failure with the 1-based index of the offending entry.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position) : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error("rational must be a string \"p/q\" or an integer");
}

inline json to_json(const Weight& w) {
  json a = json::array();
  for (const auto& x : w) a.push_back(to_json(x));
  return a;
}

inline Weight weight_from_json(const json& j) {
  if (!j.is_array()) throw Error("weight must be a JSON array");
  std::vector<Rational> v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      v.push_back(rational_from_json(j[i]));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), i + 1);
    }
  }
  return Weight(std::move(v));
}

/// Lenient weight syntax for the command line: a bracketed, comma-separated
/// list whose entries are p, p/q or "p/q" (quotes optional).
inline Weight parse_weight(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("weight must be a bracketed list", 0);
  s = trim(s.substr(1, s.size() - 2));
  std::vector<Rational> v;
  if (s.empty()) return Weight(std::move(v));
  std::size_t pos = 1;
  for (;;) {
    const auto comma = s.find(',');
    std::string_view item = trim(s.substr(0, comma));
    if (item.size() >= 2 && item.front() == '"' && item.back() == '"') item = item.substr(1, item.size() - 2);
    try {
      v.push_back(Rational::parse(item));
    } catch (const Error& e) {
      throw ParseError(e.what(), pos);
    }
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
    ++pos;
  }
  return Weight(std::move(v));
}

inline json to_json(const ConeCoefficients& t) {
  json a = json::array();
  for (const auto& g : t) {
    json row = json::array();
    for (const auto& x : g) row.push_back(to_json(x));
    a.push_back(row);
  }
  return a;
}

inline ConeCoefficients coefficients_from_json(const json& j) {
  if (!j.is_array()) throw Error("coefficients must be a JSON array");
  ConeCoefficients t;
  for (const auto& row : j) {
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    t.push_back(std::move(r));
  }
  return t;
}

inline json to_json(const AlgebraLabel& g) {
  if (g.family == HermitianFamily::su) return {{"label", "su"}, {"p", g.p}, {"q", g.q}};
  return {{"label", g.kind()}, {"n", g.p}};
}

inline AlgebraLabel algebra_from_json(const json& j) {
  const std::string l = j.at("label").get<std::string>();
  if (l == "su") return AlgebraLabel::su(j.at("p").get<int>(), j.at("q").get<int>());
  const int n = j.at("n").get<int>();
  if (l == "sp") return AlgebraLabel::sp(n);
  if (l == "sostar") return AlgebraLabel::so_star(n);
  if (l == "so2") return AlgebraLabel::so2(n);
  throw Error("unknown algebra label '" + l + "'");
}

inline json to_json(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(to_json(w));
  return a;
}

inline json to_json(const HermitianAlgebra& g) {
  json j = to_json(g.label);
  j["name"] = g.label.name();
  j["Z"] = to_json(g.Z);
  j["p_plus"] = to_json(g.noncompact_positive);
  j["k_plus"] = to_json(g.compact_positive);
  return j;
}

/// Descriptor as {"g": ..., "h": "<name>", "id": ...}.
inline json to_json(const PairDescriptor& d) {
  return {{"id", d.id}, {"g", to_json(d.g)}, {"h", d.h_name}};
}

inline std::string chain_constraint(std::size_t factor, std::size_t r) {
  std::string s;
  for (std::size_t j = 1; j <= r; ++j) s += "t" + std::to_string(factor) + "_" + std::to_string(j) + " >= ";
  return s + "0";
}

inline json to_json(const ConeDescriptor& cd) {
  json groups = json::array();
  for (std::size_t i = 0; i < cd.groups.size(); ++i)
    groups.push_back({{"factor", i + 1},
                      {"generators", to_json(cd.groups[i])},
                      {"constraint", chain_constraint(i + 1, cd.groups[i].size())}});
  return {{"dim", cd.dim}, {"groups", groups}};
}

inline ConeDescriptor cone_from_json(const json& j) {
  ConeDescriptor cd;
  cd.dim = j.at("dim").get<std::size_t>();
  for (const auto& g : j.at("groups")) {
    std::vector<Weight> gens;
    for (const auto& w : g.at("generators")) gens.push_back(weight_from_json(w));
    cd.groups.push_back(std::move(gens));
  }
  return cd;
}

/// One row of the pair table.
inline json pair_summary(const HolomorphicPair& p) {
  json j = to_json(p.descriptor);
  j["L"] = p.L();
  json r = json::array();
  for (auto x : p.ranks()) r.push_back(x);
  j["r"] = r;
  j["cone"] = to_json(cone(p));
  return j;
}

inline json to_json(const ConeMembership& m) {
  json j{{"member", m.member}};
  j["reason"] = m.reason == MembershipReason::member          ? "member"
                : m.reason == MembershipReason::outside_span  ? "outside-span"
                                                               : "outside-cone";
  j["coefficients"] = m.coefficients ? to_json(*m.coefficients) : json(nullptr);
  return j;
}

inline json to_json(const CGResult& r) {
  return {{"value", r.value},
          {"certificate", r.certificate ? to_json(*r.certificate) : json(nullptr)},
          {"reason", to_string(r.reason)}};
}

inline CGResult cg_result_from_json(const json& j) {
  CGResult r;
  r.value = j.at("value").get<int>();
  if (!j.at("certificate").is_null()) r.certificate = coefficients_from_json(j.at("certificate"));
  r.reason = cg_reason_from_string(j.at("reason").get<std::string>());
  return r;
}

inline json to_json(const SupportTable& t) {
  json pts = json::array();
  for (const auto& p : t.points) pts.push_back({{"mu", to_json(p.mu)}, {"exponents", p.exponents}});
  return {{"pair", t.pair_id}, {"c", to_json(t.c)}, {"bound", t.bound}, {"points", pts}};
}

inline SupportTable support_from_json(const json& j) {
  SupportTable t;
  t.pair_id = j.at("pair").get<std::string>();
  t.c = rational_from_json(j.at("c"));
  t.bound = j.at("bound").get<long>();
  for (const auto& p : j.at("points"))
    t.points.push_back({weight_from_json(p.at("mu")), p.at("exponents").get<Exponents>()});
  return t;
}

inline json to_json(const HullReport& r) {
  json probes = json::array();
  for (const auto& p : r.probes)
    probes.push_back({{"mu", to_json(p.mu)}, {"cg", p.cg}, {"hull", p.in_hull}, {"verdict", to_string(p.verdict)}});
  return {{"bound", r.bound},
          {"support_size", r.support_size},
          {"agree", r.count(HullVerdict::agree)},
          {"disagree", r.count(HullVerdict::disagree)},
          {"inconclusive", r.count(HullVerdict::inconclusive)},
          {"probes", probes}};
}

}  // namespace orbitkit::io
