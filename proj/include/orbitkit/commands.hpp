#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orbitkit/json_io.hpp"
#include "orbitkit/oracle/verify.hpp"

namespace orbitkit::cli {

using io::json;

enum class Status { ok, error, inconclusive };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::error: return "error";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

inline int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::error: return 2;
    case Status::inconclusive: return 3;
  }
  return 2;
}

struct CommandResult {
  Status status = Status::ok;
  json payload = json::object();
  std::vector<std::string> diagnostics;

  json to_json() const { return {{"status", to_string(status)}, {"payload", payload}, {"diagnostics", diagnostics}}; }
};

inline CommandResult failure(const std::string& what, std::optional<std::size_t> position = std::nullopt) {
  CommandResult r{Status::error, {{"error", what}}, {what}};
  if (position && *position > 0) {
    r.payload["position"] = *position;
    r.diagnostics.push_back("at position " + std::to_string(*position));
  }
  return r;
}

namespace detail {

inline Rational parse_c(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const Error& e) {
    throw io::ParseError(std::string("--c: ") + e.what(), 0);
  }
}

inline OrbitKind parse_kind(const std::string& s) {
  if (s == "elliptic") return OrbitKind::elliptic;
  if (s == "hyperbolic") return OrbitKind::hyperbolic;
  if (s == "nilpotent") return OrbitKind::nilpotent;
  if (s == "mixed") return OrbitKind::mixed;
  throw Error("unknown orbit kind '" + s + "'");
}

/// Runs body and maps library exceptions onto an error result.
template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const io::ParseError& e) {
    return failure(e.what(), e.position());
  } catch (const Error& e) {
    return failure(e.what());
  } catch (const json::exception& e) {
    return failure(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace detail

/// Registry rows, optionally filtered by family and by rank parameter
/// (n for sp, sostar, so2; p+q for su).
inline CommandResult cmd_pairs(const std::optional<std::string>& family = std::nullopt,
                               const std::optional<int>& n = std::nullopt, int max_rank = 6) {
  return detail::guarded([&] {
    CommandResult res;
    res.payload = json::array();
    if (family) {
      static const std::set<std::string> known{"su", "sp", "sostar", "so2"};
      static const std::set<std::string> exceptional{"e6", "e7", "e8", "f4", "g2"};
      if (exceptional.count(*family)) {
        res.diagnostics.push_back("exceptional families not registered");
        return res;
      }
      if (!known.count(*family)) return failure("unknown family '" + *family + "'");
    }
    for (const auto& d : registry(max_rank)) {
      if (family && d.g.kind() != *family) continue;
      const int param = d.g.family == HermitianFamily::su ? d.g.p + d.g.q : d.g.p;
      if (n && param != *n) continue;
      res.payload.push_back(io::pair_summary(build_pair(d)));
    }
    return res;
  });
}

/// Cone generators of a pair; with delta, also the exact membership test.
inline CommandResult cmd_cone(const std::string& pair_id, const std::optional<std::string>& delta = std::nullopt) {
  return detail::guarded([&] {
    const HolomorphicPair pair = build_pair(pair_id);
    const ConeDescriptor cd = cone(pair);
    CommandResult res;
    res.payload = {{"pair", pair.descriptor.id}};
    res.payload.update(io::to_json(cd));
    if (delta) res.payload["membership"] = io::to_json(cone_contains(cd, io::parse_weight(*delta)));
    return res;
  });
}

inline CommandResult cmd_cg(const std::string& pair_id, const std::string& c, const std::string& mu,
                            const std::string& kind = "elliptic") {
  return detail::guarded([&] {
    const Rational cr = detail::parse_c(c);
    const Weight raw = io::parse_weight(mu);
    const HolomorphicPair pair = build_pair(pair_id);
    const OrbitParamG lambda = validate_lambda(pair, cr);
    OrbitParamH m = validate_mu(pair, raw);
    m.kind = detail::parse_kind(kind);
    m.elliptic = m.kind == OrbitKind::elliptic;
    CommandResult res;
    if (m.canonicalized) res.diagnostics.push_back("canonicalized input");
    res.payload = io::to_json(cg_number(pair, lambda, m));
    res.payload["pair"] = pair.descriptor.id;
    res.payload["c"] = io::to_json(cr);
    res.payload["mu"] = io::to_json(m.mu);
    return res;
  });
}

/// Truncated support; probes (a JSON array of weights) add the hull check.
inline CommandResult cmd_branch(const std::string& pair_id, const std::string& c, long bound,
                                const std::optional<std::string>& probes = std::nullopt) {
  return detail::guarded([&] {
    const Rational cr = detail::parse_c(c);
    const HolomorphicPair pair = build_pair(pair_id);
    const OrbitParamG lambda = validate_lambda(pair, cr);
    CommandResult res;
    res.payload = io::to_json(branch_support(pair, lambda, bound));
    if (probes) {
      std::vector<Weight> ws;
      for (const auto& w : json::parse(*probes)) ws.push_back(io::weight_from_json(w));
      const HullReport rep = hull_cone_consistency(pair, lambda, bound, ws);
      res.payload["hull"] = io::to_json(rep);
      if (rep.count(HullVerdict::disagree)) {
        res.status = Status::error;
        res.diagnostics.push_back("hull disagrees with cg_number");
      } else if (rep.count(HullVerdict::inconclusive)) {
        res.status = Status::inconclusive;
        res.diagnostics.push_back(to_string(HullVerdict::inconclusive));
      }
    }
    return res;
  });
}

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string c = "1";
  std::optional<std::string> mu;
  std::optional<std::size_t> samples;
};

inline json to_json(const oracle::VerifyReport& r) {
  return {{"suite", r.suite},       {"samples", r.samples}, {"max_residual", r.max_residual},
          {"pass", r.pass},         {"inconclusive", r.inconclusive},
          {"failures", r.failures}, {"notes", r.notes}};
}

inline CommandResult cmd_verify(const std::string& pair_id, const VerifyOptions& opt = {}) {
  return detail::guarded([&] {
    static const std::vector<std::string> suites{"sinh", "image", "injectivity", "uniqueness", "properness"};
    if (opt.suite != "all" && std::find(suites.begin(), suites.end(), opt.suite) == suites.end())
      return failure("unknown suite '" + opt.suite + "'");
    const Rational c = detail::parse_c(opt.c);
    if (c.sign() <= 0) return failure("verification needs c > 0");
    const HolomorphicPair pair = build_pair(pair_id);
    validate_lambda(pair, c);
    const oracle::MatrixRealization r = oracle::realize(pair);

    oracle::ToleranceProfile prof;
    prof.rng_seed = opt.seed;
    if (opt.tol) prof.residual_tol = *opt.tol;
    if (opt.samples) prof.sample_count = *opt.samples;

    std::vector<oracle::VerifyReport> reports;
    auto want = [&](const char* s) { return opt.suite == "all" || opt.suite == s; };
    if (want("sinh")) reports.push_back(oracle::verify_sinh_suite(r, c.to_double(), prof));
    if (want("image")) reports.push_back(oracle::verify_image(r, c, prof));
    if (want("injectivity")) reports.push_back(oracle::verify_injectivity(r, c, prof));
    if (want("uniqueness")) {
      Weight mu = restrict(c * pair.g.Z, pair) + cone(pair).generators().front();
      if (opt.mu) mu = io::parse_weight(*opt.mu);
      auto p = prof;
      if (!opt.samples) p.sample_count = 50;
      reports.push_back(oracle::verify_uniqueness(r, c, mu, p));
    }
    if (want("properness")) {
      const std::vector<double> grid{0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
      const std::size_t rays = cone(pair).generator_count();
      for (std::size_t k = 0; k < rays; ++k) {
        auto rep = oracle::verify_properness(r, c, k, grid);
        rep.suite += "[" + std::to_string(k) + "]";
        reports.push_back(std::move(rep));
      }
    }

    CommandResult res;
    res.payload = {{"pair", pair.descriptor.id}, {"c", io::to_json(c)}, {"seed", opt.seed}, {"reports", json::array()}};
    bool failed = false, inconclusive = false;
    for (const auto& rep : reports) {
      res.payload["reports"].push_back(to_json(rep));
      if (rep.inconclusive) inconclusive = true;
      else if (!rep.pass) failed = true;
      for (const auto& n : rep.notes) res.diagnostics.push_back(rep.suite + ": " + n);
    }
    if (failed) {
      res.status = Status::error;
      res.diagnostics.push_back("verification failed");
    } else if (inconclusive) {
      res.status = Status::inconclusive;
    }
    return res;
  });
}

// TSV rendering, one table per command.

namespace detail {

inline std::string cell(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + cell(j[i]);
    return s + "]";
  }
  return j.dump();
}

}  // namespace detail

inline std::string to_tsv(const std::string& command, const CommandResult& res) {
  std::ostringstream out;
  const json& p = res.payload;
  if (res.status == Status::error && p.contains("error")) {
    out << "status\terror\n" << to_string(res.status) << '\t' << p["error"].get<std::string>() << '\n';
    return out.str();
  }
  if (command == "pairs") {
    out << "id\tg\th\tL\tr\tgenerators\n";
    for (const auto& row : p) {
      json gens = json::array();
      for (const auto& g : row["cone"]["groups"]) gens.push_back(g["generators"]);
      out << row["id"].get<std::string>() << '\t' << row["g"].dump() << '\t' << row["h"].get<std::string>() << '\t'
          << row["L"] << '\t' << detail::cell(row["r"]) << '\t' << detail::cell(gens) << '\n';
    }
  } else if (command == "cone") {
    out << "factor\tgenerator\tconstraint\n";
    for (const auto& g : p["groups"])
      for (const auto& w : g["generators"])
        out << g["factor"] << '\t' << detail::cell(w) << '\t' << g["constraint"].get<std::string>() << '\n';
  } else if (command == "cg") {
    out << "pair\tc\tmu\tvalue\treason\tcertificate\n"
        << p["pair"].get<std::string>() << '\t' << p["c"].get<std::string>() << '\t' << detail::cell(p["mu"]) << '\t'
        << p["value"] << '\t' << p["reason"].get<std::string>() << '\t' << detail::cell(p["certificate"]) << '\n';
  } else if (command == "branch") {
    out << "degree\texponents\tmu\n";
    for (const auto& pt : p["points"]) {
      long d = 0;
      for (const auto& g : pt["exponents"])
        for (const auto& x : g) d += x.get<long>();
      out << d << '\t' << detail::cell(pt["exponents"]) << '\t' << detail::cell(pt["mu"]) << '\n';
    }
  } else if (command == "verify") {
    out << "suite\tsamples\tmax_residual\tpass\tfailures\n";
    for (const auto& r : p["reports"])
      out << r["suite"].get<std::string>() << '\t' << r["samples"] << '\t' << r["max_residual"] << '\t' << r["pass"]
          << '\t' << r["failures"] << '\n';
  }
  for (const auto& d : res.diagnostics) out << "# " << d << '\n';
  return out.str();
}

}  // namespace orbitkit::cli
