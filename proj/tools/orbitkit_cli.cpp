// orbitkit: command-line front end over the library.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orbitkit/commands.hpp"

namespace cli = orbitkit::cli;

int main(int argc, char** argv) {
  CLI::App app{"Coadjoint orbits of Hermitian groups: cones, multiplicities, branching support"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  bool as_tsv = false;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  auto* fmt = app.add_flag("--json", "JSON output (default)");
  app.add_flag("--tsv", as_tsv, "tab-separated output")->excludes(fmt);
  app.add_option("--seed", seed, "RNG seed (fallback: ORBITKIT_SEED, then 0)");
  app.add_option("--tol", tol, "residual tolerance for oracle suites");

  std::string pair_id, c = "1", mu, suite = "all", kind = "elliptic";
  std::optional<std::string> family, delta, probes, verify_mu;
  std::optional<int> n;
  std::optional<std::size_t> samples;
  int max_rank = 6;
  long bound = 6;

  auto* pairs = app.add_subcommand("pairs", "list registered symmetric pairs");
  pairs->add_option("--g", family, "family: sp, su, sostar, so2");
  pairs->add_option("--n", n, "rank parameter (p+q for su)");
  pairs->add_option("--max-rank", max_rank, "largest Lie rank listed")->capture_default_str();

  auto* cone = app.add_subcommand("cone", "cone generators and chain constraints");
  cone->add_option("--pair", pair_id, "pair id, e.g. sp2:u11")->required();
  cone->add_option("--delta", delta, "test membership of this weight");

  auto* cg = app.add_subcommand("cg", "orbit multiplicity with certificate");
  cg->add_option("--pair", pair_id, "pair id")->required();
  cg->add_option("--c", c, "scalar of lambda = cZ")->capture_default_str();
  cg->add_option("--mu", mu, "weight on t^tau, e.g. [3,1] or [\"1/2\",0]")->required();
  cg->add_option("--kind", kind, "orbit type of mu")
      ->check(CLI::IsMember({"elliptic", "hyperbolic", "nilpotent", "mixed"}))
      ->capture_default_str();

  auto* branch = app.add_subcommand("branch", "truncated branching support");
  branch->add_option("--pair", pair_id, "pair id")->required();
  branch->add_option("--c", c, "scalar of lambda = cZ")->capture_default_str();
  branch->add_option("--bound", bound, "total exponent bound N")->capture_default_str();
  branch->add_option("--probes", probes, "JSON array of dominant weights for the hull check");

  auto* verify = app.add_subcommand("verify", "numeric oracle suites");
  verify->add_option("--pair", pair_id, "pair id")->required();
  verify->add_option("--suite", suite, "sinh, image, injectivity, uniqueness, properness or all")
      ->capture_default_str();
  verify->add_option("--c", c, "scalar of lambda = cZ")->capture_default_str();
  verify->add_option("--mu", verify_mu, "admissible mu for the uniqueness suite");
  verify->add_option("--samples", samples, "samples per suite");

  CLI11_PARSE(app, argc, argv);

  if (!seed) {
    if (const char* env = std::getenv("ORBITKIT_SEED")) {
      try {
        seed = std::stoull(env);
      } catch (const std::exception&) {
        std::cerr << "ORBITKIT_SEED is not an unsigned integer\n";
        return 2;
      }
    }
  }

  std::string command;
  cli::CommandResult res;
  if (*pairs) {
    command = "pairs";
    res = cli::cmd_pairs(family, n, max_rank);
  } else if (*cone) {
    command = "cone";
    res = cli::cmd_cone(pair_id, delta);
  } else if (*cg) {
    command = "cg";
    res = cli::cmd_cg(pair_id, c, mu, kind);
  } else if (*branch) {
    command = "branch";
    res = cli::cmd_branch(pair_id, c, bound, probes);
  } else {
    command = "verify";
    res = cli::cmd_verify(pair_id, {.suite = suite, .seed = seed.value_or(0), .tol = tol, .c = c, .mu = verify_mu, .samples = samples});
  }

  if (as_tsv) std::cout << cli::to_tsv(command, res);
  else std::cout << res.to_json().dump(2) << '\n';
  return cli::exit_code(res.status);
}
