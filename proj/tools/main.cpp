#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace weilcert::cli;
  CLI::App app{"Certified Weil heights, Galois certificates and explicit height bounds"};
  app.require_subcommand(1);
  CommonFlags flags;
  const CLI::Validator positive_integer(
      [](std::string& s) -> std::string {
        bool digits = !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
        if (!digits || s.find_first_not_of('0') == std::string::npos) return "must be a positive integer";
        return {};
      },
      "POSITIVE");
  auto common = [&](CLI::App* sub) {
    sub->add_option("--precision-bits", flags.precision_bits, "starting precision in bits")
        ->capture_default_str()
        ->check(CLI::Range(16L, 1L << 20));
    sub->add_option("--precision-cap", flags.precision_cap, "precision cap in bits")
        ->capture_default_str()
        ->check(CLI::Range(16L, 1L << 22));
    sub->add_option("--lll-height-bound", flags.lll_height_bound, "bound H on conjugate-expression relations")
        ->capture_default_str()
        ->check(positive_integer);
    sub->add_option("--relation-bound", flags.relation_bound, "bound on multiplicative relation exponents")
        ->capture_default_str()
        ->check(CLI::Range(1, 1000));
    sub->add_option("--target-width", flags.target_width, "height enclosure width target")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--jobs", flags.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  };

  std::string poly;
  auto* analyze = app.add_subcommand("analyze", "analyze the root of one minimal polynomial");
  analyze->add_option("--poly,poly", poly, "coefficients, constant term first (e.g. -1,-1,1)")->required();
  common(analyze);

  std::string d = "1";
  std::optional<int> rho;
  std::optional<std::string> eps;
  auto* bounds = app.add_subcommand("bounds", "print every explicit bound at (d, rho, eps)");
  bounds->add_option("--d", d, "degree")->required();
  bounds->add_option("--rho", rho, "multiplicative rank");
  bounds->add_option("--eps", eps, "corollary exponent (decimal or p/q)");
  common(bounds);

  std::string suite;
  VerifyFlags vflags;
  auto* verify = app.add_subcommand("verify", "audit lemmas and the proof chain on ranges and grids");
  verify->add_option("suite", suite, "totient | stirling | nrho | constant | chain | corollary | all")->required();
  verify->add_option("--max", vflags.max, "upper end of the n or rho range");
  verify->add_option("--d-count", vflags.d_count, "log-spaced degrees in the grid")->capture_default_str()->check(
      CLI::Range(2, 100000));
  verify->add_option("--d-max-exponent", vflags.d_max_exponent, "grid covers [1, 10^k]")
      ->capture_default_str()
      ->check(CLI::Range(1, 100000));
  verify->add_option("--rho-max", vflags.rho_max, "largest rank on the grid")->capture_default_str()->check(
      CLI::Range(1, 100000));
  verify->add_option("--eps", vflags.eps, "corollary exponents")->capture_default_str();
  verify->add_option("--steps", vflags.steps, "chain steps to audit (subset of abcdef)")->capture_default_str();
  verify->add_option("--show", vflags.show, "failures listed per suite")->capture_default_str();
  common(verify);

  std::string path;
  std::optional<std::string> out;
  auto* corpus = app.add_subcommand("corpus", "analyze a corpus file into CSV");
  corpus->add_option("path", path, "corpus file")->required();
  corpus->add_option("--out,-o", out, "CSV output (default stdout)");
  common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*analyze) return cmd_analyze(poly, flags, std::cout, std::cerr);
  if (*bounds) return cmd_bounds(d, rho, eps, flags, std::cout, std::cerr);
  if (*verify) return cmd_verify(suite, vflags, flags, std::cout, std::cerr);
  if (*corpus) return cmd_corpus(path, out, flags, std::cout, std::cerr);
  return kUsage;
}
