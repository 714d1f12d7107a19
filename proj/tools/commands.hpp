#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weilcert/analysis.hpp"
#include "weilcert/polynomial.hpp"

namespace weilcert::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIndeterminate = 2, kFailed = 3 };

struct CommonFlags {
  long precision_bits = 128;
  long precision_cap = 4096;
  std::string lll_height_bound = "1000000";
  int relation_bound = 20;
  double target_width = 1e-12;
  unsigned jobs = 1;

  AnalysisOptions analysis_options() const;
};

/// "3", "-2/7", "0.125" or "1e-3" as an exact rational.
Rational parse_rational(const std::string& text);

int cmd_analyze(const std::string& poly, const CommonFlags& flags, std::ostream& out, std::ostream& err);

int cmd_bounds(const std::string& d, std::optional<int> rho, const std::optional<std::string>& eps,
               const CommonFlags& flags, std::ostream& out, std::ostream& err);

struct VerifyFlags {
  std::optional<unsigned long> max;
  int d_count = 400;
  int d_max_exponent = 300;
  int rho_max = 200;
  std::vector<std::string> eps = {"0.1", "0.5", "1", "2"};
  std::string steps = "abcdef";
  std::size_t show = 20;
};

/// Suites: totient, stirling, nrho, constant, chain, corollary, all.
int cmd_verify(const std::string& suite, const VerifyFlags& vflags, const CommonFlags& flags, std::ostream& out,
               std::ostream& err);

int cmd_corpus(const std::string& path, const std::optional<std::string>& out_path, const CommonFlags& flags,
               std::ostream& out, std::ostream& err);

}  // namespace weilcert::cli
