#pragma once

// Polynomial and corpus text formats, CSV rendering, and batch analysis.
//
// Polynomial: comma-separated integers, constant term first, last entry
// nonzero; whitespace is ignored and `#` starts a comment.
// Corpus: one `label : coeffs` per line, optionally followed by
// `| key=value ...` expectations (galois=yes|no, root_of_unity=N, h=DECIMAL).

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weilcert/analysis.hpp"
#include "weilcert/error.hpp"
#include "weilcert/polynomial.hpp"

namespace weilcert {

class ParseError : public Error {
 public:
  using Error::Error;
};

IntPolynomial parse_polynomial(std::string_view text);

struct CorpusEntry {
  std::string label;
  IntPolynomial poly;
  std::optional<bool> galois;
  std::optional<unsigned long> root_of_unity;
  std::optional<std::string> h_reference;

  bool operator==(const CorpusEntry&) const = default;
};

/// Throws ParseError naming the 1-based line on malformed input.
std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusEntry> read_corpus(const std::string& path);

/// Canonical line for an entry; parse_corpus inverts it.
std::string format_entry(const CorpusEntry& e);

inline constexpr const char* kCsvHeader =
    "label,degree,irreducible,root_of_unity_order,galois,h_lo,h_hi,rank_upper,rank_heuristic,log_main_bound,"
    "margin_log10,status";

/// Shortest decimal that round-trips to the double nearest x in the given
/// direction (-1 down, +1 up, 0 nearest).
std::string shortest_double(const RealEnclosure& x, int direction);

/// One CSV row. h_lo is rounded down and h_hi up; log_main_bound is rounded
/// up and margin_log10 down, so every printed number errs against the theorem.
std::string csv_row(const std::string& label, const Analysis& a);

/// Analyzes every entry on `jobs` worker threads; results in input order.
std::vector<Analysis> run_corpus(const std::vector<CorpusEntry>& entries, const AnalysisOptions& options,
                                 unsigned jobs = 1);

/// Header plus one row per entry.
void write_csv(std::ostream& out, const std::vector<CorpusEntry>& entries, const std::vector<Analysis>& results);

}  // namespace weilcert
