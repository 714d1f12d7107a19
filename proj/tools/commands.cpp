#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "weilcert/bounds.hpp"
#include "weilcert/corpus.hpp"

namespace weilcert::cli {

namespace {

std::string vector_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string rational_poly_string(const RatPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    std::string mag = Rational(abs(c)).get_str();
    bool unit = abs(c) == 1 && k > 0;
    if (s.empty()) s += c < 0 ? "-" : "";
    else s += c < 0 ? " - " : " + ";
    if (!unit) s += mag;
    if (k > 0) s += std::string(unit ? "" : "*") + "x" + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return s;
}

std::string enclosure(const RealEnclosure& x, int digits = 17) { return x.to_string(digits); }

void print_verdict(std::ostream& out, const ChainVerdict& v) {
  out << "  " << std::setw(14) << std::left << v.id << std::right << " " << v.point.to_string() << "  "
      << to_string(v.verdict) << "  margin " << enclosure(v.margin, 8);
  auto l = decimal_value(v.log_lhs, 4);
  auto r = decimal_value(v.log_rhs, 4);
  if (l && r) out << "  lhs " << *l << " rhs " << *r;
  else out << "  log lhs " << enclosure(v.log_lhs, 8) << " log rhs " << enclosure(v.log_rhs, 8);
  out << "\n";
}

void print_summary(std::ostream& out, const SuiteSummary& s, std::size_t show, std::optional<double> seconds) {
  out << s.suite << ": " << s.total() << " checks, " << s.holds << " hold, " << s.fails << " fail, "
      << s.expected_fails << " expected failures, " << s.indeterminate << " indeterminate";
  if (seconds) out << " (" << std::fixed << std::setprecision(2) << *seconds << " s)" << std::defaultfloat;
  out << "\n";
  std::size_t shown = 0;
  for (const auto& v : s.failures) {
    if (shown++ == show) {
      out << "  ... " << s.failures.size() - show << " more\n";
      break;
    }
    print_verdict(out, v);
  }
  if (!s.expected.empty()) {
    out << "  expected failures (whitelisted: step e needs log(3d) >= 16):\n";
    shown = 0;
    for (const auto& v : s.expected) {
      if (shown++ == show) {
        out << "  ... " << s.expected.size() - show << " more\n";
        break;
      }
      print_verdict(out, v);
    }
  }
  // Each equality is listed once per rank.
  std::vector<std::string> seen;
  for (const auto& v : s.equalities) {
    std::string where = v.id + " " + (v.point.rho && !v.point.n ? "rho=" + std::to_string(*v.point.rho)
                                                                 : v.point.to_string());
    if (std::find(seen.begin(), seen.end(), where) != seen.end()) continue;
    seen.push_back(where);
    out << "  equality at " << where << "\n";
  }
}

}  // namespace

AnalysisOptions CommonFlags::analysis_options() const {
  AnalysisOptions o;
  o.height.target_width = target_width;
  o.height.precision = precision_bits;
  o.height.precision_cap = precision_cap;
  o.galois.height_bound = Integer(lll_height_bound, 10);
  o.galois.relation_bound = relation_bound;
  o.galois.precision = 2 * precision_bits;
  o.galois.precision_cap = std::max(precision_cap, 2 * precision_bits);
  return o;
}

Rational parse_rational(const std::string& text) {
  std::string t = text;
  if (t.empty()) throw ParseError("empty number");
  if (t.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(t, 10) != 0 || q.get_den() == 0) throw ParseError("bad rational '" + text + "'");
    q.canonicalize();
    return q;
  }
  long exponent = 0;
  if (auto e = t.find_first_of("eE"); e != std::string::npos) {
    try {
      std::size_t used = 0;
      exponent = std::stol(t.substr(e + 1), &used);
      if (used != t.size() - e - 1) throw ParseError("");
    } catch (...) {
      throw ParseError("bad number '" + text + "'");
    }
    t = t.substr(0, e);
  }
  bool neg = !t.empty() && t[0] == '-';
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.erase(0, 1);
  auto dot = t.find('.');
  std::string digits = t;
  if (dot != std::string::npos) {
    digits = t.substr(0, dot) + t.substr(dot + 1);
    exponent -= static_cast<long>(t.size() - dot - 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad number '" + text + "'");
  if (exponent > 10000 || exponent < -10000) throw ParseError("exponent out of range in '" + text + "'");
  Rational q{Integer(digits, 10)};
  Integer p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) q *= p10;
  else q /= p10;
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

int cmd_analyze(const std::string& poly, const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  IntPolynomial f;
  try {
    f = parse_polynomial(poly);
    if (f.degree() < 1) throw ParseError("polynomial must be nonconstant");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  Analysis a = analyze(f, flags.analysis_options());
  out << "polynomial: " << to_string(a.poly) << "\n";
  out << "degree: " << a.degree << "\n";
  out << "irreducible: " << to_string(a.irreducibility) << "\n";
  if (a.status == "not-irreducible") {
    out << "status: not-irreducible\n";
    return kOk;
  }
  out << "root of unity: " << (a.root_of_unity_order ? "order " + std::to_string(*a.root_of_unity_order) : "none")
      << "\n";
  if (a.height) {
    out << "height: " << (a.height->exact_zero ? "0 (exact)" : enclosure(a.height->h)) << "\n";
    out << "mahler_log: " << enclosure(a.height->mahler_log) << "\n";
  }
  out << "galois: " << to_string(a.galois);
  if (a.galois_detail) out << " (H = " << a.galois_detail->height_bound << ", " << a.galois_detail->precision << " bits)";
  out << "\n";
  if (a.galois == GaloisStatus::Certified && a.galois_detail) {
    for (const auto& e : a.galois_detail->expressions)
      out << "  alpha_" << e.index << " = " << rational_poly_string(e.expression) << "\n";
  }
  if (a.rank) {
    out << "rank: upper " << a.rank->rank_upper_certified << " (certified), heuristic " << a.rank->rank_heuristic
        << " (relation bound " << a.rank->search_bound << (a.rank->partial ? ", partial search" : "") << ")\n";
    for (const auto& r : a.rank->relation_basis)
      out << "  relation " << vector_string(r.exponents) << " torsion of order " << r.order << "\n";
  }
  if (a.log_main_bound) {
    out << "main_bound: log " << enclosure(*a.log_main_bound, 12);
    if (auto dec = decimal_value(*a.log_main_bound)) out << " = " << *dec;
    out << "\n";
  }
  if (a.margin_log10) out << "margin_log10: " << enclosure(*a.margin_log10, 6) << "\n";
  for (const auto& n : a.notes) out << "note: " << n << "\n";
  out << "status: " << a.status << "\n";
  if (a.status == "indeterminate") return kIndeterminate;
  if (a.status == "error") return kUsage;
  return kOk;
}

int cmd_bounds(const std::string& d_text, std::optional<int> rho, const std::optional<std::string>& eps_text,
               const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  Integer d;
  std::optional<Rational> eps;
  try {
    if (d.set_str(d_text, 10) != 0 || d < 1) throw ParseError("--d must be an integer >= 1");
    if (rho && *rho < 1) throw ParseError("--rho must be >= 1");
    if (eps_text) {
      eps = parse_rational(*eps_text);
      if (*eps <= 0) throw ParseError("--eps must be positive");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  BoundReport r = bound_report(d, rho, eps, flags.precision_bits);
  out << "d = " << r.d;
  if (r.rho) out << ", rho = " << *r.rho;
  if (r.eps) out << ", eps = " << *r.eps;
  out << " (" << r.precision << " bits)\n";
  for (const auto& e : r.entries) {
    out << std::setw(22) << std::left << e.name << std::right;
    if (!e.log_value) {
      out << "  trivial";
    } else {
      out << "  log " << enclosure(*e.log_value, 12);
      if (auto dec = decimal_value(*e.log_value)) out << "  value " << *dec;
    }
    if (!e.note.empty()) out << "  (" << e.note << ")";
    out << "\n";
  }
  out << "# " << r.metadata << "\n";
  return kOk;
}

int cmd_verify(const std::string& suite, const VerifyFlags& v, const CommonFlags& flags, std::ostream& out,
               std::ostream& err) {
  static const std::vector<std::string> known = {"totient", "stirling", "nrho", "constant", "chain", "corollary", "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    err << "error: unknown suite '" << suite << "'\n";
    return kUsage;
  }
  PrecisionPolicy policy{flags.precision_bits, flags.precision_cap};
  bool all = suite == "all";
  bool ok = true, indeterminate = false;
  auto report = [&](const SuiteSummary& s, std::optional<double> secs) {
    print_summary(out, s, v.show, secs);
    if (s.fails) ok = false;
    if (s.indeterminate) indeterminate = true;
  };
  auto timed = [](auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = fn();
    return std::make_pair(std::move(r), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  };
  try {
    if (all || suite == "totient") {
      auto [s, t] = timed([&] { return verify_totient_range(v.max.value_or(1000000), policy); });
      report(s, t);
    }
    if (all || suite == "stirling") {
      auto [s, t] = timed([&] { return verify_stirling_range(static_cast<unsigned>(v.max.value_or(5000)), policy); });
      report(s, t);
    }
    if (all || suite == "nrho") {
      auto [s, t] = timed([&] { return verify_nrho_range(static_cast<int>(v.max.value_or(30))); });
      report(s, t);
    }
    if (all || suite == "constant") {
      auto [s, t] = timed([&] { return verify_constant_step_range(static_cast<int>(v.max.value_or(1000)), policy); });
      report(s, t);
    }
    if (all || suite == "chain" || suite == "corollary") {
      auto degrees = default_degree_grid(v.d_count, v.d_max_exponent);
      out << "degree grid: " << degrees.size() << " values in [1, 10^" << v.d_max_exponent << "]\n";
      if (all || suite == "chain") {
        ChainOptions o{policy, v.steps, flags.jobs};
        auto points = rank_grid(degrees, v.rho_max);
        out << "chain grid: " << points.size() << " points (rho <= min(d, " << v.rho_max << "))\n";
        auto [sums, t] = timed([&] { return verify_chain_summary(points, o); });
        for (const auto& s : sums) report(s, std::nullopt);
        out << "chain audit time: " << std::fixed << std::setprecision(2) << t << " s\n" << std::defaultfloat;
      }
      if (all || suite == "corollary") {
        std::vector<GridPoint> points;
        std::vector<Rational> eps;
        for (const auto& e : v.eps) eps.push_back(parse_rational(e));
        for (const auto& d : degrees)
          for (const auto& e : eps) points.push_back({d, 1, e});
        ChainOptions o{policy, "g", flags.jobs};
        auto [sums, t] = timed([&] { return verify_chain_summary(points, o); });
        report(sums.front(), t);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (!ok) return kFailed;
  if (indeterminate) return kIndeterminate;
  return kOk;
}

int cmd_corpus(const std::string& path, const std::optional<std::string>& out_path, const CommonFlags& flags,
               std::ostream& out, std::ostream& err) {
  std::vector<CorpusEntry> entries;
  try {
    entries = read_corpus(path);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  auto results = run_corpus(entries, flags.analysis_options(), flags.jobs);
  if (out_path) {
    std::ofstream f(*out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << *out_path << "\n";
      return kUsage;
    }
    write_csv(f, entries, results);
  } else {
    write_csv(out, entries, results);
  }
  bool indeterminate = false, mismatch = false;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const auto& a = results[i];
    if (a.status == "indeterminate") indeterminate = true;
    for (const auto& n : a.notes)
      if (a.status != "ok") err << e.label << ": " << n << "\n";
    if (e.galois && a.status == "ok" && (*e.galois != (a.galois == GaloisStatus::Certified))) {
      err << e.label << ": expected galois=" << (*e.galois ? "yes" : "no") << ", got " << to_string(a.galois) << "\n";
      mismatch = true;
    }
    if (e.root_of_unity && a.root_of_unity_order != e.root_of_unity) {
      err << e.label << ": expected root_of_unity=" << *e.root_of_unity << "\n";
      mismatch = true;
    }
    if (e.h_reference && a.height && !a.height->h.contains(parse_rational(*e.h_reference))) {
      // Decimal references match within 1e-15.
      RealEnclosure ref = RealEnclosure::from_rational(parse_rational(*e.h_reference));
      RealEnclosure gap = abs(a.height->h - ref);
      if (mpfr_cmp_d(gap.lo(), 1e-15) > 0) {
        err << e.label << ": height " << a.height->h.to_string(12) << " misses reference " << *e.h_reference << "\n";
        mismatch = true;
      }
    }
  }
  if (mismatch) return kFailed;
  if (indeterminate) return kIndeterminate;
  return kOk;
}

}  // namespace weilcert::cli
