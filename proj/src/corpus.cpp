#include "weilcert/corpus.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace weilcert {

namespace {

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return std::string(line.substr(0, hash));
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

/// Replaces U+2212 MINUS SIGN, as typeset in prose, by '-'.
std::string ascii_minus(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.substr(i, 3) == "\xE2\x88\x92") {
      out.push_back('-');
      i += 2;
      continue;
    }
    out.push_back(s[i]);
  }
  return out;
}

bool is_integer_token(const std::string& t) {
  std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') return false;
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string::npos ? std::string::npos : p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

bool valid_decimal(const std::string& v) {
  double x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  return ec == std::errc() && ptr == v.data() + v.size();
}

}  // namespace

IntPolynomial parse_polynomial(std::string_view text) {
  std::string body = ascii_minus(strip_comment(text));
  if (trim(body).empty()) throw ParseError("empty polynomial");
  std::vector<Integer> coeffs;
  for (const std::string& raw : split(body, ',')) {
    std::string t = trim(raw);
    if (!is_integer_token(t)) throw ParseError("bad coefficient '" + t + "'");
    if (t[0] == '+') t.erase(0, 1);
    coeffs.emplace_back(t, 10);
  }
  if (coeffs.back() == 0) throw ParseError("last coefficient must be nonzero");
  return IntPolynomial(std::move(coeffs));
}

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + msg);
    };
    auto colon = line.find(':');
    if (colon == std::string::npos) throw fail("expected 'label : coefficients'");
    CorpusEntry e;
    e.label = trim(line.substr(0, colon));
    if (e.label.empty()) throw fail("empty label");
    if (e.label.find_first_of(",|\"") != std::string::npos) throw fail("label may not contain , | or \"");
    std::string rest = line.substr(colon + 1);
    auto bar = rest.find('|');
    try {
      e.poly = parse_polynomial(rest.substr(0, bar));
    } catch (const ParseError& err) {
      throw fail(err.what());
    }
    if (bar != std::string::npos) {
      std::istringstream flags(rest.substr(bar + 1));
      std::string kv;
      while (flags >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw fail("expected key=value, got '" + kv + "'");
        std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (key == "galois") {
          if (value != "yes" && value != "no") throw fail("galois must be yes or no");
          e.galois = value == "yes";
        } else if (key == "root_of_unity") {
          if (!is_integer_token(value) || value[0] == '-' || value[0] == '+') throw fail("bad root_of_unity");
          e.root_of_unity = std::stoul(value);
        } else if (key == "h") {
          if (!valid_decimal(value)) throw fail("bad h reference");
          e.h_reference = value;
        } else {
          throw fail("unknown key '" + key + "'");
        }
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

std::string format_entry(const CorpusEntry& e) {
  std::string s = e.label + " : " + to_coefficient_list(e.poly);
  std::string flags;
  if (e.galois) flags += std::string(" galois=") + (*e.galois ? "yes" : "no");
  if (e.root_of_unity) flags += " root_of_unity=" + std::to_string(*e.root_of_unity);
  if (e.h_reference) flags += " h=" + *e.h_reference;
  if (!flags.empty()) s += " |" + flags;
  return s;
}

std::string shortest_double(const RealEnclosure& x, int direction) {
  double v = direction < 0   ? mpfr_get_d(x.lo(), MPFR_RNDD)
             : direction > 0 ? mpfr_get_d(x.hi(), MPFR_RNDU)
                             : x.mid();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error("double formatting failed");
  return std::string(buf, ptr);
}

std::string csv_row(const std::string& label, const Analysis& a) {
  std::string row = label + "," + std::to_string(a.degree) + "," + to_string(a.irreducibility) + ",";
  if (a.root_of_unity_order) row += std::to_string(*a.root_of_unity_order);
  row += ",";
  row += a.status == "not-irreducible" ? "" : to_string(a.galois);
  row += ",";
  if (a.height) row += shortest_double(a.height->h, -1) + "," + shortest_double(a.height->h, 1);
  else row += ",";
  row += ",";
  if (a.rank) row += std::to_string(a.rank->rank_upper_certified) + "," + std::to_string(a.rank->rank_heuristic);
  else row += ",";
  row += ",";
  if (a.log_main_bound) row += shortest_double(*a.log_main_bound, 1);
  row += ",";
  if (a.margin_log10) row += shortest_double(*a.margin_log10, -1);
  row += "," + a.status;
  return row;
}

std::vector<Analysis> run_corpus(const std::vector<CorpusEntry>& entries, const AnalysisOptions& options,
                                 unsigned jobs) {
  std::vector<Analysis> results(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        results[i] = analyze(entries[i].poly, options);
      } catch (const std::exception& e) {
        Analysis bad;
        bad.poly = entries[i].poly;
        bad.degree = entries[i].poly.degree();
        bad.status = "error";
        bad.notes.push_back(e.what());
        results[i] = std::move(bad);
      }
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1 || entries.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs && j < entries.size(); ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return results;
}

void write_csv(std::ostream& out, const std::vector<CorpusEntry>& entries, const std::vector<Analysis>& results) {
  out << kCsvHeader << '\n';
  for (std::size_t i = 0; i < entries.size(); ++i) out << csv_row(entries[i].label, results[i]) << '\n';
}

}  // namespace weilcert
