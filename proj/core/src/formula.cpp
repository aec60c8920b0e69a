#include "hiddensat/formula.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hiddensat/errors.hpp"

namespace hiddensat {

Assignment Assignment::from_string(std::string_view s) {
  Assignment a(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') {
      a.bits_[i] = 1;
    } else if (s[i] != '0') {
      throw std::invalid_argument("assignment string must be over {0,1}");
    }
  }
  return a;
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

Assignment Assignment::complement() const {
  Assignment c(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) c.bits_[i] = bits_[i] ^ 1;
  return c;
}

bool evaluate_clause(const Clause& c, const Assignment& a) {
  for (const Literal lit : c) {
    const std::size_t idx = static_cast<std::size_t>(lit.variable()) - 1;
    if (idx >= a.size())
      throw std::invalid_argument("literal variable out of assignment range");
    if (a[idx] == lit.positive()) return true;
  }
  return false;
}

EvalResult evaluate_formula(const Formula& f, const Assignment& a) {
  if (a.size() != static_cast<std::size_t>(f.n))
    throw std::invalid_argument("assignment length does not match formula");
  EvalResult res;
  for (const Clause& c : f.clauses)
    if (evaluate_clause(c, a)) ++res.satisfied_count;
  res.is_model = res.satisfied_count == f.m();
  return res;
}

double overlap_fraction(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("overlap of assignments of unequal length");
  if (a.size() == 0) return 1.0;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == b[i]) ++agree;
  return static_cast<double>(agree) / static_cast<double>(a.size());
}

void write_dimacs(std::ostream& out, const Formula& f, bool reveal_hidden) {
  if (reveal_hidden && f.meta)
    for (const Assignment& h : f.meta->hidden)
      out << "c hidden " << h.to_string() << '\n';
  out << "p cnf " << f.n << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal lit : c) out << lit.code << ' ';
    out << "0\n";
  }
}

std::string write_dimacs(const Formula& f, bool reveal_hidden) {
  std::ostringstream out;
  write_dimacs(out, f, reveal_hidden);
  return out.str();
}

namespace {

// Line-oriented DIMACS scanner; keeps the 1-based line number for errors.
struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line = 0;  // 1-based number of the line most recently returned

  bool next(std::string_view& out) {
    if (pos >= text.size()) return false;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != '\n') ++pos;
    out = text.substr(start, pos - start);
    if (pos < text.size()) ++pos;  // consume '\n'
    ++line;
    return true;
  }
};

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::vector<long> parse_ints(std::string_view s, int line) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    bool neg = false;
    if (s[i] == '-') {
      neg = true;
      ++i;
    }
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError(line, "expected integer literal");
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 100000000L) throw ParseError(line, "literal out of range");
      ++i;
    }
    out.push_back(neg ? -v : v);
  }
  return out;
}

}  // namespace

Formula parse_dimacs(std::string_view text, const ParseOptions& opts) {
  LineReader reader{text};
  std::string_view lineText;

  Formula f;
  std::vector<Assignment> hidden;
  bool seen_header = false;
  long header_m = 0;
  std::vector<Literal> current;  // literals of the clause being accumulated
  int clause_start_line = 0;

  auto finish_clause = [&](int line) {
    if (f.clauses.empty()) {
      f.k = static_cast<int>(current.size());
      if (f.k == 0) throw ParseError(line, "empty clause");
    } else if (static_cast<int>(current.size()) != f.k) {
      throw ParseError(line, "clause width differs from the first clause");
    }
    std::vector<int> vars;
    vars.reserve(current.size());
    for (const Literal lit : current) vars.push_back(lit.variable());
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
      if (opts.strict)
        throw ParseError(line, "repeated variable within a clause");
      f.canonical = false;
    }
    f.clauses.push_back(current);
    current.clear();
  };

  while (reader.next(lineText)) {
    const int line = reader.line;
    if (is_blank(lineText)) continue;
    if (lineText[0] == 'c') {
      // Comment; "c hidden <bits>" carries a planted assignment.
      std::string_view rest = lineText.substr(1);
      while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      if (rest.rfind("hidden", 0) == 0) {
        std::string_view bits = rest.substr(6);
        while (!bits.empty() && std::isspace(static_cast<unsigned char>(bits.front())))
          bits.remove_prefix(1);
        while (!bits.empty() && std::isspace(static_cast<unsigned char>(bits.back())))
          bits.remove_suffix(1);
        try {
          hidden.push_back(Assignment::from_string(bits));
        } catch (const std::invalid_argument&) {
          throw ParseError(line, "malformed hidden-assignment comment");
        }
      }
      continue;
    }
    if (lineText[0] == 'p') {
      if (seen_header) throw ParseError(line, "duplicate header");
      std::istringstream hs{std::string(lineText)};
      std::string p, fmt;
      long n = -1, m = -1;
      hs >> p >> fmt >> n >> m;
      if (hs.fail() || p != "p" || fmt != "cnf" || n < 0 || m < 0)
        throw ParseError(line, "malformed header (expected \"p cnf n m\")");
      f.n = static_cast<int>(n);
      header_m = m;
      seen_header = true;
      continue;
    }
    if (!seen_header)
      throw ParseError(line, "clause before \"p cnf\" header");
    for (const long v : parse_ints(lineText, line)) {
      if (v == 0) {
        finish_clause(line);
        clause_start_line = 0;
        continue;
      }
      const long var = v < 0 ? -v : v;
      if (var > f.n) throw ParseError(line, "literal index out of range");
      if (current.empty()) clause_start_line = line;
      current.emplace_back(static_cast<int>(var), v > 0);
    }
  }

  if (!seen_header) throw ParseError(reader.line, "missing \"p cnf\" header");
  if (!current.empty())
    throw ParseError(clause_start_line, "unterminated clause (missing 0)");
  if (opts.strict && static_cast<long>(f.clauses.size()) != header_m)
    throw ParseError(reader.line, "clause count does not match header");

  for (const Assignment& h : hidden)
    if (h.size() != static_cast<std::size_t>(f.n))
      throw ParseError(1, "hidden assignment length does not match n");
  if (!hidden.empty()) {
    GenerationMeta meta;
    if (hidden.size() == 1) meta.mode = HiddenMode::one;
    if (hidden.size() == 2 && hidden[1] == hidden[0].complement())
      meta.mode = HiddenMode::two;
    meta.hidden = std::move(hidden);
    f.meta = std::move(meta);
  }
  return f;
}

Formula parse_dimacs(std::istream& in, const ParseOptions& opts) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return parse_dimacs(std::string_view{text}, opts);
}

std::string write_solutions(const std::vector<Assignment>& hidden) {
  std::string out;
  for (const Assignment& h : hidden) {
    out += h.to_string();
    out += '\n';
  }
  return out;
}

std::vector<Assignment> parse_solutions(std::string_view text) {
  std::vector<Assignment> out;
  LineReader reader{text};
  std::string_view lineText;
  while (reader.next(lineText)) {
    if (is_blank(lineText)) continue;
    std::string_view s = lineText;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    try {
      out.push_back(Assignment::from_string(s));
    } catch (const std::invalid_argument&) {
      throw ParseError(reader.line, "solution line must be over {0,1}");
    }
  }
  return out;
}

std::uint64_t brute_force_count(const Formula& f) {
  if (f.n > 25)
    throw std::domain_error("brute_force_count: n > 25 (enumeration guard)");
  // Bitmask form: assignment `a` has bit (v-1) set iff variable v is true.
  // A clause is violated iff no positive literal's bit is set and every
  // negative literal's bit is set.
  const std::uint32_t full = f.n == 0 ? 0u : (1u << f.n) - 1u;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;  // (pos, neg)
  masks.reserve(f.clauses.size());
  for (const Clause& c : f.clauses) {
    std::uint32_t pos = 0, neg = 0;
    for (const Literal lit : c) {
      const std::uint32_t bit = 1u << (lit.variable() - 1);
      (lit.positive() ? pos : neg) |= bit;
    }
    masks.emplace_back(pos, neg);
  }
  std::uint64_t count = 0;
  for (std::uint64_t a = 0; a <= full; ++a) {
    bool model = true;
    for (const auto& [pos, neg] : masks) {
      if ((a & pos) == 0 && (a & neg) == neg) {
        model = false;
        break;
      }
    }
    count += model;
    if (f.n == 0) break;
  }
  return count;
}

}  // namespace hiddensat
