#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// CNF formulas over variables 1..n, truth assignments, evaluation, overlap
// geometry, DIMACS serialization, and a brute-force model-counting oracle.

namespace hiddensat {

// A literal in DIMACS encoding: +v is the positive literal of variable v,
// -v the negated one; v >= 1.
struct Literal {
  std::int32_t code = 0;

  constexpr Literal() = default;
  constexpr Literal(int variable, bool positive)
      : code(positive ? variable : -variable) {}

  constexpr int variable() const noexcept { return code < 0 ? -code : code; }
  constexpr bool positive() const noexcept { return code > 0; }
  constexpr bool operator==(const Literal&) const noexcept = default;
};

// Exactly k literals over pairwise-distinct variables (canonical form).
// Parsing in lenient mode may produce clauses with repeated variables; such
// formulas are marked non-canonical (see Formula::canonical).
using Clause = std::vector<Literal>;

// A total truth assignment to variables 1..n; operator[](i) is the value of
// variable i+1, matching the text form: character i of to_string() encodes
// variable i+1 ('0' = false, '1' = true).
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n, bool value = false)
      : bits_(n, value ? 1 : 0) {}

  static Assignment from_string(std::string_view s);
  std::string to_string() const;

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  void set(std::size_t i, bool v) noexcept { bits_[i] = v ? 1 : 0; }
  Assignment complement() const;

  bool operator==(const Assignment&) const noexcept = default;

 private:
  std::vector<std::uint8_t> bits_;
};

enum class HiddenMode { zero = 0, one = 1, two = 2 };

// How a formula was produced, when it came from the sampler (or from a
// DIMACS file carrying "c hidden" comments).  hidden holds 0, 1, or 2
// assignments; for HiddenMode::two they are exact complements.
struct GenerationMeta {
  std::optional<HiddenMode> mode;
  std::optional<std::uint64_t> seed;
  std::vector<Assignment> hidden;
};

struct Formula {
  int n = 0;  // variable count
  int k = 0;  // clause width
  std::vector<Clause> clauses;
  std::optional<GenerationMeta> meta;
  // False when lenient parsing accepted clauses with repeated variables.
  bool canonical = true;

  int m() const noexcept { return static_cast<int>(clauses.size()); }
  double density() const noexcept {
    return n == 0 ? 0.0 : static_cast<double>(clauses.size()) / n;
  }
};

struct EvalResult {
  std::int64_t satisfied_count = 0;
  bool is_model = false;
};

// True iff at least one literal of `c` is satisfied by `a`.
bool evaluate_clause(const Clause& c, const Assignment& a);

// Counts satisfied clauses (duplicates counted separately); is_model iff all
// m clauses are satisfied.  Throws std::invalid_argument on length mismatch.
EvalResult evaluate_formula(const Formula& f, const Assignment& a);

// Fraction of positions on which a and b agree, in [0,1].
double overlap_fraction(const Assignment& a, const Assignment& b);

// DIMACS CNF text: optional "c hidden <bits>" comments (when reveal_hidden
// and f.meta carries hidden assignments), then "p cnf n m", then one clause
// per line, literals separated by single spaces and terminated by 0.
std::string write_dimacs(const Formula& f, bool reveal_hidden);
void write_dimacs(std::ostream& out, const Formula& f, bool reveal_hidden);

struct ParseOptions {
  // Strict mode: clause count must match the header, clause variables must
  // be pairwise distinct.  Lenient mode tolerates both (repeated variables
  // mark the formula non-canonical) for foreign benchmark files.
  bool strict = true;
};

// Parses DIMACS CNF.  Comments are ignored except "c hidden <bits>", which
// populates meta.hidden.  All clauses must share one width (the formula's
// k).  Throws ParseError with a 1-based line number on malformed input.
Formula parse_dimacs(std::string_view text, const ParseOptions& opts = {});
Formula parse_dimacs(std::istream& in, const ParseOptions& opts = {});

// Sidecar solution-file format: one line per hidden assignment, n characters
// over {0,1}, variable i at position i-1.
std::string write_solutions(const std::vector<Assignment>& hidden);
std::vector<Assignment> parse_solutions(std::string_view text);

// Exact number of satisfying assignments by enumeration of all 2^n
// assignments.  Guarded: throws std::domain_error for n > 25.
std::uint64_t brute_force_count(const Formula& f);

}  // namespace hiddensat
