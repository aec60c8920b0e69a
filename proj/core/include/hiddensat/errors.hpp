#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hiddensat {

// Malformed DIMACS or solution-file input; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A bisection could not establish a sign change.  `probes` records the
// (parameter, predicate margin) pairs examined, for diagnosis.
class BracketError : public std::runtime_error {
 public:
  BracketError(const std::string& what,
               std::vector<std::pair<double, double>> probes)
      : std::runtime_error(what), probes_(std::move(probes)) {}
  const std::vector<std::pair<double, double>>& probes() const noexcept {
    return probes_;
  }

 private:
  std::vector<std::pair<double, double>> probes_;
};

// The two-type branching process is at or past criticality: the expected
// propagation-round size (I - M)^-1 p0 is undefined.
class SupercriticalError : public std::runtime_error {
 public:
  explicit SupercriticalError(double lambda1)
      : std::runtime_error("branching process supercritical: lambda1 = " +
                           std::to_string(lambda1)),
        lambda1_(lambda1) {}
  double lambda1() const noexcept { return lambda1_; }

 private:
  double lambda1_;
};

}  // namespace hiddensat
