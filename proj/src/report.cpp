#include "octaboson/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace octaboson {

namespace {

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << v;
  return os.str();
}

double parse_residual(const std::string& text) {
  try {
    return parse_rational(text).get_d();
  } catch (...) {
    return std::stod(text);
  }
}

}  // namespace

void VerificationReport::record_exact(std::string label, const Rational& residual, bool expect_failure) {
  const Rational magnitude = abs(residual);
  const bool ok = expect_failure ? magnitude != 0 : magnitude == 0;
  cases.push_back({std::move(label), to_string(magnitude), ok, expect_failure});
  pass = pass && ok;
  if (!expect_failure && magnitude > parse_rational(max_residual)) max_residual = to_string(magnitude);
}

void VerificationReport::record_float(std::string label, double residual) {
  const bool ok = std::isfinite(residual) && residual < tolerance;
  cases.push_back({std::move(label), format_double(residual), ok, false});
  pass = pass && ok;
  mode = "float";
  const double current = parse_residual(max_residual);
  if (!(residual <= current)) max_residual = format_double(residual);
}

void VerificationReport::absorb(const VerificationReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
  pass = pass && other.pass;
  if (other.mode == "float") mode = "float";
  tolerance = std::max(tolerance, other.tolerance);
  n = std::max(n, other.n);
  max_part = std::max(max_part, other.max_part);
  const double mine = parse_residual(max_residual);
  const double theirs = parse_residual(other.max_residual);
  if (theirs > mine || std::isnan(theirs)) max_residual = other.max_residual;
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

}  // namespace octaboson
