#include "octaboson/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "octaboson/errors.hpp"
#include "octaboson/kernels.hpp"

namespace octaboson {

Exponent make_exponent(std::span<const int> values) {
  if (values.size() > kMaxVars) throw DomainError("too many variables for a Laurent polynomial");
  Exponent e{};
  std::copy(values.begin(), values.end(), e.begin());
  return e;
}

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const noexcept {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

LaurentPoly::LaurentPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw DomainError("too many variables for a Laurent polynomial");
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponent{}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, std::span<const int> exponent, const Rational& c) {
  if (exponent.size() != nvars) throw DomainError("monomial: exponent length differs from nvars");
  return monomial(nvars, make_exponent(exponent), c);
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, const Exponent& exponent, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t j, int power) {
  if (j >= nvars) throw DomainError("variable index out of range");
  Exponent e{};
  e[j] = power;
  return monomial(nvars, e);
}

LaurentPoly LaurentPoly::one_minus(std::size_t nvars, const Exponent& exponent, const Rational& c) {
  LaurentPoly p = constant(nvars, 1);
  p.add_term(exponent, -c);
  return p;
}

Rational LaurentPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  for (std::size_t j = nvars_; j < kMaxVars; ++j) {
    if (e[j] != 0) throw DomainError("exponent has entries beyond nvars");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_compatible(const LaurentPoly& other) const {
  if (nvars_ != other.nvars_) throw DomainError("Laurent polynomials with different nvars");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  LaurentPoly out(a.nvars_);
  Exponent e{};
  Rational product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t j = 0; j < a.nvars_; ++j) e[j] = ea[j] + eb[j];
      product = ca * cb;
      out.add_term(e, product);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponent& shift) const {
  LaurentPoly out(nvars_);
  auto hint = out.terms_.end();
  for (const auto& [e, c] : terms_) {
    Exponent moved = e;
    for (std::size_t j = 0; j < nvars_; ++j) moved[j] += shift[j];
    // Translation preserves lexicographic order within a degree and shifts all degrees equally.
    hint = out.terms_.emplace_hint(hint, moved, c);
    ++hint;
  }
  return out;
}

Exponent LaurentPoly::min_exponent() const {
  Exponent m{};
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t j = 0; j < nvars_; ++j) m[j] = first ? e[j] : std::min(m[j], e[j]);
    first = false;
  }
  return m;
}

const Exponent& LaurentPoly::leading_exponent() const {
  if (terms_.empty()) throw DomainError("leading exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second.get_str() << ')';
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (it->first[j] != 0) os << "*x" << (j + 1) << '^' << it->first[j];
    }
  }
  return os.str();
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) throw DomainError("div_exact: nvars mismatch");
  if (b.is_zero()) throw DomainError("div_exact: division by the zero polynomial");
  const std::size_t n = a.nvars();
  if (a.is_zero()) return LaurentPoly(n);

  const Exponent shift_a = a.min_exponent();
  const Exponent shift_b = b.min_exponent();
  Exponent neg_a{}, neg_b{};
  for (std::size_t j = 0; j < n; ++j) {
    neg_a[j] = -shift_a[j];
    neg_b[j] = -shift_b[j];
  }
  LaurentPoly remaining = a.shifted(neg_a);
  const LaurentPoly divisor = b.shifted(neg_b);

  const Exponent lead = divisor.leading_exponent();
  const Rational lead_coeff = divisor.coefficient(lead);

  LaurentPoly quotient(n);
  LaurentPoly remainder(n);
  Exponent step{};
  Exponent target{};
  while (!remaining.is_zero()) {
    const Exponent e = remaining.leading_exponent();
    const Rational c = remaining.coefficient(e);
    bool divides = true;
    for (std::size_t j = 0; j < n; ++j) {
      step[j] = e[j] - lead[j];
      if (step[j] < 0) divides = false;
    }
    if (!divides) {
      remainder.add_term(e, c);
      remaining.add_term(e, -c);
      continue;
    }
    const Rational factor = c / lead_coeff;
    quotient.add_term(step, factor);
    for (const auto& [eb, cb] : divisor.terms()) {
      for (std::size_t j = 0; j < n; ++j) target[j] = step[j] + eb[j];
      remaining.add_term(target, -factor * cb);
    }
  }
  if (!remainder.is_zero()) {
    throw NotDivisibleError("div_exact: nonzero remainder", remainder.to_string());
  }
  Exponent back{};
  for (std::size_t j = 0; j < n; ++j) back[j] = shift_a[j] - shift_b[j];
  return quotient.shifted(back);
}

LaurentPoly apply_w(const SignedPermutation& w, const LaurentPoly& p) {
  if (w.size() != p.nvars()) throw DomainError("apply_w: group element size differs from nvars");
  const kernels::OrbitTerm term{&w, 1, Exponent{}};
  return kernels::orbit_sum_serial(p, std::span(&term, 1));
}

LaurentPoly symmetrize_w(const LaurentPoly& p, Exec exec) {
  const auto& group = hyperoctahedral_group(p.nvars());
  std::vector<kernels::OrbitTerm> terms;
  terms.reserve(group.size());
  for (const auto& w : group) terms.push_back({&w, 1, Exponent{}});
  return kernels::orbit_sum(p, terms, exec);
}

namespace {

std::complex<double> ipow(std::complex<double> base, int e) {
  if (e < 0) {
    base = 1.0 / base;
    e = -e;
  }
  std::complex<double> result = 1.0;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace

std::complex<double> evaluate(const LaurentPoly& p, std::span<const std::complex<double>> point) {
  if (point.size() != p.nvars()) throw DomainError("evaluate: point length differs from nvars");
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> term = c.get_d();
    for (std::size_t j = 0; j < p.nvars(); ++j) {
      if (e[j] == 0) continue;
      if (point[j] == 0.0) {
        if (e[j] < 0) throw EvaluationError("evaluate: zero coordinate under a negative exponent");
        term = 0.0;
        break;
      }
      term *= ipow(point[j], e[j]);
    }
    sum += term;
  }
  return sum;
}

Rational evaluate_exact(const LaurentPoly& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw DomainError("evaluate: point length differs from nvars");
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational term = c;
    for (std::size_t j = 0; j < p.nvars(); ++j) {
      if (e[j] == 0) continue;
      if (point[j] == 0 && e[j] < 0) {
        throw EvaluationError("evaluate: zero coordinate under a negative exponent");
      }
      term *= pow(point[j], e[j]);
    }
    sum += term;
  }
  return sum;
}

std::complex<double> evaluate_on_torus(const LaurentPoly& p, std::span<const double> xi) {
  if (xi.size() != p.nvars()) throw DomainError("evaluate: point length differs from nvars");
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double phase = 0.0;
    for (std::size_t j = 0; j < p.nvars(); ++j) phase += e[j] * xi[j];
    sum += c.get_d() * std::polar(1.0, phase);
  }
  return sum;
}

}  // namespace octaboson
