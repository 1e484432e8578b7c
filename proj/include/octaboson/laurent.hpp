#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "octaboson/exec.hpp"
#include "octaboson/partitions.hpp"
#include "octaboson/rational.hpp"

namespace octaboson {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector; slots at index >= nvars stay zero.
using Exponent = std::array<int, kMaxVars>;

Exponent make_exponent(std::span<const int> values);

/// Total degree first, then lexicographic (x_1 > x_2 > ...).
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept;
};

/// Multivariate Laurent polynomial over the rationals.  Variable x_j stands for e^{i xi_j}.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLex>;

  explicit LaurentPoly(std::size_t nvars = 0);

  static LaurentPoly constant(std::size_t nvars, const Rational& c);
  static LaurentPoly monomial(std::size_t nvars, std::span<const int> exponent, const Rational& c = 1);
  static LaurentPoly monomial(std::size_t nvars, const Exponent& exponent, const Rational& c = 1);
  /// x_j^power (j 0-based).
  static LaurentPoly variable(std::size_t nvars, std::size_t j, int power = 1);
  /// 1 - c x^exponent
  static LaurentPoly one_minus(std::size_t nvars, const Exponent& exponent, const Rational& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  Rational coefficient(const Exponent& e) const;
  Rational coefficient(std::span<const int> e) const { return coefficient(make_exponent(e)); }

  /// Adds c x^e, dropping the term if the sum cancels.
  void add_term(const Exponent& e, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& other) const { return nvars_ == other.nvars_ && terms_ == other.terms_; }

  /// Multiplication by the monomial x^shift.
  LaurentPoly shifted(const Exponent& shift) const;
  /// Componentwise minimum exponent over all terms (zero vector for the zero polynomial).
  Exponent min_exponent() const;
  /// Graded-lex largest exponent; requires a nonzero polynomial.
  const Exponent& leading_exponent() const;

  std::string to_string() const;

 private:
  void check_compatible(const LaurentPoly& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Exact quotient a / b.  Both operands are shifted into ordinary polynomials and divided
/// under graded-lex order; a nonzero remainder raises NotDivisibleError.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// x^alpha -> prod_j x_{sigma_j}^{epsilon_j alpha_j}, so apply_w(w, p)(xi) = p(w xi).
LaurentPoly apply_w(const SignedPermutation& w, const LaurentPoly& p);

/// Sum over the hyperoctahedral group of apply_w(w, p).
LaurentPoly symmetrize_w(const LaurentPoly& p, Exec exec = Exec::parallel);

std::complex<double> evaluate(const LaurentPoly& p, std::span<const std::complex<double>> point);
Rational evaluate_exact(const LaurentPoly& p, std::span<const Rational> point);

/// Value at x_j = e^{i xi_j}.
std::complex<double> evaluate_on_torus(const LaurentPoly& p, std::span<const double> xi);

}  // namespace octaboson
