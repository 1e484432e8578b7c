#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "octaboson/hallittlewood.hpp"
#include "octaboson/partitions.hpp"
#include "octaboson/qkernels.hpp"
#include "octaboson/rational.hpp"
#include "octaboson/report.hpp"

namespace octaboson {

using Complex = std::complex<double>;

template <class Scalar>
Scalar scalar_from(const Rational& r);
template <>
inline Rational scalar_from<Rational>(const Rational& r) {
  return r;
}
template <>
inline Complex scalar_from<Complex>(const Rational& r) {
  return {r.get_d(), 0.0};
}

inline Rational conj_scalar(const Rational& r) { return r; }
inline Complex conj_scalar(const Complex& z) { return std::conj(z); }

/// Finitely supported function on the sector Lambda_n.  Zero values are never stored.
template <class Scalar>
class LatticeFunction {
 public:
  using Map = std::map<Partition, Scalar>;

  explicit LatticeFunction(std::size_t n = 0) : n_(n) {}

  static LatticeFunction delta(const Partition& lambda) {
    LatticeFunction f(lambda.size());
    f.set(lambda, Scalar(1));
    return f;
  }

  std::size_t sector() const noexcept { return n_; }
  const Map& values() const noexcept { return values_; }
  bool is_zero() const noexcept { return values_.empty(); }

  Scalar at(const Partition& lambda) const {
    auto it = values_.find(lambda);
    return it == values_.end() ? Scalar(0) : it->second;
  }

  void set(const Partition& lambda, const Scalar& value);
  void add(const Partition& lambda, const Scalar& value) { set(lambda, at(lambda) + value); }

  LatticeFunction& operator+=(const LatticeFunction& other);
  LatticeFunction& operator-=(const LatticeFunction& other);
  LatticeFunction& operator*=(const Scalar& c);

  friend LatticeFunction operator+(LatticeFunction a, const LatticeFunction& b) { return a += b; }
  friend LatticeFunction operator-(LatticeFunction a, const LatticeFunction& b) { return a -= b; }
  friend LatticeFunction operator*(const Scalar& c, LatticeFunction a) { return a *= c; }
  bool operator==(const LatticeFunction&) const = default;

 private:
  std::size_t n_;
  Map values_;
};

using ExactFunction = LatticeFunction<Rational>;
using ComplexFunction = LatticeFunction<Complex>;

/// Coefficient of (beta_l f)(lambda) = coeff * f(lambda + part l), lambda in Lambda_{n-1}.
Rational annihilation_coefficient(int l, const Partition& lambda, const ParamSet& params);
Rational annihilation_coefficient_four(int l, const Partition& lambda, const ParamSet& params);
Rational annihilation_coefficient_reduced(int l, const Partition& lambda, const ParamSet& params);

/// Coefficient of (beta_l^* f)(lambda) = coeff * f(lambda - part l), lambda in Lambda_{n+1}; 0 if m_l = 0.
Rational creation_coefficient(int l, const Partition& lambda, const ParamSet& params);
Rational creation_coefficient_four(int l, const Partition& lambda, const ParamSet& params);
Rational creation_coefficient_three(int l, const Partition& lambda, const ParamSet& params);
Rational creation_coefficient_two(int l, const Partition& lambda, const ParamSet& params);

template <class Scalar>
LatticeFunction<Scalar> annihilate(int l, const LatticeFunction<Scalar>& f, const ParamSet& params);
template <class Scalar>
LatticeFunction<Scalar> create(int l, const LatticeFunction<Scalar>& f, const ParamSet& params);
template <class Scalar>
LatticeFunction<Scalar> number_op(int l, const LatticeFunction<Scalar>& f, const ParamSet& params);

/// Multiplication by a diagonal operator given through its eigenvalue on each partition.
template <class Scalar>
LatticeFunction<Scalar> apply_diagonal(const LatticeFunction<Scalar>& f,
                                       const std::function<Rational(const Partition&)>& eigenvalue);

/// <f,g>_n = sum_lambda f(lambda) conj(g(lambda)) N_lambda
template <class Scalar>
Scalar sector_inner_product(const LatticeFunction<Scalar>& f, const LatticeFunction<Scalar>& g,
                            const ParamSet& params);

/// H_n in coefficient form (potential plus unit-step hopping).
template <class Scalar>
LatticeFunction<Scalar> apply_hamiltonian(const LatticeFunction<Scalar>& f, const ParamSet& params);

/// V + sum_{l <= max part} (beta_l^* beta_{l+1} + beta_{l+1}^* beta_l), assembled from the operators.
template <class Scalar>
LatticeFunction<Scalar> apply_hamiltonian_via_operators(const LatticeFunction<Scalar>& f, const ParamSet& params);

enum class RelationId { a1, a2, b, c, d1, d2, e1, e2 };

std::string to_string(RelationId id);
/// Accepts "a1" or "com-a1".
RelationId parse_relation(const std::string& text);
/// The relation ids of a family name: "com-d" -> {d1, d2}, "all" -> all eight.
std::vector<RelationId> relation_family(const std::string& text);

/// Whether the exchange relations carry the (1 - q t N0^2 N1)/(1 - t N0^2 N1) factor at (l,k) = (0,1).
enum class Twist { included, omitted };

/// Diagonal factors on the right-hand sides, evaluated at N_l = q^{m_l(lambda)}.
Rational relation_b_factor(int l, const Partition& lambda, const ParamSet& params);
Rational relation_c_factor(int l, const Partition& lambda, const ParamSet& params);
/// (1 - q t N0^2 N1) / (1 - t N0^2 N1); identically 1 outside the four-parameter profile.
Rational twist_factor(const Partition& lambda, const ParamSet& params);

/// Applies both sides of the relation to every delta_mu, mu in enumerate(n, max_part), and records
/// the largest coefficient of the difference.  d and e relations require l < k.
VerificationReport verify_relation(RelationId id, int l, int k, std::size_t n, int max_part,
                                   const ParamSet& params, Twist twist = Twist::included);

/// phi_xi(lambda) = p_lambda(e^{i xi}) / N_lambda
Complex wave_function(std::span<const double> xi, const Partition& lambda, HLCache& cache);
Complex wave_function(std::span<const double> xi, const Partition& lambda, const ParamSet& params);

/// E_n(xi) = 2 sum_j cos(xi_j)
double energy(std::span<const double> xi);

/// Relative residuals |(H phi)(lambda) - E phi(lambda)| / max(1, |phi(lambda)|), tolerance 1e-10.
VerificationReport eigen_residual(std::span<const double> xi, std::span<const Partition> lambdas, HLCache& cache);

/// s(x) and s0(x); s0 has one factor per nonzero coupling.
std::pair<Complex, Complex> scattering_factors(double x, const ParamSet& params);
/// S(xi) = prod_{j<k} s(xi_j - xi_k) s(xi_j + xi_k) prod_j s0(xi_j)
Complex scattering_matrix(std::span<const double> xi, const ParamSet& params);

}  // namespace octaboson
