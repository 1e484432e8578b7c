#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "octaboson/exec.hpp"
#include "octaboson/laurent.hpp"
#include "octaboson/partitions.hpp"
#include "octaboson/qkernels.hpp"
#include "octaboson/rational.hpp"

namespace octaboson {

struct QuadratureSpec;

/// Limits on exact constructions: |W| = 2^n n! summands with parts up to max_part.
struct ConstructionBounds {
  std::size_t max_n = 4;
  int max_part = 6;
};

/// A hyperoctahedral Hall-Littlewood polynomial p_lambda in the monic normalization.
///
/// `poly` is W-invariant; `expansion` holds the coefficients in the monomial basis m_mu,
/// with expansion[lambda] = 1 and support inside lower_set(lambda).  `norm` is N_lambda.
struct HLPolynomial {
  Partition lambda;
  LaurentPoly poly;
  std::map<Partition, Rational> expansion;
  Rational norm;
  ParamSet params;
};

/// Numerator and binomial denominator factors of the plane-wave coefficient C_lambda.
struct CFactorization {
  LaurentPoly numerator;
  std::vector<LaurentPoly> denominator_factors;
};

/// Floating expansion from the Gram-Schmidt route, with the Gram-matrix condition estimate.
struct GramSchmidtExpansion {
  std::map<Partition, std::complex<double>> coefficients;
  double condition = 1.0;
};

/// m_lambda = sum over the W-orbit of lambda of x^mu.
LaurentPoly monomial_symmetric(const Partition& lambda);

/// Expands a W-invariant polynomial in the m_mu basis by stripping dominance-maximal orbits
/// (ties broken by graded-lex order of the dominant representative).
std::map<Partition, Rational> monomial_expansion(const LaurentPoly& poly);

CFactorization c_factor(const Partition& lambda, const ParamSet& params);

/// p_lambda through the explicit symmetrization over W, exact.
HLPolynomial hl_explicit(const Partition& lambda, const ParamSet& params, Exec exec = Exec::parallel,
                         const ConstructionBounds& bounds = {});

/// p_lambda by solving <m_lambda + sum_mu c_mu m_mu, m_nu> = 0 (nu < lambda) with quadrature.
GramSchmidtExpansion hl_gram_schmidt(const Partition& lambda, const ParamSet& params, const QuadratureSpec& quad);

/// Macdonald's formula (t3 = t4 = 0 only), exact.
HLPolynomial macdonald_bc(const Partition& lambda, const ParamSet& params, Exec exec = Exec::parallel,
                          const ConstructionBounds& bounds = {});

/// P_lambda = c_lambda p_lambda
LaurentPoly normalized_p(const HLPolynomial& hl);

/// p_lambda at x_j = tau_j = q^{n-j} t1, exact.  Equals 1 / c_lambda.
Rational principal_specialization(const HLPolynomial& hl);

/// Memoized exact constructions for one parameter set.
class HLCache {
 public:
  explicit HLCache(ParamSet params, Exec exec = Exec::parallel, ConstructionBounds bounds = {})
      : params_(std::move(params)), exec_(exec), bounds_(bounds) {}

  const HLPolynomial& get(const Partition& lambda);
  const ParamSet& params() const noexcept { return params_; }

 private:
  ParamSet params_;
  Exec exec_;
  ConstructionBounds bounds_;
  std::map<Partition, HLPolynomial> cache_;
};

/// LHS - RHS of the Pieri recurrence for P_lambda; the zero polynomial when it holds.
LaurentPoly pieri_residual(const Partition& lambda, HLCache& cache);
LaurentPoly pieri_residual(const Partition& lambda, const ParamSet& params);

}  // namespace octaboson
