#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "octaboson/exec.hpp"
#include "octaboson/kernels.hpp"
#include "octaboson/laurent.hpp"
#include "octaboson/qkernels.hpp"

namespace octaboson {

/// Tensor trapezoidal rule with M points per dimension.
struct QuadratureSpec {
  int points_per_dim = 64;
  std::size_t n = 1;
  std::size_t budget = resource_budget();

  /// Throws DomainError for M < 4 and ResourceError when M^n exceeds the budget.
  void validate() const;
  kernels::TorusGrid grid() const { return {n, points_per_dim}; }
};

/// Default M: 64 up to n = 2, 32 for n = 3.
QuadratureSpec default_quadrature(std::size_t n);

/// |Delta|^2 replaced by 1 gives the plain Haar average (used to probe the rule itself).
enum class Weight { delta, unit };

/// Orthogonality weight Delta(xi) for fixed parameters and dimension.
class WeightEvaluator {
 public:
  WeightEvaluator(const ParamSet& params, std::size_t n);

  std::complex<double> operator()(std::span<const double> xi) const;
  double abs2(std::span<const double> xi) const { return std::norm((*this)(xi)); }
  std::size_t n() const noexcept { return n_; }
  const kernels::WeightParams& weight_params() const noexcept { return weight_; }

 private:
  kernels::WeightParams weight_;
  std::size_t n_;
};

std::complex<double> weight_delta(std::span<const double> xi, const ParamSet& params);

/// <f,g>_Delta = (2 pi)^{-n} |W|^{-1} integral of f conj(g) |Delta|^2 over the torus.
std::complex<double> inner_product(const LaurentPoly& f, const LaurentPoly& g, const ParamSet& params,
                                   const QuadratureSpec& quad, Weight weight = Weight::delta,
                                   Exec exec = Exec::parallel);

struct GramResult {
  Eigen::MatrixXcd matrix;
  double hermiticity_deviation = 0.0;
};

/// matrix(i, j) = <basis_i, basis_j>_Delta
GramResult gram_matrix(std::span<const LaurentPoly> basis, const ParamSet& params, const QuadratureSpec& quad,
                       Weight weight = Weight::delta, Exec exec = Exec::parallel);

/// Inner products at each M of an increasing list.
std::vector<std::complex<double>> convergence_probe(const LaurentPoly& f, const LaurentPoly& g, const ParamSet& params,
                                                    std::span<const int> m_list, Weight weight = Weight::delta);

}  // namespace octaboson
