#include "octaboson/torus.hpp"

#include <string>

#include "octaboson/errors.hpp"

namespace octaboson {

void QuadratureSpec::validate() const {
  if (points_per_dim < 4) throw DomainError("quadrature needs at least 4 points per dimension");
  std::size_t nodes = 1;
  for (std::size_t j = 0; j < n; ++j) {
    nodes *= static_cast<std::size_t>(points_per_dim);
    if (nodes > budget) {
      throw ResourceError("quadrature node count exceeds the budget (" + std::to_string(budget) + ")");
    }
  }
}

QuadratureSpec default_quadrature(std::size_t n) {
  QuadratureSpec spec;
  spec.n = n;
  spec.points_per_dim = n <= 2 ? 64 : 32;
  return spec;
}

namespace {

kernels::WeightParams to_weight_params(const ParamSet& params) {
  kernels::WeightParams w{params.q().get_d(), {}};
  for (int r = 1; r <= 4; ++r) w.t[static_cast<std::size_t>(r - 1)] = params.t(r).get_d();
  return w;
}

std::vector<double> weights_for(const kernels::TorusGrid& grid, const ParamSet& params, Weight weight, Exec exec) {
  if (weight == Weight::unit) return std::vector<double>(grid.node_count(), 1.0);
  return kernels::delta_abs2_on_grid(grid, to_weight_params(params), exec);
}

}  // namespace

WeightEvaluator::WeightEvaluator(const ParamSet& params, std::size_t n) : weight_(to_weight_params(params)), n_(n) {}

std::complex<double> WeightEvaluator::operator()(std::span<const double> xi) const {
  if (xi.size() != n_) throw DomainError("weight: point dimension differs from n");
  return kernels::delta_value(xi, weight_);
}

std::complex<double> weight_delta(std::span<const double> xi, const ParamSet& params) {
  return WeightEvaluator(params, xi.size())(xi);
}

std::complex<double> inner_product(const LaurentPoly& f, const LaurentPoly& g, const ParamSet& params,
                                   const QuadratureSpec& quad, Weight weight, Exec exec) {
  const LaurentPoly basis[] = {f, g};
  return gram_matrix(basis, params, quad, weight, exec).matrix(0, 1);
}

GramResult gram_matrix(std::span<const LaurentPoly> basis, const ParamSet& params, const QuadratureSpec& quad,
                       Weight weight, Exec exec) {
  quad.validate();
  for (const auto& b : basis) {
    if (b.nvars() != quad.n) throw DomainError("gram_matrix: nvars differs from quadrature dimension");
  }
  const auto grid = quad.grid();
  const auto weights = weights_for(grid, params, weight, exec);
  std::vector<std::vector<std::complex<double>>> values;
  values.reserve(basis.size());
  for (const auto& b : basis) values.push_back(kernels::values_on_grid(b, grid, exec));

  const double group = static_cast<double>(group_order(quad.n));
  const auto size = static_cast<Eigen::Index>(basis.size());
  GramResult out{Eigen::MatrixXcd(size, size), 0.0};
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      out.matrix(i, j) = kernels::weighted_mean(values[static_cast<std::size_t>(i)],
                                                values[static_cast<std::size_t>(j)], weights, exec) /
                         group;
    }
  }
  out.hermiticity_deviation = (out.matrix - out.matrix.adjoint()).cwiseAbs().maxCoeff();
  return out;
}

std::vector<std::complex<double>> convergence_probe(const LaurentPoly& f, const LaurentPoly& g, const ParamSet& params,
                                                    std::span<const int> m_list, Weight weight) {
  std::vector<std::complex<double>> out;
  int previous = 0;
  for (int m : m_list) {
    if (m <= previous) throw DomainError("convergence_probe: M list must be increasing");
    previous = m;
    QuadratureSpec quad;
    quad.n = f.nvars();
    quad.points_per_dim = m;
    out.push_back(inner_product(f, g, params, quad, weight));
  }
  return out;
}

}  // namespace octaboson
