#pragma once

// Data-parallel kernels.  Every kernel has a serial reference implementation and an
// OpenMP version; the two produce identical results (exactly for the rational kernels,
// bit-for-bit for the floating kernels at any worker count).

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "octaboson/exec.hpp"
#include "octaboson/laurent.hpp"
#include "octaboson/partitions.hpp"

namespace octaboson::kernels {

/// Number of OpenMP workers used by the parallel kernels (0 = runtime default).
void set_worker_count(int workers);
int worker_count();

/// One summand sign * x^shift * apply_w(w, p) of an orbit sum.
struct OrbitTerm {
  const SignedPermutation* w;
  int sign;
  Exponent shift;
};

LaurentPoly orbit_sum_serial(const LaurentPoly& p, std::span<const OrbitTerm> terms);
LaurentPoly orbit_sum_parallel(const LaurentPoly& p, std::span<const OrbitTerm> terms);
LaurentPoly orbit_sum(const LaurentPoly& p, std::span<const OrbitTerm> terms, Exec exec);

/// Uniform tensor grid xi_j in {2 pi k / M}, node index = sum_j k_j M^j.
struct TorusGrid {
  std::size_t n;
  int points_per_dim;

  std::size_t node_count() const;
  void node(std::size_t index, std::span<int> digits) const;
};

/// Plain double copy of the weight parameters.
struct WeightParams {
  double q;
  std::array<double, 4> t;
};

/// Delta(xi) evaluated straight from its product form.
std::complex<double> delta_value(std::span<const double> xi, const WeightParams& params);

std::vector<double> delta_abs2_on_grid(const TorusGrid& grid, const WeightParams& params, Exec exec);
std::vector<std::complex<double>> values_on_grid(const LaurentPoly& p, const TorusGrid& grid, Exec exec);

/// mean_k f_k conj(g_k) w_k with a fixed-tree (blocked pairwise) reduction.
std::complex<double> weighted_mean(std::span<const std::complex<double>> f,
                                   std::span<const std::complex<double>> g,
                                   std::span<const double> w, Exec exec);

}  // namespace octaboson::kernels
