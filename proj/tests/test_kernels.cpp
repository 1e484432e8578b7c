#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "octaboson/kernels.hpp"
#include "oracles.hpp"

using namespace octaboson;
using namespace octaboson::kernels;

namespace {

const WeightParams kWeights{0.5, {1.0 / 3, -0.25, 0.2, -1.0 / 6}};

LaurentPoly sample_poly(std::size_t n) {
  LaurentPoly p(n);
  std::mt19937 rng(static_cast<unsigned>(n) * 17u + 1u);
  std::uniform_int_distribution<int> exp(-2, 3);
  std::uniform_int_distribution<int> num(-9, 9);
  for (int k = 0; k < 6; ++k) {
    std::vector<int> e(n);
    for (auto& v : e) v = exp(rng);
    p += LaurentPoly::monomial(n, e, oracle::frac(num(rng), 1 + k));
  }
  return p;
}

std::vector<OrbitTerm> sample_terms(std::size_t n) {
  std::vector<OrbitTerm> terms;
  int k = 0;
  for (const auto& w : hyperoctahedral_group(n)) {
    Exponent shift{};
    for (std::size_t j = 0; j < n; ++j) shift[j] = (k + static_cast<int>(j)) % 3 - 1;
    terms.push_back({&w, k % 2 == 0 ? 1 : -1, shift});
    ++k;
  }
  return terms;
}

}  // namespace

TEST_CASE("orbit sum matches a direct accumulation") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto p = sample_poly(n);
    const auto terms = sample_terms(n);
    LaurentPoly expected(n);
    for (const auto& term : terms) {
      LaurentPoly img = apply_w(*term.w, p).shifted(term.shift);
      expected += Rational(term.sign) * img;
    }
    CHECK(orbit_sum_serial(p, terms) == expected);
  }
}

TEST_CASE("parallel orbit sum equals serial at every worker count") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto p = sample_poly(n);
    const auto terms = sample_terms(n);
    const auto reference = orbit_sum_serial(p, terms);
    for (int workers = 1; workers <= 4; ++workers) {
      set_worker_count(workers);
      CHECK(orbit_sum_parallel(p, terms) == reference);
    }
  }
  set_worker_count(0);
}

TEST_CASE("grid node digits") {
  const TorusGrid grid{3, 5};
  CHECK(grid.node_count() == 125);
  int digits[3];
  grid.node(0, digits);
  CHECK((digits[0] == 0 && digits[1] == 0 && digits[2] == 0));
  grid.node(1 + 2 * 5 + 4 * 25, digits);
  CHECK((digits[0] == 1 && digits[1] == 2 && digits[2] == 4));
}

TEST_CASE("delta value agrees with an independent product coding") {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> xi(n);
      for (auto& v : xi) v = angle(rng);
      const double got = std::norm(delta_value(xi, kWeights));
      const double want = oracle::delta_abs2(xi, kWeights.q, kWeights.t);
      CHECK(std::abs(got - want) <= 1e-12 * (1 + want));
    }
  }
  const double zero[] = {0.0};
  CHECK(std::abs(delta_value(zero, kWeights)) == 0.0);
}

TEST_CASE("grid weights are bit-identical across execution modes and worker counts") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const TorusGrid grid{n, n == 3 ? 8 : 16};
    const auto serial = delta_abs2_on_grid(grid, kWeights, Exec::serial);
    const auto p = sample_poly(n);
    const auto values = values_on_grid(p, grid, Exec::serial);
    const auto mean = weighted_mean(values, values, serial, Exec::serial);
    for (int workers = 1; workers <= 4; ++workers) {
      set_worker_count(workers);
      CHECK(delta_abs2_on_grid(grid, kWeights, Exec::parallel) == serial);
      CHECK(values_on_grid(p, grid, Exec::parallel) == values);
      const auto par = weighted_mean(values, values, serial, Exec::parallel);
      CHECK(par.real() == mean.real());
      CHECK(par.imag() == mean.imag());
    }
  }
  set_worker_count(0);
}

TEST_CASE("weighted mean of constants") {
  const std::vector<std::complex<double>> f(1000, {2.0, 1.0});
  const std::vector<std::complex<double>> g(1000, {1.0, 0.0});
  const std::vector<double> w(1000, 0.5);
  const auto m = weighted_mean(f, g, w, Exec::parallel);
  CHECK(std::abs(m - std::complex<double>(1.0, 0.5)) < 1e-15);
  CHECK(std::abs(weighted_mean(f, f, w, Exec::serial) - std::complex<double>(2.5, 0.0)) < 1e-14);
}
