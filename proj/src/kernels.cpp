#include "octaboson/kernels.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>

#include "octaboson/errors.hpp"

namespace octaboson::kernels {

namespace {

int g_workers = 0;

int resolved_workers() { return g_workers > 0 ? g_workers : omp_get_max_threads(); }

void accumulate_term(const LaurentPoly& p, const OrbitTerm& term, LaurentPoly& out) {
  const std::size_t n = p.nvars();
  std::array<int, kMaxVars> source{};
  Exponent image{};
  for (const auto& [e, c] : p.terms()) {
    std::copy(e.begin(), e.begin() + n, source.begin());
    term.w->act_on_exponent(std::span<const int>(source.data(), n), std::span<int>(image.data(), n));
    for (std::size_t j = 0; j < n; ++j) image[j] += term.shift[j];
    if (term.sign > 0) {
      out.add_term(image, c);
    } else {
      out.add_term(image, -c);
    }
  }
}

constexpr std::size_t kBlock = 512;

std::complex<double> pairwise(std::span<const std::complex<double>> xs) {
  if (xs.empty()) return 0.0;
  if (xs.size() == 1) return xs[0];
  const std::size_t half = xs.size() / 2;
  return pairwise(xs.first(half)) + pairwise(xs.subspan(half));
}

}  // namespace

void set_worker_count(int workers) { g_workers = workers < 0 ? 0 : workers; }

int worker_count() { return resolved_workers(); }

LaurentPoly orbit_sum_serial(const LaurentPoly& p, std::span<const OrbitTerm> terms) {
  LaurentPoly out(p.nvars());
  for (const auto& term : terms) {
    if (term.w->size() != p.nvars()) throw DomainError("orbit sum: group element size differs from nvars");
    accumulate_term(p, term, out);
  }
  return out;
}

LaurentPoly orbit_sum_parallel(const LaurentPoly& p, std::span<const OrbitTerm> terms) {
  for (const auto& term : terms) {
    if (term.w->size() != p.nvars()) throw DomainError("orbit sum: group element size differs from nvars");
  }
  const int workers = resolved_workers();
  std::vector<LaurentPoly> partial(static_cast<std::size_t>(workers), LaurentPoly(p.nvars()));
  const auto count = static_cast<std::ptrdiff_t>(terms.size());
#pragma omp parallel for schedule(static) num_threads(workers)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    accumulate_term(p, terms[static_cast<std::size_t>(i)], partial[static_cast<std::size_t>(omp_get_thread_num())]);
  }
  // Exact arithmetic: the merge order cannot change the result.
  LaurentPoly out = std::move(partial.front());
  for (std::size_t k = 1; k < partial.size(); ++k) out += partial[k];
  return out;
}

LaurentPoly orbit_sum(const LaurentPoly& p, std::span<const OrbitTerm> terms, Exec exec) {
  return exec == Exec::parallel ? orbit_sum_parallel(p, terms) : orbit_sum_serial(p, terms);
}

std::size_t TorusGrid::node_count() const {
  std::size_t count = 1;
  for (std::size_t j = 0; j < n; ++j) count *= static_cast<std::size_t>(points_per_dim);
  return count;
}

void TorusGrid::node(std::size_t index, std::span<int> digits) const {
  for (std::size_t j = 0; j < n; ++j) {
    digits[j] = static_cast<int>(index % static_cast<std::size_t>(points_per_dim));
    index /= static_cast<std::size_t>(points_per_dim);
  }
}

std::complex<double> delta_value(std::span<const double> xi, const WeightParams& params) {
  using C = std::complex<double>;
  const std::size_t n = xi.size();
  C value = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const C minus = std::polar(1.0, xi[j] - xi[k]);
      const C plus = std::polar(1.0, xi[j] + xi[k]);
      value *= (1.0 - minus) * (1.0 - plus) / ((1.0 - params.q * minus) * (1.0 - params.q * plus));
    }
    const C x = std::polar(1.0, xi[j]);
    C denominator = 1.0;
    for (double t : params.t) denominator *= 1.0 - t * x;
    value *= (1.0 - x * x) / denominator;
  }
  return value;
}

std::vector<double> delta_abs2_on_grid(const TorusGrid& grid, const WeightParams& params, Exec exec) {
  const std::size_t count = grid.node_count();
  std::vector<double> out(count);
  const double step = 2.0 * std::numbers::pi / grid.points_per_dim;
  auto fill = [&](std::size_t k) {
    std::array<int, kMaxVars> digits{};
    std::array<double, kMaxVars> xi{};
    grid.node(k, std::span<int>(digits.data(), grid.n));
    for (std::size_t j = 0; j < grid.n; ++j) xi[j] = step * digits[j];
    out[k] = std::norm(delta_value(std::span<const double>(xi.data(), grid.n), params));
  };
  if (exec == Exec::parallel) {
    const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static) num_threads(resolved_workers())
    for (std::ptrdiff_t k = 0; k < total; ++k) fill(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < count; ++k) fill(k);
  }
  return out;
}

std::vector<std::complex<double>> values_on_grid(const LaurentPoly& p, const TorusGrid& grid, Exec exec) {
  if (p.nvars() != grid.n) throw DomainError("values_on_grid: nvars differs from grid dimension");
  const int m = grid.points_per_dim;
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) roots[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / m);

  std::vector<Exponent> exps;
  std::vector<double> coeffs;
  exps.reserve(p.term_count());
  coeffs.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) {
    exps.push_back(e);
    coeffs.push_back(c.get_d());
  }

  const std::size_t count = grid.node_count();
  std::vector<std::complex<double>> out(count);
  auto fill = [&](std::size_t k) {
    std::array<int, kMaxVars> digits{};
    grid.node(k, std::span<int>(digits.data(), grid.n));
    std::complex<double> sum = 0.0;
    for (std::size_t t = 0; t < exps.size(); ++t) {
      long phase = 0;
      for (std::size_t j = 0; j < grid.n; ++j) phase += static_cast<long>(exps[t][j]) * digits[j];
      phase %= m;
      if (phase < 0) phase += m;
      sum += coeffs[t] * roots[static_cast<std::size_t>(phase)];
    }
    out[k] = sum;
  };
  if (exec == Exec::parallel) {
    const auto total = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static) num_threads(resolved_workers())
    for (std::ptrdiff_t k = 0; k < total; ++k) fill(static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < count; ++k) fill(k);
  }
  return out;
}

std::complex<double> weighted_mean(std::span<const std::complex<double>> f,
                                   std::span<const std::complex<double>> g,
                                   std::span<const double> w, Exec exec) {
  if (f.size() != g.size() || f.size() != w.size()) throw DomainError("weighted_mean: size mismatch");
  if (f.empty()) return 0.0;
  const std::size_t blocks = (f.size() + kBlock - 1) / kBlock;
  std::vector<std::complex<double>> partial(blocks);
  auto block_sum = [&](std::size_t b) {
    const std::size_t begin = b * kBlock;
    const std::size_t end = std::min(begin + kBlock, f.size());
    std::complex<double> s = 0.0;
    for (std::size_t k = begin; k < end; ++k) s += f[k] * std::conj(g[k]) * w[k];
    partial[b] = s;
  };
  if (exec == Exec::parallel) {
    const auto total = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static) num_threads(resolved_workers())
    for (std::ptrdiff_t b = 0; b < total; ++b) block_sum(static_cast<std::size_t>(b));
  } else {
    for (std::size_t b = 0; b < blocks; ++b) block_sum(b);
  }
  return pairwise(partial) / static_cast<double>(f.size());
}

}  // namespace octaboson::kernels
