#include "octaboson/hallittlewood.hpp"

#include <Eigen/Dense>

#include <string>

#include "octaboson/errors.hpp"
#include "octaboson/kernels.hpp"
#include "octaboson/torus.hpp"

namespace octaboson {

LaurentPoly monomial_symmetric(const Partition& lambda) {
  const std::size_t n = lambda.size();
  LaurentPoly m(n);
  for (const auto& mu : orbit(lambda)) m.add_term(make_exponent(mu), 1);
  return m;
}

namespace {

bool is_dominant(const Exponent& e, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    if (e[j] < 0) return false;
    if (j + 1 < n && e[j] < e[j + 1]) return false;
  }
  return true;
}

}  // namespace

std::map<Partition, Rational> monomial_expansion(const LaurentPoly& poly) {
  const std::size_t n = poly.nvars();
  std::map<Partition, Rational> expansion;
  LaurentPoly residual = poly;
  while (!residual.is_zero()) {
    // Dominance is contained in graded-lex order, so the graded-lex largest dominant
    // exponent is dominance-maximal among the dominant exponents present.
    const Exponent* top = nullptr;
    for (auto it = residual.terms().rbegin(); it != residual.terms().rend(); ++it) {
      if (is_dominant(it->first, n)) {
        top = &it->first;
        break;
      }
    }
    if (top == nullptr) throw DomainError("monomial expansion: polynomial is not W-invariant");
    const Partition mu(std::vector<int>(top->begin(), top->begin() + static_cast<std::ptrdiff_t>(n)));
    const Rational c = residual.coefficient(*top);
    expansion.emplace(mu, c);
    residual -= monomial_symmetric(mu) * c;
  }
  return expansion;
}

CFactorization c_factor(const Partition& lambda, const ParamSet& params) {
  const std::size_t n = lambda.size();
  CFactorization out{LaurentPoly::constant(n, 1), {}};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      Exponent minus{}, plus{};
      minus[j] = 1;
      minus[k] = -1;
      plus[j] = 1;
      plus[k] = 1;
      out.numerator *= LaurentPoly::one_minus(n, minus, params.q());
      out.numerator *= LaurentPoly::one_minus(n, plus, params.q());
      out.denominator_factors.push_back(LaurentPoly::one_minus(n, minus));
      out.denominator_factors.push_back(LaurentPoly::one_minus(n, plus));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (lambda[j] == 0) continue;
    Exponent single{}, twice{};
    single[j] = 1;
    twice[j] = 2;
    for (int r = 1; r <= 4; ++r) {
      if (params.t(r) != 0) out.numerator *= LaurentPoly::one_minus(n, single, params.t(r));
    }
    out.denominator_factors.push_back(LaurentPoly::one_minus(n, twice));
  }
  return out;
}

namespace {

std::vector<Exponent> positive_roots(std::size_t n) {
  std::vector<Exponent> roots;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      Exponent minus{}, plus{};
      minus[j] = 1;
      minus[k] = -1;
      plus[j] = 1;
      plus[k] = 1;
      roots.push_back(minus);
      roots.push_back(plus);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    Exponent twice{};
    twice[j] = 2;
    roots.push_back(twice);
  }
  return roots;
}

bool is_negative_root(const Exponent& e, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    if (e[j] != 0) return e[j] < 0;
  }
  return false;
}

// Polynomial equal to sum_w apply_w(w, numerator / D), D = prod over positive roots of (1 - x^beta).
// Each apply_w(w, D) is (sign) x^shift D; the sign and monomial are folded into the summand
// and the accumulated numerator is divided by D one binomial at a time.
LaurentPoly symmetrize_over_denominator(const LaurentPoly& numerator, Exec exec, std::size_t budget) {
  const std::size_t n = numerator.nvars();
  const auto& group = hyperoctahedral_group(n);
  if (numerator.term_count() * group.size() > budget) {
    throw ResourceError("symmetrization exceeds the term budget (" + std::to_string(budget) + ")");
  }
  const auto roots = positive_roots(n);

  std::vector<kernels::OrbitTerm> terms;
  terms.reserve(group.size());
  std::array<int, kMaxVars> image{};
  for (const auto& w : group) {
    kernels::OrbitTerm term{&w, 1, Exponent{}};
    for (const auto& beta : roots) {
      image.fill(0);
      w.act_on_exponent(std::span<const int>(beta.data(), n), std::span<int>(image.data(), n));
      if (is_negative_root(image, n)) {
        term.sign = -term.sign;
        for (std::size_t j = 0; j < n; ++j) term.shift[j] -= image[j];
      }
    }
    terms.push_back(term);
  }

  LaurentPoly accumulated = kernels::orbit_sum(numerator, terms, exec);
  for (const auto& beta : roots) accumulated = div_exact(accumulated, LaurentPoly::one_minus(n, beta));
  return accumulated;
}

void check_bounds(const Partition& lambda, const ConstructionBounds& bounds) {
  if (lambda.size() > bounds.max_n) {
    throw DomainError("construction bound exceeded: n = " + std::to_string(lambda.size()) + " > " +
                      std::to_string(bounds.max_n));
  }
  if (lambda.largest() > bounds.max_part) {
    throw DomainError("construction bound exceeded: part " + std::to_string(lambda.largest()) + " > " +
                      std::to_string(bounds.max_part));
  }
}

Exponent negated(const Partition& lambda) {
  Exponent e{};
  for (std::size_t j = 0; j < lambda.size(); ++j) e[j] = -lambda[j];
  return e;
}

HLPolynomial finish(const Partition& lambda, LaurentPoly poly, const ParamSet& params) {
  auto expansion = monomial_expansion(poly);
  const auto lead = expansion.find(lambda);
  if (lead == expansion.end() || lead->second != 1) {
    throw DomainError("constructed polynomial is not monic in m_lambda");
  }
  for (const auto& [mu, c] : expansion) {
    if (!dominance_leq(mu, lambda)) throw DomainError("constructed polynomial is not triangular");
  }
  return HLPolynomial{lambda, std::move(poly), std::move(expansion), norm_n(lambda, params), params};
}

}  // namespace

HLPolynomial hl_explicit(const Partition& lambda, const ParamSet& params, Exec exec, const ConstructionBounds& bounds) {
  check_bounds(lambda, bounds);
  const std::size_t n = lambda.size();
  const CFactorization cf = c_factor(lambda, params);

  LaurentPoly numerator = cf.numerator.shifted(negated(lambda));
  for (std::size_t j = 0; j < n; ++j) {
    if (lambda[j] != 0) continue;
    Exponent twice{};
    twice[j] = 2;
    numerator *= LaurentPoly::one_minus(n, twice);
  }
  LaurentPoly sum = symmetrize_over_denominator(numerator, exec, resource_budget());
  sum *= guarded_div(Rational(1), n_lambda_monic(lambda, params), "1/n_lambda");
  return finish(lambda, std::move(sum), params);
}

HLPolynomial macdonald_bc(const Partition& lambda, const ParamSet& params, Exec exec, const ConstructionBounds& bounds) {
  if (params.profile() != Profile::two) throw DomainError("macdonald_bc requires the two-parameter profile");
  check_bounds(lambda, bounds);
  const std::size_t n = lambda.size();

  LaurentPoly numerator = LaurentPoly::constant(n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      Exponent minus{}, plus{};
      minus[j] = 1;
      minus[k] = -1;
      plus[j] = 1;
      plus[k] = 1;
      numerator *= LaurentPoly::one_minus(n, minus, params.q());
      numerator *= LaurentPoly::one_minus(n, plus, params.q());
    }
    Exponent single{};
    single[j] = 1;
    numerator *= LaurentPoly::one_minus(n, single, params.t(1));
    numerator *= LaurentPoly::one_minus(n, single, params.t(2));
  }
  numerator = numerator.shifted(negated(lambda));
  LaurentPoly sum = symmetrize_over_denominator(numerator, exec, resource_budget());
  sum *= norm_n_two(lambda, params);
  return finish(lambda, std::move(sum), params);
}

GramSchmidtExpansion hl_gram_schmidt(const Partition& lambda, const ParamSet& params, const QuadratureSpec& quad) {
  if (lambda.size() > 3) throw DomainError("hl_gram_schmidt: n <= 3 required");
  if (quad.n != lambda.size()) throw DomainError("hl_gram_schmidt: quadrature dimension differs from n");

  std::vector<Partition> lower;
  for (auto& mu : lower_set(lambda)) {
    if (mu != lambda) lower.push_back(std::move(mu));
  }
  GramSchmidtExpansion out;
  out.coefficients.emplace(lambda, 1.0);
  if (lower.empty()) return out;

  std::vector<LaurentPoly> basis;
  for (const auto& mu : lower) basis.push_back(monomial_symmetric(mu));
  basis.push_back(monomial_symmetric(lambda));
  const auto gram = gram_matrix(basis, params, quad).matrix;

  const auto k = static_cast<Eigen::Index>(lower.size());
  Eigen::MatrixXcd system(k, k);
  Eigen::VectorXcd rhs(k);
  for (Eigen::Index nu = 0; nu < k; ++nu) {
    for (Eigen::Index mu = 0; mu < k; ++mu) system(nu, mu) = gram(mu, nu);
    rhs(nu) = -gram(k, nu);
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system);
  const auto& sv = svd.singularValues();
  out.condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
  if (out.condition > 1e12) {
    throw ConditioningError("Gram matrix condition estimate " + std::to_string(out.condition) + " exceeds 1e12");
  }
  const Eigen::VectorXcd c = system.colPivHouseholderQr().solve(rhs);
  for (Eigen::Index i = 0; i < k; ++i) out.coefficients.emplace(lower[static_cast<std::size_t>(i)], c(i));
  return out;
}

LaurentPoly normalized_p(const HLPolynomial& hl) { return hl.poly * c_lambda(hl.lambda, hl.params); }

Rational principal_specialization(const HLPolynomial& hl) {
  const auto tau = tau_vector(hl.lambda.size(), hl.params);
  return evaluate_exact(hl.poly, tau);
}

const HLPolynomial& HLCache::get(const Partition& lambda) {
  if (auto it = cache_.find(lambda); it != cache_.end()) return it->second;
  return cache_.emplace(lambda, hl_explicit(lambda, params_, exec_, bounds_)).first->second;
}

LaurentPoly pieri_residual(const Partition& lambda, HLCache& cache) {
  const ParamSet& params = cache.params();
  const std::size_t n = lambda.size();
  const auto tau = tau_vector(n, params);

  LaurentPoly spectral(n);
  for (std::size_t j = 0; j < n; ++j) {
    spectral += LaurentPoly::variable(n, j, 1);
    spectral += LaurentPoly::variable(n, j, -1);
    spectral -= LaurentPoly::constant(n, tau[j] + 1 / tau[j]);
  }
  const LaurentPoly p_lambda = normalized_p(cache.get(lambda));
  LaurentPoly residual = p_lambda * spectral;
  for (std::size_t j = 0; j < n; ++j) {
    if (can_raise(lambda, j)) {
      const Rational v = pieri_v(lambda, j, Step::up, params);
      residual -= (normalized_p(cache.get(raised(lambda, j))) - p_lambda) * v;
    }
    if (can_lower(lambda, j)) {
      const Rational v = pieri_v(lambda, j, Step::down, params);
      residual -= (normalized_p(cache.get(lowered(lambda, j))) - p_lambda) * v;
    }
  }
  return residual;
}

LaurentPoly pieri_residual(const Partition& lambda, const ParamSet& params) {
  HLCache cache(params);
  return pieri_residual(lambda, cache);
}

}  // namespace octaboson
