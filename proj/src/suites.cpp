#include "octaboson/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "octaboson/errors.hpp"
#include "octaboson/hallittlewood.hpp"
#include "octaboson/qboson.hpp"
#include "octaboson/torus.hpp"

namespace octaboson {

std::string partition_label(const Partition& lambda) {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < lambda.size(); ++j) os << (j ? "," : "") << lambda[j];
  os << ")";
  return os.str();
}

namespace {

VerificationReport start(const std::string& name, const SuiteConfig& config, double tolerance = 0.0) {
  VerificationReport report;
  report.relation = name;
  report.n = static_cast<int>(config.n);
  report.max_part = config.max_part;
  report.tolerance = tolerance;
  if (tolerance > 0) report.mode = "float";
  return report;
}

QuadratureSpec quadrature_for(std::size_t n, const SuiteConfig& config) {
  QuadratureSpec spec = default_quadrature(n);
  if (config.points_per_dim > 0) spec.points_per_dim = config.points_per_dim;
  return spec;
}

Rational max_coefficient(const LaurentPoly& p) {
  Rational worst = 0;
  for (const auto& [e, c] : p.terms()) worst = std::max(worst, Rational(abs(c)));
  return worst;
}

std::string sector_label(const char* what, std::size_t n) { return std::string(what) + ",n=" + std::to_string(n); }

std::vector<double> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
  std::vector<double> xi(n);
  for (auto& x : xi) x = dist(rng);
  return xi;
}

ParamSet reduced_params(const ParamSet& params, Profile profile) {
  auto t = params.couplings();
  if (profile != Profile::four) t[3] = 0;
  if (profile == Profile::two) t[2] = 0;
  return ParamSet(params.q(), t, profile);
}

bool is_exchange(RelationId id) {
  return id == RelationId::d1 || id == RelationId::d2 || id == RelationId::e1 || id == RelationId::e2;
}

void run_relations(VerificationReport& report, const std::vector<RelationId>& ids, const SuiteConfig& config,
                   const ParamSet& params, Twist twist, const std::string& prefix) {
  for (RelationId id : ids) {
    for (std::size_t n = 0; n <= config.n; ++n) {
      for (int l = 0; l <= config.max_site; ++l) {
        for (int k = 0; k <= config.max_site; ++k) {
          if (is_exchange(id) && !(l < k)) continue;
          const auto r = verify_relation(id, l, k, n, config.max_part, params, twist);
          for (const auto& c : r.cases) {
            report.record_exact(prefix + to_string(id) + "," + c.label, parse_rational(c.residual));
          }
        }
      }
    }
  }
}

/// Records the largest |a - b| over a sweep of exact comparisons.
class ExactSweep {
 public:
  void compare(const Rational& a, const Rational& b) { worst_ = std::max(worst_, Rational(abs(a - b))); }
  const Rational& worst() const noexcept { return worst_; }

 private:
  Rational worst_ = 0;
};

void compare_displays(VerificationReport& report, const std::string& tag, const SuiteConfig& config,
                      const ParamSet& full, const ParamSet& reduced,
                      const std::function<Rational(const Partition&, const ParamSet&)>& norm_full,
                      const std::function<Rational(const Partition&, const ParamSet&)>& norm_reduced,
                      const std::function<Rational(const Partition&, std::size_t, Step, const ParamSet&)>& v_full,
                      const std::function<Rational(const Partition&, std::size_t, Step, const ParamSet&)>& v_reduced,
                      const std::function<Rational(int, int, const ParamSet&)>& pot_full,
                      const std::function<Rational(int, int, const ParamSet&)>& pot_reduced,
                      const std::function<Rational(int, const Partition&, const ParamSet&)>& cr_full,
                      const std::function<Rational(int, const Partition&, const ParamSet&)>& cr_reduced) {
  for (std::size_t n = 0; n <= config.n; ++n) {
    ExactSweep norms, hops, potential, creation, annihilation;
    for (const auto& lambda : enumerate_partitions(n, config.max_part)) {
      norms.compare(norm_full(lambda, full), norm_reduced(lambda, reduced));
      const int m0 = multiplicity(lambda, 0);
      const int m1 = multiplicity(lambda, 1);
      potential.compare(pot_full(m0, m1, full), pot_reduced(m0, m1, reduced));
      for (std::size_t j = 0; j < n; ++j) {
        if (can_raise(lambda, j)) hops.compare(v_full(lambda, j, Step::up, full), v_reduced(lambda, j, Step::up, reduced));
        if (can_lower(lambda, j)) {
          hops.compare(v_full(lambda, j, Step::down, full), v_reduced(lambda, j, Step::down, reduced));
        }
      }
      for (int l = 0; l <= config.max_part; ++l) {
        creation.compare(cr_full(l, lambda, full), cr_reduced(l, lambda, reduced));
        annihilation.compare(annihilation_coefficient_four(l, lambda, full),
                             annihilation_coefficient_reduced(l, lambda, reduced));
      }
    }
    report.record_exact(tag + sector_label(",norm", n), norms.worst());
    report.record_exact(tag + sector_label(",potential", n), potential.worst());
    report.record_exact(tag + sector_label(",hopping", n), hops.worst());
    report.record_exact(tag + sector_label(",creation", n), creation.worst());
    report.record_exact(tag + sector_label(",annihilation", n), annihilation.worst());
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"orthogonality", "norms", "pieri", "algebra", "adjoint", "eigen", "degeneration", "scattering"};
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "orthogonality") return orthogonality_suite(config);
  if (name == "norms") return norms_suite(config);
  if (name == "pieri") return pieri_suite(config);
  if (name == "algebra") return algebra_suite(config);
  if (name == "adjoint") return adjoint_suite(config);
  if (name == "eigen") return eigen_suite(config);
  if (name == "degeneration") return degeneration_suite(config);
  if (name == "scattering") return scattering_suite(config);
  throw DomainError("unknown suite '" + name + "'");
}

OrthogonalityTable orthogonality_table(const SuiteConfig& config) {
  const auto quad = quadrature_for(config.n, config);
  quad.validate();
  HLCache cache(config.params, config.exec);
  const auto lambdas = enumerate_partitions(config.n, config.max_part);
  std::vector<LaurentPoly> basis;
  for (const auto& lambda : lambdas) basis.push_back(cache.get(lambda).poly);
  const auto gram = gram_matrix(basis, config.params, quad, Weight::delta, config.exec);
  OrthogonalityTable table{config.n, quad.points_per_dim, {}};
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    for (std::size_t j = i; j < lambdas.size(); ++j) {
      const auto value = gram.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      const Rational expected = i == j ? cache.get(lambdas[i]).norm : Rational(0);
      table.pairs.push_back({lambdas[i], lambdas[j], value, expected, std::abs(value - expected.get_d())});
    }
  }
  return table;
}

VerificationReport orthogonality_suite(const SuiteConfig& config) {
  return orthogonality_report(orthogonality_table(config), config);
}

VerificationReport orthogonality_report(const OrthogonalityTable& table, const SuiteConfig& config) {
  auto report = start("orthogonality", config, 1e-8);
  for (const auto& pair : table.pairs) {
    double residual = pair.abs_err;
    if (pair.lambda == pair.mu) residual /= 1.0 + std::abs(pair.expected.get_d());
    report.record_float("lambda=" + partition_label(pair.lambda) + ";mu=" + partition_label(pair.mu), residual);
  }
  return report;
}

VerificationReport orthogonality_pair(const Partition& lambda, const Partition& mu, const SuiteConfig& config,
                                      double tolerance) {
  if (lambda.size() != mu.size()) throw DomainError("orthogonality_pair: partitions of different length");
  auto report = start("orthogonality", config, tolerance);
  report.n = static_cast<int>(lambda.size());
  const auto quad = quadrature_for(lambda.size(), config);
  HLCache cache(config.params, config.exec);
  const auto value =
      inner_product(cache.get(lambda).poly, cache.get(mu).poly, config.params, quad, Weight::delta, config.exec);
  report.record_float("lambda=" + partition_label(lambda) + ";mu=" + partition_label(mu), std::abs(value));
  return report;
}

VerificationReport norms_suite(const SuiteConfig& config) {
  auto report = start("norms", config);
  HLCache cache(config.params, config.exec);
  for (const auto& lambda : enumerate_partitions(config.n, config.max_part)) {
    const auto& hl = cache.get(lambda);
    const Rational c = c_lambda(lambda, config.params);
    report.record_exact("specialization,lambda=" + partition_label(lambda), principal_specialization(hl) - 1 / c);
    report.record_exact("closed-form,lambda=" + partition_label(lambda), c * hl.norm - h_lambda(lambda, config.params));
  }
  return report;
}

VerificationReport pieri_suite(const SuiteConfig& config) {
  auto report = start("pieri", config);
  HLCache cache(config.params, config.exec);
  for (const auto& lambda : enumerate_partitions(config.n, config.max_part)) {
    report.record_exact("lambda=" + partition_label(lambda), max_coefficient(pieri_residual(lambda, cache)));
  }
  return report;
}

VerificationReport algebra_suite(const SuiteConfig& config) {
  auto report = start(config.relation == "all" ? "algebra" : config.relation, config);
  const auto ids = relation_family(config.relation);
  run_relations(report, ids, config, config.params, Twist::included, "");

  const bool has_d1 = std::find(ids.begin(), ids.end(), RelationId::d1) != ids.end();
  if (has_d1 && config.params.profile() == Profile::four) {
    const std::size_t n = std::max<std::size_t>(config.n, 2);
    const auto witness = verify_relation(RelationId::d1, 0, 1, n, config.max_part, config.params, Twist::omitted);
    report.record_exact("untwisted com-d1,l=0,k=1,n=" + std::to_string(n),
                        parse_rational(witness.cases.front().residual), true);

    std::vector<RelationId> exchange;
    for (RelationId id : ids) {
      if (is_exchange(id)) exchange.push_back(id);
    }
    run_relations(report, exchange, config, reduced_params(config.params, Profile::three), Twist::omitted,
                  "t4=0 untwisted ");
    run_relations(report, exchange, config, reduced_params(config.params, Profile::three).with_profile(Profile::four),
                  Twist::omitted, "t4=0 four-display untwisted ");
  }
  return report;
}

VerificationReport adjoint_suite(const SuiteConfig& config) {
  auto report = start("adjoint", config);
  const ParamSet& params = config.params;
  for (std::size_t n = 0; n <= config.n; ++n) {
    const auto lower = enumerate_partitions(n, config.max_part);
    const auto upper = enumerate_partitions(n + 1, config.max_part);
    for (int l = 0; l <= config.max_part; ++l) {
      ExactSweep sweep;
      for (const auto& mu : lower) {
        const auto created = create(l, ExactFunction::delta(mu), params);
        for (const auto& nu : upper) {
          const auto g = ExactFunction::delta(nu);
          sweep.compare(sector_inner_product(created, g, params),
                        sector_inner_product(ExactFunction::delta(mu), annihilate(l, g, params), params));
        }
      }
      report.record_exact("adjoint,l=" + std::to_string(l) + ",n=" + std::to_string(n), sweep.worst());
    }
    ExactSweep symmetry;
    ExactSweep assembly;
    for (const auto& mu : lower) {
      const auto f = ExactFunction::delta(mu);
      const auto hf = apply_hamiltonian(f, params);
      const auto diff = hf - apply_hamiltonian_via_operators(f, params);
      for (const auto& [lambda, v] : diff.values()) assembly.compare(v, 0);
      for (const auto& nu : lower) {
        const auto g = ExactFunction::delta(nu);
        symmetry.compare(sector_inner_product(hf, g, params),
                         sector_inner_product(f, apply_hamiltonian(g, params), params));
      }
    }
    report.record_exact(sector_label("symmetry", n), symmetry.worst());
    report.record_exact(sector_label("assembly", n), assembly.worst());
  }
  return report;
}

VerificationReport eigen_suite(const SuiteConfig& config) {
  auto report = start("eigen", config, 1e-10);
  HLCache cache(config.params, config.exec);
  std::mt19937_64 rng(config.seed);
  for (std::size_t n = 1; n <= config.n; ++n) {
    const auto lambdas = enumerate_partitions(n, config.max_part);
    for (int s = 0; s < config.samples; ++s) {
      const auto xi = random_point(rng, n);
      const auto r = eigen_residual(xi, lambdas, cache);
      double worst = 0;
      for (const auto& c : r.cases) worst = std::max(worst, std::stod(c.residual));
      report.record_float("n=" + std::to_string(n) + ",sample=" + std::to_string(s), worst);
    }
  }
  return report;
}

VerificationReport degeneration_suite(const SuiteConfig& config) {
  auto report = start("degeneration", config);
  const ParamSet four_t4 = reduced_params(config.params, Profile::three).with_profile(Profile::four);
  const ParamSet three = reduced_params(config.params, Profile::three);
  compare_displays(report, "four->three", config, four_t4, three, norm_n_four, norm_n_three, hamiltonian_v_four,
                   hamiltonian_v_three, boundary_potential_four, boundary_potential_three, creation_coefficient_four,
                   creation_coefficient_three);

  const ParamSet four_t34 = reduced_params(config.params, Profile::two).with_profile(Profile::four);
  const ParamSet two = reduced_params(config.params, Profile::two);
  compare_displays(report, "four->two", config, four_t34, two, norm_n_four, norm_n_two, hamiltonian_v_four,
                   hamiltonian_v_two, boundary_potential_four, boundary_potential_two, creation_coefficient_four,
                   creation_coefficient_two);

  const ParamSet three_t3 = two.with_profile(Profile::three);
  compare_displays(report, "three->two", config, three_t3, two, norm_n_three, norm_n_two, hamiltonian_v_three,
                   hamiltonian_v_two, boundary_potential_three, boundary_potential_two, creation_coefficient_three,
                   creation_coefficient_two);
  return report;
}

VerificationReport scattering_suite(const SuiteConfig& config) {
  auto report = start("scattering", config, 1e-12);
  std::mt19937_64 rng(config.seed);
  const int samples = std::max(config.samples, 1);
  for (int s = 0; s < samples; ++s) {
    const double x = random_point(rng, 1).front();
    const auto [bulk, boundary] = scattering_factors(x, config.params);
    report.record_float("s,sample=" + std::to_string(s), std::abs(std::abs(bulk) - 1.0));
    report.record_float("s0,sample=" + std::to_string(s), std::abs(std::abs(boundary) - 1.0));
    for (std::size_t n = 1; n <= config.n; ++n) {
      const auto xi = random_point(rng, n);
      report.record_float("S,n=" + std::to_string(n) + ",sample=" + std::to_string(s),
                          std::abs(std::abs(scattering_matrix(xi, config.params)) - 1.0));
    }
  }
  return report;
}

VerificationReport macdonald_suite(const SuiteConfig& config) {
  auto report = start("macdonald", config);
  const ParamSet two = reduced_params(config.params, Profile::two);
  for (const auto& lambda : enumerate_partitions(config.n, config.max_part)) {
    const auto ours = hl_explicit(lambda, two, config.exec);
    const auto theirs = macdonald_bc(lambda, two, config.exec);
    report.record_exact("lambda=" + partition_label(lambda), max_coefficient(ours.poly - theirs.poly));
  }
  return report;
}

VerificationReport cross_route_suite(const SuiteConfig& config) {
  auto report = start("cross-route", config, 1e-8);
  HLCache cache(config.params, config.exec);
  const auto quad = quadrature_for(config.n, config);
  for (const auto& lambda : enumerate_partitions(config.n, config.max_part)) {
    const auto numeric = hl_gram_schmidt(lambda, config.params, quad);
    const auto& exact = cache.get(lambda).expansion;
    double worst = 0;
    for (const auto& mu : lower_set(lambda)) {
      auto e = exact.find(mu);
      auto g = numeric.coefficients.find(mu);
      const Complex a = e == exact.end() ? Complex{} : Complex{e->second.get_d(), 0.0};
      const Complex b = g == numeric.coefficients.end() ? Complex{} : g->second;
      worst = std::max(worst, std::abs(a - b));
    }
    report.record_float("lambda=" + partition_label(lambda), worst);
  }
  return report;
}

}  // namespace octaboson
