#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "octaboson/exec.hpp"
#include "octaboson/qkernels.hpp"
#include "octaboson/report.hpp"

namespace octaboson {

/// Inputs shared by the verification suites.  points_per_dim = 0 selects the default rule.
struct SuiteConfig {
  std::size_t n = 2;
  int max_part = 3;
  int max_site = 5;
  ParamSet params = ParamSet::defaults();
  int points_per_dim = 0;
  std::uint64_t seed = 1;
  int samples = 20;
  std::string relation = "all";
  Exec exec = Exec::parallel;
};

/// One entry <p_lambda, p_mu> of an orthogonality run; expected is N_lambda on the diagonal, else 0.
struct OrthogonalityPair {
  Partition lambda;
  Partition mu;
  std::complex<double> value;
  Rational expected;
  double abs_err = 0.0;
};

struct OrthogonalityTable {
  std::size_t n = 0;
  int points_per_dim = 0;
  std::vector<OrthogonalityPair> pairs;
};

/// Pairs lambda <= mu (enumeration order) of enumerate(n, max_part).
OrthogonalityTable orthogonality_table(const SuiteConfig& config);

std::vector<std::string> suite_names();
/// Dispatches on one of suite_names(); DomainError for anything else.
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);

/// Off-diagonal |<p_lambda, p_mu>| and relative N_lambda deviations from orthogonality_table, 1e-8.
VerificationReport orthogonality_suite(const SuiteConfig& config);
VerificationReport orthogonality_report(const OrthogonalityTable& table, const SuiteConfig& config);
/// Single pair <p_lambda, p_mu> under the quadrature rule of the config, with its own tolerance.
VerificationReport orthogonality_pair(const Partition& lambda, const Partition& mu, const SuiteConfig& config,
                                      double tolerance);
/// Principal specialization p_lambda(tau) = 1/c_lambda and c_lambda N_lambda = h_lambda, exact.
VerificationReport norms_suite(const SuiteConfig& config);
/// Pieri residual for every lambda in enumerate(n, max_part), exact.
VerificationReport pieri_suite(const SuiteConfig& config);
/// Relation families for sectors 0..n, l, k <= max_site, plus the ultralocality witness cases.
VerificationReport algebra_suite(const SuiteConfig& config);
/// Adjointness of beta_l / beta_l^*, symmetry of H_n and operator-assembled H, exact.
VerificationReport adjoint_suite(const SuiteConfig& config);
/// Eigenvalue residuals at `samples` random xi per sector 1..n.
VerificationReport eigen_suite(const SuiteConfig& config);
/// Four-parameter displays at vanishing couplings against the reduced displays, exact.
VerificationReport degeneration_suite(const SuiteConfig& config);
/// Unimodularity of s, s0 and S at `samples` random points, 1e-12.
VerificationReport scattering_suite(const SuiteConfig& config);

/// hl_explicit against macdonald_bc for lambda in enumerate(n, max_part) (couplings t3, t4 dropped).
VerificationReport macdonald_suite(const SuiteConfig& config);
/// hl_explicit against hl_gram_schmidt coefficients, 1e-8.
VerificationReport cross_route_suite(const SuiteConfig& config);

std::string partition_label(const Partition& lambda);

}  // namespace octaboson
