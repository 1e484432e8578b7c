#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "octaboson/partitions.hpp"
#include "octaboson/rational.hpp"

namespace octaboson {

/// Which family of closed forms applies: all four boundary couplings, t4 = 0, or t3 = t4 = 0.
enum class Profile { four, three, two };

std::string to_string(Profile profile);
Profile parse_profile(const std::string& text);

/// Whether a four-parameter set may carry vanishing couplings (used for degeneration checks).
enum class ZeroPolicy { reject, allow };

/// Exact values of (q, t1..t4).  Construction validates the domain 0 < q < 1, -1 < t_r < 1,
/// the zero pattern of the profile, and the genericity guards up to the default horizon.
class ParamSet {
 public:
  ParamSet(Rational q, std::array<Rational, 4> t, Profile profile = Profile::four,
           ZeroPolicy zeros = ZeroPolicy::reject);

  /// q = 1/2, t = (1/3, -1/4, 1/5, -1/6), reduced by zeroing t4 (three) or t3, t4 (two).
  static ParamSet defaults(Profile profile = Profile::four);

  const Rational& q() const noexcept { return q_; }
  /// Coupling t_r for r = 1..4.
  const Rational& t(int r) const { return t_.at(static_cast<std::size_t>(r - 1)); }
  const std::array<Rational, 4>& couplings() const noexcept { return t_; }
  /// t = t1 t2 t3 t4
  const Rational& t_product() const noexcept { return t_product_; }
  Profile profile() const noexcept { return profile_; }

  /// Same values, different formula family.  Used to compare four-parameter formulas at
  /// vanishing couplings with the reduced displays.
  ParamSet with_profile(Profile profile) const;

  /// Rejects t q^k = 1 and t_r t_s q^k = 1 for |k| <= horizon, and t = q^m for m = 1..horizon.
  void check_guards(int horizon) const;

  /// Horizon covering every denominator exponent at sector size n with parts <= max_part.
  static int guard_horizon(std::size_t n, int max_part) { return 2 * static_cast<int>(n) + max_part + 3; }

  bool operator==(const ParamSet&) const = default;

 private:
  Rational q_;
  std::array<Rational, 4> t_;
  Rational t_product_;
  Profile profile_;
};

/// Direction of a unit step lambda -> lambda +- e_j.
enum class Step { up, down };

/// (x)_m = prod_{k<m} (1 - x q^k)
Rational q_pochhammer(const Rational& x, int m, const Rational& q);
/// [m] = (1 - q^m) / (1 - q)
Rational q_integer(int m, const Rational& q);

/// tau_j = q^{n-j} t1 for j = 1..n.
std::vector<Rational> tau_vector(std::size_t n, const ParamSet& params);

/// Quadratic norm N_lambda with the formula family selected by the profile.
Rational norm_n(const Partition& lambda, const ParamSet& params);
/// The individual displays, callable regardless of profile.
Rational norm_n_four(const Partition& lambda, const ParamSet& params);
Rational norm_n_three(const Partition& lambda, const ParamSet& params);
Rational norm_n_two(const Partition& lambda, const ParamSet& params);

/// Monic normalizer n_lambda of the explicit symmetrization formula.
Rational n_lambda_monic(const Partition& lambda, const ParamSet& params);
/// P_lambda = c_lambda p_lambda
Rational c_lambda(const Partition& lambda, const ParamSet& params);
/// Closed form of c_lambda N_lambda (tau powers times Pochhammer ratio times N_0).
Rational h_lambda(const Partition& lambda, const ParamSet& params);

/// Pieri coefficient V_j^{+-}(lambda); j is 0-based.
Rational pieri_v(const Partition& lambda, std::size_t j, Step step, const ParamSet& params);

/// Hopping coefficient v_j^{+-}(lambda) of H_n, profile aware.
Rational hamiltonian_v(const Partition& lambda, std::size_t j, Step step, const ParamSet& params);
Rational hamiltonian_v_four(const Partition& lambda, std::size_t j, Step step, const ParamSet& params);
Rational hamiltonian_v_three(const Partition& lambda, std::size_t j, Step step, const ParamSet& params);
Rational hamiltonian_v_two(const Partition& lambda, std::size_t j, Step step, const ParamSet& params);

/// V(q^{m0}, q^{m1}), profile aware.
Rational boundary_potential(int m0, int m1, const ParamSet& params);
Rational boundary_potential_four(int m0, int m1, const ParamSet& params);
Rational boundary_potential_three(int m0, int m1, const ParamSet& params);
Rational boundary_potential_two(int m0, int m1, const ParamSet& params);

/// Quotient that raises GenericityError (naming `what`) when the denominator vanishes.
Rational guarded_div(const Rational& num, const Rational& den, const char* what);

}  // namespace octaboson
