#include "octaboson/qkernels.hpp"

#include <map>

#include "octaboson/errors.hpp"

namespace octaboson {

std::string to_string(Profile profile) {
  switch (profile) {
    case Profile::four: return "four";
    case Profile::three: return "three";
    case Profile::two: return "two";
  }
  return "four";
}

Profile parse_profile(const std::string& text) {
  if (text == "four") return Profile::four;
  if (text == "three") return Profile::three;
  if (text == "two") return Profile::two;
  throw DomainError("unknown profile '" + text + "' (expected four, three or two)");
}

namespace {

// The default horizon covers sectors up to n = 4 with parts up to 6.
constexpr int kDefaultHorizon = 2 * 4 + 6 + 3;

}  // namespace

ParamSet::ParamSet(Rational q, std::array<Rational, 4> t, Profile profile, ZeroPolicy zeros)
    : q_(std::move(q)), t_(std::move(t)), profile_(profile) {
  q_.canonicalize();
  if (!(q_ > 0 && q_ < 1)) throw GenericityError("q must lie in (0,1)");
  for (int r = 0; r < 4; ++r) {
    t_[r].canonicalize();
    if (!(t_[r] > -1 && t_[r] < 1)) throw GenericityError("t_r must lie in (-1,1)");
  }
  const int required_nonzero = profile == Profile::four ? 4 : profile == Profile::three ? 3 : 2;
  for (int r = 0; r < 4; ++r) {
    if (r >= required_nonzero) {
      if (t_[r] != 0) {
        throw DomainError("profile " + to_string(profile) + " requires t" + std::to_string(r + 1) + " = 0");
      }
    } else if (t_[r] == 0 && (r == 0 || zeros == ZeroPolicy::reject)) {
      throw GenericityError("t" + std::to_string(r + 1) + " must be nonzero");
    }
  }
  t_product_ = t_[0] * t_[1] * t_[2] * t_[3];
  check_guards(kDefaultHorizon);
}

ParamSet ParamSet::defaults(Profile profile) {
  std::array<Rational, 4> t{Rational(1, 3), Rational(-1, 4), Rational(1, 5), Rational(-1, 6)};
  if (profile != Profile::four) t[3] = 0;
  if (profile == Profile::two) t[2] = 0;
  return ParamSet(Rational(1, 2), t, profile);
}

ParamSet ParamSet::with_profile(Profile profile) const {
  return ParamSet(q_, t_, profile, ZeroPolicy::allow);
}

void ParamSet::check_guards(int horizon) const {
  std::vector<Rational> products{t_product_};
  for (int r = 0; r < 4; ++r) {
    for (int s = r + 1; s < 4; ++s) products.push_back(t_[r] * t_[s]);
  }
  for (int r = 1; r < 4; ++r) products.push_back(t_[0] * t_[r]);
  for (int k = -horizon; k <= horizon; ++k) {
    const Rational qk = pow(q_, k);
    for (const auto& p : products) {
      if (p * qk == 1) {
        throw GenericityError("parameters hit a vanishing denominator (product * q^" + std::to_string(k) +
                              " = 1)");
      }
    }
  }
}

Rational guarded_div(const Rational& num, const Rational& den, const char* what) {
  if (den == 0) throw GenericityError(std::string("vanishing denominator in ") + what);
  return num / den;
}

Rational q_pochhammer(const Rational& x, int m, const Rational& q) {
  if (m < 0) throw DomainError("q_pochhammer: negative length");
  Rational out = 1;
  Rational power = 1;
  for (int k = 0; k < m; ++k) {
    out *= 1 - x * power;
    power *= q;
  }
  return out;
}

Rational q_integer(int m, const Rational& q) {
  if (m < 0) throw DomainError("q_integer: negative argument");
  return guarded_div(1 - pow(q, m), 1 - q, "q-integer");
}

std::vector<Rational> tau_vector(std::size_t n, const ParamSet& params) {
  std::vector<Rational> tau(n);
  for (std::size_t j = 0; j < n; ++j) tau[j] = pow(params.q(), static_cast<int>(n - j - 1)) * params.t(1);
  return tau;
}

namespace {

struct Counts {
  int n;
  int m0;
  int m1;
  std::map<int, int> all;
};

Counts counts(const Partition& lambda) {
  Counts c{static_cast<int>(lambda.size()), 0, 0, {}};
  for (int part : lambda.parts()) ++c.all[part];
  c.m0 = c.all.count(0) ? c.all[0] : 0;
  c.m1 = c.all.count(1) ? c.all[1] : 0;
  return c;
}

Rational prod_q_factorials(const Counts& c, const Rational& q) {
  Rational out = 1;
  for (const auto& [part, m] : c.all) out *= q_pochhammer(q, m, q);
  return out;
}

Rational tau_power(const Partition& lambda, const ParamSet& params) {
  const auto tau = tau_vector(lambda.size(), params);
  Rational out = 1;
  for (std::size_t j = 0; j < lambda.size(); ++j) out *= pow(tau[j], lambda[j]);
  return out;
}

int delta(int value) { return value == 0 ? 1 : 0; }

Rational powi(const Rational& base, int e) { return e == 0 ? Rational(1) : pow(base, e); }

}  // namespace

Rational norm_n_four(const Partition& lambda, const ParamSet& params) {
  const Counts c = counts(lambda);
  const Rational& q = params.q();
  const Rational& t = params.t_product();
  Rational den = q_pochhammer(t * pow(q, 2 * c.m0), c.m1, q) * prod_q_factorials(c, q);
  for (int r = 1; r <= 4; ++r) {
    for (int s = r + 1; s <= 4; ++s) den *= q_pochhammer(params.t(r) * params.t(s), c.m0, q);
  }
  const Rational num = pow(1 - q, c.n) * q_pochhammer(t * pow(q, c.m0 - 1), c.m0, q);
  return guarded_div(num, den, "norm N_lambda");
}

Rational norm_n_three(const Partition& lambda, const ParamSet& params) {
  const Counts c = counts(lambda);
  const Rational& q = params.q();
  Rational den = prod_q_factorials(c, q);
  for (int r = 1; r <= 3; ++r) {
    for (int s = r + 1; s <= 3; ++s) den *= q_pochhammer(params.t(r) * params.t(s), c.m0, q);
  }
  return guarded_div(pow(1 - q, c.n), den, "norm N_lambda (three-parameter)");
}

Rational norm_n_two(const Partition& lambda, const ParamSet& params) {
  const Counts c = counts(lambda);
  const Rational& q = params.q();
  const Rational den = q_pochhammer(params.t(1) * params.t(2), c.m0, q) * prod_q_factorials(c, q);
  return guarded_div(pow(1 - q, c.n), den, "norm N_lambda (two-parameter)");
}

Rational norm_n(const Partition& lambda, const ParamSet& params) {
  switch (params.profile()) {
    case Profile::four: return norm_n_four(lambda, params);
    case Profile::three: return norm_n_three(lambda, params);
    case Profile::two: return norm_n_two(lambda, params);
  }
  return norm_n_four(lambda, params);
}

Rational n_lambda_monic(const Partition& lambda, const ParamSet& params) {
  const Counts c = counts(lambda);
  const Rational& q = params.q();
  const Rational num = q_pochhammer(Rational(-1), c.m0, q) *
                       q_pochhammer(params.t_product() * pow(q, 2 * c.m0), c.m1, q) * prod_q_factorials(c, q);
  return guarded_div(num, pow(1 - q, c.n), "n_lambda");
}

Rational c_lambda(const Partition& lambda, const ParamSet& params) {
  const Counts c = counts(lambda);
  const Rational& q = params.q();
  const Rational num =
      tau_power(lambda, params) * q_pochhammer(params.t_product() * pow(q, 2 * c.m0), c.m1, q) * prod_q_factorials(c, q);
  Rational den = q_pochhammer(q, c.n, q);
  for (int r = 2; r <= 4; ++r) den *= q_pochhammer(params.t(1) * params.t(r) * pow(q, c.m0), c.n - c.m0, q);
  return guarded_div(num, den, "c_lambda");
}

Rational h_lambda(const Partition& lambda, const ParamSet& params) {
  const Counts c = counts(lambda);
  const Rational& q = params.q();
  const Rational& t = params.t_product();
  Rational num = tau_power(lambda, params) * q_pochhammer(t * pow(q, c.m0 - 1), c.m0, q);
  for (int r = 2; r <= 4; ++r) {
    for (int s = r + 1; s <= 4; ++s) {
      num *= q_pochhammer(params.t(r) * params.t(s) * pow(q, c.m0), c.n - c.m0, q);
    }
  }
  const Rational den = q_pochhammer(t * pow(q, c.n - 1), c.n, q);
  return guarded_div(num, den, "h_lambda") * norm_n(Partition::zero(lambda.size()), params);
}

namespace {

void check_step(const Partition& lambda, std::size_t j, Step step) {
  const bool ok = step == Step::up ? can_raise(lambda, j) : can_lower(lambda, j);
  if (!ok) throw PreconditionError("unit step leaves the set of partitions");
}

}  // namespace

Rational pieri_v(const Partition& lambda, std::size_t j, Step step, const ParamSet& params) {
  check_step(lambda, j, step);
  const Counts c = counts(lambda);
  const Rational& q = params.q();
  const Rational& t = params.t_product();
  const Rational tau_j = pow(q, c.n - static_cast<int>(j) - 1) * params.t(1);
  const int part = lambda[j];
  const Rational mult = q_integer(multiplicity(lambda, part), q);

  if (step == Step::up) {
    Rational v = guarded_div(mult, tau_j, "V_j^+");
    v *= powi(1 - t * pow(q, 2 * c.m0 + c.m1 - 1), delta(part - 1) + delta(part));
    if (part == 0) {
      Rational num = 1;
      for (int r = 2; r <= 4; ++r) num *= 1 - params.t(1) * params.t(r) * pow(q, c.m0 - 1);
      const Rational den = (1 - t * pow(q, 2 * c.m0 - 2)) * (1 - t * pow(q, 2 * c.m0 - 1));
      v *= guarded_div(num, den, "V_j^+ boundary factor");
    }
    return v;
  }
  Rational v = tau_j * mult;
  if (part == 1) {
    Rational num = 1 - t * pow(q, c.m0 - 1);
    for (int r = 2; r <= 4; ++r) {
      for (int s = r + 1; s <= 4; ++s) num *= 1 - params.t(r) * params.t(s) * pow(q, c.m0);
    }
    const Rational den = (1 - t * pow(q, 2 * c.m0 - 1)) * (1 - t * pow(q, 2 * c.m0));
    v *= guarded_div(num, den, "V_j^- boundary factor");
  }
  return v;
}

Rational hamiltonian_v_four(const Partition& lambda, std::size_t j, Step step, const ParamSet& params) {
  check_step(lambda, j, step);
  const Counts c = counts(lambda);
  const Rational& q = params.q();
  const Rational& t = params.t_product();
  const int part = lambda[j];
  Rational v = q_integer(multiplicity(lambda, part), q);
  if (step == Step::down) return v;

  v *= powi(1 - t * pow(q, 2 * c.m0 + c.m1 - 1), delta(part - 1) + delta(part));
  if (part == 0) {
    Rational num = 1 - t * pow(q, c.m0 - 2);
    for (int r = 1; r <= 4; ++r) {
      for (int s = r + 1; s <= 4; ++s) num *= 1 - params.t(r) * params.t(s) * pow(q, c.m0 - 1);
    }
    const Rational middle = 1 - t * pow(q, 2 * c.m0 - 2);
    const Rational den = (1 - t * pow(q, 2 * c.m0 - 3)) * middle * middle * (1 - t * pow(q, 2 * c.m0 - 1));
    v *= guarded_div(num, den, "v_j^+ boundary factor");
  }
  return v;
}

Rational hamiltonian_v_three(const Partition& lambda, std::size_t j, Step step, const ParamSet& params) {
  check_step(lambda, j, step);
  const Counts c = counts(lambda);
  const Rational& q = params.q();
  Rational v = q_integer(multiplicity(lambda, lambda[j]), q);
  if (step == Step::up && lambda[j] == 0) {
    for (int r = 1; r <= 3; ++r) {
      for (int s = r + 1; s <= 3; ++s) v *= 1 - params.t(r) * params.t(s) * pow(q, c.m0 - 1);
    }
  }
  return v;
}

Rational hamiltonian_v_two(const Partition& lambda, std::size_t j, Step step, const ParamSet& params) {
  check_step(lambda, j, step);
  const Counts c = counts(lambda);
  const Rational& q = params.q();
  Rational v = q_integer(multiplicity(lambda, lambda[j]), q);
  if (step == Step::up && lambda[j] == 0) v *= 1 - params.t(1) * params.t(2) * pow(q, c.m0 - 1);
  return v;
}

Rational hamiltonian_v(const Partition& lambda, std::size_t j, Step step, const ParamSet& params) {
  switch (params.profile()) {
    case Profile::four: return hamiltonian_v_four(lambda, j, step, params);
    case Profile::three: return hamiltonian_v_three(lambda, j, step, params);
    case Profile::two: return hamiltonian_v_two(lambda, j, step, params);
  }
  return hamiltonian_v_four(lambda, j, step, params);
}

Rational boundary_potential_four(int m0, int m1, const ParamSet& params) {
  const Rational& q = params.q();
  const Rational& t = params.t_product();
  const Rational& t1 = params.t(1);
  const Rational n0 = pow(q, m0);
  const Rational n1 = pow(q, m1);
  const Rational q_inv = 1 / q;

  Rational first_num = 1 - q_inv * t * n0;
  for (int r = 2; r <= 4; ++r) {
    for (int s = r + 1; s <= 4; ++s) first_num *= 1 - params.t(r) * params.t(s) * n0;
  }
  const Rational first_den = (1 - t * n0 * n0) * (1 - q_inv * t * n0 * n0);
  const Rational first = t * n0 / t1 + t1 * n0 * (1 - guarded_div(first_num, first_den, "V(N0,N1) first bracket"));

  Rational second_num = 1 - q_inv * t * n0 * n0 * n1;
  for (int r = 2; r <= 4; ++r) second_num *= 1 - q_inv * t1 * params.t(r) * n0;
  const Rational second_den = (1 - q_inv * q_inv * t * n0 * n0) * (1 - q_inv * t * n0 * n0);
  const Rational second =
      t1 + q / (t1 * n0) * (1 - guarded_div(second_num, second_den, "V(N0,N1) second bracket"));

  return (first * (1 - n1) + second * (1 - n0)) / (1 - q);
}

Rational boundary_potential_three(int m0, int m1, const ParamSet& params) {
  const Rational& q = params.q();
  const Rational n0 = pow(q, m0);
  const Rational n1 = pow(q, m1);
  const Rational e3 = params.t(1) * params.t(2) * params.t(3);
  const Rational linear = params.t(1) + params.t(2) + params.t(3) - e3 * n0 / q;
  return (linear * (1 - n0) + e3 * n0 * n0 * (1 - n1)) / (1 - q);
}

Rational boundary_potential_two(int m0, int /*m1*/, const ParamSet& params) {
  return (params.t(1) + params.t(2)) * q_integer(m0, params.q());
}

Rational boundary_potential(int m0, int m1, const ParamSet& params) {
  switch (params.profile()) {
    case Profile::four: return boundary_potential_four(m0, m1, params);
    case Profile::three: return boundary_potential_three(m0, m1, params);
    case Profile::two: return boundary_potential_two(m0, m1, params);
  }
  return boundary_potential_four(m0, m1, params);
}

}  // namespace octaboson
