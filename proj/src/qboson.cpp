#include "octaboson/qboson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "octaboson/errors.hpp"

namespace octaboson {

template <class Scalar>
void LatticeFunction<Scalar>::set(const Partition& lambda, const Scalar& value) {
  if (lambda.size() != n_) throw DomainError("lattice function: partition length differs from the sector");
  if (value == Scalar(0)) {
    values_.erase(lambda);
  } else {
    values_[lambda] = value;
  }
}

template <class Scalar>
LatticeFunction<Scalar>& LatticeFunction<Scalar>::operator+=(const LatticeFunction& other) {
  for (const auto& [lambda, v] : other.values_) add(lambda, v);
  return *this;
}

template <class Scalar>
LatticeFunction<Scalar>& LatticeFunction<Scalar>::operator-=(const LatticeFunction& other) {
  for (const auto& [lambda, v] : other.values_) add(lambda, -v);
  return *this;
}

template <class Scalar>
LatticeFunction<Scalar>& LatticeFunction<Scalar>::operator*=(const Scalar& c) {
  if (c == Scalar(0)) {
    values_.clear();
    return *this;
  }
  for (auto& [lambda, v] : values_) v *= c;
  return *this;
}

template class LatticeFunction<Rational>;
template class LatticeFunction<Complex>;

namespace {

int delta(int x) { return x == 0 ? 1 : 0; }

struct Occupation {
  int m0;
  int m1;
};

Occupation occupation(const Partition& lambda) { return {multiplicity(lambda, 0), multiplicity(lambda, 1)}; }

/// prod_{r<s<=upto} (1 - t_r t_s q^k)
Rational pair_product(const ParamSet& params, int k, int upto) {
  Rational out = 1;
  const Rational qk = pow(params.q(), k);
  for (int r = 1; r <= upto; ++r) {
    for (int s = r + 1; s <= upto; ++s) out *= 1 - params.t(r) * params.t(s) * qk;
  }
  return out;
}

int profile_couplings(Profile p) {
  switch (p) {
    case Profile::four: return 4;
    case Profile::three: return 3;
    case Profile::two: return 2;
  }
  return 4;
}

Rational power_guarded(const Rational& base, int exponent, const char* what) {
  if (exponent < 0 && base == 0) throw GenericityError(std::string("vanishing factor in ") + what);
  return pow(base, exponent);
}

}  // namespace

Rational annihilation_coefficient_four(int l, const Partition& lambda, const ParamSet& params) {
  if (l != 0) return 1;
  const auto [m0, m1] = occupation(lambda);
  return guarded_div(1, 1 - params.t_product() * pow(params.q(), 2 * m0 + m1), "annihilation operator");
}

Rational annihilation_coefficient_reduced(int, const Partition&, const ParamSet&) { return 1; }

Rational annihilation_coefficient(int l, const Partition& lambda, const ParamSet& params) {
  if (params.profile() == Profile::four) return annihilation_coefficient_four(l, lambda, params);
  return annihilation_coefficient_reduced(l, lambda, params);
}

Rational creation_coefficient_four(int l, const Partition& lambda, const ParamSet& params) {
  const int ml = multiplicity(lambda, l);
  if (ml == 0) return 0;
  const Rational& q = params.q();
  const Rational& t = params.t_product();
  const auto [m0, m1] = occupation(lambda);
  Rational c = q_integer(ml, q);
  if (l <= 1) c *= 1 - t * pow(q, 2 * m0 + m1 - 1);
  if (l == 0) {
    c *= 1 - t * pow(q, m0 - 2);
    c *= pair_product(params, m0 - 1, 4);
    const Rational den = (1 - t * pow(q, 2 * m0 - 3)) * pow(1 - t * pow(q, 2 * m0 - 2), 2) *
                         (1 - t * pow(q, 2 * m0 - 1));
    c = guarded_div(c, den, "creation operator");
  }
  return c;
}

Rational creation_coefficient_three(int l, const Partition& lambda, const ParamSet& params) {
  const int ml = multiplicity(lambda, l);
  if (ml == 0) return 0;
  Rational c = q_integer(ml, params.q());
  if (l == 0) c *= pair_product(params, multiplicity(lambda, 0) - 1, 3);
  return c;
}

Rational creation_coefficient_two(int l, const Partition& lambda, const ParamSet& params) {
  const int ml = multiplicity(lambda, l);
  if (ml == 0) return 0;
  Rational c = q_integer(ml, params.q());
  if (l == 0) c *= 1 - params.t(1) * params.t(2) * pow(params.q(), multiplicity(lambda, 0) - 1);
  return c;
}

Rational creation_coefficient(int l, const Partition& lambda, const ParamSet& params) {
  switch (params.profile()) {
    case Profile::four: return creation_coefficient_four(l, lambda, params);
    case Profile::three: return creation_coefficient_three(l, lambda, params);
    case Profile::two: return creation_coefficient_two(l, lambda, params);
  }
  return creation_coefficient_four(l, lambda, params);
}

template <class Scalar>
LatticeFunction<Scalar> annihilate(int l, const LatticeFunction<Scalar>& f, const ParamSet& params) {
  if (l < 0) throw DomainError("annihilate: negative site");
  if (f.sector() == 0) return LatticeFunction<Scalar>(0);
  LatticeFunction<Scalar> out(f.sector() - 1);
  for (const auto& [mu, value] : f.values()) {
    if (multiplicity(mu, l) == 0) continue;
    const Partition lambda = remove_part(mu, l);
    out.add(lambda, value * scalar_from<Scalar>(annihilation_coefficient(l, lambda, params)));
  }
  return out;
}

template <class Scalar>
LatticeFunction<Scalar> create(int l, const LatticeFunction<Scalar>& f, const ParamSet& params) {
  if (l < 0) throw DomainError("create: negative site");
  LatticeFunction<Scalar> out(f.sector() + 1);
  for (const auto& [mu, value] : f.values()) {
    const Partition lambda = add_part(mu, l);
    out.add(lambda, value * scalar_from<Scalar>(creation_coefficient(l, lambda, params)));
  }
  return out;
}

template <class Scalar>
LatticeFunction<Scalar> number_op(int l, const LatticeFunction<Scalar>& f, const ParamSet& params) {
  return apply_diagonal<Scalar>(f, [&](const Partition& lambda) { return pow(params.q(), multiplicity(lambda, l)); });
}

template <class Scalar>
LatticeFunction<Scalar> apply_diagonal(const LatticeFunction<Scalar>& f,
                                       const std::function<Rational(const Partition&)>& eigenvalue) {
  LatticeFunction<Scalar> out(f.sector());
  for (const auto& [lambda, value] : f.values()) out.set(lambda, value * scalar_from<Scalar>(eigenvalue(lambda)));
  return out;
}

template <class Scalar>
Scalar sector_inner_product(const LatticeFunction<Scalar>& f, const LatticeFunction<Scalar>& g,
                            const ParamSet& params) {
  if (f.sector() != g.sector()) throw DomainError("inner product: sectors differ");
  Scalar sum(0);
  for (const auto& [lambda, value] : f.values()) {
    const Scalar other = g.at(lambda);
    if (other == Scalar(0)) continue;
    sum += value * conj_scalar(other) * scalar_from<Scalar>(norm_n(lambda, params));
  }
  return sum;
}

namespace {

/// Row of H_n at lambda: (H f)(lambda) = sum over entries of coeff * f(nu).
std::vector<std::pair<Partition, Rational>> hamiltonian_row(const Partition& lambda, const ParamSet& params) {
  std::vector<std::pair<Partition, Rational>> row;
  const auto [m0, m1] = occupation(lambda);
  const Rational v = boundary_potential(m0, m1, params);
  if (v != 0) row.emplace_back(lambda, v);
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (can_raise(lambda, j)) row.emplace_back(raised(lambda, j), hamiltonian_v(lambda, j, Step::up, params));
    if (can_lower(lambda, j)) row.emplace_back(lowered(lambda, j), hamiltonian_v(lambda, j, Step::down, params));
  }
  return row;
}

}  // namespace

template <class Scalar>
LatticeFunction<Scalar> apply_hamiltonian(const LatticeFunction<Scalar>& f, const ParamSet& params) {
  std::set<Partition> candidates;
  for (const auto& [mu, value] : f.values()) {
    candidates.insert(mu);
    for (std::size_t j = 0; j < mu.size(); ++j) {
      if (can_raise(mu, j)) candidates.insert(raised(mu, j));
      if (can_lower(mu, j)) candidates.insert(lowered(mu, j));
    }
  }
  LatticeFunction<Scalar> out(f.sector());
  for (const auto& lambda : candidates) {
    Scalar sum(0);
    for (const auto& [nu, coeff] : hamiltonian_row(lambda, params)) {
      const Scalar value = f.at(nu);
      if (value != Scalar(0)) sum += scalar_from<Scalar>(coeff) * value;
    }
    out.set(lambda, sum);
  }
  return out;
}

template <class Scalar>
LatticeFunction<Scalar> apply_hamiltonian_via_operators(const LatticeFunction<Scalar>& f, const ParamSet& params) {
  LatticeFunction<Scalar> out = apply_diagonal<Scalar>(f, [&](const Partition& lambda) {
    const auto [m0, m1] = occupation(lambda);
    return boundary_potential(m0, m1, params);
  });
  int top = 0;
  for (const auto& [mu, value] : f.values()) top = std::max(top, mu.largest());
  for (int l = 0; l <= top; ++l) {
    out += create(l, annihilate(l + 1, f, params), params);
    out += create(l + 1, annihilate(l, f, params), params);
  }
  return out;
}

#define OCTABOSON_INSTANTIATE(S)                                                                               \
  template LatticeFunction<S> annihilate<S>(int, const LatticeFunction<S>&, const ParamSet&);                 \
  template LatticeFunction<S> create<S>(int, const LatticeFunction<S>&, const ParamSet&);                     \
  template LatticeFunction<S> number_op<S>(int, const LatticeFunction<S>&, const ParamSet&);                  \
  template LatticeFunction<S> apply_diagonal<S>(const LatticeFunction<S>&,                                    \
                                                const std::function<Rational(const Partition&)>&);            \
  template S sector_inner_product<S>(const LatticeFunction<S>&, const LatticeFunction<S>&, const ParamSet&);  \
  template LatticeFunction<S> apply_hamiltonian<S>(const LatticeFunction<S>&, const ParamSet&);               \
  template LatticeFunction<S> apply_hamiltonian_via_operators<S>(const LatticeFunction<S>&, const ParamSet&);

OCTABOSON_INSTANTIATE(Rational)
OCTABOSON_INSTANTIATE(Complex)
#undef OCTABOSON_INSTANTIATE

std::string to_string(RelationId id) {
  switch (id) {
    case RelationId::a1: return "com-a1";
    case RelationId::a2: return "com-a2";
    case RelationId::b: return "com-b";
    case RelationId::c: return "com-c";
    case RelationId::d1: return "com-d1";
    case RelationId::d2: return "com-d2";
    case RelationId::e1: return "com-e1";
    case RelationId::e2: return "com-e2";
  }
  return "com-?";
}

RelationId parse_relation(const std::string& text) {
  const std::string key = text.rfind("com-", 0) == 0 ? text.substr(4) : text;
  static const std::map<std::string, RelationId> table = {
      {"a1", RelationId::a1}, {"a2", RelationId::a2}, {"b", RelationId::b},   {"c", RelationId::c},
      {"d1", RelationId::d1}, {"d2", RelationId::d2}, {"e1", RelationId::e1}, {"e2", RelationId::e2}};
  auto it = table.find(key);
  if (it == table.end()) throw DomainError("unknown relation '" + text + "'");
  return it->second;
}

std::vector<RelationId> relation_family(const std::string& text) {
  const std::string key = text.rfind("com-", 0) == 0 ? text.substr(4) : text;
  using R = RelationId;
  if (key == "all") return {R::a1, R::a2, R::b, R::c, R::d1, R::d2, R::e1, R::e2};
  if (key == "a") return {R::a1, R::a2};
  if (key == "d") return {R::d1, R::d2};
  if (key == "e") return {R::e1, R::e2};
  return {parse_relation(text)};
}

Rational relation_b_factor(int l, const Partition& lambda, const ParamSet& params) {
  const Rational& q = params.q();
  const Rational& t = params.t_product();
  const auto [m0, m1] = occupation(lambda);
  const Rational n0 = pow(q, m0);
  const Rational n1 = pow(q, m1);
  Rational f = (1 - pow(q, multiplicity(lambda, l))) / (1 - q);
  const int couplings = profile_couplings(params.profile());
  if (params.profile() == Profile::four) {
    f *= pow(1 - t * n0 * n0 * n1 / q, delta(l) + delta(l - 1));
    if (l == 0) {
      f *= 1 - t * n0 / (q * q);
      f *= pair_product(params, m0 - 1, 4);
      const Rational den = (1 - t * n0 * n0 / (q * q * q)) * pow(1 - t * n0 * n0 / (q * q), 2) *
                           (1 - t * n0 * n0 / q) * (1 - t * n0 * n0 * n1 / (q * q));
      f = guarded_div(f, den, "relation b");
    }
  } else if (l == 0) {
    f *= pair_product(params, m0 - 1, couplings);
  }
  return f;
}

Rational relation_c_factor(int l, const Partition& lambda, const ParamSet& params) {
  const Rational& q = params.q();
  const Rational& t = params.t_product();
  const auto [m0, m1] = occupation(lambda);
  const Rational n0 = pow(q, m0);
  const Rational n1 = pow(q, m1);
  Rational f = (1 - q * pow(q, multiplicity(lambda, l))) / (1 - q);
  const int couplings = profile_couplings(params.profile());
  if (params.profile() == Profile::four) {
    f *= power_guarded(1 - t * n0 * n0 * n1, -delta(l) + delta(l - 1), "relation c");
    if (l == 0) {
      f *= (1 - t * n0 / q) * (1 - q * t * n0 * n0 * n1);
      f *= pair_product(params, m0, 4);
      const Rational den =
          (1 - t * n0 * n0 / q) * pow(1 - t * n0 * n0, 2) * (1 - q * t * n0 * n0);
      f = guarded_div(f, den, "relation c");
    }
  } else if (l == 0) {
    f *= pair_product(params, m0, couplings);
  }
  return f;
}

Rational twist_factor(const Partition& lambda, const ParamSet& params) {
  if (params.profile() != Profile::four) return 1;
  const Rational& q = params.q();
  const Rational& t = params.t_product();
  const auto [m0, m1] = occupation(lambda);
  const Rational x = t * pow(q, 2 * m0 + m1);
  return guarded_div(1 - q * x, 1 - x, "twist factor");
}

namespace {

Rational max_abs(const ExactFunction& f) {
  Rational best = 0;
  for (const auto& [lambda, v] : f.values()) best = std::max(best, Rational(abs(v)));
  return best;
}

ExactFunction twisted(const ExactFunction& f, const ParamSet& params, bool inverse) {
  return apply_diagonal<Rational>(f, [&](const Partition& lambda) {
    const Rational x = twist_factor(lambda, params);
    return inverse ? Rational(1 / x) : x;
  });
}

/// lhs - rhs of one relation applied to delta_mu.
ExactFunction relation_difference(RelationId id, int l, int k, const Partition& mu, const ParamSet& params,
                                  bool twist) {
  const ExactFunction f = ExactFunction::delta(mu);
  auto an = [&](int site, const ExactFunction& g) { return annihilate(site, g, params); };
  auto cr = [&](int site, const ExactFunction& g) { return create(site, g, params); };
  auto num = [&](int site, const ExactFunction& g) { return number_op(site, g, params); };
  const Rational qd = pow(params.q(), delta(l - k));
  switch (id) {
    case RelationId::a1: return an(l, num(k, f)) - qd * num(k, an(l, f));
    case RelationId::a2: return cr(l, num(k, f)) - Rational(1 / qd) * num(k, cr(l, f));
    case RelationId::b:
      return cr(l, an(l, f)) -
             apply_diagonal<Rational>(f, [&](const Partition& lam) { return relation_b_factor(l, lam, params); });
    case RelationId::c:
      return an(l, cr(l, f)) -
             apply_diagonal<Rational>(f, [&](const Partition& lam) { return relation_c_factor(l, lam, params); });
    default: break;
  }
  const bool twisted_pair = twist && l == 0 && k == 1;
  switch (id) {
    case RelationId::d1: {
      ExactFunction rhs = an(k, an(l, f));
      if (twisted_pair) rhs = twisted(rhs, params, false);
      return an(l, an(k, f)) - rhs;
    }
    case RelationId::d2: {
      const ExactFunction input = twisted_pair ? twisted(f, params, true) : f;
      return cr(l, cr(k, f)) - cr(k, cr(l, input));
    }
    case RelationId::e1: {
      ExactFunction rhs = cr(k, an(l, f));
      if (twisted_pair) rhs = twisted(rhs, params, false);
      return an(l, cr(k, f)) - rhs;
    }
    case RelationId::e2: {
      const ExactFunction input = twisted_pair ? twisted(f, params, true) : f;
      return cr(l, an(k, f)) - an(k, cr(l, input));
    }
    default: break;
  }
  throw DomainError("unknown relation");
}

bool is_exchange(RelationId id) {
  return id == RelationId::d1 || id == RelationId::d2 || id == RelationId::e1 || id == RelationId::e2;
}

std::string case_label(int l, int k, std::size_t n) {
  std::ostringstream os;
  os << "l=" << l << ",k=" << k << ",n=" << n;
  return os.str();
}

}  // namespace

VerificationReport verify_relation(RelationId id, int l, int k, std::size_t n, int max_part, const ParamSet& params,
                                   Twist twist) {
  if (l < 0 || k < 0) throw DomainError("verify_relation: negative site");
  if (is_exchange(id) && !(l < k)) throw DomainError("verify_relation: exchange relations need l < k");
  params.check_guards(ParamSet::guard_horizon(n + 1, std::max(max_part, std::max(l, k))));
  VerificationReport report;
  report.relation = to_string(id);
  report.n = static_cast<int>(n);
  report.max_part = max_part;
  Rational worst = 0;
  for (const auto& mu : enumerate_partitions(n, max_part)) {
    worst = std::max(worst, max_abs(relation_difference(id, l, k, mu, params, twist == Twist::included)));
  }
  report.record_exact(case_label(l, k, n), worst);
  return report;
}

namespace {

Complex monomial_value(std::span<const double> xi, const Partition& mu) {
  Complex sum = 0;
  for (const auto& nu : orbit(mu)) {
    double phase = 0;
    for (std::size_t j = 0; j < nu.size(); ++j) phase += nu[j] * xi[j];
    sum += std::polar(1.0, phase);
  }
  return sum;
}

}  // namespace

Complex wave_function(std::span<const double> xi, const Partition& lambda, HLCache& cache) {
  if (xi.size() != lambda.size()) throw DomainError("wave_function: xi length differs from n");
  const HLPolynomial& hl = cache.get(lambda);
  Complex sum = 0;
  for (const auto& [mu, c] : hl.expansion) sum += c.get_d() * monomial_value(xi, mu);
  return sum / hl.norm.get_d();
}

Complex wave_function(std::span<const double> xi, const Partition& lambda, const ParamSet& params) {
  HLCache cache(params);
  return wave_function(xi, lambda, cache);
}

double energy(std::span<const double> xi) {
  double e = 0;
  for (double x : xi) e += 2 * std::cos(x);
  return e;
}

VerificationReport eigen_residual(std::span<const double> xi, std::span<const Partition> lambdas, HLCache& cache) {
  VerificationReport report;
  report.relation = "eigen";
  report.mode = "float";
  report.tolerance = 1e-10;
  report.n = static_cast<int>(xi.size());
  std::map<Partition, Complex> phi;
  auto value = [&](const Partition& lambda) {
    auto it = phi.find(lambda);
    if (it != phi.end()) return it->second;
    const Complex v = wave_function(xi, lambda, cache);
    phi.emplace(lambda, v);
    return v;
  };
  const double e = energy(xi);
  for (const auto& lambda : lambdas) {
    report.max_part = std::max(report.max_part, lambda.largest());
    Complex h = 0;
    for (const auto& [nu, coeff] : hamiltonian_row(lambda, cache.params())) h += coeff.get_d() * value(nu);
    const Complex here = value(lambda);
    const double residual = std::abs(h - e * here) / std::max(1.0, std::abs(here));
    std::ostringstream label;
    label << "lambda=(";
    for (std::size_t j = 0; j < lambda.size(); ++j) label << (j ? "," : "") << lambda[j];
    label << ")";
    report.record_float(label.str(), residual);
  }
  return report;
}

std::pair<Complex, Complex> scattering_factors(double x, const ParamSet& params) {
  const Complex e_plus = std::polar(1.0, x);
  const Complex e_minus = std::conj(e_plus);
  const double q = params.q().get_d();
  const Complex s = (1.0 - q * e_minus) / (1.0 - q * e_plus);
  Complex s0 = 1;
  for (int r = 1; r <= profile_couplings(params.profile()); ++r) {
    const double t = params.t(r).get_d();
    s0 *= (1.0 - t * e_minus) / (1.0 - t * e_plus);
  }
  return {s, s0};
}

Complex scattering_matrix(std::span<const double> xi, const ParamSet& params) {
  Complex out = 1;
  for (std::size_t j = 0; j < xi.size(); ++j) {
    for (std::size_t k = j + 1; k < xi.size(); ++k) {
      out *= scattering_factors(xi[j] - xi[k], params).first;
      out *= scattering_factors(xi[j] + xi[k], params).first;
    }
    out *= scattering_factors(xi[j], params).second;
  }
  return out;
}

}  // namespace octaboson
