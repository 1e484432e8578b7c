#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "doctest.h"
#include "octaboson/errors.hpp"
#include "octaboson/json_io.hpp"
#include "octaboson/qboson.hpp"
#include "oracles.hpp"

using namespace octaboson;

namespace {

using Q = Rational;

std::vector<ParamSet> parameter_sets() {
  return {ParamSet::defaults(),
          ParamSet(Q(1, 3), {Q(1, 2), Q(1, 7), Q(-2, 5), Q(3, 11)}),
          ParamSet(Q(2, 5), {Q(-1, 3), Q(2, 7), Q(1, 4), Q(-3, 8)})};
}

/// Deterministic function with distinct nonzero values on enumerate(n, top).
ExactFunction sample_function(std::size_t n, int top) {
  ExactFunction f(n);
  int k = 1;
  for (const auto& lambda : enumerate_partitions(n, top)) {
    f.set(lambda, oracle::frac(k % 2 ? k : -k, k + 2));
    ++k;
  }
  return f;
}

ComplexFunction to_complex(const ExactFunction& f) {
  ComplexFunction out(f.sector());
  for (const auto& [lambda, v] : f.values()) out.set(lambda, Complex(v.get_d(), 0.0));
  return out;
}

Q inner(const ExactFunction& f, const ExactFunction& g, const ParamSet& p) { return sector_inner_product(f, g, p); }

double max_abs_diff(const ComplexFunction& a, const ComplexFunction& b) {
  double out = 0;
  for (const auto& [lambda, v] : a.values()) out = std::max(out, std::abs(v - b.at(lambda)));
  for (const auto& [lambda, v] : b.values()) out = std::max(out, std::abs(v - a.at(lambda)));
  return out;
}

}  // namespace

TEST_CASE("lattice functions store no zeros and check sector sizes") {
  ExactFunction f(2);
  f.set(Partition{1, 0}, 3);
  f.set(Partition{1, 0}, 0);
  CHECK(f.is_zero());
  CHECK_THROWS_AS(f.set(Partition{1}, 1), DomainError);
  f.add(Partition{2, 1}, Q(1, 2));
  f.add(Partition{2, 1}, Q(-1, 2));
  CHECK(f.is_zero());
  const auto d = ExactFunction::delta(Partition{2, 0});
  CHECK(d.at(Partition{2, 0}) == 1);
  CHECK((d - d).is_zero());
  CHECK((Q(3) * d).at(Partition{2, 0}) == 3);
}

TEST_CASE("annihilation examples") {
  const auto p = ParamSet::defaults();
  ExactFunction f(1);
  f.set(Partition{0}, Q(2, 3));
  f.set(Partition{3}, Q(5, 7));
  const auto b0 = annihilate(0, f, p);
  CHECK(b0.sector() == 0);
  CHECK(b0.at(Partition{}) == Q(2, 3) / (1 - p.t_product()));
  CHECK(annihilate(3, f, p).at(Partition{}) == Q(5, 7));
  CHECK(annihilate(2, f, p).is_zero());
  const auto two = ParamSet::defaults(Profile::two);
  for (const auto& mu : enumerate_partitions(2, 3)) {
    for (int l = 0; l <= 3; ++l) {
      const auto g = annihilate(l, ExactFunction::delta(add_part(mu, l)), two);
      CHECK(g.at(mu) == 1);
    }
  }
  const auto empty = annihilate(0, ExactFunction::delta(Partition{}), p);
  CHECK(empty.is_zero());
  CHECK(empty.sector() == 0);
}

TEST_CASE("creation examples") {
  const auto p = ParamSet::defaults();
  const Partition lambda{4, 3, 3, 2};
  CHECK(creation_coefficient(3, lambda, p) == q_integer(2, p.q()));
  CHECK(creation_coefficient(4, lambda, p) == 1);
  CHECK(creation_coefficient(5, lambda, p) == 0);
  const auto two = ParamSet::defaults(Profile::two);
  for (const auto& mu : enumerate_partitions(3, 2)) {
    const int m0 = multiplicity(mu, 0);
    const Q expected =
        m0 == 0 ? Q(0) : q_integer(m0, two.q()) * (1 - two.t(1) * two.t(2) * pow(two.q(), m0 - 1));
    CHECK(creation_coefficient(0, mu, two) == expected);
  }
  const auto f = create(2, ExactFunction::delta(Partition{2, 1}), p);
  CHECK(f.values().size() == 1);
  CHECK(f.at(Partition{2, 2, 1}) == q_integer(2, p.q()));
}

TEST_CASE("number operators") {
  const auto p = ParamSet::defaults();
  const auto f = sample_function(3, 3);
  const auto n2 = number_op(2, ExactFunction::delta(Partition{2, 2, 0}), p);
  CHECK(n2.at(Partition{2, 2, 0}) == p.q() * p.q());
  CHECK(number_op(1, ExactFunction::delta(Partition{2, 2, 0}), p) == ExactFunction::delta(Partition{2, 2, 0}));
  for (int l = 0; l <= 3; ++l) {
    for (int k = 0; k <= 3; ++k) CHECK(number_op(l, number_op(k, f, p), p) == number_op(k, number_op(l, f, p), p));
  }
}

TEST_CASE("adjointness of creation and annihilation") {
  for (const auto& p : parameter_sets()) {
    for (std::size_t n = 0; n <= 2; ++n) {
      for (int l = 0; l <= 4; ++l) {
        for (const auto& mu : enumerate_partitions(n, 4)) {
          const auto f = ExactFunction::delta(mu);
          const auto created = create(l, f, p);
          for (const auto& nu : enumerate_partitions(n + 1, 4)) {
            const auto g = ExactFunction::delta(nu);
            CHECK(inner(created, g, p) == inner(f, annihilate(l, g, p), p));
          }
        }
      }
    }
  }
}

TEST_CASE("commutation relations hold on delta bases") {
  for (const auto& p : parameter_sets()) {
    for (const auto id : relation_family("all")) {
      const bool exchange = id == RelationId::d1 || id == RelationId::d2 || id == RelationId::e1 || id == RelationId::e2;
      for (int l = 0; l <= 3; ++l) {
        for (int k = 0; k <= 3; ++k) {
          if (exchange && l >= k) continue;
          for (std::size_t n = 0; n <= 2; ++n) {
            const auto report = verify_relation(id, l, k, n, 3, p);
            CHECK_MESSAGE(report.pass, to_string(id), " l=", l, " k=", k, " n=", n);
            CHECK(report.max_residual == "0");
          }
        }
      }
    }
  }
}

TEST_CASE("ultralocality breaks at sites 0 and 1 and is restored at t4 = 0") {
  const auto p = ParamSet::defaults();
  const auto untwisted = verify_relation(RelationId::d1, 0, 1, 2, 3, p, Twist::omitted);
  CHECK_FALSE(untwisted.pass);
  CHECK(untwisted.max_residual != "0");
  CHECK(verify_relation(RelationId::d1, 0, 1, 2, 3, p, Twist::included).pass);
  CHECK(verify_relation(RelationId::d1, 0, 2, 2, 3, p, Twist::omitted).pass);
  const auto three = ParamSet::defaults(Profile::three);
  for (const auto id : relation_family("com-d")) {
    for (int k = 1; k <= 3; ++k) CHECK(verify_relation(id, 0, k, 2, 3, three, Twist::omitted).pass);
  }
  for (const auto& mu : enumerate_partitions(2, 3)) CHECK(twist_factor(mu, three) == 1);
  CHECK_THROWS_AS(verify_relation(RelationId::d1, 1, 1, 1, 2, p), DomainError);
  CHECK_THROWS_AS(verify_relation(RelationId::e2, 2, 1, 1, 2, p), DomainError);
}

TEST_CASE("relation names") {
  CHECK(to_string(RelationId::d1) == "com-d1");
  CHECK(parse_relation("com-e2") == RelationId::e2);
  CHECK(parse_relation("b") == RelationId::b);
  CHECK_THROWS_AS(parse_relation("com-z"), DomainError);
  CHECK(relation_family("com-a") == std::vector<RelationId>{RelationId::a1, RelationId::a2});
  CHECK(relation_family("all").size() == 8);
  CHECK(relation_family("com-c") == std::vector<RelationId>{RelationId::c});
}

TEST_CASE("two-coupling Hamiltonian on one particle") {
  const auto p = ParamSet::defaults(Profile::two);
  const auto f = sample_function(1, 6);
  const auto h = apply_hamiltonian(f, p);
  for (int k = 1; k <= 5; ++k) CHECK(h.at(Partition{k}) == f.at(Partition{k + 1}) + f.at(Partition{k - 1}));
  CHECK(h.at(Partition{0}) ==
        (1 - p.t(1) * p.t(2)) * f.at(Partition{1}) + (p.t(1) + p.t(2)) * f.at(Partition{0}));
}

TEST_CASE("bulk Hamiltonian is plain hopping") {
  const auto p = ParamSet::defaults();
  const auto f = sample_function(2, 7);
  const auto h = apply_hamiltonian(f, p);
  for (const auto& lambda : {Partition{5, 2}, Partition{6, 3}, Partition{4, 2}}) {
    Q expected = 0;
    for (std::size_t j = 0; j < 2; ++j) {
      if (can_raise(lambda, j)) expected += f.at(raised(lambda, j));
      if (can_lower(lambda, j)) expected += f.at(lowered(lambda, j));
    }
    CHECK(h.at(lambda) == expected);
  }
}

TEST_CASE("Hamiltonian is symmetric and equals its operator assembly") {
  for (const auto& p : parameter_sets()) {
    for (std::size_t n = 0; n <= 2; ++n) {
      const auto basis = enumerate_partitions(n, 4);
      for (const auto& mu : basis) {
        const auto f = ExactFunction::delta(mu);
        const auto hf = apply_hamiltonian(f, p);
        CHECK(hf == apply_hamiltonian_via_operators(f, p));
        for (const auto& nu : basis) {
          const auto g = ExactFunction::delta(nu);
          CHECK(inner(hf, g, p) == inner(f, apply_hamiltonian(g, p), p));
        }
      }
    }
  }
  for (const auto profile : {Profile::three, Profile::two}) {
    const auto p = ParamSet::defaults(profile);
    for (const auto& mu : enumerate_partitions(2, 3)) {
      const auto f = ExactFunction::delta(mu);
      CHECK(apply_hamiltonian(f, p) == apply_hamiltonian_via_operators(f, p));
    }
  }
}

TEST_CASE("complex mode matches exact mode") {
  const auto p = ParamSet::defaults();
  const auto f = sample_function(2, 3);
  const auto fc = to_complex(f);
  CHECK(max_abs_diff(apply_hamiltonian(fc, p), to_complex(apply_hamiltonian(f, p))) < 1e-14);
  CHECK(max_abs_diff(annihilate(1, fc, p), to_complex(annihilate(1, f, p))) < 1e-15);
  CHECK(max_abs_diff(create(0, fc, p), to_complex(create(0, f, p))) < 1e-15);
  const auto ip = sector_inner_product(fc, fc, p);
  CHECK(std::abs(ip - inner(f, f, p).get_d()) < 1e-13);
}

TEST_CASE("wave functions") {
  const auto p = ParamSet::defaults();
  HLCache cache(p);
  const double xi2[] = {0.3, -1.2};
  CHECK(std::abs(wave_function(xi2, Partition{0, 0}, cache) - 1.0 / norm_n(Partition{0, 0}, p).get_d()) < 1e-14);
  const double half[] = {std::numbers::pi / 2};
  const auto o = oracle::Params{p.q(), {0, p.t(1), p.t(2), p.t(3), p.t(4)}};
  const Q constant = (oracle::elementary(o, 3) - oracle::elementary(o, 1)) / (1 - oracle::elementary(o, 4));
  const double expected = constant.get_d() / norm_n(Partition{1}, p).get_d();
  CHECK(std::abs(wave_function(half, Partition{1}, cache) - expected) < 1e-14);
  const Partition lambda{2, 1};
  const auto base = wave_function(xi2, lambda, cache);
  for (const auto& w : hyperoctahedral_group(2)) {
    const auto wxi = w.act_on_point<double>(xi2);
    CHECK(std::abs(wave_function(wxi, lambda, cache) - base) < 1e-12);
  }
  CHECK_THROWS_AS(wave_function(half, lambda, cache), DomainError);
}

TEST_CASE("eigenvalue equation examples") {
  const auto p = ParamSet::defaults();
  HLCache cache(p);
  const double one_xi[] = {1.0};
  const std::vector<Partition> small{Partition{0}, Partition{1}, Partition{2}, Partition{3}};
  const auto r1 = eigen_residual(one_xi, small, cache);
  CHECK(r1.pass);
  CHECK(r1.cases.size() == 4);
  for (const auto& c : r1.cases) CHECK(std::stod(c.residual) < 1e-12);
  const double two_xi[] = {0.7, 2.1};
  const auto set2 = enumerate_partitions(2, 3);
  const auto r2 = eigen_residual(two_xi, set2, cache);
  CHECK(r2.pass);
  CHECK(std::stod(r2.max_residual) < 1e-10);
  const double flat[] = {std::numbers::pi / 2, std::numbers::pi / 2};
  CHECK(std::abs(energy(flat)) < 1e-15);
}

TEST_CASE("scattering factors") {
  for (const auto& p : {ParamSet::defaults(), ParamSet::defaults(Profile::two)}) {
    const auto [s_at0, s0_at0] = scattering_factors(0.0, p);
    CHECK(std::abs(s_at0 - 1.0) < 1e-15);
    CHECK(std::abs(s0_at0 - 1.0) < 1e-15);
    CHECK(std::abs(scattering_factors(std::numbers::pi, p).first - 1.0) < 1e-15);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int k = 0; k < 100; ++k) {
      const auto [s, s0] = scattering_factors(angle(rng), p);
      CHECK(std::abs(std::abs(s) - 1.0) < 1e-12);
      CHECK(std::abs(std::abs(s0) - 1.0) < 1e-12);
    }
  }
  const auto p = ParamSet::defaults();
  const double x = 0.9;
  Complex expected = 1;
  for (int r = 1; r <= 4; ++r) {
    const double t = p.t(r).get_d();
    expected *= (1.0 - t * std::polar(1.0, -x)) / (1.0 - t * std::polar(1.0, x));
  }
  CHECK(std::abs(scattering_factors(x, p).second - expected) < 1e-15);
  const auto two = ParamSet::defaults(Profile::two);
  Complex expected2 = 1;
  for (int r = 1; r <= 2; ++r) {
    const double t = two.t(r).get_d();
    expected2 *= (1.0 - t * std::polar(1.0, -x)) / (1.0 - t * std::polar(1.0, x));
  }
  CHECK(std::abs(scattering_factors(x, two).second - expected2) < 1e-15);
}

TEST_CASE("scattering matrix") {
  const auto p = ParamSet::defaults();
  const double one_xi[] = {0.4};
  CHECK(std::abs(scattering_matrix(one_xi, p) - scattering_factors(0.4, p).second) < 1e-15);
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> xi{angle(rng), angle(rng), angle(rng)};
    CHECK(std::abs(std::abs(scattering_matrix(xi, p)) - 1.0) < 1e-12);
    std::vector<double> swapped{xi[1], xi[0], xi[2]};
    auto s = [&](double v) { return scattering_factors(v, p).first; };
    auto s0 = [&](double v) { return scattering_factors(v, p).second; };
    const Complex direct = s(xi[1] - xi[0]) * s(xi[1] + xi[0]) * s(xi[1] - xi[2]) * s(xi[1] + xi[2]) *
                           s(xi[0] - xi[2]) * s(xi[0] + xi[2]) * s0(xi[0]) * s0(xi[1]) * s0(xi[2]);
    CHECK(std::abs(scattering_matrix(swapped, p) - direct) < 1e-12);
  }
}

TEST_CASE("wave function JSON") {
  const double xi[] = {0.5};
  const std::vector<std::pair<Partition, Complex>> values{{Partition{1}, Complex(0.25, -1.0)}};
  const Json j = wave_function_json(xi, values);
  CHECK(j.at("xi").size() == 1);
  CHECK(j.at("values")[0].at("lambda").dump() == "[1]");
  CHECK(j.at("values")[0].at("re") == 0.25);
  CHECK(j.at("values")[0].at("im") == -1.0);
}
