#include "doctest.h"
#include "octaboson/errors.hpp"
#include "octaboson/json_io.hpp"
#include "octaboson/qkernels.hpp"
#include "oracles.hpp"

using namespace octaboson;

namespace {

using Q = Rational;

oracle::Params to_oracle(const ParamSet& p) {
  return {p.q(), {0, p.t(1), p.t(2), p.t(3), p.t(4)}};
}

std::vector<ParamSet> parameter_sets() {
  return {ParamSet::defaults(),
          ParamSet(Q(1, 3), {Q(1, 2), Q(1, 7), Q(-2, 5), Q(3, 11)}),
          ParamSet(Q(2, 5), {Q(-1, 3), Q(2, 7), Q(1, 4), Q(-3, 8)})};
}

ParamSet zeroed(const ParamSet& p, int count) {
  auto t = p.couplings();
  for (int r = 4 - count; r < 4; ++r) t[static_cast<std::size_t>(r)] = 0;
  return ParamSet(p.q(), t, Profile::four, ZeroPolicy::allow);
}

ParamSet reduced(const ParamSet& p, Profile profile) {
  auto t = p.couplings();
  t[3] = 0;
  if (profile == Profile::two) t[2] = 0;
  return ParamSet(p.q(), t, profile);
}

Q pair_product(const ParamSet& p) {
  Q out = 1;
  for (int r = 1; r <= 4; ++r) {
    for (int s = r + 1; s <= 4; ++s) out *= 1 - p.t(r) * p.t(s);
  }
  return out;
}

}  // namespace

TEST_CASE("q-shifted factorial and q-integer examples") {
  const Q q(1, 2);
  CHECK(q_pochhammer(Q(7, 3), 0, q) == 1);
  CHECK(q_pochhammer(Q(1, 3), 2, q) == Q(5, 9));
  CHECK(q_pochhammer(Q(2, 3), 2, Q(1, 5)) == (1 - Q(2, 3)) * (1 - Q(2, 15)));
  CHECK(q_integer(0, q) == 0);
  CHECK(q_integer(2, Q(3, 7)) == 1 + Q(3, 7));
  CHECK(q_integer(3, q) == Q(7, 4));
}

TEST_CASE("tau vector is geometric ending at t1") {
  const auto p = ParamSet::defaults();
  const auto tau = tau_vector(4, p);
  REQUIRE(tau.size() == 4);
  CHECK(tau[3] == p.t(1));
  for (std::size_t j = 0; j + 1 < tau.size(); ++j) CHECK(tau[j] == p.q() * tau[j + 1]);
}

TEST_CASE("one-particle norms and normalizers") {
  const auto p = ParamSet::defaults();
  const Q t = p.t_product();
  CHECK(norm_n(Partition{0}, p) == (1 - t) / pair_product(p));
  CHECK(norm_n(Partition{2}, p) == 1);
  CHECK(norm_n(Partition{5}, p) == 1);
  CHECK(n_lambda_monic(Partition{1}, p) == 1 - t);
  CHECK(n_lambda_monic(Partition{0}, p) == 2);
  CHECK(n_lambda_monic(Partition{3}, p) == 1);
  CHECK(c_lambda(Partition{1}, p) ==
        p.t(1) * (1 - t) / ((1 - p.t(1) * p.t(2)) * (1 - p.t(1) * p.t(3)) * (1 - p.t(1) * p.t(4))));
  CHECK(c_lambda(Partition{0}, p) == 1);
  CHECK(h_lambda(Partition{0}, p) == norm_n(Partition{0}, p));
}

TEST_CASE("two-coupling norm display") {
  const auto p = ParamSet::defaults(Profile::two);
  const Q& q = p.q();
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& lambda : enumerate_partitions(n, 3)) {
      Q den = q_pochhammer(p.t(1) * p.t(2), multiplicity(lambda, 0), q);
      for (int l = 0; l <= lambda.largest(); ++l) den *= q_pochhammer(q, multiplicity(lambda, l), q);
      CHECK(norm_n(lambda, p) == pow(1 - q, static_cast<int>(n)) / den);
    }
  }
}

TEST_CASE("norms, c and Pieri coefficients agree with independent codings") {
  for (const auto& p : parameter_sets()) {
    const auto o = to_oracle(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& lambda : enumerate_partitions(n, 4)) {
        const auto& v = lambda.vector();
        CHECK(norm_n(lambda, p) == oracle::norm(v, o));
        CHECK(c_lambda(lambda, p) == oracle::c_lambda(v, o));
        CHECK(h_lambda(lambda, p) == c_lambda(lambda, p) * norm_n(lambda, p));
        for (std::size_t j = 0; j < n; ++j) {
          if (can_raise(lambda, j))
            CHECK(pieri_v(lambda, j, Step::up, p) == oracle::pieri_plus(v, static_cast<int>(j) + 1, o));
          if (can_lower(lambda, j))
            CHECK(pieri_v(lambda, j, Step::down, p) == oracle::pieri_minus(v, static_cast<int>(j) + 1, o));
        }
      }
    }
    for (int m0 = 0; m0 <= 4; ++m0) {
      for (int m1 = 0; m0 + m1 <= 4; ++m1) CHECK(boundary_potential(m0, m1, p) == oracle::potential(m0, m1, o));
    }
  }
}

TEST_CASE("h_lambda closed form agrees at (1,1)") {
  const auto p = ParamSet::defaults();
  const Partition lambda{1, 1};
  CHECK(h_lambda(lambda, p) == c_lambda(lambda, p) * norm_n(lambda, p));
  for (const auto& mu : enumerate_partitions(2, 2)) CHECK(h_lambda(mu, p) == c_lambda(mu, p) * norm_n(mu, p));
}

TEST_CASE("Pieri coefficient examples for parts at least two") {
  const auto p = ParamSet::defaults();
  const Partition lambda{4, 3, 3};
  const auto tau = tau_vector(3, p);
  CHECK(pieri_v(lambda, 0, Step::up, p) == q_integer(1, p.q()) / tau[0]);
  CHECK(pieri_v(lambda, 1, Step::up, p) == q_integer(2, p.q()) / tau[1]);
  CHECK(pieri_v(lambda, 2, Step::down, p) == q_integer(2, p.q()) * tau[2]);
  CHECK_THROWS_AS(pieri_v(lambda, 2, Step::up, p), PreconditionError);
  CHECK_THROWS_AS(pieri_v(Partition{0}, 0, Step::down, p), PreconditionError);
  const Partition zero{0};
  const Q t = p.t_product();
  const Q expected =
      (1 - p.t(1) * p.t(2)) * (1 - p.t(1) * p.t(3)) * (1 - p.t(1) * p.t(4)) / (p.t(1) * (1 - t));
  CHECK(pieri_v(zero, 0, Step::up, p) == expected);
}

TEST_CASE("Hamiltonian coefficients") {
  for (const auto& p : parameter_sets()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& lambda : enumerate_partitions(n, 4)) {
        for (std::size_t j = 0; j < n; ++j) {
          const int mj = multiplicity(lambda, lambda[j]);
          if (can_lower(lambda, j)) CHECK(hamiltonian_v(lambda, j, Step::down, p) == q_integer(mj, p.q()));
          if (can_raise(lambda, j) && lambda[j] >= 2)
            CHECK(hamiltonian_v(lambda, j, Step::up, p) == q_integer(mj, p.q()));
        }
      }
    }
  }
}

TEST_CASE("Hamiltonian coefficients are gauge transforms of the Pieri coefficients") {
  for (const auto& p : parameter_sets()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& lambda : enumerate_partitions(n, 3)) {
        const Q h = h_lambda(lambda, p);
        for (std::size_t j = 0; j < n; ++j) {
          if (can_raise(lambda, j)) {
            CHECK(hamiltonian_v(lambda, j, Step::up, p) ==
                  pieri_v(lambda, j, Step::up, p) * h_lambda(raised(lambda, j), p) / h);
          }
          if (can_lower(lambda, j)) {
            CHECK(hamiltonian_v(lambda, j, Step::down, p) ==
                  pieri_v(lambda, j, Step::down, p) * h_lambda(lowered(lambda, j), p) / h);
          }
        }
      }
    }
  }
}

TEST_CASE("hopping balance makes the Hamiltonian symmetric") {
  for (const auto& p : parameter_sets()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& lambda : enumerate_partitions(n, 3)) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!can_raise(lambda, j)) continue;
          const Partition up = raised(lambda, j);
          CHECK(hamiltonian_v(lambda, j, Step::up, p) * norm_n(lambda, p) ==
                hamiltonian_v(up, j, Step::down, p) * norm_n(up, p));
        }
      }
    }
  }
}

TEST_CASE("potential and elementary identities") {
  for (const auto& p : parameter_sets()) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto tau = tau_vector(n, p);
      for (const auto& lambda : enumerate_partitions(n, 3)) {
        Q base = 0, pieri = 0, elementary = 0;
        for (std::size_t j = 0; j < n; ++j) {
          base += tau[j] + 1 / tau[j];
          const Q mj = q_integer(multiplicity(lambda, lambda[j]), p.q());
          if (can_raise(lambda, j)) {
            pieri += pieri_v(lambda, j, Step::up, p);
            elementary += mj / tau[j];
          }
          if (can_lower(lambda, j)) {
            pieri += pieri_v(lambda, j, Step::down, p);
            elementary += mj * tau[j];
          }
        }
        const int m0 = multiplicity(lambda, 0), m1 = multiplicity(lambda, 1);
        CHECK(boundary_potential(m0, m1, p) == base - pieri);
        CHECK(base - elementary == p.t(1) * q_integer(m0, p.q()));
      }
    }
  }
}

TEST_CASE("potential examples") {
  const auto p = ParamSet::defaults();
  CHECK(boundary_potential(0, 0, p) == 0);
  const auto two = ParamSet::defaults(Profile::two);
  for (int m0 = 0; m0 <= 4; ++m0) {
    CHECK(boundary_potential(m0, 2, two) == (two.t(1) + two.t(2)) * q_integer(m0, two.q()));
  }
}

TEST_CASE("four-coupling displays degenerate to the reduced displays") {
  for (const auto& base : parameter_sets()) {
    const ParamSet four3 = zeroed(base, 1);
    const ParamSet four2 = zeroed(base, 2);
    const ParamSet three = reduced(base, Profile::three);
    const ParamSet two = reduced(base, Profile::two);
    const ParamSet three2 = ParamSet(base.q(), two.couplings(), Profile::three, ZeroPolicy::allow);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& lambda : enumerate_partitions(n, 3)) {
        CHECK(norm_n_four(lambda, four3) == norm_n_three(lambda, three));
        CHECK(norm_n_four(lambda, four2) == norm_n_two(lambda, two));
        CHECK(norm_n_three(lambda, three2) == norm_n_two(lambda, two));
        CHECK(norm_n_three(lambda, three) == oracle::norm(lambda.vector(), to_oracle(three)));
        for (std::size_t j = 0; j < n; ++j) {
          for (Step s : {Step::up, Step::down}) {
            if (s == Step::up ? !can_raise(lambda, j) : !can_lower(lambda, j)) continue;
            CHECK(hamiltonian_v_four(lambda, j, s, four3) == hamiltonian_v_three(lambda, j, s, three));
            CHECK(hamiltonian_v_four(lambda, j, s, four2) == hamiltonian_v_two(lambda, j, s, two));
          }
        }
      }
    }
    for (int m0 = 0; m0 <= 3; ++m0) {
      for (int m1 = 0; m1 <= 3; ++m1) {
        CHECK(boundary_potential_four(m0, m1, four3) == boundary_potential_three(m0, m1, three));
        CHECK(boundary_potential_four(m0, m1, four2) == boundary_potential_two(m0, m1, two));
        CHECK(boundary_potential_three(m0, m1, three) == oracle::potential(m0, m1, to_oracle(three)));
      }
    }
  }
}

TEST_CASE("parameter validation") {
  const std::array<Q, 4> t{Q(1, 3), Q(-1, 4), Q(1, 5), Q(-1, 6)};
  CHECK_THROWS_AS(ParamSet(Q(0), t), GenericityError);
  CHECK_THROWS_AS(ParamSet(Q(1), t), GenericityError);
  CHECK_THROWS_AS(ParamSet(Q(1, 2), {Q(1), Q(-1, 4), Q(1, 5), Q(-1, 6)}), GenericityError);
  CHECK_THROWS_AS(ParamSet(Q(1, 2), {Q(0), Q(-1, 4), Q(1, 5), Q(-1, 6)}), GenericityError);
  CHECK_THROWS_AS(ParamSet(Q(1, 2), {Q(1, 3), Q(-1, 4), Q(1, 5), Q(0)}), GenericityError);
  CHECK_THROWS_AS(ParamSet(Q(1, 2), t, Profile::three), DomainError);
  CHECK_THROWS_AS(ParamSet(Q(1, 2), {Q(1, 3), Q(-1, 4), Q(0), Q(0)}, Profile::three), GenericityError);
  CHECK_THROWS_AS(ParamSet(Q(1, 2), {Q(1, 2), Q(1, 2), Q(0), Q(0)}, Profile::two), GenericityError);
  CHECK_NOTHROW(ParamSet(Q(1, 2), {Q(1, 3), Q(-1, 4), Q(1, 5), Q(0)}, Profile::four, ZeroPolicy::allow));
  CHECK_THROWS_AS(parse_profile("five"), DomainError);
  CHECK(parse_profile("three") == Profile::three);
  CHECK(to_string(Profile::two) == "two");
}

TEST_CASE("guard horizon covers larger sectors") {
  const auto p = ParamSet::defaults();
  CHECK_NOTHROW(p.check_guards(ParamSet::guard_horizon(4, 6)));
  CHECK_THROWS_AS(ParamSet(Q(1, 2), {Q(1, 2), Q(1, 2), Q(1, 3), Q(1, 3)}), GenericityError);
  CHECK_THROWS_AS(guarded_div(1, 0, "probe"), GenericityError);
}

TEST_CASE("parameter JSON round trip") {
  const auto p = ParamSet::defaults();
  const Json j = to_json(p);
  CHECK(j.dump() == R"({"q":"1/2","t":["1/3","-1/4","1/5","-1/6"],"profile":"four"})");
  CHECK(params_from_json(j) == p);
  CHECK(params_from_json(to_json(ParamSet::defaults(Profile::two))) == ParamSet::defaults(Profile::two));
}
