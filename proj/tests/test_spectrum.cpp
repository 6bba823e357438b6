#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "mrbound/errors.hpp"
#include "mrbound/spectrum.hpp"

using namespace mrbound;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

PotentialParams a2b(double alpha, double inv_b) { return {alpha, 2.0 / inv_b, 1.0 / inv_b}; }

double hartree(const PotentialParams& p, const ApproxScheme& s, const char* label) {
  return binding_energy_atomic(energy(p, s, parse_state_label(label)), p.b);
}

// Distance in units in the last place.
long long ulp_distance(double a, double b) {
  if (a == b) {
    return 0;
  }
  long long ia = 0;
  long long ib = 0;
  std::memcpy(&ia, &a, sizeof a);
  std::memcpy(&ib, &b, sizeof b);
  if (ia < 0) ia = std::numeric_limits<long long>::min() - ia;
  if (ib < 0) ib = std::numeric_limits<long long>::min() - ib;
  return std::llabs(ia - ib);
}

}  // namespace

TEST_CASE("intermediates", "[spectrum]") {
  const PotentialParams p{0.75, 80.0, 40.0};
  const auto mid = spectrum_intermediates(p, ApproxScheme::improved(), {0, 1});
  CHECK_THAT(mid.a, WithinRel(std::sqrt(0.25 + 8.0), 1e-15));
  CHECK_THAT(mid.nu_l, WithinRel(0.5 * (1.0 + std::sqrt(8.25)), 1e-15));
  CHECK_THAT(mid.nu_l, WithinRel(1.936140661634507165, 1e-15));
  CHECK_THAT(mid.delta_E_l, WithinRel(2.0 / 12.0, 1e-15));
  CHECK_THAT(mid.beta1, WithinRel(78.0, 1e-15));
  CHECK_THAT(mid.beta2, WithinRel(-0.1875 + 2.0, 1e-15));
}

TEST_CASE("epsilon and energy of the 2p level", "[spectrum][oracle]") {
  const PotentialParams p = a2b(0.75, 0.025);
  CHECK_THAT(epsilon_nl(p, ApproxScheme::improved(), {0, 1}), WithinRel(19.643164581376981756, 1e-14));
  const auto r = energy(p, ApproxScheme::usual(), {0, 1});
  REQUIRE(r.bound());
  CHECK_THAT(*r.energy, WithinRel(-19.643164581376981756 * 19.643164581376981756, 1e-14));
}

TEST_CASE("printed table spot values", "[spectrum][printed]") {
  const auto tab = ApproxScheme::improved(kTabulatedImprovedD0);
  const auto usual = ApproxScheme::usual();
  CHECK_THAT(hartree(a2b(0.75, 0.025), tab, "2p"), WithinAbs(0.1205279, 2e-7));
  CHECK_THAT(hartree(a2b(0.75, 0.025), usual, "2p"), WithinAbs(0.1205793, 2e-7));
  CHECK_THAT(hartree(a2b(1.5, 0.050), tab, "3d"), WithinAbs(0.0294456, 2e-7));
  CHECK_THAT(hartree(a2b(0.75, 0.075), tab, "4f"), WithinAbs(0.0023157, 2e-7));
  CHECK_THAT(hartree(a2b(1.5, 0.025), usual, "6g"), WithinAbs(0.0040422, 2e-7));
}

TEST_CASE("D0 only shifts the level", "[spectrum][property]") {
  const PotentialParams p = a2b(1.5, 0.05);
  const QuantumState q{1, 2};
  const double e_u = *energy(p, ApproxScheme::usual(), q).energy;
  const double e_i = *energy(p, ApproxScheme::improved(), q).energy;
  CHECK_THAT(e_i - e_u, WithinRel(6.0 / 12.0, 1e-10));
  CHECK(epsilon_nl(p, ApproxScheme::usual(), q) == epsilon_nl(p, ApproxScheme::improved(), q));
}

TEST_CASE("energy is symmetric under alpha -> 1 - alpha", "[spectrum][property]") {
  // Dyadic alphas: 1 - alpha is exact, so both sides see identical inputs.
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> alpha_num(-96, 160);
  std::uniform_real_distribution<double> coupling(0.5, 200.0);
  std::uniform_real_distribution<double> range(0.5, 60.0);
  std::uniform_int_distribution<int> quantum(0, 5);
  std::uniform_int_distribution<int> pick(0, 1);
  for (int i = 0; i < 200; ++i) {
    const double alpha = alpha_num(rng) / 64.0;
    const double A = coupling(rng);
    const double b = range(rng);
    const QuantumState q{quantum(rng), quantum(rng)};
    const ApproxScheme s = pick(rng) ? ApproxScheme::improved() : ApproxScheme::usual();
    const double e1 = epsilon_nl({alpha, A, b}, s, q);
    const double e2 = epsilon_nl({1.0 - alpha, A, b}, s, q);
    CAPTURE(alpha, A, b, q.n, q.l);
    CHECK(ulp_distance(e1, e2) <= 1);
  }
}

TEST_CASE("critical coupling puts the level at threshold", "[spectrum][property]") {
  for (double alpha : {-0.5, 0.0, 0.25, 0.75, 1.5, 2.5}) {
    for (auto s : {ApproxScheme::usual(), ApproxScheme::improved()}) {
      for (int n = 0; n < 4; ++n) {
        for (int l = 0; l < 4; ++l) {
          const QuantumState q{n, l};
          const double ac = critical_coupling(alpha, s, q);
          const double eps = epsilon_nl({alpha, ac, 3.0}, s, q);
          CAPTURE(alpha, n, l, ac);
          CHECK_THAT(eps, WithinAbs(0.0, 1e-10));
          CHECK(epsilon_nl({alpha, ac * 1.01 + 0.01, 3.0}, s, q) > 0.0);
        }
      }
    }
  }
  CHECK_THAT(critical_coupling(0.75, ApproxScheme::improved(), {0, 1}),
             WithinRel(3.936140661634507165, 1e-14));
  // alpha = 0, 1s: A_c = 1
  CHECK_THAT(critical_coupling(0.0, ApproxScheme::usual(), {0, 0}), WithinRel(1.0, 1e-15));
}

TEST_CASE("unbound levels carry no energy", "[spectrum]") {
  const PotentialParams p{0.0, 0.5, 1.0};
  const auto r = energy(p, ApproxScheme::improved(), {0, 0});
  CHECK_FALSE(r.bound());
  CHECK(r.epsilon < 0.0);
  CHECK_THROWS_AS(binding_energy_atomic(r, 1.0), UnboundStateError);
  CHECK_THROWS_AS(energy(p, ApproxScheme::usual(), {-1, 0}), DomainError);
}

TEST_CASE("levels rise with n and with 1/b", "[spectrum][property]") {
  const auto s = ApproxScheme::improved();
  for (double alpha : {0.75, 1.5}) {
    for (int l = 1; l < 4; ++l) {
      double prev = -1e300;
      for (int n = 0; n < 4; ++n) {
        const auto r = energy(a2b(alpha, 0.025), s, {n, l});
        REQUIRE(r.bound());
        CHECK(*r.energy > prev);
        prev = *r.energy;
      }
    }
    double prev = 1e300;
    for (double ib : {0.025, 0.05, 0.075, 0.1}) {
      const double be = hartree(a2b(alpha, ib), s, "3p");
      CHECK(be < prev);
      prev = be;
    }
  }
}

TEST_CASE("number of s-wave levels", "[spectrum]") {
  CHECK(n_max({0.0, 0.5, 1.0}) == -1);
  CHECK(n_max({0.0, 1.5, 1.0}) == 0);
  // exact integer: top level sits at threshold
  CHECK(n_max({0.0, 9.0, 1.0}) == 2);
  CHECK_FALSE(s_wave_energy({0.0, 9.0, 1.0}, 2).bound());
  for (double alpha : {-0.75, 0.25, 0.75, 1.5}) {
    for (double A : {3.3, 17.0, 80.0}) {
      const PotentialParams p{alpha, A, 2.0};
      const int top = n_max(p);
      CAPTURE(alpha, A, top);
      for (int n = 0; n <= top; ++n) {
        CHECK(s_wave_energy(p, n).bound());
      }
      CHECK_FALSE(s_wave_energy(p, top + 1).bound());
    }
  }
}

TEST_CASE("s-wave branches agree with the general formula", "[spectrum]") {
  for (double alpha : {-1.0, 0.0, 0.3, 0.5, 0.7, 1.0, 2.0}) {
    const PotentialParams p{alpha, 50.0, 3.0};
    for (int n = 0; n < 4; ++n) {
      const auto a = s_wave_energy(p, n);
      const auto b = energy(p, ApproxScheme::usual(), {n, 0});
      CAPTURE(alpha, n);
      CHECK_THAT(a.epsilon, WithinRel(b.epsilon, 1e-13));
    }
  }
  CHECK_THROWS_AS(s_wave_energy({0.2, 50.0, 3.0}, -1), DomainError);
}

TEST_CASE("Hulthen reduction", "[spectrum]") {
  const HulthenParams h{1.0, 0.01, 1.0};
  CHECK_THAT(hulthen_coupling(h), WithinRel(200.0, 1e-15));
  for (int n = 0; n < 3; ++n) {
    for (int l = 0; l < 3; ++l) {
      const QuantumState q{n, l};
      CAPTURE(n, l);
      CHECK_THAT(*hulthen_energy(h, ApproxScheme::usual(), q).energy,
                 WithinRel(hulthen_usual_closed_form(h, q), 1e-12));
      CHECK_THAT(*hulthen_energy(h, ApproxScheme::improved(), q).energy,
                 WithinRel(hulthen_improved_closed_form(h, q), 1e-12));
    }
  }
  CHECK_THROWS_AS(hulthen_coupling({1.0, 0.0, 1.0}), DomainError);
}

TEST_CASE("Coulomb limit", "[spectrum][property]") {
  const double mu = kHydrogenReducedMass;
  for (int n = 0; n < 3; ++n) {
    for (int l = 0; l < 3; ++l) {
      const QuantumState q{n, l};
      const HulthenParams h{1.0, 1e-8, mu};
      CAPTURE(n, l);
      CHECK_THAT(*hulthen_energy(h, ApproxScheme::usual(), q).energy,
                 WithinRel(coulomb_limit_energy(1.0, mu, q), 1e-6));
    }
  }
  CHECK_THAT(coulomb_epsilon0(1.0, mu) * kHartreeEv, WithinRel(13.6, 1e-3));
  CHECK_THAT(coulomb_epsilon0(2.0, 1.0), WithinRel(2.0, 1e-15));
}
