#include <doctest.h>

#include <random>

#include "gsp/qexp.hpp"

using namespace gsp;

namespace {

QExpansion random_series(std::mt19937_64& rng, long p, long N) {
  std::uniform_int_distribution<long> d(-20, 20);
  std::vector<Rational> c(static_cast<size_t>(N + 1));
  for (auto& x : c) x = d(rng);
  return QExpansion::from_rationals(p, c);
}

EisensteinSpec spec(long p, long k1, long k2) {
  EisensteinSpec s;
  s.p = p;
  s.kappa1 = LocAlgChar::algebraic(p, k1);
  s.kappa2 = LocAlgChar::algebraic(p, k2);
  s.xi = LocAlgChar::algebraic(p, k1 + k2);
  return s;
}

}  // namespace

TEST_CASE("star action oracles") {
  QExpansion F = QExpansion::from_rationals(3, {0, 1, 1});
  CHECK(star_action(LocAnFunction::identity(), F) == QExpansion::from_rationals(3, {0, 1, 2}));
  CHECK(star_action(LocAnFunction::one(), F) == F);
  std::mt19937_64 rng(2);
  QExpansion G = random_series(rng, 3, 30);
  auto e = LocAnFunction::unit_indicator();
  CHECK(star_action(e, star_action(e, G)) == star_action(e, G));
}

TEST_CASE("star action is a ring action") {
  std::mt19937_64 rng(9);
  std::vector<LocAnFunction> fs{LocAnFunction::identity(), LocAnFunction::power(2), LocAnFunction::unit_indicator(),
                                LocAnFunction::character(DirichletChar::quadratic(5)), LocAnFunction::binomial(3),
                                LocAnFunction::exponential(Rational(2), 1)};
  for (int i = 0; i < 5; ++i) {
    QExpansion F = random_series(rng, 5, 40);
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        if (!f.terms().empty() && !g.terms().empty() && f.terms()[0].binom > 0 && g.terms()[0].binom > 0) continue;
        CHECK(star_action(f * g, F) == star_action(f, star_action(g, F)));
        CHECK(star_action(f + g, F) == star_action(f, F) + star_action(g, F));
      }
    }
  }
}

TEST_CASE("depletion and theta") {
  std::vector<Rational> ones(10, Rational(1));
  QExpansion D = deplete(QExpansion::from_rationals(3, ones));
  for (long n = 0; n < 10; ++n) CHECK(D.a[n] == Cyclotomic(Rational(n % 3 == 0 ? 0 : 1)));
  CHECK(theta(QExpansion::from_rationals(3, {7})) == QExpansion::from_rationals(3, {0}));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    QExpansion F = random_series(rng, 3, 25);
    CHECK(theta(deplete(F)) == deplete(theta(F)));
    CHECK(deplete(deplete(F)) == deplete(F));
  }
}

TEST_CASE("half-power operator") {
  std::mt19937_64 rng(6);
  QExpansion F = deplete(random_series(rng, 3, 30));
  CHECK(half_power_nabla(F, LocAnFunction::identity(), 2) == theta(deplete(F)));
  auto rho = LocAnFunction::power(3);
  QExpansion twice = half_power_nabla(half_power_nabla(F, rho, 6), rho, 6);
  CHECK(twice == star_action(LocAnFunction::power(6, true), F));
  QExpansion G = half_power_nabla(random_series(rng, 3, 12), rho, 6);
  for (long n = 0; n <= 12; n += 3) CHECK(G.a[n].is_zero());
  CHECK_THROWS_AS(half_power_nabla(F, LocAnFunction::power(2), 2), DomainError);
}

TEST_CASE("eisenstein coefficient oracles") {
  EisensteinSpec s = spec(3, 1, 0);
  CHECK(eis_coeff(s, 2) == Cyclotomic(Rational(3)));
  CHECK(eis_coeff(s, 3).is_zero());
  CHECK(eis_coeff(s, 1) == Cyclotomic(Rational(1)));
  CHECK(eis_xi(s, 5).weight == "(-2;1)");
}

TEST_CASE("eisenstein family specialises to classical depleted series") {
  for (long p : {3L, 5L}) {
    for (auto [a, b] : {std::pair{1L, 0L}, {2L, 1L}, {0L, 3L}, {4L, 1L}}) {
      QExpansion F = eis_xi(spec(p, a, b), 120);
      CHECK_FALSE(F.zero_component);
      for (long n = 1; n <= 120; ++n) CHECK(F.a[n] == Cyclotomic(Rational(classical_depleted_eisenstein(p, a, b, n))));
    }
  }
}

TEST_CASE("eisenstein parity and weight labels") {
  QExpansion Z = eis_xi(spec(3, 1, 1), 20);
  CHECK(Z.zero_component);
  for (const Cyclotomic& c : Z.a) CHECK(c.is_zero());
  // Situation values: xi = 1 - r2, kappa1 = t1 - k, kappa2 = k gives zeta_H1 = (-1-t1; 1-r2)
  long t1 = 2, r2 = 1, k = 1;
  EisensteinSpec s = spec(3, t1 - k, k);
  s.xi = LocAlgChar::algebraic(3, 1 - r2);
  CHECK(eis_xi(s, 4).weight == "(-3;0)");
  // a unit rescale multiplies every coefficient
  EisensteinSpec u = spec(5, 2, 1);
  u.unit = Rational(-7, 2);
  QExpansion A = eis_xi(spec(5, 2, 1), 30), B = eis_xi(u, 30);
  for (long n = 0; n <= 30; ++n) CHECK(B.a[n] == Cyclotomic(Rational(-7, 2)) * A.a[n]);
}

TEST_CASE("tame kronecker characters") {
  TameChar t = TameChar::parse("kron:-4");
  CHECK(t.value(3) == -1);
  CHECK(t.value(5) == 1);
  CHECK(t.parity() == -1);
  CHECK(TameChar::parse("trivial").parity() == 1);
  EisensteinSpec s = spec(3, 1, 1);
  s.tame = t;
  CHECK(s.parity_ok());
  CHECK_FALSE(eis_xi(s, 10).zero_component);
}
