#include <doctest.h>

#include "gsp/lfactors.hpp"
#include "gsp/zeta.hpp"

using namespace gsp;

namespace {

Cyclotomic C(long n, long d = 1) { return Cyclotomic(make_rational(n, d)); }

}  // namespace

TEST_CASE("minimal depth") {
  CHECK(min_beta(0) == 2);
  CHECK(min_beta(1) == 2);
  CHECK(min_beta(3) == 6);
  CHECK_THROWS_AS(min_beta(-1), InputError);
}

TEST_CASE("unramified zeta integral") {
  IwahoriZetaInput in{{C(1), C(1)}, {C(1), C(1)}, DirichletChar::trivial(3), 2, 3};
  IwahoriZetaResult r = zeta_iwahori(in);
  CHECK(r.prefactor_exponent == -8);
  CHECK(r.r == 0);
  // (1 - P^-1/3)^4 over (1 - P)^4
  const long b4[] = {1, -4, 6, -4, 1};
  REQUIRE(r.numerator.size() == 5);
  REQUIRE(r.denominator.size() == 5);
  for (int k = 0; k <= 4; ++k) {
    CHECK(r.numerator[k] == C(b4[k]) * C(1, 3).pow(k));
    CHECK(r.denominator[k] == C(b4[k]));
  }
  in.beta = 1;
  CHECK_THROWS_AS(zeta_iwahori(in), DomainError);
}

TEST_CASE("ramified zeta integral") {
  IwahoriZetaInput in{{C(2), C(5)}, {C(1), C(3)}, DirichletChar::quadratic(3), 2, 3};
  IwahoriZetaResult r = zeta_iwahori(in);
  CHECK(r.r == 1);
  CHECK(r.gauss_inv4 == C(1, 9));
  CHECK(r.product == C(30));
  // agrees with the Gauss branch of the modified factor
  SatakeGSp4 th{{C(2), C(5), C(3), C(15, 2)}};
  SatakeGL2 mu{{C(1), C(3)}};
  for (long j = 0; j <= 3; ++j) {
    CHECK(r.body_at(j, 3) == ep_modifier_A(th, mu, DirichletChar::quadratic(3), j, 3).value);
  }
}

TEST_CASE("whittaker vanishing") {
  CHECK(whittaker_vanish(3, 2).value.is_zero());
  CHECK(whittaker_vanish(5, 3).value.is_zero());
  WhittakerVanishResult w = whittaker_vanish(3, 1);
  CHECK(w.warning);
  CHECK(w.value == C(-1));
  for (long p : {3L, 5L, 7L}) {
    for (long b = 2; b <= 5; ++b) CHECK(whittaker_vanish(p, b).value.is_zero());
  }
}

TEST_CASE("zeta body against the modified factor") {
  IwahoriZetaInput in{{C(2), C(3)}, {C(1), C(5)}, DirichletChar::trivial(3), 2, 3};
  SatakeGSp4 th{{C(2), C(3), C(1), C(3, 2)}};
  SatakeGL2 mu{{C(1), C(5)}};
  // alpha2 mu1 = 3 = p^j: both sides share the pole at j = 1 and agree elsewhere
  CHECK_THROWS_AS(zeta_iwahori(in).body_at(1, 3), DomainError);
  CHECK_THROWS_AS(ep_modifier_A(th, mu, DirichletChar::trivial(3), 1, 3), DomainError);
  for (long j : {0L, 2L, 3L}) {
    CHECK(zeta_iwahori(in).body_at(j, 3) == ep_modifier_A(th, mu, DirichletChar::trivial(3), j, 3).value);
  }
  IwahoriZetaInput one{{C(1), C(1)}, {C(1), C(1)}, DirichletChar::trivial(3), 2, 3};
  CHECK(zeta_iwahori(one).body_at(1, 3).is_zero());
  SymbolicPair z = zeta_body_symbolic(3), e = ep_trivial_symbolic(3);
  CHECK(z.num * e.den == e.num * z.den);
  CrossCheckReport rep = cross_check_ep(7, 20, 3);
  CHECK(rep.symbolic_ok);
  CHECK(rep.checked == 21);
  CHECK(rep.failed == 0);
}
