#include <doctest.h>

#include <random>

#include "gsp/exactnum.hpp"

using namespace gsp;

TEST_CASE("valuation oracles") {
  CHECK(vp(make_rational(9, 2), 3).value() == 2);
  CHECK(vp(Rational(0), 5).is_infinite());
  CHECK(vp(Rational(50), 5).value() == 2);
  CHECK(vp(make_rational(2, 75), 5).value() == -2);
  CHECK(vp(Rational(-1), 7).value() == 0);
}

TEST_CASE("valuation is additive and ultrametric") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-500, 500), e(1, 400);
  for (int i = 0; i < 300; ++i) {
    Rational x = make_rational(d(rng), e(rng)), y = make_rational(d(rng), e(rng));
    for (long p : {2L, 3L, 5L, 7L}) {
      CHECK(vp(x * y, p) == vp(x, p) + vp(y, p));
      CHECK(vmin(vp(x, p), vp(y, p)) <= vp(x + y, p));
    }
  }
}

TEST_CASE("rational parsing round-trips") {
  CHECK(to_string(parse_rational("-7/2")) == "-7/2");
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("5")) == "5/1");
  CHECK_THROWS_AS(parse_rational("0.5"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-100000, 100000), e(1, 1000);
  for (int i = 0; i < 200; ++i) {
    Rational q = make_rational(d(rng), e(rng));
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("cyclotomic field arithmetic") {
  Cyclotomic z3 = Cyclotomic::zeta_power(3, 1);
  CHECK(z3 * z3 * z3 == Cyclotomic(Rational(1)));
  CHECK(z3 + z3 * z3 == Cyclotomic(Rational(-1)));
  Cyclotomic i = Cyclotomic::zeta_power(4, 1);
  CHECK(i * i == Cyclotomic(Rational(-1)));
  // Q(zeta_3) and Q(zeta_4) meet in Q(zeta_12).
  Cyclotomic m = z3 * i;
  CHECK(m.order() == 12);
  CHECK(m.pow(12) == Cyclotomic(Rational(1)));
  CHECK(m * m.inverse() == Cyclotomic(Rational(1)));
  CHECK(m.conj() * m == Cyclotomic(Rational(1)));
  CHECK_THROWS_AS(Cyclotomic().inverse(), DomainError);
}

TEST_CASE("gauss sum oracles") {
  Cyclotomic g3 = gauss_sum(DirichletChar::quadratic(3));
  CHECK(g3 * g3 == Cyclotomic(Rational(-3)));
  Cyclotomic g5 = gauss_sum(DirichletChar::quadratic(5));
  CHECK(g5 * g5 == Cyclotomic(Rational(5)));
  CHECK(gauss_sum(DirichletChar::trivial(7)) == Cyclotomic(Rational(1)));
}

TEST_CASE("gauss sums satisfy G(chi) G(chi^-1) = chi(-1) p^c") {
  for (long p : {3L, 5L, 7L}) {
    for (int c = 1; c <= 2; ++c) {
      long phi = ipow(p, c - 1) * (p - 1);
      for (long k = 0; k < phi; ++k) {
        DirichletChar chi(p, c, k);
        if (!chi.is_primitive()) continue;
        Cyclotomic lhs = gauss_sum(chi) * gauss_sum(chi.inverse());
        CHECK(lhs == Cyclotomic(Rational(chi.parity()) * rpow(Rational(p), c)));
        CHECK(gauss_sum(chi) * gauss_sum_inverse(chi) == Cyclotomic(Rational(1)));
      }
    }
  }
}

TEST_CASE("additive character sums") {
  CHECK(additive_char_sum(3, 1) == Cyclotomic(Rational(-1)));
  CHECK(additive_char_sum(3, 2).is_zero());
  CHECK(additive_char_sum(5, 3).is_zero());
  for (long p : {3L, 5L, 7L}) {
    CHECK(additive_char_sum(p, 1) == Cyclotomic(Rational(mobius(p))));
    for (long h = 2; h <= 4; ++h) CHECK(additive_char_sum(p, h).is_zero());
  }
  CHECK(mobius(9) == 0);
  CHECK(mobius(15) == 1);
}

TEST_CASE("dirichlet characters are multiplicative") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(1, 2000);
  DirichletChar chi(5, 2, 3);
  for (int i = 0; i < 100; ++i) {
    Integer a = d(rng), b = d(rng);
    CHECK(chi.value(Integer(a * b)) == chi.value(a) * chi.value(b));
  }
  CHECK(DirichletChar::parse(3, "quad") == DirichletChar::quadratic(3));
  CHECK(DirichletChar::parse(3, "quad:1").label() == "1:1");
  CHECK(DirichletChar::parse(3, "trivial").label() == "trivial");
  CHECK(DirichletChar::quadratic(3).parity() == -1);
  CHECK(DirichletChar::quadratic(5).parity() == 1);
}

TEST_CASE("quadratic surds") {
  QuadSurd r = QuadSurd::sqrt_p(3);
  CHECK(r * r == QuadSurd(Rational(3), 3));
  QuadSurd x(Rational(1), make_rational(-1, 3), 3);
  CHECK(x * x.inverse() == QuadSurd(Rational(1), 3));
  CHECK(r.valuation().value() == make_rational(1, 2));
}
