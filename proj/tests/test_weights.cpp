#include <doctest.h>

#include <random>
#include <set>

#include "gsp/weights.hpp"

using namespace gsp;

namespace {

Weight W(const char* s) { return Weight::parse(s); }

Weight random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-20, 20);
  return Weight(d(rng), d(rng), make_rational(d(rng), 2));
}

}  // namespace

TEST_CASE("weyl action oracles") {
  CHECK(weyl_act(WeylElt::w1(), W("3,1,0")) == W("(3,-1;1)"));
  CHECK(weyl_act(WeylElt::id(), W("(5,2;-7)")) == W("(5,2;-7)"));
  CHECK(weyl_act(WeylElt::wmax(), W("3,1,0")) == W("(-3,-1;4)"));
  CHECK(weyl_act(WeylElt::w1(), W("3,1,0")).str() == "(3,-1;1)");
}

TEST_CASE("closed-form action matches matrix conjugation") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    Weight k = random_weight(rng);
    for (const WeylElt& w : WeylElt::all()) CHECK(weyl_act(w, k) == weyl_act_matrix(w, k));
  }
}

TEST_CASE("weyl group structure") {
  std::set<int> seen;
  for (const WeylElt& a : WeylElt::all()) {
    seen.insert(a.index());
    CHECK(a * a.inverse() == WeylElt::id());
    CHECK(in_gsp4(a.matrix()));
  }
  CHECK(seen.size() == 8);
  CHECK(WeylElt::wmax().length() == 4);
  CHECK(WeylElt::wmax() * WeylElt::wmax() == WeylElt::id());
}

TEST_CASE("star action oracles") {
  CHECK(star_act(WeylElt::w1(), Weight()) == W("(0,-2;1)"));
  CHECK(-weyl_act(w_MG_max().inverse(), star_act(WeylElt::w1(), Weight())) == W("(2,0;-1)"));
  CHECK(rho_G() == W("(2,1;-3/2)"));
  std::mt19937_64 rng(4);
  Weight k = random_weight(rng);
  CHECK(star_act(WeylElt::id(), k) == k);
}

TEST_CASE("star action is a group action") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    Weight k = random_weight(rng);
    for (const WeylElt& a : WeylElt::all()) {
      for (const WeylElt& b : WeylElt::all()) CHECK(star_act(a * b, k) == star_act(a, star_act(b, k)));
    }
  }
}

TEST_CASE("situation weights") {
  SituationWeights s = situation_weights(3, 1, 1, 1, 0);
  CHECK(s.kappa_G == W("(3,-3;-2)"));
  CHECK(s.kappa_H == W("(0,0;-2)"));
  CHECK(s.nu_H == W("(1,1;-3)"));
  SituationWeights t = situation_weights(0, 0, 0, 0, 1);
  CHECK(t.kappa_G == W("(2,0;-1)"));
  CHECK(t.kappa_H == W("(1,1;-1)"));
  CHECK_THROWS_AS(situation_weights(2, 1, 1, 1, 0), DomainError);
  CHECK(kappa_G_star(3, 1) == W("(3,-3;2)"));
}

TEST_CASE("small slope conditions") {
  Valuation inf = Valuation::infinity();
  CHECK(slope_check(SlopeKind::Klingen, Valuation(Rational(2)), inf, 3, 1));
  CHECK_FALSE(slope_check(SlopeKind::Siegel, inf, Valuation(Rational(2)), 3, 1));
  CHECK(slope_check(SlopeKind::Borel, Valuation(Rational(0)), Valuation(Rational(0)), 5, 2));
}

TEST_CASE("ss condition fails when lambda is far too large") {
  LambdaTable huge{Rational(1000), Rational(1000), Rational(0)};
  for (SsKind k : {SsKind::SsMw1, SsKind::SsM_w1}) {
    SsReport r = ss_condition(k, huge, kappa_G_star(2, 1));
    CHECK_FALSE(r.holds);
  }
}

TEST_CASE("torus monoid generators") {
  // t_S and t_Kl generate T^{G,-} up to the center
  CHECK(t_siegel(3).tag(3) == "T-");
  CHECK(t_klingen(3).in_minus(3));
  CHECK(t_center(3).tag(3) == "T+ T-");
  TorusMonoidElt inv(1, make_rational(1, 3), make_rational(1, 9));
  CHECK(inv.in_plus(3));
}

TEST_CASE("nearly weight set") {
  NearlyWeightSet s = nearly_weight_set(1, 0);
  CHECK(s.sigma == std::vector<std::pair<long, long>>{{0, 1}, {1, 0}});
  CHECK(s.entries.size() == 12);
  CHECK(nearly_weight_set(0, 0).sigma == std::vector<std::pair<long, long>>{{0, 0}});
  for (long r1 = 0; r1 <= 4; ++r1) {
    for (long r2 = 0; r2 <= r1; ++r2) {
      for (const auto& e : nearly_weight_set(r1, r2).entries) {
        CHECK(e.weight.valuation_at(exps_siegel()) >= r2 + 1);
        CHECK(e.weight.valuation_at(exps_klingen()) >= r2);
      }
    }
  }
}
