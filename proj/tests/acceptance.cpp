// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gsp/dist.hpp"
#include "gsp/lfactors.hpp"
#include "gsp/qexp.hpp"
#include "gsp/repmodel.hpp"
#include "gsp/weights.hpp"
#include "gsp/zeta.hpp"

using namespace gsp;

namespace {

constexpr uint64_t kSeed = 20240607;
constexpr double kFloatTol = 1e-9;       // float oracles only (criterion 9)
constexpr double kWeylBudget = 5.0;      // seconds
constexpr double kBranchBudget = 30.0;   // seconds
constexpr double kTotalBudget = 180.0;   // seconds

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Weight random_weight(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-30, 30);
  return Weight(d(rng), d(rng), make_rational(d(rng), 2));
}

Outcome weyl_suite() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSeed);
  long checks = 0;
  for (int i = 0; i < 200; ++i) {
    Weight k = random_weight(rng);
    for (const WeylElt& w : WeylElt::all()) {
      o.require(weyl_act(w, k) == weyl_act_matrix(w, k), "closed form != conjugation for " + w.label() + " at " + k.str());
      ++checks;
    }
  }
  for (int i = 0; i < 50; ++i) {
    Weight k = random_weight(rng);
    for (const WeylElt& a : WeylElt::all()) {
      for (const WeylElt& b : WeylElt::all()) {
        o.require(star_act(a * b, k) == star_act(a, star_act(b, k)), "star law fails for " + a.label() + "," + b.label());
        ++checks;
      }
    }
  }
  double dt = seconds_since(t0);
  o.require(dt < kWeylBudget, "runtime " + std::to_string(dt) + " s");
  if (o.ok) o.detail = std::to_string(checks) + " exact checks in " + std::to_string(dt) + " s";
  return o;
}

Outcome shifted_anchor() {
  Outcome o;
  Weight got = -weyl_act(w_MG_max().inverse(), star_act(WeylElt::w1(), Weight()));
  o.require(got == Weight(2, 0, -1), "got " + got.str());
  if (o.ok) o.detail = got.str();
  return o;
}

// gamma * n(z, a, b) with symbolic z, a, b, plus similitude 1.
std::vector<Poly> symbolic_unipotent_coords() {
  Poly z = Poly::var(3, 0), a = Poly::var(3, 1), b = Poly::var(3, 2), one = Poly::constant(3, 1), zero(3);
  PolyMat4 n{{{one, zero, zero, zero}, {z, one, zero, zero}, {a, zero, one, zero}, {b, a, -z, one}}};
  PolyMat4 g = polymat_mul(polymat_from(gamma_matrix(), 3), n);
  std::vector<Poly> v;
  for (const auto& row : g) {
    for (const Poly& x : row) v.push_back(x);
  }
  v.push_back(one);
  return v;
}

Outcome branching_identity() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Poly> coords = symbolic_unipotent_coords();
  long tuples = 0, points = 0;
  for (long t1 = 0; t1 <= 6; ++t1) {
    for (long t2 = 0; t1 + t2 <= 6; ++t2) {
      for (long r2 = 0; t1 + t2 + r2 <= 6; ++r2) {
        BranchParams bp{t1, t2, t1 + t2 + r2, r2};
        Poly f = branch_closed_form(bp).f.compose(coords);
        // Both sides have degree <= D in each variable, so agreement on {0..D}^3 is an identity.
        long D = t1 + t2 + 2 * r2;
        for (size_t v = 0; v < 3; ++v) o.require(f.degree_in(v) <= D, "degree bound violated");
        for (long z = 0; z <= D; ++z) {
          for (long a = 0; a <= D; ++a) {
            for (long b = 0; b <= D; ++b) {
              bool eq = f.eval({Rational(z), Rational(a), Rational(b)}) == branch_unipotent_formula(bp, z, a, b);
              o.require(eq, "mismatch at (t1,t2,r2)=(" + std::to_string(t1) + "," + std::to_string(t2) + "," + std::to_string(r2) + ")");
              ++points;
            }
          }
        }
        ++tuples;
      }
    }
  }
  double dt = seconds_since(t0);
  o.require(dt < kBranchBudget, "runtime " + std::to_string(dt) + " s");
  if (o.ok) o.detail = std::to_string(tuples) + " tuples, " + std::to_string(points) + " grid points in " + std::to_string(dt) + " s";
  return o;
}

Outcome branching_compatibility() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 4);
  const long p = 3;
  BranchParams anchor{1, 1, 3, 1};
  Cyclotomic cw = compat_clockwise(anchor, 3, 3, 12, p);
  Rational acw = compat_anticlockwise(anchor, 3, 3, 12);
  o.require(cw == Cyclotomic(Rational(432)) && acw == 432, "anchor (3,3,12) gives " + cw.str() + " / " + to_string(acw));
  long tuples = 0, evals = 0;
  for (long t1 = 0; t1 <= 2; ++t1) {
    for (long t2 = 0; t2 <= 2; ++t2) {
      for (long r2 = 0; r2 <= 2; ++r2) {
        BranchParams bp{t1, t2, t1 + t2 + r2, r2};
        for (int k = 0; k < 1000; ++k) {
          Rational z, a = random_rational(rng, 30, 9), b = random_rational(rng, 30, 9);
          do {
            z = random_rational(rng, 30, 9);
          } while (vp(1 + z, p) != Valuation(Rational(0)));
          o.require(compat_clockwise(bp, z, a, b, p) == Cyclotomic(compat_anticlockwise(bp, z, a, b)), "sides disagree");
          ++evals;
        }
        ++tuples;
      }
    }
  }
  if (o.ok) o.detail = "anchor 432; " + std::to_string(tuples) + " tuples x 1000 points (" + std::to_string(evals) + ")";
  return o;
}

Outcome matrix_identities() {
  Outcome o;
  IdentityReport r = verify_matrix_identities(kSeed, 100);
  o.require(r.failed == 0 && r.checked > 0, r.failures.empty() ? "no checks ran" : r.failures.front());
  o.detail = std::to_string(r.checked) + " checks, " + std::to_string(r.failed) + " failed";
  return o;
}

Outcome gauss_suite() {
  Outcome o;
  long chars = 0;
  for (long p : {3L, 5L, 7L}) {
    for (int c = 0; c <= 2; ++c) {
      long phi = c == 0 ? 1 : ipow(p, static_cast<unsigned>(c - 1)) * (p - 1);
      for (long k = 0; k < phi; ++k) {
        DirichletChar chi(p, c, k);
        if (!chi.is_primitive()) continue;
        Cyclotomic lhs = gauss_sum(chi) * gauss_sum(chi.inverse());
        o.require(lhs == Cyclotomic(Rational(chi.parity()) * rpow(Rational(p), c)), "G G^-1 fails for " + chi.label());
        ++chars;
      }
    }
    for (long h = 2; h <= 5; ++h) o.require(additive_char_sum(p, h).is_zero(), "additive sum nonzero at h=" + std::to_string(h));
    for (long beta = 2; beta <= 5; ++beta) o.require(whittaker_vanish(p, beta).value.is_zero(), "vanishing fails at beta=" + std::to_string(beta));
  }
  if (o.ok) o.detail = std::to_string(chars) + " primitive characters; sums for h=2..5; beta=2..5";
  return o;
}

Outcome euler_cross_check() {
  Outcome o;
  CrossCheckReport r = cross_check_ep(kSeed, 20, 3);
  o.require(r.symbolic_ok, "symbolic cross-multiplication differs");
  o.require(r.failed == 0, r.failures.empty() ? "" : r.failures.front());
  o.detail = "symbolic " + std::string(r.symbolic_ok ? "ok" : "FAILED") + ", " + std::to_string(r.checked - 1) + " random sets";
  return o;
}

Outcome eisenstein_suite() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 8);
  std::uniform_int_distribution<long> d(-50, 50);
  for (long p : {3L, 5L}) {
    std::vector<Rational> c(61);
    for (auto& x : c) x = d(rng);
    QExpansion F = QExpansion::from_rationals(p, c);
    std::vector<LocAnFunction> fs{LocAnFunction::one(), LocAnFunction::identity(), LocAnFunction::power(3),
                                  LocAnFunction::unit_indicator(), LocAnFunction::character(DirichletChar::quadratic(p)),
                                  LocAnFunction::power(-2, true), LocAnFunction::binomial(2)};
    for (size_t i = 0; i < fs.size(); ++i) {
      for (size_t j = 0; j < fs.size(); ++j) {
        if (i == fs.size() - 1 && j == fs.size() - 1) continue;  // products of two binomials are not modelled
        o.require(star_action(fs[i] * fs[j], F) == star_action(fs[i], star_action(fs[j], F)), "multiplicativity");
        o.require(star_action(fs[i] + fs[j], F) == star_action(fs[i], F) + star_action(fs[j], F), "additivity");
      }
    }
    o.require(star_action(LocAnFunction::one(), F) == F, "unit acts trivially");
    o.require(deplete(deplete(F)) == deplete(F), "depletion idempotence");
  }
  long compared = 0;
  for (long p : {3L, 5L, 7L}) {
    for (auto [a, b] : {std::pair{1L, 0L}, {0L, 1L}, {3L, 0L}, {2L, 1L}, {4L, 3L}}) {
      EisensteinSpec s;
      s.p = p;
      s.kappa1 = LocAlgChar::algebraic(p, a);
      s.kappa2 = LocAlgChar::algebraic(p, b);
      QExpansion E = eis_xi(s, 200);
      for (long n = 0; n <= 200; ++n) {
        o.require(E.a[n] == Cyclotomic(Rational(classical_depleted_eisenstein(p, a, b, n))), "specialisation differs");
        ++compared;
      }
    }
  }
  EisensteinSpec bad;
  bad.p = 3;
  bad.kappa1 = LocAlgChar::algebraic(3, 1);
  bad.kappa2 = LocAlgChar::algebraic(3, 1);
  QExpansion Z = eis_xi(bad, 50);
  bool all_zero = true;
  for (const auto& x : Z.a) all_zero = all_zero && x.is_zero();
  o.require(Z.zero_component && all_zero, "wrong-parity family not flagged as zero");
  if (o.ok) o.detail = "ring laws ok; " + std::to_string(compared) + " coefficients to q^200; parity flag ok";
  return o;
}

Outcome growth_constants() {
  Outcome o;
  long cases = 0;
  for (long p : {3L, 5L, 7L}) {
    for (Rational e : {Rational(1, p - 1), Rational(1, 2 * (p - 1)), Rational(1, 10)}) {
      EpsilonConstants c = epsilon_constants(p, e);
      o.require(epsilon_inequalities_hold(c), "constant inequalities at p=" + std::to_string(p) + " eps=" + to_string(e));
      BinomBoundReport r = binom_norm_bound_check(p, e, 10000);
      o.require(r.discrete_max <= r.analytic_sup + kFloatTol, "discrete sweep exceeds the analytic maximum");
      double sup = 2.0 / (e.get_d() * std::exp(1.0) * std::log(double(p)));
      o.require(std::abs(r.analytic_sup - sup) <= kFloatTol, "analytic maximum formula");
      o.require(r.analytic_sup <= c.c_half + kFloatTol, "analytic maximum exceeds C_{eps/2}");
      double lhs = std::pow(double(p), -double(c.n_eps) + 1.0 / double(p - 1));
      o.require(lhs <= 1.0 / c.c_half + kFloatTol, "N_eps inequality");
      ++cases;
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " (p, eps) pairs, K = 10^4, tol 1e-9";
  return o;
}

Outcome interpolation_suite() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 10);
  const long p = 3;
  DirichletChar chi = DirichletChar::quadratic(p);
  o.require(gauss_sum(chi.inverse()).pow(-4) == Cyclotomic(Rational(1, 9)), "Gauss factor is not 1/9");
  for (int i = 0; i < 20; ++i) {
    Rational t1 = random_rational(rng, 9, 5, true), t2 = random_rational(rng, 9, 5, true), t3 = random_rational(rng, 9, 5, true);
    Rational m1 = random_rational(rng, 9, 5, true), m2 = random_rational(rng, 9, 5, true);
    SatakeGSp4 th{{Cyclotomic(t1), Cyclotomic(t2), Cyclotomic(t3), Cyclotomic(t2 * t3 / t1)}};
    SatakeGL2 mu{{Cyclotomic(m1), Cyclotomic(m2)}};
    for (long j = 0; j <= 3; ++j) {
      Rational want = Rational(1, 9) * rpow(Rational(p), 4 * j) * rpow(t1 * t2 * m1 * m2, -2);
      o.require(ep_modifier_A(th, mu, chi, j, p).value == Cyclotomic(want), "modified factor anchor");
    }
  }
  o.require(beta_bound(0) == 2 && beta_bound(1) == 2 && beta_bound(2) == 4, "beta table");
  std::uniform_int_distribution<long> d(0, 8);
  for (int i = 0; i < 100; ++i) {
    long r2 = d(rng), r1 = r2 + d(rng), t2 = d(rng);
    CritRange c = crit_range(r1, r2, t2);
    bool ok = c.empty() == (t2 > r1 - r2);
    if (!c.empty()) ok = ok && c.lo == r2 + t2 + 2 && c.hi == r1 + 2 && c.shifted_lo == 0 && c.shifted_hi == r1 - r2 - t2;
    o.require(ok, "crit_range table");
    for (long x = -1; x <= r1 - r2 + 2; ++x) {
      for (long y = -1; y <= r1 - r2 + 2; ++y) {
        bool a = 0 <= x && x <= r1 - r2 && 0 <= y && y <= r1 - r2 - x;
        bool b = 0 <= y && y <= r1 - r2 && 0 <= x && x <= r1 - r2 - y;
        o.require(region_f(RegionCase::A, r1, r2, x, y) == a && region_f(RegionCase::B, r1, r2, x, y) == b, "region table");
      }
    }
  }
  if (o.ok) o.detail = "anchor on 20 parameter sets x 4 j; beta {0,1,2}->{2,2,4}; 100 weights";
  return o;
}

Outcome nearly_set_suite() {
  Outcome o;
  long members = 0;
  for (long r1 = 0; r1 <= 4; ++r1) {
    for (long r2 = 0; r2 <= r1; ++r2) {
      Weight ks = kappa_G_star(r1, r2);
      o.require(ks.valuation_at(exps_siegel()) == r2 + 1 && ks.valuation_at(exps_klingen()) == r2, "generator values of kappa_G*");
      for (const auto& e : nearly_weight_set(r1, r2).entries) {
        o.require(e.weight.valuation_at(exps_siegel()) >= r2 + 1, "t_S inequality fails for " + e.weight.str());
        o.require(e.weight.valuation_at(exps_klingen()) >= r2, "t_Kl inequality fails for " + e.weight.str());
        ++members;
      }
    }
  }
  size_t n10 = nearly_weight_set(1, 0).entries.size();
  o.require(n10 == 12, "cardinality at (1,0) is " + std::to_string(n10));
  if (o.ok) o.detail = std::to_string(members) + " members for r1 <= 4; 12 at (1,0)";
  return o;
}

Outcome temperedness_suite() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 12);
  std::uniform_int_distribution<long> d(0, 10), hd(0, 30), den(1, 6), len(2, 15);
  for (int i = 0; i < 100; ++i) {
    long r2 = d(rng), r1 = r2 + d(rng), t2 = d(rng);
    Rational h = make_rational(hd(rng), den(rng));
    UniquenessVerdict v = uniqueness_criterion(h, r1, r2, t2);
    long k1 = r1 + 3, k2 = r2 + 3, c = t2 + 1;
    o.require(v.proven == (h < Rational(k1 - k2 - c)), "dictionary mismatch");
    o.require(v.proven == (h + 2 < Rational(r1 - r2 - t2 + 1)), "threshold mismatch");
  }
  for (int i = 0; i < 100; ++i) {
    Rational h = make_rational(hd(rng), den(rng)), c = make_rational(hd(rng), den(rng));
    GrowthProfile g{3, {}};
    for (long n = 1, L = len(rng); n <= L; ++n) g.log_norms.push_back(h * n + c);
    o.require(growth_order_estimate(g, c).order == h, "planted slope not recovered");
  }
  if (o.ok) o.detail = "100 dictionary tuples; 100 planted profiles";
  return o;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"weyl action table and star group law", weyl_suite},
      {"shifted-action anchor (2,0;-1)", shifted_anchor},
      {"branching closed form vs unipotent formula", branching_identity},
      {"branching compatibility at random points", branching_compatibility},
      {"conjugation and factorization identities", matrix_identities},
      {"gauss sums, additive sums, whittaker vanishing", gauss_suite},
      {"zeta integral vs modified factor", euler_cross_check},
      {"eisenstein q-expansions", eisenstein_suite},
      {"growth constants", growth_constants},
      {"interpolation assembler tables", interpolation_suite},
      {"nearly-weight set", nearly_set_suite},
      {"temperedness", temperedness_suite},
  };
  int failed = 0, idx = 0;
  for (const auto& [name, run] : criteria) {
    ++idx;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += o.ok ? 0 : 1;
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", idx, name, o.detail.c_str());
    std::fflush(stdout);
  }
  double dt = seconds_since(t0);
  bool in_time = dt < kTotalBudget;
  std::printf("total %.2f s (budget %.0f s) %s\n", dt, kTotalBudget, in_time ? "ok" : "EXCEEDED");
  return failed == 0 && in_time ? 0 : 1;
}
