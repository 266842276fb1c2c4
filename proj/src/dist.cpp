#include "gsp/dist.hpp"

#include <cmath>

namespace gsp {

GrowthEstimate growth_order_estimate(const GrowthProfile& profile, const Rational& log_c) {
  require_odd_prime(profile.p);
  if (profile.log_norms.empty()) throw InputError("empty profile");
  if (profile.log_norms.size() < 2) throw InputError("growth profile needs at least 2 levels");
  GrowthEstimate e{Rational(0), log_c, 0};
  for (size_t i = 0; i < profile.log_norms.size(); ++i) {
    long n = static_cast<long>(i) + 1;
    Rational slope = (profile.log_norms[i] - log_c) / n;
    if (slope > e.order) {
      e.order = slope;
      e.attained_at = n;
    }
  }
  return e;
}

UniquenessVerdict uniqueness_criterion(const Rational& h, long r1, long r2, long t2) {
  if (!(r1 >= r2 && r2 >= 0 && t2 >= 0)) throw DomainError("weight is not dominant");
  UniquenessVerdict v;
  Rational bound = r1 - r2 - t2 + 1;
  v.proven = h + 2 < bound;
  v.conjectural = h < bound;
  long k1 = r1 + 3, k2 = r2 + 3, c = t2 + 1;
  v.intro_form = h < Rational(k1 - k2 - c);
  return v;
}

// ---------------------------------------------------------------- epsilon-analytic constants

namespace {

double log_p(double x, long p) { return std::log(x) / std::log(static_cast<double>(p)); }

long least_integer_at_least(double x) { return std::max(1L, static_cast<long>(std::ceil(x - 1e-12))); }

}  // namespace

EpsilonConstants epsilon_constants(long p, const Rational& eps) {
  require_odd_prime(p);
  if (sgn(eps) <= 0 || eps > Rational(1, p - 1)) {
    throw DomainError("epsilon must satisfy 0 < eps <= 1/(p-1)");
  }
  EpsilonConstants c;
  c.p = p;
  c.eps = eps;
  double e = eps.get_d(), lp = std::log(static_cast<double>(p));
  c.upsilon = -log_p(e, p);
  long n = 0;
  while (rpow(Rational(p), n + 1) * eps <= 1) ++n;  // p^n <= 1/eps
  c.floor_upsilon = n;
  c.c_half = 2.0 / (e * lp);
  c.m1_lower = 1.0 / static_cast<double>(p - 1) + log_p(2.0 / lp, p) + 1.0;
  c.m2_lower = 2.0 + 2.0 * log_p(2.0 / lp, p);
  c.m1_prime = least_integer_at_least(c.m1_lower);
  c.m2_prime = least_integer_at_least(c.m2_lower);
  c.m1 = c.m1_prime + 1;
  c.m2 = c.m2_prime + 1;
  c.n_eps = c.floor_upsilon + c.m1_prime;
  return c;
}

bool epsilon_inequalities_hold(const EpsilonConstants& c) {
  const double tol = 1e-9;
  double lhs = std::pow(static_cast<double>(c.p), -static_cast<double>(c.n_eps) + 1.0 / static_cast<double>(c.p - 1));
  bool floor_ok = static_cast<double>(c.floor_upsilon) <= c.upsilon + tol && c.upsilon < static_cast<double>(c.floor_upsilon) + 1 + tol;
  return floor_ok && c.m1_prime >= 1 && c.m2_prime >= 1 && static_cast<double>(c.m1_prime) >= c.m1_lower - tol &&
         static_cast<double>(c.m2_prime) >= c.m2_lower - tol && lhs <= 1.0 / c.c_half + tol;
}

BinomBoundReport binom_norm_bound_check(long p, const Rational& eps, long K) {
  EpsilonConstants c = epsilon_constants(p, eps);
  if (K < 1) throw InputError("K must be >= 1");
  BinomBoundReport r;
  double e = eps.get_d(), lp = std::log(static_cast<double>(p));
  for (long k = 1; k <= K; ++k) {
    double v = static_cast<double>(k) * std::exp(-static_cast<double>(k) * e / 2.0 * lp);
    if (v > r.discrete_max) {
      r.discrete_max = v;
      r.argmax = k;
    }
  }
  r.analytic_k = 2.0 / (e * lp);
  r.analytic_sup = 2.0 / (e * std::exp(1.0) * lp);
  r.c_half = c.c_half;
  r.holds = r.discrete_max <= r.analytic_sup + 1e-9 && r.analytic_sup <= r.c_half + 1e-9;
  return r;
}

// ---------------------------------------------------------------- integrality audit

Valuation cyclotomic_valuation_lower(const Cyclotomic& x, long p) {
  Valuation v;
  for (const Rational& q : x.coeffs()) v = vmin(v, vp(q, p));
  return v;
}

IntegrityAudit star_integrality_audit(const QExpansion& F, const LocAnFunction& f, long n) {
  if (n < 0) throw InputError("level must be >= 0");
  if (!F.is_integral()) throw DomainError("q-expansion is not integral");
  long p = F.p;
  IntegrityAudit a;
  a.n = n;
  a.eps = 1 / (rpow(Rational(p), n) * (p - 1));
  EpsilonConstants c = epsilon_constants(p, a.eps);
  a.bound = -2 * c.floor_upsilon - c.m2_prime;
  QExpansion G = star_action(f, F);
  for (long k = 0; k <= G.N; ++k) {
    Valuation v = cyclotomic_valuation_lower(G.a[k], p);
    if (v < a.min_valuation) {
      a.min_valuation = v;
      a.worst_index = k;
    }
  }
  a.holds = Valuation(Rational(a.bound)) <= a.min_valuation;
  return a;
}

// ---------------------------------------------------------------- Mahler-coefficient growth

long legendre_factorial_valuation(long k, long p) {
  long digits = 0;
  for (long m = k; m > 0; m /= p) digits += m % p;
  return (k - digits) / (p - 1);
}

MahlerOrder mahler_order(const std::vector<Rational>& c, long p, double log_c) {
  if (!is_prime(p)) throw DomainError("p must be prime");
  if (c.empty()) throw InputError("empty coefficient table");
  MahlerOrder m;
  for (size_t k = 2; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    double need = -vp(c[k], p).value().get_d() - log_c;
    double h = need / log_p(static_cast<double>(k), p);
    if (h > m.order + 1e-12) {
      m.order = h;
      m.attained_at = static_cast<long>(k);
    }
  }
  if (m.attained_at > 0) {
    long e = 0, kk = m.attained_at;
    while (kk % p == 0) {
      kk /= p;
      ++e;
    }
    if (kk == 1 && log_c == 0.0) m.exact = -vp(c[static_cast<size_t>(m.attained_at)], p).value() / e;
  } else {
    m.exact = Rational(0);
  }
  return m;
}

}  // namespace gsp
