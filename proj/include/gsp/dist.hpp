#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsp/exactnum.hpp"
#include "gsp/qexp.hpp"

namespace gsp {

// log_p of the restriction norms at levels 1, 2, ...
struct GrowthProfile {
  long p = 3;
  std::vector<Rational> log_norms;
};

struct GrowthEstimate {
  Rational order;        // least h >= 0 with log_norm(n) <= h n + log_c for every level
  Rational log_c;        // the log-constant budget used
  long attained_at = 0;  // level realising the maximum (0 when the estimate is 0)
};
// Least slope for a fixed log-constant budget log_p C (default C = 1).
GrowthEstimate growth_order_estimate(const GrowthProfile& profile, const Rational& log_c = 0);

struct UniquenessVerdict {
  bool proven = false;       // h + 2 < r1 - r2 - t2 + 1
  bool conjectural = false;  // h < r1 - r2 - t2 + 1
  bool intro_form = false;   // h < k1 - k2 - c with k = r + 3, c = t2 + 1
};
UniquenessVerdict uniqueness_criterion(const Rational& h, long r1, long r2, long t2);

struct EpsilonConstants {
  long p = 3;
  Rational eps;
  double upsilon = 0;   // -log_p eps
  long floor_upsilon = 0;
  double c_half = 0;    // C_{eps/2} = 2 / (eps ln p)
  long m1_prime = 0, m2_prime = 0;  // least admissible integers
  long m1 = 0, m2 = 0;              // global constants M' + 1
  long n_eps = 0;                   // [upsilon] + M1'
  double m1_lower = 0, m2_lower = 0;  // the real lower bounds
};
EpsilonConstants epsilon_constants(long p, const Rational& eps);
// p^{-N_eps + 1/(p-1)} <= C_{eps/2}^{-1} plus the M1, M2 lower bounds.
bool epsilon_inequalities_hold(const EpsilonConstants& c);

struct BinomBoundReport {
  bool holds = false;
  double discrete_max = 0;
  long argmax = 0;
  double analytic_k = 0;    // 2 / (eps ln p)
  double analytic_sup = 0;  // 2 / (eps e ln p)
  double c_half = 0;
};
BinomBoundReport binom_norm_bound_check(long p, const Rational& eps, long K);

struct IntegrityAudit {
  long n = 0;
  Rational eps;
  long bound = 0;       // -2 [upsilon] - M2
  Valuation min_valuation;
  long worst_index = -1;
  bool holds = false;
};
// eps = (p^n (p-1))^-1; coefficient valuations of f * F against -2[upsilon] - M2.
IntegrityAudit star_integrality_audit(const QExpansion& F, const LocAnFunction& f, long n);
Valuation cyclotomic_valuation_lower(const Cyclotomic& x, long p);  // min over power-basis coefficients

struct MahlerOrder {
  double order = 0;
  std::optional<Rational> exact;  // set when the maximum sits at a power of p
  long attained_at = 0;
};
// Least h with v_p(c_k) >= -h log_p k - log_c for k >= 2.
MahlerOrder mahler_order(const std::vector<Rational>& c, long p, double log_c = 0);
long legendre_factorial_valuation(long k, long p);  // (k - s_p(k)) / (p - 1)

}  // namespace gsp
