#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gsp/exactnum.hpp"
#include "gsp/weights.hpp"

namespace gsp {

// Satake parameters of the GSp4 representation; theta1 theta2 is the Klingen pair.
struct SatakeGSp4 {
  std::array<Cyclotomic, 4> theta;
  void validate() const;  // nonzero, theta1 theta4 = theta2 theta3
};

struct SatakeGL2 {
  std::array<Cyclotomic, 2> gamma;
  void validate() const;
};

// Polynomial in X = l^-s with constant term 1.
struct EulerPoly {
  std::vector<Cyclotomic> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::complex<double> eval(std::complex<double> x) const;
};

EulerPoly spin_std_euler(const SatakeGSp4& theta, const SatakeGL2& gamma, const Cyclotomic& chi_l, long l);

double gamma_C(double s);
double linf(long r1, long r2, long t2, double s);
std::array<double, 4> linf_arguments(long r1, long r2, long t2, double s);

struct CritRange {
  long lo, hi;              // absolute j range
  long shifted_lo, shifted_hi;
  bool empty() const { return lo > hi; }
};
CritRange crit_range(long r1, long r2, long t2);

struct FeDual {
  DirichletChar chi;
  Rational s;
};
FeDual fe_dual(const DirichletChar& chi, const Rational& s, const DirichletChar& chi0, const DirichletChar& chi2);

struct EpResult {
  Cyclotomic value;
  std::string branch;  // "trivial" or "gauss"
  long conductor_exponent = 0;
};
// Modified L-factor at p, trivial or Gauss-sum branch.
EpResult ep_modifier_A(const SatakeGSp4& theta, const SatakeGL2& mu, const DirichletChar& chi, long j, long p);
// prod_{i,j,k <= 2} (1 - p^-1/2 / (theta_i gamma1_j gamma2_k)).
QuadSurd ep_modifier_B(const std::array<Rational, 4>& theta, const std::array<Rational, 2>& mu1,
                       const std::array<Rational, 2>& mu2, long p);

struct HeckeEigenData {
  Rational u_si, u_kl, u_b;
  long r1 = 0, r2 = 0;
  bool normalized = false;
};
HeckeEigenData hecke_normalize(const HeckeEigenData& d, long p);

// Unramified torus character given by its values on t_S, t_Kl and the center.
struct TorusCharValues {
  QuadSurd t_siegel, t_klingen, center;
  friend bool operator==(const TorusCharValues& a, const TorusCharValues& b) {
    return a.t_siegel == b.t_siegel && a.t_klingen == b.t_klingen && a.center == b.center;
  }
};
struct SsEigensystem {
  std::vector<std::pair<WeylElt, TorusCharValues>> characters;  // delta_B^-1/2 (w . theta)
  bool p_regular = false;
};
SsEigensystem ss_eigensystem(const Rational& th_siegel, const Rational& th_klingen, const Rational& th_center, long p);
// Values of w . theta on the generators.
std::array<Rational, 3> weyl_act_character(const WeylElt& w, const std::array<Rational, 3>& generator_values);

enum class RegionCase { A, B };
bool region_f(RegionCase c, long r1, long r2, long x, long y);  // A: (t2, j); B: (d1, d2)
long beta_bound(long c);

// Per-prime Satake data for Euler-product truncations.
struct EulerData {
  std::map<long, std::pair<SatakeGSp4, SatakeGL2>> primes;
};
std::complex<double> partial_L(const EulerData& data, long bound, const DirichletChar& chi, double s, long skip_prime);
struct TripleEulerData {
  std::map<long, std::tuple<SatakeGSp4, SatakeGL2, SatakeGL2>> primes;
};
// Degree-16 Euler product prod 1/(1 - theta_i gamma1_j gamma2_k l^-s) over listed primes <= bound.
std::complex<double> partial_L_triple(const TripleEulerData& data, long bound, double s, long skip_prime);

struct InterpRecord {
  std::string theorem;  // "A" or "C"
  Cyclotomic ep;        // exact modified factor (Case A)
  std::optional<QuadSurd> ep_surd;  // exact multiplier (Case B)
  Cyclotomic z_s;
  std::complex<double> lambda_truncation;
  std::string omega = "Omega_x";
  std::string exact_product;  // Z_S * E_p as a string
  std::complex<double> assembled_numeric;  // Z_S * E_p * truncation, before dividing by Omega
  std::map<std::string, std::string> provenance;
};

struct InterpInputA {
  SatakeGSp4 theta;
  SatakeGL2 mu;
  DirichletChar chi = DirichletChar::trivial(3);
  long p = 3, r1 = 0, r2 = 0, t2 = 0, j = 0;  // j shifted, 0 <= j <= r1 - r2 - t2
  Cyclotomic z_s{Rational(1)};
  EulerData euler;
  long bound = 50;
  std::string omega = "Omega_x";
};
InterpRecord interp_rhs_A(const InterpInputA& in);

struct InterpInputB {
  std::array<Rational, 4> theta;
  std::array<Rational, 2> mu1, mu2;
  long p = 3, r1 = 0, r2 = 0, d1 = 0, d2 = 0;
  Rational z_s{1};
  TripleEulerData euler;
  long bound = 50;
  std::string omega = "Omega_x";
};
InterpRecord interp_rhs_B(const InterpInputB& in);

}  // namespace gsp
