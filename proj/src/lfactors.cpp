#include "gsp/lfactors.hpp"

#include <cmath>

namespace gsp {

void SatakeGSp4::validate() const {
  for (const Cyclotomic& t : theta) {
    if (t.is_zero()) throw DomainError("zero Satake parameter");
  }
  if (theta[0] * theta[3] != theta[1] * theta[2]) throw DomainError("similitude violation: theta1 theta4 != theta2 theta3");
}

void SatakeGL2::validate() const {
  for (const Cyclotomic& g : gamma) {
    if (g.is_zero()) throw DomainError("zero Satake parameter");
  }
}

std::complex<double> EulerPoly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

EulerPoly spin_std_euler(const SatakeGSp4& theta, const SatakeGL2& gamma, const Cyclotomic& chi_l, long l) {
  theta.validate();
  gamma.validate();
  if (l < 2 || !is_prime(l)) throw InputError("Euler factor needs a prime");
  std::vector<Cyclotomic> c{Cyclotomic(Rational(1))};
  for (const Cyclotomic& t : theta.theta) {
    for (const Cyclotomic& g : gamma.gamma) {
      Cyclotomic root = chi_l * t * g;
      std::vector<Cyclotomic> next(c.size() + 1);
      for (size_t k = 0; k < c.size(); ++k) {
        next[k] += c[k];
        next[k + 1] -= root * c[k];
      }
      c = std::move(next);
    }
  }
  return EulerPoly{std::move(c)};
}

// ---------------------------------------------------------------- archimedean factor and critical values

double gamma_C(double s) {
  if (s <= 0 && std::nearbyint(s) == s) throw DomainError("archimedean pole");
  return 2.0 * std::pow(2.0 * M_PI, -s) * std::tgamma(s);
}

std::array<double, 4> linf_arguments(long r1, long r2, long t2, double s) {
  double half_w = static_cast<double>(r1 + r2 + t2 + 3) / 2.0;
  return {s + half_w - static_cast<double>(r2 + t2 + 1), s + half_w - static_cast<double>(r2 + 1),
          s + half_w - static_cast<double>(t2), s + half_w};
}

double linf(long r1, long r2, long t2, double s) {
  double v = 1.0;
  for (double x : linf_arguments(r1, r2, t2, s)) v *= gamma_C(x);
  return v;
}

CritRange crit_range(long r1, long r2, long t2) {
  if (!(r1 >= r2 && r2 >= 0 && t2 >= 0)) throw DomainError("weight is not dominant");
  long base = r2 + t2 + 2;
  return CritRange{base, r1 + 2, 0, r1 + 2 - base};
}

FeDual fe_dual(const DirichletChar& chi, const Rational& s, const DirichletChar& chi0, const DirichletChar& chi2) {
  return FeDual{(chi * chi0 * chi2).inverse(), 1 - s};
}

// ---------------------------------------------------------------- modified factors at p

EpResult ep_modifier_A(const SatakeGSp4& theta, const SatakeGL2& mu, const DirichletChar& chi, long j, long p) {
  require_odd_prime(p);
  theta.validate();
  mu.validate();
  if (chi.p() != p) throw DomainError("character at the wrong prime");
  EpResult r;
  if (chi.is_trivial()) {
    r.branch = "trivial";
    Cyclotomic num(Rational(1)), den(Rational(1));
    Rational up = rpow(Rational(p), j - 1), down = rpow(Rational(p), -j);
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < 2; ++k) {
        Cyclotomic prod = theta.theta[i] * mu.gamma[k];
        num *= Cyclotomic(Rational(1)) - Cyclotomic(up) * prod.inverse();
        den *= Cyclotomic(Rational(1)) - Cyclotomic(down) * prod;
      }
    }
    if (den.is_zero()) throw DomainError("interpolation pole");
    r.value = num / den;
    return r;
  }
  if (!chi.is_primitive()) throw DomainError("character is not primitive");
  long c = chi.c();
  r.branch = "gauss";
  r.conductor_exponent = c;
  Cyclotomic a = theta.theta[0] * theta.theta[1] * mu.gamma[0] * mu.gamma[1];
  r.value = gauss_sum(chi.inverse()).pow(-4) * Cyclotomic(rpow(Rational(p), 4 * c * j)) * a.pow(-2 * c);
  return r;
}

QuadSurd ep_modifier_B(const std::array<Rational, 4>& theta, const std::array<Rational, 2>& mu1,
                       const std::array<Rational, 2>& mu2, long p) {
  require_odd_prime(p);
  for (const Rational& x : theta) {
    if (sgn(x) == 0) throw DomainError("zero Satake parameter");
  }
  for (const Rational& x : mu1) {
    if (sgn(x) == 0) throw DomainError("zero Satake parameter");
  }
  for (const Rational& x : mu2) {
    if (sgn(x) == 0) throw DomainError("zero Satake parameter");
  }
  QuadSurd inv_sqrt(0, Rational(1, p), p);  // p^-1/2 = sqrt(p)/p
  QuadSurd prod(1, p);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        prod = prod * (QuadSurd(1, p) - inv_sqrt * QuadSurd(1 / (theta[i] * mu1[j] * mu2[k]), p));
      }
    }
  }
  return prod;
}

HeckeEigenData hecke_normalize(const HeckeEigenData& d, long p) {
  require_odd_prime(p);
  if (d.normalized) return d;
  HeckeEigenData r = d;
  Rational f = rpow(Rational(p), -d.r2);
  r.u_kl = d.u_kl * f;
  r.u_b = d.u_b * f;
  r.normalized = true;
  return r;
}

// ---------------------------------------------------------------- semisimplified eigensystem

std::array<Rational, 3> weyl_act_character(const WeylElt& w, const std::array<Rational, 3>& g) {
  for (const Rational& x : g) {
    if (sgn(x) == 0) throw DomainError("character value must be nonzero");
  }
  // values on the cocharacters of z1, z2, s
  std::array<Rational, 3> alpha = {g[2] / g[1], g[1] / (g[0] * g[0]), g[0]};
  std::array<Rational, 3> out_alpha = {1, 1, 1};
  const Weight basis[3] = {Weight(1, 0, 0), Weight(0, 1, 0), Weight(0, 0, 1)};
  for (int k = 0; k < 3; ++k) {
    Weight img = weyl_act(w, basis[k]);
    out_alpha[0] *= rpow(alpha[k], to_long_checked(img.r1));
    out_alpha[1] *= rpow(alpha[k], to_long_checked(img.r2));
    out_alpha[2] *= rpow(alpha[k], to_long_checked(img.c));
  }
  // back to t_S = (0,0,1), t_Kl = (0,1,2), center = (1,1,2)
  Rational a3sq = out_alpha[2] * out_alpha[2];
  return {out_alpha[2], out_alpha[1] * a3sq, out_alpha[0] * out_alpha[1] * a3sq};
}

SsEigensystem ss_eigensystem(const Rational& th_siegel, const Rational& th_klingen, const Rational& th_center, long p) {
  require_odd_prime(p);
  // delta_B^-1/2 on t_S, t_Kl, center
  QuadSurd ds(0, Rational(1, p * p), p);
  QuadSurd dk(Rational(1, p * p), p);
  QuadSurd dz(1, p);
  SsEigensystem out;
  for (const WeylElt& w : WeylElt::all()) {
    auto v = weyl_act_character(w, {th_siegel, th_klingen, th_center});
    out.characters.push_back({w, TorusCharValues{ds * QuadSurd(v[0], p), dk * QuadSurd(v[1], p), dz * QuadSurd(v[2], p)}});
  }
  out.p_regular = true;
  for (size_t i = 0; i < out.characters.size(); ++i) {
    for (size_t j = i + 1; j < out.characters.size(); ++j) {
      if (out.characters[i].second == out.characters[j].second) out.p_regular = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------- regions and bounds

bool region_f(RegionCase c, long r1, long r2, long x, long y) {
  if (!(r1 >= r2 && r2 >= 0)) throw DomainError("weight is not dominant");
  long d = r1 - r2;
  if (c == RegionCase::A) return 0 <= x && x <= d && 0 <= y && y <= d - x;  // (t2, j)
  return 0 <= y && y <= d && 0 <= x && x <= d - y;                          // (d1, d2)
}

long beta_bound(long c) {
  if (c < 0) throw InputError("conductor exponent must be >= 0");
  long m = std::max(1L, c);
  return std::max(2 * m, m + 1);
}

// ---------------------------------------------------------------- Euler products

std::complex<double> partial_L(const EulerData& data, long bound, const DirichletChar& chi, double s, long skip_prime) {
  std::complex<double> v = 1;
  for (const auto& [l, sat] : data.primes) {
    if (l > bound || l == skip_prime) continue;
    Cyclotomic chil = chi.value(Integer(l));
    EulerPoly P = spin_std_euler(sat.first, sat.second, chil, l);
    std::complex<double> den = P.eval(std::pow(static_cast<double>(l), -s));
    if (std::abs(den) == 0.0) throw DomainError("Euler factor pole at " + std::to_string(l));
    v /= den;
  }
  return v;
}

std::complex<double> partial_L_triple(const TripleEulerData& data, long bound, double s, long skip_prime) {
  std::complex<double> v = 1;
  for (const auto& [l, sat] : data.primes) {
    if (l > bound || l == skip_prime) continue;
    const auto& [th, g1, g2] = sat;
    th.validate();
    double x = std::pow(static_cast<double>(l), -s);
    std::complex<double> den = 1;
    for (const Cyclotomic& t : th.theta) {
      for (const Cyclotomic& a : g1.gamma) {
        for (const Cyclotomic& b : g2.gamma) den *= 1.0 - (t * a * b).to_complex() * x;
      }
    }
    if (std::abs(den) == 0.0) throw DomainError("Euler factor pole at " + std::to_string(l));
    v /= den;
  }
  return v;
}

// ---------------------------------------------------------------- interpolation assemblers

InterpRecord interp_rhs_A(const InterpInputA& in) {
  if (!region_f(RegionCase::A, in.r1, in.r2, in.t2, in.j)) throw DomainError("not a critical specialization");
  CritRange cr = crit_range(in.r1, in.r2, in.t2);
  long j_abs = in.j + cr.lo;
  long w = in.r1 + in.r2 + in.t2 + 3;
  double s = static_cast<double>(j_abs) - static_cast<double>(w) / 2.0;
  InterpRecord r;
  r.theorem = "A";
  r.ep = ep_modifier_A(in.theta, in.mu, in.chi, j_abs, in.p).value;
  r.z_s = in.z_s;
  r.lambda_truncation = partial_L(in.euler, in.bound, in.chi.inverse(), s, in.p) * linf(in.r1, in.r2, in.t2, s);
  r.omega = in.omega;
  Cyclotomic exact = r.z_s * r.ep;
  r.exact_product = exact.str();
  r.assembled_numeric = exact.to_complex() * r.lambda_truncation;
  r.provenance = {{"j", std::to_string(in.j)},
                  {"j_abs", std::to_string(j_abs)},
                  {"s", std::to_string(j_abs) + "-" + std::to_string(w) + "/2"},
                  {"chi", in.chi.label()},
                  {"beta_min", std::to_string(beta_bound(in.chi.c()))},
                  {"weight", "(" + std::to_string(in.r1) + "," + std::to_string(in.r2) + "," + std::to_string(in.t2) + ")"},
                  {"truncation_bound", std::to_string(in.bound)}};
  return r;
}

InterpRecord interp_rhs_B(const InterpInputB& in) {
  if (!region_f(RegionCase::B, in.r1, in.r2, in.d1, in.d2)) throw DomainError("not a critical specialization");
  InterpRecord r;
  r.theorem = "C";
  QuadSurd ep = ep_modifier_B(in.theta, in.mu1, in.mu2, in.p);
  r.ep_surd = ep;
  r.z_s = Cyclotomic(in.z_s);
  r.lambda_truncation = partial_L_triple(in.euler, in.bound, 0.5, in.p);
  r.omega = in.omega;
  QuadSurd exact = QuadSurd(in.z_s, in.p) * ep;
  r.exact_product = exact.str();
  r.assembled_numeric = exact.to_double() * r.lambda_truncation;
  r.provenance = {{"s", "1/2"},
                  {"weight", "(" + std::to_string(in.r1) + "," + std::to_string(in.r2) + ")"},
                  {"d", "(" + std::to_string(in.d1) + "," + std::to_string(in.d2) + ")"},
                  {"truncation_bound", std::to_string(in.bound)},
                  {"archimedean_factor", "omitted"}};
  return r;
}

}  // namespace gsp
