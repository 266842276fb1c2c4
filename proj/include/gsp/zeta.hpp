#pragma once

#include <array>
#include <string>
#include <vector>

#include "gsp/exactnum.hpp"
#include "gsp/poly.hpp"

namespace gsp {

struct IwahoriZetaInput {
  std::array<Cyclotomic, 2> alpha;  // Klingen-Levi GL2 Satake parameters
  std::array<Cyclotomic, 2> mu;
  DirichletChar chi = DirichletChar::trivial(3);
  long beta = 2;
  long p = 3;
};

// p^{-4 beta} * body, defined up to a nonzero unit independent of beta, chi and s.
struct IwahoriZetaResult {
  long prefactor_exponent = 0;  // always -4 beta
  long r = 0;
  // r = 0: body = num(P^-1) / den(P) with P = p^-s; coefficient k multiplies P^-k resp. P^k.
  std::vector<Cyclotomic> numerator, denominator;
  // r >= 1: body = gauss_inv4 * p^{4 r s} * (alpha1 alpha2 mu1 mu2)^{-2r}.
  Cyclotomic gauss_inv4;
  Cyclotomic product;  // alpha1 alpha2 mu1 mu2
  bool up_to_unit = true;
  Cyclotomic unit{Rational(1)};

  Cyclotomic body_at(long s, long p) const;  // exact value at an integer s
};

long min_beta(long r);
IwahoriZetaResult zeta_iwahori(const IwahoriZetaInput& in);

struct WhittakerVanishResult {
  Cyclotomic value;
  std::vector<Cyclotomic> terms;  // h = beta .. beta + 10
  bool warning = false;
  std::string message;
};
WhittakerVanishResult whittaker_vanish(long p, long beta);

struct CrossCheckReport {
  long checked = 0;
  long failed = 0;
  bool symbolic_ok = false;
  std::vector<std::string> failures;
};
// r = 0 body at s = j against the trivial branch of the modified factor at p.
CrossCheckReport cross_check_ep(uint64_t seed, int samples = 20, long p = 3);
// Symbolic forms in (a1, a2, m1, m2, P): numerator and denominator of both sides.
struct SymbolicPair {
  Poly num, den;
};
SymbolicPair zeta_body_symbolic(long p);
SymbolicPair ep_trivial_symbolic(long p);  // written in J = p^j, then J -> P^-1

}  // namespace gsp
