#include "gsp/zeta.hpp"

#include <random>

#include "gsp/lfactors.hpp"

namespace gsp {

namespace {

// Coefficients of prod (1 - r_k X), low degree first.
std::vector<Cyclotomic> expand_roots(const std::vector<Cyclotomic>& roots) {
  std::vector<Cyclotomic> c{Cyclotomic(Rational(1))};
  for (const Cyclotomic& r : roots) {
    std::vector<Cyclotomic> next(c.size() + 1);
    for (size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

Cyclotomic horner(const std::vector<Cyclotomic>& c, const Rational& x) {
  Cyclotomic acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * Cyclotomic(x) + *it;
  return acc;
}

}  // namespace

long min_beta(long r) {
  if (r < 0) throw InputError("conductor exponent must be >= 0");
  return beta_bound(r);
}

Cyclotomic IwahoriZetaResult::body_at(long s, long p) const {
  if (r == 0) {
    Cyclotomic den = horner(denominator, rpow(Rational(p), -s));
    if (den.is_zero()) throw DomainError("interpolation pole");
    return horner(numerator, rpow(Rational(p), s)) / den;
  }
  return gauss_inv4 * Cyclotomic(rpow(Rational(p), 4 * r * s)) * product.pow(-2 * r);
}

IwahoriZetaResult zeta_iwahori(const IwahoriZetaInput& in) {
  require_odd_prime(in.p);
  if (in.chi.p() != in.p) throw DomainError("character at the wrong prime");
  if (!in.chi.is_primitive()) throw DomainError("character is not primitive");
  for (const Cyclotomic& x : in.alpha) {
    if (x.is_zero()) throw DomainError("zero Satake parameter");
  }
  for (const Cyclotomic& x : in.mu) {
    if (x.is_zero()) throw DomainError("zero Satake parameter");
  }
  long r = in.chi.c();
  if (in.beta < min_beta(r)) throw DomainError("below Iwahori depth bound");
  IwahoriZetaResult out;
  out.prefactor_exponent = -4 * in.beta;
  out.r = r;
  if (r == 0) {
    std::vector<Cyclotomic> up, down;
    for (const Cyclotomic& a : in.alpha) {
      for (const Cyclotomic& m : in.mu) {
        up.push_back((Cyclotomic(Rational(in.p)) * a * m).inverse());
        down.push_back(a * m);
      }
    }
    out.numerator = expand_roots(up);
    out.denominator = expand_roots(down);
  } else {
    out.gauss_inv4 = gauss_sum(in.chi.inverse()).pow(-4);
    out.product = in.alpha[0] * in.alpha[1] * in.mu[0] * in.mu[1];
  }
  return out;
}

WhittakerVanishResult whittaker_vanish(long p, long beta) {
  require_odd_prime(p);
  if (beta < 1) throw InputError("beta must be >= 1");
  WhittakerVanishResult r;
  for (long h = beta; h <= beta + 10; ++h) {
    Cyclotomic t = additive_char_sum(p, h).conj();
    r.terms.push_back(t);
    r.value += t;
  }
  if (!r.value.is_zero()) {
    r.warning = true;
    r.message = "depth 1 leaves the h = 1 term " + r.terms.front().str() + "; the vanishing needs beta >= 2";
  }
  return r;
}

// ---------------------------------------------------------------- cross-check with the modified factor

SymbolicPair zeta_body_symbolic(long p) {
  const size_t nv = 5;
  Poly one = Poly::constant(nv, 1), num = one, den = one;
  Poly Pinv = Poly::var(nv, 4, -1), P = Poly::var(nv, 4);
  for (size_t i = 0; i < 2; ++i) {
    for (size_t j = 2; j < 4; ++j) {
      Poly am = Poly::var(nv, i) * Poly::var(nv, j);
      Poly am_inv = Poly::var(nv, i, -1) * Poly::var(nv, j, -1);
      num *= one - (Pinv * am_inv).scaled(Rational(1, p));
      den *= one - P * am;
    }
  }
  return {num, den};
}

SymbolicPair ep_trivial_symbolic(long p) {
  const size_t nv = 5;  // last variable J = p^j
  Poly one = Poly::constant(nv, 1), num = one, den = one;
  Poly J = Poly::var(nv, 4), Jinv = Poly::var(nv, 4, -1);
  for (size_t i = 0; i < 2; ++i) {
    for (size_t k = 2; k < 4; ++k) {
      Poly tm = Poly::var(nv, i) * Poly::var(nv, k);
      Poly tm_inv = Poly::var(nv, i, -1) * Poly::var(nv, k, -1);
      num *= one - (J * tm_inv).scaled(Rational(1, p));
      den *= one - Jinv * tm;
    }
  }
  std::vector<Poly> sub = {Poly::var(nv, 0), Poly::var(nv, 1), Poly::var(nv, 2), Poly::var(nv, 3), Poly::var(nv, 4, -1)};
  return {num.compose(sub), den.compose(sub)};
}

CrossCheckReport cross_check_ep(uint64_t seed, int samples, long p) {
  require_odd_prime(p);
  CrossCheckReport rep;
  SymbolicPair z = zeta_body_symbolic(p), e = ep_trivial_symbolic(p);
  rep.symbolic_ok = z.num * e.den == e.num * z.den;
  ++rep.checked;
  if (!rep.symbolic_ok) {
    ++rep.failed;
    rep.failures.push_back("symbolic cross-multiplication");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5), jd(0, 5);
  auto nonzero = [&] {
    while (true) {
      Rational q = make_rational(num(rng), den(rng));
      if (sgn(q) != 0) return q;
    }
  };
  int done = 0;
  while (done < samples) {
    Rational a1 = nonzero(), a2 = nonzero(), m1 = nonzero(), m2 = nonzero();
    long j = jd(rng);
    IwahoriZetaInput in{{Cyclotomic(a1), Cyclotomic(a2)}, {Cyclotomic(m1), Cyclotomic(m2)}, DirichletChar::trivial(p), 2, p};
    SatakeGSp4 th{{Cyclotomic(a1), Cyclotomic(a2), Cyclotomic(Rational(1)), Cyclotomic(a2 / a1)}};
    SatakeGL2 mu{{Cyclotomic(m1), Cyclotomic(m2)}};
    Cyclotomic lhs, rhs;
    bool lpole = false, rpole = false;
    try {
      lhs = zeta_iwahori(in).body_at(j, p);
    } catch (const DomainError&) {
      lpole = true;
    }
    try {
      rhs = ep_modifier_A(th, mu, DirichletChar::trivial(p), j, p).value;
    } catch (const DomainError&) {
      rpole = true;
    }
    if (lpole && rpole) continue;  // shared pole, redraw
    ++done;
    ++rep.checked;
    if (lpole != rpole || lhs != rhs) {
      ++rep.failed;
      rep.failures.push_back("mismatch at j = " + std::to_string(j));
    }
  }
  return rep;
}

}  // namespace gsp
