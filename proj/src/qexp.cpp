#include "gsp/qexp.hpp"

namespace gsp {

QExpansion::QExpansion(long prime, long trunc) : p(prime), N(trunc), a(static_cast<size_t>(trunc + 1)) {
  require_odd_prime(prime);
  if (trunc < 0) throw InputError("truncation must be >= 0");
}

QExpansion QExpansion::from_rationals(long prime, const std::vector<Rational>& coeffs) {
  if (coeffs.empty()) throw InputError("empty q-expansion");
  QExpansion F(prime, static_cast<long>(coeffs.size()) - 1);
  for (size_t i = 0; i < coeffs.size(); ++i) F.a[i] = Cyclotomic(coeffs[i]);
  return F;
}

bool QExpansion::is_integral() const {
  for (const Cyclotomic& c : a) {
    for (const Rational& q : c.coeffs()) {
      if (!is_integer(q)) return false;
    }
  }
  return true;
}

QExpansion operator+(const QExpansion& x, const QExpansion& y) {
  if (x.p != y.p) throw DomainError("q-expansions at different primes");
  QExpansion r(x.p, std::min(x.N, y.N));
  r.weight = x.weight;
  for (long n = 0; n <= r.N; ++n) r.a[n] = x.a[n] + y.a[n];
  return r;
}

// ---------------------------------------------------------------- locally analytic functions

LocAnFunction LocAnFunction::one() { return LocAnFunction({LocAnTerm{}}); }

LocAnFunction LocAnFunction::identity() { return power(1); }

LocAnFunction LocAnFunction::unit_indicator() {
  LocAnTerm t;
  t.units_only = true;
  return LocAnFunction({t});
}

LocAnFunction LocAnFunction::power(long k, bool units_only) {
  if (k < 0 && !units_only) throw DomainError("negative powers need the unit indicator");
  LocAnTerm t;
  t.power = k;
  t.units_only = units_only;
  return LocAnFunction({t});
}

LocAnFunction LocAnFunction::character(const DirichletChar& chi) {
  LocAnTerm t;
  t.units_only = true;
  t.chi = chi;
  return LocAnFunction({t});
}

LocAnFunction LocAnFunction::loc_alg(const LocAlgChar& c) {
  LocAnTerm t;
  t.units_only = true;
  t.chi = c.chi;
  t.power = c.power;
  return LocAnFunction({t});
}

LocAnFunction LocAnFunction::binomial(long k) {
  if (k < 0) throw InputError("binomial index must be >= 0");
  LocAnTerm t;
  t.binom = k;
  return LocAnFunction({t});
}

LocAnFunction LocAnFunction::exponential(const Rational& u, long radius) {
  LocAnTerm t;
  t.base = u;
  return LocAnFunction({t}, radius);
}

Cyclotomic LocAnFunction::eval(long n, long p) const {
  Cyclotomic total;
  for (const LocAnTerm& t : terms_) {
    if (t.units_only && n % p == 0) continue;
    if (t.chi && t.chi->p() != p) throw DomainError("character at the wrong prime");
    Cyclotomic v = t.coeff;
    if (t.chi) v *= t.chi->value(Integer(n));
    if (v.is_zero()) continue;
    Rational r = 1;
    if (t.power != 0) {
      if (n == 0) continue;  // 0^k with k > 0
      r *= rpow(Rational(n), t.power);
    }
    if (t.base != 1) r *= rpow(t.base, n);
    if (t.binom > 0) {
      Integer c;
      mpz_bin_ui(c.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(t.binom));
      r *= c;
    }
    total += v * Cyclotomic(r);
  }
  return total;
}

LocAnFunction operator+(const LocAnFunction& f, const LocAnFunction& g) {
  std::vector<LocAnTerm> t = f.terms_;
  t.insert(t.end(), g.terms_.begin(), g.terms_.end());
  return LocAnFunction(std::move(t), std::max(f.radius_, g.radius_));
}

LocAnFunction operator*(const LocAnFunction& f, const LocAnFunction& g) {
  std::vector<LocAnTerm> out;
  for (const LocAnTerm& x : f.terms_) {
    for (const LocAnTerm& y : g.terms_) {
      if (x.binom != 0 && y.binom != 0) throw DomainError("product of two binomial factors is not supported");
      LocAnTerm t;
      t.coeff = x.coeff * y.coeff;
      t.units_only = x.units_only || y.units_only;
      if (x.chi && y.chi) {
        if (x.chi->p() != y.chi->p()) throw DomainError("characters at different primes");
        t.chi = *x.chi * *y.chi;
      } else {
        t.chi = x.chi ? x.chi : y.chi;
      }
      t.power = x.power + y.power;
      t.base = x.base * y.base;
      t.binom = x.binom + y.binom;
      out.push_back(t);
    }
  }
  return LocAnFunction(std::move(out), std::max(f.radius_, g.radius_));
}

// ---------------------------------------------------------------- operators on q-expansions

QExpansion star_action(const LocAnFunction& f, const QExpansion& F) {
  QExpansion r = F;
  for (long n = 0; n <= F.N; ++n) {
    if (!F.a[n].is_zero()) r.a[n] = f.eval(n, F.p) * F.a[n];
  }
  return r;
}

QExpansion deplete(const QExpansion& F) {
  QExpansion r = F;
  for (long n = 0; n <= F.N; n += F.p) r.a[n] = Cyclotomic();
  return r;
}

QExpansion theta(const QExpansion& F) { return star_action(LocAnFunction::identity(), F); }

QExpansion half_power_nabla(const QExpansion& F, const LocAnFunction& rho, long exponent) {
  for (long n = 1; n <= std::max<long>(F.N, 2 * F.p); ++n) {
    if (n % F.p == 0) continue;
    Cyclotomic r = rho.eval(n, F.p);
    if (r * r != Cyclotomic(rpow(Rational(n), exponent))) {
      throw DomainError("rho^2 does not match the exponent character x^" + std::to_string(exponent));
    }
  }
  return star_action(rho * LocAnFunction::unit_indicator(), F);
}

// ---------------------------------------------------------------- Eisenstein family

TameChar TameChar::parse(std::string_view s) {
  if (s == "trivial" || s == "1" || s.empty()) return TameChar{};
  if (s.rfind("kron:", 0) == 0) {
    try {
      long d = std::stol(std::string(s.substr(5)));
      if (d == 0) throw InputError("Kronecker symbol needs D != 0");
      return TameChar{d};
    } catch (const std::logic_error&) {
      throw InputError("bad tame character: " + std::string(s));
    }
  }
  throw InputError("bad tame character: " + std::string(s));
}

Integer TameChar::value(const Integer& n) const {
  if (D == 1) return 1;
  return mpz_si_kronecker(D, n.get_mpz_t());
}

int TameChar::parity() const { return value(Integer(-1)) < 0 ? -1 : 1; }

std::string TameChar::label() const { return D == 1 ? "trivial" : "kron:" + std::to_string(D); }

bool EisensteinSpec::parity_ok() const { return kappa1.parity() * kappa2.parity() == -tame.parity(); }

std::string EisensteinSpec::weight_label() const {
  LocAlgChar first = (kappa1 * kappa2).inverse() * LocAlgChar::algebraic(p, -1);
  if (first.chi.is_trivial() && xi.chi.is_trivial()) {
    return GL2Weight{Rational(first.power), Rational(xi.power)}.str();
  }
  return "(" + first.str() + ";" + xi.str() + ")";
}

namespace {

void check_spec(const EisensteinSpec& spec) {
  if (spec.tame_tag != "unramified") throw DomainError("unsupported tame tag: " + spec.tame_tag);
  require_odd_prime(spec.p);
  if (spec.kappa1.chi.p() != spec.p || spec.kappa2.chi.p() != spec.p) throw DomainError("characters at the wrong prime");
  if (spec.tame.D % spec.p == 0) throw DomainError("tame character must be prime to p");
}

}  // namespace

Cyclotomic eis_divisor_sum(const EisensteinSpec& spec, long n) {
  check_spec(spec);
  if (n < 0) throw InputError("negative index");
  if (n == 0 || n % spec.p == 0) return Cyclotomic();
  Cyclotomic s;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    long e = n / d;
    s += Cyclotomic(Rational(spec.tame.value(d))) * spec.kappa1.value(Integer(d)) * spec.kappa2.value(Integer(e));
    if (e != d) s += Cyclotomic(Rational(spec.tame.value(e))) * spec.kappa1.value(Integer(e)) * spec.kappa2.value(Integer(d));
  }
  return s;
}

Cyclotomic eis_coeff(const EisensteinSpec& spec, long n) {
  if (!spec.parity_ok()) {
    check_spec(spec);
    return Cyclotomic();
  }
  return Cyclotomic(spec.unit) * eis_divisor_sum(spec, n);
}

QExpansion eis_xi(const EisensteinSpec& spec, long N) {
  check_spec(spec);
  QExpansion F(spec.p, N);
  F.weight = spec.weight_label();
  F.zero_component = !spec.parity_ok();
  for (long n = 1; n <= N; ++n) F.a[n] = eis_coeff(spec, n);
  return F;
}

Integer classical_depleted_eisenstein(long p, long a, long b, long n) {
  if (a < 0 || b < 0) throw InputError("exponents must be >= 0");
  if (n <= 0 || n % p == 0) return 0;
  Integer s = 0;
  for (long d = 1; d <= n; ++d) {
    if (n % d) continue;
    Integer x, y;
    mpz_ui_pow_ui(x.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(a));
    mpz_ui_pow_ui(y.get_mpz_t(), static_cast<unsigned long>(n / d), static_cast<unsigned long>(b));
    s += x * y;
  }
  return s;
}

}  // namespace gsp
