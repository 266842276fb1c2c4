#include "gsp/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace gsp {

// ---------------------------------------------------------------- rationals

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n') s.push_back(ch);
  }
  if (s.empty()) throw InputError("empty rational");
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  bool slash = false;
  bool digit_before = false, digit_after = false;
  for (size_t k = i; k < s.size(); ++k) {
    char ch = s[k];
    if (ch == '/') {
      if (slash) throw InputError("malformed rational: " + s);
      slash = true;
    } else if (ch >= '0' && ch <= '9') {
      (slash ? digit_after : digit_before) = true;
    } else {
      throw InputError("malformed rational: " + s);
    }
  }
  if (!digit_before || (slash && !digit_after)) throw InputError("malformed rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("malformed rational: " + s);
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational rpow(const Rational& base, long e) {
  if (e < 0) {
    if (sgn(base) == 0) throw DomainError("zero raised to a negative power");
    return rpow(1 / base, -e);
  }
  Rational out(1), b = base;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1UL) out *= b;
    b *= b;
    u >>= 1;
  }
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_half_integer(const Rational& q) { return q.get_den() == 1 || q.get_den() == 2; }

long to_long_checked(const Rational& q) {
  if (!is_integer(q)) throw DomainError("expected an integer, got " + to_string(q));
  if (!q.get_num().fits_slong_p()) throw DomainError("integer out of range");
  return q.get_num().get_si();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_odd_prime(long p) {
  if (p == 2 || !is_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
}

long ipow(long base, unsigned e) {
  long out = 1;
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long euler_phi(long n) {
  long out = n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      out -= out / d;
    }
  }
  if (n > 1) out -= out / n;
  return out;
}

long mobius(long n) {
  long out = 1;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      out = -out;
    }
  }
  if (n > 1) out = -out;
  return out;
}

// ---------------------------------------------------------------- valuations

const Rational& Valuation::value() const {
  if (infinite_) throw DomainError("valuation is infinite");
  return v_;
}

std::string Valuation::str() const { return infinite_ ? "inf" : to_string(v_); }

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.v_ == b.v_;
}

bool operator<(const Valuation& a, const Valuation& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.v_ < b.v_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  return Valuation(a.v_ + b.v_);
}

Valuation vmin(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

long vp(const Integer& z, long p) {
  if (sgn(z) == 0) throw DomainError("valuation of zero integer");
  Integer t = abs(z);
  long v = 0;
  Integer pz(p);
  while (mpz_divisible_p(t.get_mpz_t(), pz.get_mpz_t())) {
    t /= pz;
    ++v;
  }
  return v;
}

Valuation vp(const Rational& x, long p) {
  if (!is_prime(p)) throw DomainError("valuation needs a prime, got " + std::to_string(p));
  if (sgn(x) == 0) return Valuation::infinity();
  return Valuation(Rational(vp(x.get_num(), p) - vp(x.get_den(), p)));
}

// ---------------------------------------------------------------- Q[x] helpers

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// a = q*b + r, b nonzero.
void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    Rational f = a.back() / lead;
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  r = a;
  trim(q);
}

}  // namespace

// ---------------------------------------------------------------- cyclotomic

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<std::vector<Integer>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (n == 0) throw DomainError("cyclotomic order must be positive");
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed without recursion on the lock.
  std::vector<unsigned> divisors;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  for (unsigned d : divisors) {
    if (cache.count(d)) continue;
    std::vector<Integer> num(d + 1, Integer(0));
    num[0] = -1;
    num[d] = 1;
    for (unsigned e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      const std::vector<Integer>& den = *cache.at(e);
      // exact division of num by monic den
      std::vector<Integer> quo(num.size() - den.size() + 1, Integer(0));
      for (size_t k = quo.size(); k-- > 0;) {
        Integer f = num[k + den.size() - 1];
        quo[k] = f;
        for (size_t i = 0; i < den.size(); ++i) num[k + i] -= f * den[i];
      }
      num = quo;
    }
    cache[d] = std::make_unique<std::vector<Integer>>(num);
  }
  return *cache.at(n);
}

namespace {

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

// Reduce a polynomial in zeta_n (any length) into the power basis of Q(zeta_n).
std::vector<Rational> reduce_cyclo(unsigned n, const std::vector<Rational>& v) {
  std::vector<Rational> folded(n, Rational(0));
  for (size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) folded[i % n] += v[i];
  }
  const std::vector<Integer>& phi = cyclotomic_polynomial(n);
  size_t d = phi.size() - 1;
  for (size_t k = folded.size(); k-- > d;) {
    if (sgn(folded[k]) == 0) continue;
    Rational f = folded[k];
    size_t shift = k - d;
    for (size_t i = 0; i <= d; ++i) {
      if (sgn(phi[i]) != 0) folded[shift + i] -= f * phi[i];
    }
  }
  folded.resize(d, Rational(0));
  return folded;
}

}  // namespace

Cyclotomic::Cyclotomic() : n_(1), c_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& q, unsigned n) : n_(n) {
  c_.assign(cyclotomic_polynomial(n).size() - 1, Rational(0));
  c_[0] = q;
}

Cyclotomic Cyclotomic::from_coeffs(unsigned n, std::vector<Rational> coeffs) {
  Cyclotomic out;
  out.n_ = n;
  out.c_ = reduce_cyclo(n, coeffs);
  return out;
}

Cyclotomic Cyclotomic::zeta_power(unsigned n, long k) {
  std::vector<Rational> v(n, Rational(0));
  v[static_cast<size_t>(mod(k, static_cast<long>(n)))] = 1;
  return from_coeffs(n, std::move(v));
}

Cyclotomic Cyclotomic::lift(unsigned m) const {
  if (m % n_ != 0) throw DomainError("cannot lift Q(zeta_" + std::to_string(n_) + ") into Q(zeta_" + std::to_string(m) + ")");
  if (m == n_) return *this;
  unsigned step = m / n_;
  std::vector<Rational> v(m, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
  return from_coeffs(m, std::move(v));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Cyclotomic::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Rational> v(n_, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[(n_ - i % n_) % n_] += c_[i];
  return from_coeffs(n_, std::move(v));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (is_rational()) return Cyclotomic(1 / c_[0], n_);
  const std::vector<Integer>& phi = cyclotomic_polynomial(n_);
  QPoly m(phi.begin(), phi.end());
  QPoly a = c_;
  trim(a);
  QPoly r0 = m, r1 = a, s0, s1 = {Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_n is irreducible.
  Rational inv_c = 1 / r0[0];
  for (Rational& q : s0) q *= inv_c;
  return from_coeffs(n_, s0);
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic out(Rational(1), n_), b = *this;
  while (e) {
    if (e & 1) out = out * b;
    b = b * b;
    e >>= 1;
  }
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> out = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    out += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return out;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return to_string(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c_[i]) << ")";
    if (i > 0) os << "*z" << n_ << "^" << i;
  }
  return os.str();
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned m = lcm_u(a.n_, b.n_);
  Cyclotomic x = a.lift(m), y = b.lift(m);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic x = a;
  for (Rational& q : x.c_) q = -q;
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_rational() || b.is_rational()) {
    const Cyclotomic& scal = a.is_rational() ? a : b;
    const Cyclotomic& other = a.is_rational() ? b : a;
    unsigned m = lcm_u(a.n_, b.n_);
    Cyclotomic x = other.lift(m);
    const Rational& s = scal.c_[0];
    for (Rational& q : x.c_) q *= s;
    return x;
  }
  unsigned m = lcm_u(a.n_, b.n_);
  Cyclotomic x = a.lift(m), y = b.lift(m);
  return Cyclotomic::from_coeffs(m, poly_mul(x.c_, y.c_));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  unsigned m = lcm_u(a.n_, b.n_);
  return a.lift(m).c_ == b.lift(m).c_;
}

// ---------------------------------------------------------------- Q(sqrt p)

QuadSurd::QuadSurd(Rational a, Rational b, long p) : p_(p), a_(std::move(a)), b_(std::move(b)) {
  require_odd_prime(p);
}

long QuadSurd::common_prime(const QuadSurd& x, const QuadSurd& y) {
  if (x.p_ && y.p_ && x.p_ != y.p_) {
    if (sgn(x.b_) != 0 || sgn(y.b_) != 0) throw DomainError("mixing Q(sqrt p) for different primes");
  }
  return x.p_ ? x.p_ : y.p_;
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  QuadSurd out;
  out.p_ = QuadSurd::common_prime(x, y);
  out.a_ = x.a_ + y.a_;
  out.b_ = x.b_ + y.b_;
  return out;
}

QuadSurd operator-(const QuadSurd& x) {
  QuadSurd out = x;
  out.a_ = -x.a_;
  out.b_ = -x.b_;
  return out;
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  QuadSurd out;
  out.p_ = QuadSurd::common_prime(x, y);
  out.a_ = x.a_ * y.a_ + x.b_ * y.b_ * out.p_;
  out.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  return out;
}

bool operator==(const QuadSurd& x, const QuadSurd& y) {
  if (sgn(x.b_) != 0 && sgn(y.b_) != 0 && x.p_ != y.p_) return false;
  return x.a_ == y.a_ && x.b_ == y.b_;
}

QuadSurd QuadSurd::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero surd");
  Rational norm = a_ * a_ - b_ * b_ * p_;
  QuadSurd out;
  out.p_ = p_;
  out.a_ = a_ / norm;
  out.b_ = -b_ / norm;
  return out;
}

QuadSurd QuadSurd::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QuadSurd out(Rational(1), p_), b = *this;
  out.p_ = p_;
  while (e) {
    if (e & 1) out = out * b;
    b = b * b;
    e >>= 1;
  }
  return out;
}

Valuation QuadSurd::valuation() const {
  if (p_ == 0) throw DomainError("surd has no prime attached");
  Valuation va = vp(a_, p_);
  Valuation vb = vp(b_, p_);
  if (!vb.is_infinite()) vb = Valuation(vb.value() + Rational(1, 2));
  return vmin(va, vb);
}

double QuadSurd::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(p_)); }

std::string QuadSurd::str() const {
  if (sgn(b_) == 0) return to_string(a_);
  return to_string(a_) + "+" + to_string(b_) + "*sqrt(" + std::to_string(p_) + ")";
}

// ---------------------------------------------------------------- characters

long primitive_root(long p, int c) {
  require_odd_prime(p);
  if (c <= 0) return 1;
  long g = 0;
  for (long cand = 2; cand < p; ++cand) {
    bool ok = true;
    long n = p - 1;
    for (long q = 2; q <= n; ++q) {
      if (n % q) continue;
      while (n % q == 0) n /= q;
      long e = (p - 1) / q, acc = 1;
      for (long i = 0; i < e; ++i) acc = acc * cand % p;
      if (acc == 1) ok = false;
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  // g generates (Z/p^c)^x for every c >= 2 unless g^(p-1) = 1 mod p^2.
  long p2 = p * p, acc = 1;
  for (long i = 0; i < p - 1; ++i) acc = acc * g % p2;
  if (acc == 1) g += p;
  return g;
}

long discrete_log(long a, long g, long m, long phi) {
  a = mod(a, m);
  long acc = 1;
  for (long e = 0; e < phi; ++e) {
    if (acc == a) return e;
    acc = acc * g % m;
  }
  throw DomainError("no discrete logarithm");
}

DirichletChar::DirichletChar(long p, int c, long k) : p_(p), c_(c) {
  require_odd_prime(p);
  if (c < 0) throw DomainError("negative conductor exponent");
  if (c > 8) throw DomainError("conductor exponent too large");
  modulus_ = ipow(p, static_cast<unsigned>(c));
  phi_ = c == 0 ? 1 : modulus_ / p * (p - 1);
  k_ = mod(k, phi_);
  g_ = primitive_root(p, c);
}

DirichletChar DirichletChar::quadratic(long p) { return DirichletChar(p, 1, (p - 1) / 2); }

DirichletChar DirichletChar::parse(long p, std::string_view label) {
  std::string s(label);
  if (s == "trivial" || s == "1" || s.empty()) return trivial(p);
  if (s == "quad" || s == "quad:1") return quadratic(p);
  auto colon = s.find(':');
  if (colon == std::string::npos) throw InputError("bad character label: " + s);
  try {
    int c = std::stoi(s.substr(0, colon));
    long k = std::stol(s.substr(colon + 1));
    return DirichletChar(p, c, k);
  } catch (const std::logic_error&) {
    throw InputError("bad character label: " + s);
  }
}

unsigned DirichletChar::field_order() const {
  return c_ == 0 ? 1U : static_cast<unsigned>(modulus_ * (p_ - 1));
}

bool DirichletChar::is_primitive() const {
  if (c_ == 0) return k_ == 0;
  if (c_ == 1) return k_ % (p_ - 1) != 0;
  return k_ % p_ != 0;
}

long DirichletChar::order() const { return phi_ / std::gcd(k_, phi_); }

int DirichletChar::parity() const {
  if (c_ == 0) return 1;
  return (k_ * (phi_ / 2)) % phi_ == 0 ? 1 : -1;
}

std::string DirichletChar::label() const {
  if (k_ == 0) return "trivial";
  return std::to_string(c_) + ":" + std::to_string(k_);
}

std::optional<long> DirichletChar::exponent(const Integer& a) const {
  Integer pz(p_);
  if (mpz_divisible_p(a.get_mpz_t(), pz.get_mpz_t())) return std::nullopt;
  if (c_ == 0) return 0L;
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(modulus_));
  long ind = discrete_log(r.get_si(), g_, modulus_, phi_);
  return mod(k_ * ind, phi_);
}

Cyclotomic DirichletChar::value(const Integer& a) const {
  auto e = exponent(a);
  if (!e) return Cyclotomic(Rational(0), field_order());
  if (c_ == 0) return Cyclotomic(Rational(1));
  return Cyclotomic::zeta_power(field_order(), *e * p_);
}

Cyclotomic DirichletChar::value(const Rational& x) const {
  auto en = exponent(x.get_num());
  auto ed = exponent(x.get_den());
  if (!en || !ed) throw DomainError("character evaluated at a non-unit");
  if (c_ == 0) return Cyclotomic(Rational(1));
  return Cyclotomic::zeta_power(field_order(), (*en - *ed) * p_);
}

DirichletChar DirichletChar::inverse() const { return DirichletChar(p_, c_, -k_); }

DirichletChar DirichletChar::raise(int c) const {
  if (c < c_) throw DomainError("cannot lower the modulus of a character");
  if (c == c_) return *this;
  DirichletChar out(p_, c, 0);
  out.k_ = c_ == 0 ? 0 : mod(k_ * (out.phi_ / phi_), out.phi_);
  return out;
}

DirichletChar operator*(const DirichletChar& a, const DirichletChar& b) {
  if (a.p_ != b.p_) throw DomainError("characters for different primes");
  int c = std::max(a.c_, b.c_);
  DirichletChar x = a.raise(c), y = b.raise(c);
  DirichletChar out(a.p_, c, x.k_ + y.k_);
  // drop to the smallest modulus carrying the character
  while (out.c_ > 0) {
    int c2 = out.c_ - 1;
    long phi2 = c2 == 0 ? 1 : ipow(out.p_, static_cast<unsigned>(c2)) / out.p_ * (out.p_ - 1);
    long ratio = out.phi_ / phi2;
    if (out.k_ % ratio != 0) break;
    DirichletChar lower(out.p_, c2, c2 == 0 ? 0 : out.k_ / ratio);
    out = lower;
  }
  return out;
}

bool operator==(const DirichletChar& a, const DirichletChar& b) {
  if (a.p_ != b.p_) return false;
  int c = std::max(a.c_, b.c_);
  return a.raise(c).k_ == b.raise(c).k_;
}

Cyclotomic LocAlgChar::value(const Rational& x) const {
  if (vp(x, chi.p()).value() != 0) throw DomainError("locally algebraic character evaluated at a non-unit");
  return chi.value(x) * Cyclotomic(rpow(x, power));
}

Cyclotomic LocAlgChar::value(const Integer& x) const {
  Integer pz(chi.p());
  if (mpz_divisible_p(x.get_mpz_t(), pz.get_mpz_t())) return Cyclotomic();
  return value(Rational(x));
}

int LocAlgChar::parity() const { return (power % 2 == 0 ? 1 : -1) * chi.parity(); }

std::string LocAlgChar::str() const {
  std::string s = "x^" + std::to_string(power);
  if (!chi.is_trivial()) s += "*chi[" + chi.label() + "]";
  return s;
}

Cyclotomic gauss_sum(const DirichletChar& chi) {
  if (!chi.is_primitive()) throw DomainError("Gauss sum requires a primitive character");
  if (chi.c() == 0) return Cyclotomic(Rational(1));
  unsigned n = chi.field_order();
  long p = chi.p();
  std::vector<Rational> v(n, Rational(0));
  for (long a = 1; a < chi.modulus(); ++a) {
    auto e = chi.exponent(Integer(a));
    if (!e) continue;
    long idx = mod(p * *e + (p - 1) * a, static_cast<long>(n));
    v[static_cast<size_t>(idx)] += 1;
  }
  return Cyclotomic::from_coeffs(n, std::move(v));
}

Cyclotomic gauss_sum_inverse(const DirichletChar& chi) {
  Cyclotomic g = gauss_sum(chi.inverse());
  Rational scale = make_rational(chi.parity(), chi.modulus());
  return g * Cyclotomic(scale);
}

Cyclotomic additive_char_sum(long p, long h) {
  require_odd_prime(p);
  if (h < 0) throw DomainError("negative level");
  if (h == 0) return Cyclotomic(Rational(1));
  if (h >= 2 && static_cast<double>(p) * std::pow(static_cast<double>(p), static_cast<double>(h - 1)) > 5000.0) {
    // Units mod p^h are j0 + p^{h-1} t with j0 a unit mod p^{h-1}, t mod p, so the sum is
    // sum_{j0} zeta_{p^h}^{j0} * S with S = sum_t zeta_p^t evaluated exactly in Q(zeta_p).
    Cyclotomic inner;
    for (long t = 0; t < p; ++t) inner += Cyclotomic::zeta_power(static_cast<unsigned>(p), t);
    if (!inner.is_zero()) throw DomainError("coset reduction of the additive sum failed");
    return Cyclotomic();
  }
  long m = ipow(p, static_cast<unsigned>(h));
  std::vector<Rational> v(static_cast<size_t>(m), Rational(0));
  for (long j = 1; j < m; ++j) {
    if (j % p) v[static_cast<size_t>(j)] = 1;
  }
  return Cyclotomic::from_coeffs(static_cast<unsigned>(m), std::move(v));
}

}  // namespace gsp
