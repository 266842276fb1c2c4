#include "gsp/poly.hpp"

#include <sstream>

namespace gsp {

Poly Poly::constant(size_t nvars, const Rational& c) {
  Poly out(nvars);
  out.add_term(Exps(nvars, 0), c);
  return out;
}

Poly Poly::var(size_t nvars, size_t i, int e) {
  if (i >= nvars) throw DomainError("variable index out of range");
  Exps ex(nvars, 0);
  ex[i] = e;
  Poly out(nvars);
  out.add_term(ex, Rational(1));
  return out;
}

Poly Poly::monomial(const Exps& e, const Rational& c) {
  Poly out(e.size());
  out.add_term(e, c);
  return out;
}

void Poly::add_term(const Exps& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

int Poly::degree_in(size_t i) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[i] > d) d = e[i];
    first = false;
  }
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

bool Poly::is_polynomial() const {
  for (const auto& [e, c] : terms_) {
    for (int x : e) {
      if (x < 0) return false;
    }
  }
  return true;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw DomainError("polynomial ring mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw DomainError("polynomial ring mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out = a;
  out += b;
  return out;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly out = a;
  out -= b;
  return out;
}

Poly operator-(const Poly& a) { return a.scaled(Rational(-1)); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("polynomial ring mismatch");
  Poly out(a.nvars_);
  Poly::Exps e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly out = constant(nvars_, Rational(1)), b = *this;
  while (e) {
    if (e & 1U) out = out * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return out;
}

Poly Poly::derivative(size_t i) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exps f = e;
    f[i] -= 1;
    out.add_term(f, c * e[i]);
  }
  return out;
}

Poly Poly::scaled(const Rational& k) const {
  Poly out(nvars_);
  if (sgn(k) == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * k);
  return out;
}

Poly Poly::rescale(const std::vector<Rational>& factors) const {
  if (factors.size() != nvars_) throw DomainError("rescale arity mismatch");
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Rational k = c;
    for (size_t i = 0; i < nvars_; ++i) {
      if (e[i]) k *= rpow(factors[i], e[i]);
    }
    out.add_term(e, k);
  }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& x) const {
  if (x.size() != nvars_) throw DomainError("evaluation arity mismatch");
  std::vector<std::map<int, Rational>> cache(nvars_);
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto it = cache[i].find(e[i]);
      if (it == cache[i].end()) it = cache[i].emplace(e[i], rpow(x[i], e[i])).first;
      t *= it->second;
    }
    total += t;
  }
  return total;
}

Poly Poly::compose(const std::vector<Poly>& values) const {
  if (values.size() != nvars_) throw DomainError("composition arity mismatch");
  if (values.empty()) return *this;
  size_t m = values[0].nvars();
  Poly out(m);
  std::vector<std::map<int, Poly>> cache(nvars_);
  for (const auto& [e, c] : terms_) {
    Poly t = constant(m, c);
    for (size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      auto it = cache[i].find(e[i]);
      if (it == cache[i].end()) {
        Poly v;
        if (e[i] > 0) {
          v = values[i].pow(static_cast<unsigned>(e[i]));
        } else {
          if (values[i].size() != 1) throw DomainError("negative power of a non-monomial");
          const auto& [ve, vc] = *values[i].terms().begin();
          Exps ne(ve.size());
          for (size_t k = 0; k < ve.size(); ++k) ne[k] = ve[k] * e[i];
          v = monomial(ne, rpow(vc, e[i]));
        }
        it = cache[i].emplace(e[i], std::move(v)).first;
      }
      t = t * it->second;
    }
    out += t;
  }
  return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*" << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- matrices

Mat4 mat_identity() { return mat_diag(1, 1, 1, 1); }

Mat4 mat_diag(const Rational& d1, const Rational& d2, const Rational& d3, const Rational& d4) {
  Mat4 m;
  for (auto& row : m) row.fill(Rational(0));
  m[0][0] = d1;
  m[1][1] = d2;
  m[2][2] = d3;
  m[3][3] = d4;
  return m;
}

Mat4 mat_from_rows(const std::array<std::array<long, 4>, 4>& rows) {
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = rows[i][j];
  }
  return m;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Rational s(0);
      for (int k = 0; k < 4; ++k) {
        if (sgn(a[i][k]) != 0 && sgn(b[k][j]) != 0) s += a[i][k] * b[k][j];
      }
      m[i][j] = s;
    }
  }
  return m;
}

Mat4 mat_transpose(const Mat4& a) {
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = a[j][i];
  }
  return m;
}

Mat4 mat_inverse(const Mat4& a) {
  std::array<std::array<Rational, 8>, 4> w;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      w[i][j] = a[i][j];
      w[i][j + 4] = (i == j) ? 1 : 0;
    }
  }
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r) {
      if (sgn(w[r][col]) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw DomainError("singular matrix");
    std::swap(w[col], w[piv]);
    Rational inv = 1 / w[col][col];
    for (auto& x : w[col]) x *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == col || sgn(w[r][col]) == 0) continue;
      Rational f = w[r][col];
      for (int k = 0; k < 8; ++k) w[r][k] -= f * w[col][k];
    }
  }
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = w[i][j + 4];
  }
  return m;
}

Rational mat_det(const Mat4& a) {
  Mat4 w = a;
  Rational det(1);
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = col; r < 4; ++r) {
      if (sgn(w[r][col]) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(w[col], w[piv]);
      det = -det;
    }
    det *= w[col][col];
    for (int r = col + 1; r < 4; ++r) {
      Rational f = w[r][col] / w[col][col];
      for (int k = col; k < 4; ++k) w[r][k] -= f * w[col][k];
    }
  }
  return det;
}

bool mat_is_diagonal(const Mat4& a) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j && sgn(a[i][j]) != 0) return false;
    }
  }
  return true;
}

std::string mat_str(const Mat4& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 4; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < 4; ++j) os << (j ? "," : "") << to_string(a[i][j]);
    os << "]";
  }
  os << "]";
  return os.str();
}

PolyMat4 polymat_identity(size_t nvars) {
  PolyMat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = i == j ? Poly::constant(nvars, Rational(1)) : Poly(nvars);
  }
  return m;
}

PolyMat4 polymat_mul(const PolyMat4& a, const PolyMat4& b) {
  size_t n = a[0][0].nvars();
  PolyMat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Poly s(n);
      for (int k = 0; k < 4; ++k) {
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) s += a[i][k] * b[k][j];
      }
      m[i][j] = std::move(s);
    }
  }
  return m;
}

PolyMat4 polymat_from(const Mat4& a, size_t nvars) {
  PolyMat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = Poly::constant(nvars, a[i][j]);
  }
  return m;
}

bool polymat_equal(const PolyMat4& a, const PolyMat4& b) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (!(a[i][j] - b[i][j]).is_zero()) return false;
    }
  }
  return true;
}

const Mat4& J_matrix() {
  static const Mat4 j = mat_from_rows({{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}});
  return j;
}

Rational similitude(const Mat4& g) {
  Mat4 lhs = mat_mul(mat_mul(mat_transpose(g), J_matrix()), g);
  Rational s = lhs[0][3];
  Mat4 rhs = J_matrix();
  for (auto& row : rhs) {
    for (auto& x : row) x *= s;
  }
  if (lhs != rhs || sgn(s) == 0) throw DomainError("matrix is not in GSp4");
  return s;
}

bool in_gsp4(const Mat4& g) {
  try {
    similitude(g);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace gsp
