#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gsp/exactnum.hpp"
#include "gsp/poly.hpp"
#include "gsp/weights.hpp"

namespace gsp {

// Polynomial ring of matrix coefficients: x_ij (i, j = 1..4) at index 4(i-1)+(j-1), s at 16.
constexpr size_t kMatVars = 17;
constexpr size_t kSimVar = 16;
Poly xv(int i, int j, int e = 1);
Poly sv(int e = 1);
Poly mat_const(const Rational& c);
std::vector<Rational> coords(const Mat4& g);  // entries plus similitude; g must lie in GSp4
const std::vector<std::string>& mat_var_names();

// Element of GSp4 with g^T J g = s J.
struct GroupMatrix {
  Mat4 m;
  Rational s;
  explicit GroupMatrix(const Mat4& g);
};

// X with X^T J + J X = c J.
struct LieElt {
  Mat4 m;
  Rational c;
  explicit LieElt(const Mat4& x);
};

Mat4 n_unipotent(const Rational& z, const Rational& a, const Rational& b);  // rows (1; z,1; a,0,1; b,a,-z,1)
Mat4 m_unipotent(const Rational& z);                                      // n(z, 0, 0)
Mat4 e32(const Rational& c);                                              // I + c E_32
const Mat4& gamma_matrix();      // rows (1,0,0,0),(1,1,0,0),(0,0,1,0),(0,0,-1,1)
const Mat4& gamma_hat_matrix();  // gamma * w1
const Mat4& w1_matrix();
Mat4 h_embed(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
             const Rational& a2, const Rational& b2, const Rational& c2, const Rational& d2);
const LieElt& lie_X21();  // E21 - E43
const LieElt& lie_Z();    // E31 + E42

enum class Model { G, H, MG, MH, GL2 };
Model parse_model(std::string_view s);
std::string model_name(Model m);

// Function on the model's group, polynomial in the matrix coefficients and s^{+-1}.
// GL2 weights (r; c) are stored as (r, 0; c) and live on the first factor of H.
struct PolyVector {
  Poly f;
  Model model;
  Weight weight;
  Rational eval(const Mat4& g) const;
};

bool model_dominant(Model m, const Weight& w);
PolyVector hw_vector(Model m, const Weight& w);
PolyVector lie_act(const LieElt& x, const PolyVector& f);
PolyVector cartan_product(const PolyVector& f, const PolyVector& g);
Integer dim(Model m, const Weight& w);
// Character by which right translation by b (torus part t) rescales a vector of weight w.
Rational right_character(Model m, const Weight& w, const Mat4& torus_part);

// Randomized checks of the right transformation law, left unipotent invariance,
// left torus eigencharacter and normalisation.
struct LawReport {
  long checked = 0;
  long failed = 0;
  std::vector<std::string> failures;
};
LawReport check_hw_properties(const PolyVector& f, uint64_t seed, int samples);
LawReport check_right_law(const PolyVector& f, uint64_t seed, int samples);

// Branching polynomials.
struct BranchParams {
  long t1, t2, r1, r2;
};
void validate_branch(const BranchParams& bp);
Poly branch_Q();  // x21 x33 + x41 x13 - x11 x43 - x31 x23
PolyVector branch_closed_form(const BranchParams& bp);
PolyVector branch_via_hw(const BranchParams& bp);  // (-1)^(r1-1) 2^-r2 v10^t1 (X21*v10)^t2 (Z*v11)^r2
Rational branch_unipotent_formula(const BranchParams& bp, const Rational& z, const Rational& a, const Rational& b);
Rational branch_eval_at_unipotent(const PolyVector& closed, const Rational& z, const Rational& a, const Rational& b);
PolyVector branch_M(long r1, long r2, long t1);
PolyVector branch_prime();  // s^-1 x33 (x43 - x33)

struct IwahoriResult {
  Rational z, a, b;
  Mat4 x;
  bool z_ok = false, a_ok = false, b_ok = false;  // disc predicates at (p, beta, n)
};
IwahoriResult iwahori_factor(const Mat4& g, long p, long beta, long n);
bool in_w1_borel(const Mat4& x);
bool in_lower_siegel(const Mat4& g);

struct MonoidActResult {
  Poly f;                       // polynomial in (z, a, b)
  std::string convention;       // "w1 T+ w1^-1" or "T- (dual)"
  std::array<Rational, 3> factors;  // z, a, b rescaling
};
MonoidActResult monoid_act(const TorusMonoidElt& t, const Poly& f, long p);

// lambda(1+z) * G(b - a, a/(1+z)); G is a polynomial in (Y, X).
Cyclotomic branch_nan_eval(const Poly& g_fun, const LocAlgChar& lambda, const Rational& z, const Rational& a,
                           const Rational& b, long p);
// The two sides of the branching compatibility at a unipotent point.
Cyclotomic compat_clockwise(const BranchParams& bp, const Rational& z, const Rational& a, const Rational& b, long p);
Rational compat_anticlockwise(const BranchParams& bp, const Rational& z, const Rational& a, const Rational& b);

struct IdentityReport {
  long checked = 0;
  long failed = 0;
  std::vector<std::string> failures;
  void record(bool ok, const std::string& what);
};
IdentityReport verify_matrix_identities(uint64_t seed, int samples = 100);
IdentityReport verify_branch_identities(uint64_t seed, int max_total_degree, int samples);

// Shared sampling helpers.
Rational random_rational(std::mt19937_64& rng, long bound = 9, long den_bound = 5, bool nonzero = false);
Mat4 random_group_element(Model m, std::mt19937_64& rng);
Mat4 random_w1_borel(std::mt19937_64& rng);

}  // namespace gsp
