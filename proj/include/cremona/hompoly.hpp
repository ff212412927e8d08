#pragma once
// Sparse homogeneous polynomials in x,y,z over a Scalar field, plus the
// bivariate polynomials used for affine charts.  Canonical form: terms in
// graded lex order with x>y>z, no zero coefficients stored.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

struct Mono {
  int a = 0, b = 0, c = 0;  // exponents of x, y, z
  int deg() const { return a + b + c; }
  friend bool operator==(const Mono&, const Mono&) = default;
};

// graded lex, x > y > z; larger first in canonical order
inline bool mono_less(const Mono& l, const Mono& r) {
  if (l.deg() != r.deg()) return l.deg() < r.deg();
  if (l.a != r.a) return l.a < r.a;
  return l.b < r.b;
}

class HomPoly {
 public:
  struct Term {
    Mono m;
    Scalar c;
  };

  HomPoly() = default;
  HomPoly(FieldPtr f, int degree) : field_(std::move(f)), deg_(degree) {}
  // combines duplicates, drops zeros, checks homogeneity
  HomPoly(FieldPtr f, int degree, std::vector<Term> terms);

  static HomPoly monomial(FieldPtr f, Mono m, Scalar c = Scalar(1));
  static HomPoly constant(FieldPtr f, Scalar c);  // degree 0
  static HomPoly variable(FieldPtr f, int which);  // 0=x,1=y,2=z

  const FieldPtr& field() const { return field_; }
  int degree() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return deg_ == 0; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  const Scalar& leading_coeff() const;  // grlex-largest term
  Mono min_exponents() const;           // per-variable minima (monomial content)

  HomPoly operator-() const;
  friend HomPoly operator+(const HomPoly& a, const HomPoly& b);
  friend HomPoly operator-(const HomPoly& a, const HomPoly& b);
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b);
  HomPoly scaled(const Scalar& s) const;
  bool operator==(const HomPoly& o) const;

  // exact division; throws math_error if the division leaves a remainder
  HomPoly divide_exact(const HomPoly& divisor) const;
  // divide by a monomial
  HomPoly divide_mono(const Mono& m) const;

  Scalar eval(const Scalar& x, const Scalar& y, const Scalar& z) const;

  // rescale so coefficients are integers, jointly coprime, positive lead
  // (rational context); in an extension, make the leading coefficient 1.
  HomPoly normalized() const;
  // rational content removed by normalized(), as a scalar factor
  Scalar content_scalar() const;

  size_t max_coeff_bits() const;
  std::string to_string() const;

 private:
  FieldPtr field_;
  int deg_ = 0;
  std::vector<Term> terms_;  // descending grlex

  friend HomPoly mul_generic(const HomPoly& a, const HomPoly& b);
};

// substitute psi[0..2] (equal degree e) for x,y,z in outer; degree becomes
// outer.degree()*e.  `powers` caches psi powers across calls.
struct SubstCache {
  std::array<std::vector<HomPoly>, 3> pw;
};
HomPoly substitute(const HomPoly& outer, const std::array<HomPoly, 3>& psi, SubstCache& cache);

// gcd of three homogeneous polynomials, normalized (leading coefficient 1).
HomPoly gcd3(const HomPoly& p, const HomPoly& q, const HomPoly& r);
HomPoly gcd_hom(const HomPoly& p, const HomPoly& q);

// order of vanishing at the point chart*(1:0:0), chart an invertible 3x3
// matrix of scalars acting on coordinates
int vanishing_order(const HomPoly& p, const std::array<std::array<Scalar, 3>, 3>& chart);
// convenience: vanishing order at a point (moves it to (1:0:0) internally)
int vanishing_order_at(const HomPoly& p, const std::array<Scalar, 3>& point);

// ---------------------------------------------------------------------------
// Bivariate polynomials for affine charts (variables x, y).

class Poly2 {
 public:
  using Key = std::pair<int, int>;  // (deg x, deg y)

  Poly2() = default;
  explicit Poly2(FieldPtr f) : field_(std::move(f)) {}
  Poly2(FieldPtr f, std::map<Key, Scalar> terms);

  static Poly2 constant(FieldPtr f, Scalar c);
  static Poly2 variable(FieldPtr f, int which);  // 0=x, 1=y

  const FieldPtr& field() const { return field_; }
  const std::map<Key, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;
  int deg_x() const;
  int deg_y() const;
  int total_degree() const;

  Poly2 operator-() const;
  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2 scaled(const Scalar& s) const;
  bool operator==(const Poly2& o) const;

  Poly2 divide_exact(const Poly2& divisor) const;

  Scalar eval(const Scalar& x, const Scalar& y) const;
  Poly2 subst_x(const Poly2& vx) const;  // x -> vx, y kept
  Poly2 subst_y(const Poly2& vy) const;

  // homogenize into x,y,z with z carrying the slack, target degree d
  HomPoly homogenize(int d) const;

  // leading coefficient 1 (grlex on (x,y))
  Poly2 monic() const;
  const Scalar& leading_coeff() const;

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::map<Key, Scalar> t_;
  void trim();
};

// dehomogenize: z=1 chart
Poly2 dehomogenize(const HomPoly& p);

// gcd over the coefficient field (generic; fine at small degrees)
Poly2 gcd_poly2(const Poly2& a, const Poly2& b);

// univariate view helpers (polynomials in x only)
bool is_univariate_x(const Poly2& p);
std::vector<Scalar> univariate_x_coeffs(const Poly2& p);
Poly2 from_univariate_x(FieldPtr f, const std::vector<Scalar>& coeffs);

}  // namespace cremona
