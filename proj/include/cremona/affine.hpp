#pragma once
// Rational functions in (x,y) and affine birational maps written in the
// chart z=1.

#include <string>

#include "cremona/hompoly.hpp"

namespace cremona {

class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly2 n) : num_(std::move(n)) { den_ = Poly2::constant(num_.field(), Scalar::one(num_.field())); }
  RatFunc(Poly2 n, Poly2 d);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Poly2 as_polynomial() const;  // throws if denominator is not constant

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  bool operator==(const RatFunc& o) const;  // cross-multiplied
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc subst(const RatFunc& vx, const RatFunc& vy) const;

  std::string to_string() const;

  static RatFunc constant(const FieldPtr& f, const Scalar& c) { return RatFunc(Poly2::constant(f, c)); }
  static RatFunc var_x(const FieldPtr& f) { return RatFunc(Poly2::variable(f, 0)); }
  static RatFunc var_y(const FieldPtr& f) { return RatFunc(Poly2::variable(f, 1)); }

 private:
  Poly2 num_, den_;
  void normalize();
};

struct AffineBirMap {
  RatFunc f1, f2;
  std::string to_string() const { return "(" + f1.to_string() + ", " + f2.to_string() + ")"; }
};

}  // namespace cremona
