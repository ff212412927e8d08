#include "cremona/affine.hpp"

namespace cremona {

RatFunc::RatFunc(Poly2 n, Poly2 d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw math_error("zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly2::constant(den_.field(), Scalar::one(den_.field()));
    return;
  }
  if (!den_.is_constant()) {
    Poly2 g = gcd_poly2(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  Scalar lead = den_.leading_coeff();
  if (!lead.is_one()) {
    Scalar inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Poly2 RatFunc::as_polynomial() const {
  if (!is_polynomial()) throw math_error("rational function is not a polynomial");
  return num_.scaled(den_.constant_value().inverse());
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw math_error("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool RatFunc::operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

RatFunc RatFunc::subst(const RatFunc& vx, const RatFunc& vy) const {
  FieldPtr f = join_field(field(), join_field(vx.field(), vy.field()));
  RatFunc accn = RatFunc::constant(f, Scalar::zero(f));
  RatFunc accd = RatFunc::constant(f, Scalar::zero(f));
  // evaluate num and den as polynomials in (vx, vy)
  auto eval_poly = [&](const Poly2& p) {
    RatFunc acc = RatFunc::constant(f, Scalar::zero(f));
    std::vector<RatFunc> px{RatFunc::constant(f, Scalar::one(f))};
    std::vector<RatFunc> py{RatFunc::constant(f, Scalar::one(f))};
    auto pw = [](std::vector<RatFunc>& v, const RatFunc& base, int e) -> const RatFunc& {
      while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * base);
      return v[e];
    };
    for (const auto& [k, c] : p.terms())
      acc = acc + RatFunc::constant(f, c) * pw(px, vx, k.first) * pw(py, vy, k.second);
    return acc;
  };
  accn = eval_poly(num_);
  accd = eval_poly(den_);
  return accn / accd;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return as_polynomial().to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  bool np = num_.terms().size() > 1;
  bool dp = den_.terms().size() > 1;
  return (np ? "(" + n + ")" : n) + "/" + (dp ? "(" + d + ")" : d);
}

}  // namespace cremona
