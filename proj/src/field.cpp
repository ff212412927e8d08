#include "cremona/field.hpp"

#include <sstream>

namespace cremona {

NumberField::NumberField(std::vector<mpz_class> monic_coeffs) : m_(std::move(monic_coeffs)) {
  if (m_.size() < 2) throw input_error("minimal polynomial must have degree >= 1");
  if (m_.back() != 1) throw input_error("minimal polynomial must be monic");
}

FieldPtr NumberField::make(std::vector<mpz_class> monic_coeffs) {
  return std::make_shared<const NumberField>(std::move(monic_coeffs));
}

std::string NumberField::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = m_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    mpz_class a = abs(c);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

void NumberField::reduce(std::vector<mpq_class>& c) const {
  const int n = degree();
  // m is monic: t^n = -(m_{n-1} t^{n-1} + ... + m_0)
  for (int i = static_cast<int>(c.size()) - 1; i >= n; --i) {
    mpq_class top = c[i];
    if (top == 0) continue;
    c[i] = 0;
    for (int j = 0; j < n; ++j) c[i - n + j] -= top * m_[j];
  }
  c.resize(n);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (a && b) return a->min_poly() == b->min_poly();
  return false;
}

FieldPtr join_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (same_field(a, b)) return a;
  throw field_mismatch("mixed extension-field contexts");
}

Scalar::Scalar(FieldPtr f, std::vector<mpq_class> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  if (!field_) {
    if (c_.size() != 1) throw input_error("rational scalar needs one coefficient");
    return;
  }
  field_->reduce(c_);
}

Scalar Scalar::zero(const FieldPtr& f) {
  if (!f) return Scalar();
  return Scalar(f, std::vector<mpq_class>(f->degree()));
}

Scalar Scalar::one(const FieldPtr& f) {
  Scalar s = zero(f);
  s.c_[0] = 1;
  return s;
}

Scalar Scalar::generator(const FieldPtr& f) {
  if (!f) throw input_error("no generator in plain Q");
  Scalar s = zero(f);
  if (f->degree() == 1) {
    // t == -m0 in a degree-1 "extension"
    s.c_[0] = -f->min_poly()[0];
  } else {
    s.c_[1] = 1;
  }
  return s;
}

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) throw math_error("scalar is not rational");
  return c_[0];
}

void Scalar::promote(const FieldPtr& f) {
  if (same_field(field_, f)) return;
  if (field_ && f) throw field_mismatch("mixed extension-field contexts");
  if (!f) return;  // extension value stays as is
  mpq_class v = c_[0];
  field_ = f;
  c_.assign(f->degree(), mpq_class(0));
  c_[0] = v;
}

void Scalar::align(Scalar& a, Scalar& b) {
  FieldPtr f = join_field(a.field_, b.field_);
  a.promote(f);
  b.promote(f);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Scalar rhs = o;
  align(*this, rhs);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  Scalar rhs = o;
  align(*this, rhs);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar rhs = o;
  align(*this, rhs);
  if (!field_) {
    c_[0] *= rhs.c_[0];
    return *this;
  }
  std::vector<mpq_class> prod(c_.size() + rhs.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      prod[i + j] += c_[i] * rhs.c_[j];
    }
  }
  field_->reduce(prod);
  c_ = std::move(prod);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  return a.c_ == b.c_;
}

namespace {
// univariate polynomial helpers over Q, dense low-to-high
using QV = std::vector<mpq_class>;

int qv_deg(const QV& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

QV qv_rem(QV a, const QV& b) {
  int db = qv_deg(b);
  for (int da = qv_deg(a); da >= db; da = qv_deg(a)) {
    mpq_class q = a[da] / b[db];
    for (int j = 0; j <= db; ++j) a[da - db + j] -= q * b[j];
  }
  return a;
}
}  // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) throw math_error("division by zero");
  if (!field_ || is_rational()) {
    Scalar r = zero(field_);
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // extended Euclid for c(t) mod m(t)
  QV r0, r1 = c_;
  for (const auto& z : field_->min_poly()) r0.emplace_back(z);
  QV s0(1, mpq_class(0)), s1(1, mpq_class(1));  // Bezout coefficients for c
  while (true) {
    int d1 = qv_deg(r1);
    if (d1 < 0) throw math_error("non-invertible element (reducible minimal polynomial?)");
    if (d1 == 0) {
      // r1 = s1 * c mod m, constant
      mpq_class inv = 1 / r1[0];
      std::vector<mpq_class> out(s1.begin(), s1.end());
      for (auto& q : out) q *= inv;
      return Scalar(field_, std::move(out));
    }
    int d0 = qv_deg(r0);
    // r0 = q*r1 + r2, update Bezout pair the same way
    QV q(std::max(d0 - d1 + 1, 1), mpq_class(0));
    QV rr = r0;
    for (int da = qv_deg(rr); da >= d1; da = qv_deg(rr)) {
      mpq_class f = rr[da] / r1[d1];
      q[da - d1] = f;
      for (int j = 0; j <= d1; ++j) rr[da - d1 + j] -= f * r1[j];
    }
    QV s2 = s0;
    s2.resize(std::max(s0.size(), q.size() + s1.size()), mpq_class(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rr);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = one(field_);
  Scalar b = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r *= b;
    b *= b;
    u >>= 1;
  }
  return r;
}

long Scalar::root_of_unity_order(long bound) const {
  if (is_zero()) return 0;
  Scalar p = *this;
  for (long k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= *this;
  }
  return 0;
}

std::string mpq_to_string(const mpq_class& q) { return q.get_str(); }

std::string Scalar::to_string() const {
  if (!field_ || is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    if (c_[i] == 0) continue;
    mpq_class a = abs(c_[i]);
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

size_t Scalar::bit_size() const {
  size_t m = 0;
  for (const auto& q : c_) {
    m = std::max(m, mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
    m = std::max(m, mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
  }
  return m;
}

}  // namespace cremona
