#pragma once
// Exact scalars: arbitrary-precision rationals, optionally living in a
// simple extension Q[t]/(m(t)) for a monic integer minimal polynomial m.
// Irreducibility of m is trusted, not verified.

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : error {
  using error::error;
};
struct field_mismatch : error {
  using error::error;
};
struct math_error : error {  // division by zero and friends
  using error::error;
};
struct input_error : error {  // bad shapes, degree mismatches
  using error::error;
};
struct bitcap_exceeded : error {
  using error::error;
};

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
 public:
  // coeffs = c0, c1, ..., 1 (degree >= 1, monic, integer)
  explicit NumberField(std::vector<mpz_class> monic_coeffs);

  int degree() const { return static_cast<int>(m_.size()) - 1; }
  const std::vector<mpz_class>& min_poly() const { return m_; }
  std::string to_string() const;

  // reduce a coefficient vector of arbitrary length mod m(t); resizes to degree()
  void reduce(std::vector<mpq_class>& c) const;

  static FieldPtr make(std::vector<mpz_class> monic_coeffs);

 private:
  std::vector<mpz_class> m_;
};

// Both null (plain Q) or pointer-identical extension.
bool same_field(const FieldPtr& a, const FieldPtr& b);
// The common context of two scalars; promotes plain-Q values into an extension.
FieldPtr join_field(const FieldPtr& a, const FieldPtr& b);

class Scalar {
 public:
  Scalar() : c_(1) {}
  Scalar(long v) : c_(1) { c_[0] = v; }  // NOLINT: implicit by design
  Scalar(const mpz_class& v) : c_(1) { c_[0] = v; }
  Scalar(const mpq_class& v) : c_(1) { c_[0] = v; }
  Scalar(FieldPtr f, std::vector<mpq_class> coeffs);

  static Scalar zero(const FieldPtr& f);
  static Scalar one(const FieldPtr& f);
  static Scalar generator(const FieldPtr& f);  // the class of t

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;  // lies in Q (regardless of context)
  const mpq_class& rational() const;
  const std::vector<mpq_class>& coeffs() const { return c_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(long e) const;

  // multiplicative order when this is a root of unity; 0 means none found
  // within the search bound (elements of infinite order included)
  long root_of_unity_order(long bound = 256) const;

  std::string to_string() const;
  size_t bit_size() const;  // max numerator/denominator size

 private:
  FieldPtr field_;  // null = plain Q
  std::vector<mpq_class> c_;

  void promote(const FieldPtr& f);
  static void align(Scalar& a, Scalar& b);
};

std::string mpq_to_string(const mpq_class& q);

}  // namespace cremona
