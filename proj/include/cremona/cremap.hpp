#pragma once
// Rational maps of P^2: triples of equal-degree homogeneous polynomials
// without common factor.  Composition divides out the common factor that
// substitution introduces.

#include <array>
#include <optional>
#include <vector>

#include "cremona/affine.hpp"

namespace cremona {

struct ProjPoint {
  std::array<Scalar, 3> c;

  ProjPoint() = default;
  explicit ProjPoint(std::array<Scalar, 3> coords);  // normalizes
  bool operator==(const ProjPoint& o) const;
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string to_string() const;
};

class RationalMapP2 {
 public:
  RationalMapP2() = default;

  // reduces by gcd3 and puts the triple in canonical scaling
  static RationalMapP2 from_components(std::array<HomPoly, 3> comps, bool reduce = true);
  static RationalMapP2 identity(const FieldPtr& f = nullptr);
  static RationalMapP2 linear(const FieldPtr& f, const std::array<std::array<Scalar, 3>, 3>& m);
  static RationalMapP2 from_affine(const AffineBirMap& m);

  const std::array<HomPoly, 3>& components() const { return c_; }
  int degree() const { return deg_; }
  const FieldPtr& field() const { return field_; }
  bool is_identity() const;

  // image of a point; nullopt when the point is in the base locus
  std::optional<ProjPoint> eval(const ProjPoint& p) const;

  AffineBirMap to_affine() const;

  size_t max_coeff_bits() const;
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::array<HomPoly, 3> c_;
  int deg_ = 1;
  void canonicalize();
};

// phi o psi (substitute psi into phi), reduced
RationalMapP2 compose(const RationalMapP2& phi, const RationalMapP2& psi);

// projective equality via 2x2 cross products; never divides
bool equals(const RationalMapP2& a, const RationalMapP2& b);

bool verify_inverse(const RationalMapP2& phi, const RationalMapP2& psi);

// psi o phi o psi_inv; the inverse pair is verified first
RationalMapP2 conjugate(const RationalMapP2& psi, const RationalMapP2& psi_inv,
                        const RationalMapP2& phi);

bool commutes(const RationalMapP2& a, const RationalMapP2& b);

// deg phi^1..K by repeated composition; aborts when coefficients outgrow
// max_bits (default 10^6)
std::vector<long> iterate_degrees(const RationalMapP2& phi, int K, size_t max_bits = 1000000);

// lazily computed powers of a fixed map
class IterateCache {
 public:
  explicit IterateCache(RationalMapP2 base, size_t max_bits = 1000000);
  const RationalMapP2& get(int k);  // k >= 0

 private:
  std::vector<RationalMapP2> pows_;
  size_t max_bits_;
};

// inverse for degree <= 2 (adjugate / linear solve on generic images);
// nullopt when the candidate search fails
std::optional<RationalMapP2> inverse_up_to_degree2(const RationalMapP2& phi);

}  // namespace cremona
