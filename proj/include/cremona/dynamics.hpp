#pragma once
// Degree-growth analysis: the four growth classes, lambda brackets, proper
// base points by elimination, the dynamical number of base-points at
// proper-point level, and the Jonquieres bookkeeping.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/cremap.hpp"

namespace cremona {

enum class GrowthClass { Elliptic, Jonquieres, Halphen, Hyperbolic, Undetermined };
std::string growth_class_name(GrowthClass c);

struct LambdaEstimate {
  mpq_class lower;         // bracket of (deg phi^K)^(1/K)
  mpq_class upper;
  mpq_class fekete_upper;  // min over k of the upper brackets; valid bound for lambda
};

struct GrowthReport {
  std::vector<long> degrees;
  GrowthClass cls = GrowthClass::Undetermined;
  LambdaEstimate lambda;
  mpq_class linear_slope;     // median of tail successive differences
  mpq_class quadratic_coeff;  // mean tail second difference / 2
  mpq_class max_deviation;    // max |d_k - slope*k|
};

GrowthReport classify_growth(const std::vector<long>& degrees);
LambdaEstimate lambda_estimate(const std::vector<long>& degrees);
// median of successive differences over the second half (even count)
mpq_class tail_slope(const std::vector<long>& degrees);

struct BasePoint {
  ProjPoint pt;
  int multiplicity = 1;
};

struct BasePointCluster {
  int degree;  // conjugate points carried unsplit
  std::string from;
};

struct BasePointReport {
  std::vector<BasePoint> points;
  std::vector<BasePointCluster> clusters;
};

BasePointReport proper_base_points(const RationalMapP2& phi);

long jonquieres_bp_count(long d);

struct MultiplicityProfile {
  long degree;
  std::vector<long> mults;
};
bool validate_profile(const MultiplicityProfile& p);

// does phi map lines through p0 to lines through p0?
bool preserves_pencil_through(const RationalMapP2& phi, const ProjPoint& p0);
// search the base points for a pencil center
std::optional<ProjPoint> find_pencil_center(const RationalMapP2& phi);

struct MuEstimate {
  long mu = 0;
  mpq_class raw;    // pre-rounding 2*slope
  mpq_class slope;  // median tail slope
  bool pencil_verified = false;
};

MuEstimate mu_estimate(const RationalMapP2& phi, const std::optional<ProjPoint>& pencil_point,
                       int K, bool accept_slope_only = false);

struct PersistRecord {
  ProjPoint pt;
  int multiplicity = 1;
  std::map<int, bool> membership;  // k in [-N..N]\{0} -> base point of phi^k
  std::string cls;                 // "B++", "B+-", "B-+", "B--", "periodic"
  int orbit_id = -1;               // orbit class among B+- points
};

struct PersistenceReport {
  int N = 0;
  std::vector<PersistRecord> records;
  int nu_proper = 0;
  bool pencil_profile = false;  // b-counts pinned by the pencil profile
  std::vector<long> b_counts;   // k = 1..N; exact when pencil_profile
  std::vector<std::string> flags;
};

PersistenceReport persistence_scan(const RationalMapP2& phi, const RationalMapP2& phi_inv, int N);

// resultant of two bivariate polynomials with respect to y (Sylvester /
// fraction-free elimination); result is univariate in x
Poly2 resultant_y(const Poly2& a, const Poly2& b);

// rational roots of a univariate (in x) polynomial over Q; second element
// reports the degree of the unresolved (non-rational) cofactor
std::pair<std::vector<mpq_class>, int> rational_roots_x(const Poly2& p);

}  // namespace cremona
