#include "cremona/dynamics.hpp"

#include <algorithm>
#include <set>

namespace cremona {

std::string growth_class_name(GrowthClass c) {
  switch (c) {
    case GrowthClass::Elliptic: return "Elliptic";
    case GrowthClass::Jonquieres: return "Jonquieres";
    case GrowthClass::Halphen: return "Halphen";
    case GrowthClass::Hyperbolic: return "Hyperbolic";
    default: return "Undetermined";
  }
}

namespace {
size_t tail_start(size_t n) { return n / 2; }

mpq_class median_sorted(std::vector<mpq_class> v) {
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return (v[n / 2 - 1] + v[n / 2]) / 2;
}
}  // namespace

mpq_class tail_slope(const std::vector<long>& degrees) {
  size_t n = degrees.size();
  if (n < 3) throw input_error("sequence too short for a slope");
  size_t t0 = tail_start(n);
  std::vector<mpq_class> diffs;
  for (size_t k = t0; k + 1 < n; ++k) diffs.emplace_back(degrees[k + 1] - degrees[k]);
  // even count keeps alternating patterns honest (the median averages the pair)
  if (diffs.size() % 2 == 1) diffs.erase(diffs.begin());
  if (diffs.empty()) diffs.emplace_back(0);
  return median_sorted(std::move(diffs));
}

LambdaEstimate lambda_estimate(const std::vector<long>& degrees) {
  if (degrees.size() < 4) throw input_error("lambda estimate needs at least 4 degrees");
  for (long d : degrees)
    if (d < 1) throw input_error("degrees must be >= 1");

  auto bracket = [](long d, unsigned long k) {
    mpz_class dd(d), root;
    mpz_root(root.get_mpz_t(), dd.get_mpz_t(), k);
    mpq_class lo(root), hi;
    mpz_class rk;
    mpz_pow_ui(rk.get_mpz_t(), root.get_mpz_t(), k);
    if (rk == dd) return std::pair<mpq_class, mpq_class>{lo, lo};
    hi = lo + 1;
    // bisect to relative width ~ 1/64
    for (int it = 0; it < 48; ++it) {
      mpq_class mid = (lo + hi) / 2;
      mpz_class num_pow, den_pow;
      mpz_pow_ui(num_pow.get_mpz_t(), mid.get_num().get_mpz_t(), k);
      mpz_pow_ui(den_pow.get_mpz_t(), mid.get_den().get_mpz_t(), k);
      if (num_pow <= dd * den_pow) lo = mid;
      else hi = mid;
      if ((hi - lo) * 64 < lo) break;
    }
    return std::pair<mpq_class, mpq_class>{lo, hi};
  };

  LambdaEstimate est;
  auto [lo, hi] = bracket(degrees.back(), static_cast<unsigned long>(degrees.size()));
  est.lower = lo;
  est.upper = hi;
  est.fekete_upper = hi;
  for (size_t k = 1; k <= degrees.size(); ++k) {
    auto [l2, h2] = bracket(degrees[k - 1], static_cast<unsigned long>(k));
    if (h2 < est.fekete_upper) est.fekete_upper = h2;
  }
  return est;
}

GrowthReport classify_growth(const std::vector<long>& degrees) {
  if (degrees.size() < 8) throw input_error("classification needs at least 8 degrees");
  for (long d : degrees)
    if (d < 1) throw input_error("degrees must be >= 1");
  GrowthReport rep;
  rep.degrees = degrees;
  rep.lambda = lambda_estimate(degrees);
  rep.linear_slope = tail_slope(degrees);

  size_t n = degrees.size();
  size_t t0 = tail_start(n);

  // quadratic coefficient: mean second difference over the tail, halved
  std::vector<long> sdiffs;
  for (size_t k = t0; k + 2 < n; ++k)
    sdiffs.push_back(degrees[k + 2] - 2 * degrees[k + 1] + degrees[k]);
  if (!sdiffs.empty()) {
    long sum = 0;
    for (long s : sdiffs) sum += s;
    rep.quadratic_coeff = mpq_class(sum, 2 * static_cast<long>(sdiffs.size()));
    rep.quadratic_coeff.canonicalize();
  }

  // deviation from the fitted line
  rep.max_deviation = 0;
  for (size_t k = 0; k < n; ++k) {
    mpq_class dev = abs(mpq_class(degrees[k]) - rep.linear_slope * mpq_class(static_cast<long>(k + 1)));
    if (dev > rep.max_deviation) rep.max_deviation = dev;
  }

  // 1) exponential: mean tail log-ratio exceeds ln(21/20)
  {
    long T = static_cast<long>(n - 1 - t0);
    if (T >= 1) {
      mpz_class lhs(degrees.back()), rhs(degrees[t0]), p20, p21;
      mpz_ui_pow_ui(p20.get_mpz_t(), 20, static_cast<unsigned long>(T));
      mpz_ui_pow_ui(p21.get_mpz_t(), 21, static_cast<unsigned long>(T));
      if (lhs * p20 > rhs * p21) {
        rep.cls = GrowthClass::Hyperbolic;
        return rep;
      }
    }
  }

  // 2) quadratic: tail second differences near a positive constant
  if (!sdiffs.empty()) {
    long sum = 0, mn = sdiffs.front(), mx = sdiffs.front();
    for (long s : sdiffs) {
      sum += s;
      mn = std::min(mn, s);
      mx = std::max(mx, s);
    }
    // c = round(mean), positive; every sample within +-1 of c
    long cnt = static_cast<long>(sdiffs.size());
    long c = (2 * sum + cnt) / (2 * cnt);  // round(sum/cnt) for sum>=0
    if (sum > 0 && c >= 1 && mx - c <= 1 && c - mn <= 1) {
      rep.cls = GrowthClass::Halphen;
      return rep;
    }
  }

  // 3) linear: positive median slope over the tail
  if (rep.linear_slope > 0) {
    rep.cls = GrowthClass::Jonquieres;
    return rep;
  }

  // 4) bounded: the global maximum shows up early and the tail stays at it
  {
    long gmax = *std::max_element(degrees.begin(), degrees.end());
    size_t first = 0;
    while (degrees[first] != gmax) ++first;
    long tmax = *std::max_element(degrees.begin() + static_cast<long>(t0), degrees.end());
    if (tmax == gmax && first <= n / 2) {
      rep.cls = GrowthClass::Elliptic;
      return rep;
    }
  }

  rep.cls = GrowthClass::Undetermined;
  return rep;
}

// ---------------------------------------------------------------------------
// elimination helpers

Poly2 resultant_y(const Poly2& a, const Poly2& b) {
  const FieldPtr& f = join_field(a.field(), b.field());
  int da = a.deg_y(), db = b.deg_y();
  if (da < 0 || a.is_zero() || b.is_zero()) throw input_error("resultant of zero polynomial");
  // y-coefficients, each univariate in x
  auto ycoeffs = [&](const Poly2& p, int dy) {
    std::vector<Poly2> c(static_cast<size_t>(dy) + 1, Poly2(f));
    std::vector<std::map<Poly2::Key, Scalar>> maps(c.size());
    for (const auto& [k, v] : p.terms()) maps[static_cast<size_t>(k.second)].emplace(Poly2::Key{k.first, 0}, v);
    for (size_t i = 0; i < c.size(); ++i) c[i] = Poly2(f, std::move(maps[i]));
    return c;
  };
  if (da == 0 && db == 0) throw input_error("resultant needs a positive y-degree");
  if (da == 0) {
    // Res(a, b) = a^db
    Poly2 r = Poly2::constant(f, Scalar::one(f));
    for (int i = 0; i < db; ++i) r = r * a;
    return r;
  }
  if (db == 0) {
    Poly2 r = Poly2::constant(f, Scalar::one(f));
    for (int i = 0; i < da; ++i) r = r * b;
    return r;
  }
  auto ca = ycoeffs(a, da), cb = ycoeffs(b, db);
  int n = da + db;
  std::vector<std::vector<Poly2>> m(static_cast<size_t>(n), std::vector<Poly2>(static_cast<size_t>(n), Poly2(f)));
  for (int r = 0; r < db; ++r)
    for (int j = 0; j <= da; ++j) m[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = ca[static_cast<size_t>(da - j)];
  for (int r = 0; r < da; ++r)
    for (int j = 0; j <= db; ++j) m[static_cast<size_t>(db + r)][static_cast<size_t>(r + j)] = cb[static_cast<size_t>(db - j)];
  // fraction-free Bareiss
  Poly2 prev = Poly2::constant(f, Scalar::one(f));
  bool neg = false;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int sw = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m[r][k].is_zero()) {
          sw = r;
          break;
        }
      if (sw < 0) return Poly2(f);  // zero determinant
      std::swap(m[k], m[sw]);
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
    prev = m[k][k];
  }
  Poly2 det = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
  return neg ? -det : det;
}

std::pair<std::vector<mpq_class>, int> rational_roots_x(const Poly2& p) {
  if (!is_univariate_x(p)) throw input_error("rational_roots_x expects a univariate polynomial");
  std::vector<Scalar> cs = univariate_x_coeffs(p);
  for (const auto& c : cs)
    if (!c.is_rational()) return {{}, static_cast<int>(cs.size()) - 1};  // extension leftover: cluster
  // to integer coefficients
  std::vector<mpq_class> q;
  q.reserve(cs.size());
  for (const auto& c : cs) q.push_back(c.rational());
  mpz_class den = 1;
  for (const auto& v : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(q.size());
  for (const auto& v : q) z.push_back(v.get_num() * (den / v.get_den()));
  std::vector<mpq_class> roots;
  // strip zero roots
  size_t shift = 0;
  while (shift < z.size() && z[shift] == 0) ++shift;
  if (shift == z.size()) return {{mpq_class(0)}, 0};
  if (shift > 0) {
    roots.emplace_back(0);
    z.erase(z.begin(), z.begin() + static_cast<long>(shift));
  }
  auto divisors = [](mpz_class v, bool& complete) {
    std::vector<mpz_class> ds{1};
    v = abs(v);
    complete = true;
    for (mpz_class f = 2; f * f <= v && f < 1000000; ++f) {
      if (v % f != 0) continue;
      int e = 0;
      while (v % f == 0) {
        v /= f;
        ++e;
      }
      size_t base = ds.size();
      mpz_class pw = 1;
      for (int i = 1; i <= e; ++i) {
        pw *= f;
        for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pw);
      }
    }
    if (v > 1) {
      if (v < mpz_class(1) << 62) {
        size_t base = ds.size();
        for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * v);
      } else {
        complete = false;  // huge prime-ish cofactor: give up on its divisors
      }
    }
    return ds;
  };
  // deflate by found roots, candidates from extreme coefficients
  while (true) {
    int d = static_cast<int>(z.size()) - 1;
    if (d < 1) break;
    if (d == 1) {
      mpq_class r(-z[0], z[1]);
      r.canonicalize();
      roots.push_back(r);
      z = {z[1]};
      break;
    }
    bool c0 = true, c1 = true;
    auto dn = divisors(z[0], c0);
    auto dd = divisors(z[static_cast<size_t>(d)], c1);
    bool found = false;
    for (const auto& pnum : dn) {
      for (const auto& pden : dd) {
        for (int sign = 1; sign >= -1 && !found; sign -= 2) {
          mpq_class cand(sign * pnum, pden);
          cand.canonicalize();
          // Horner over Q
          mpq_class acc = 0;
          for (int i = d; i >= 0; --i) acc = acc * cand + mpq_class(z[static_cast<size_t>(i)]);
          if (acc == 0) {
            roots.push_back(cand);
            // synthetic division by (x - cand): work over Q then clear
            std::vector<mpq_class> nq(static_cast<size_t>(d), mpq_class(0));
            mpq_class carry = 0;
            for (int i = d; i >= 1; --i) {
              carry = mpq_class(z[static_cast<size_t>(i)]) + carry * cand;
              nq[static_cast<size_t>(i - 1)] = carry;
            }
            mpz_class den2 = 1;
            for (const auto& v : nq) mpz_lcm(den2.get_mpz_t(), den2.get_mpz_t(), v.get_den().get_mpz_t());
            z.assign(nq.size(), mpz_class(0));
            for (size_t i = 0; i < nq.size(); ++i) z[i] = nq[i].get_num() * (den2 / nq[i].get_den());
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  int leftover = static_cast<int>(z.size()) - 1;
  return {roots, leftover};
}

namespace {

struct PairZeros {
  std::vector<std::pair<mpq_class, mpq_class>> pts;  // affine (x,y)
  int cluster_degree = 0;
};

// common zeros of two coprime bivariate polynomials in the chart z=1
PairZeros coprime_pair_zeros(const Poly2& a, const Poly2& b) {
  PairZeros out;
  const FieldPtr& f = join_field(a.field(), b.field());
  if (a.deg_y() == 0 && b.deg_y() == 0) {
    // both univariate in x: shared roots of their gcd
    Poly2 g = gcd_poly2(a, b);
    if (g.is_constant()) return out;
    auto [roots, left] = rational_roots_x(g);
    out.cluster_degree += left;
    // y unconstrained would mean positive-dimensional locus; flagged upstream
    return out;
  }
  const Poly2& main_a = a.deg_y() > 0 ? a : b;
  const Poly2& main_b = a.deg_y() > 0 ? b : a;
  Poly2 res = resultant_y(main_a, main_b);
  if (res.is_zero()) return out;  // callers pass coprime pairs; degenerate anyway
  auto [roots, left] = rational_roots_x(res);
  out.cluster_degree += left;
  for (const auto& x0 : roots) {
    // gcd of the two restrictions in y
    auto restrict = [&](const Poly2& p) {
      std::map<Poly2::Key, Scalar> m;
      for (const auto& [k, v] : p.terms()) {
        Scalar val = v * Scalar(x0).pow(k.first);
        auto it = m.find(Poly2::Key{0, k.second});
        if (it == m.end()) m.emplace(Poly2::Key{0, k.second}, val);
        else it->second += val;
      }
      return Poly2(f, std::move(m));
    };
    Poly2 ra = restrict(main_a), rb = restrict(main_b);
    Poly2 g = ra.is_zero() ? rb : rb.is_zero() ? ra : gcd_poly2(ra, rb);
    if (g.is_constant()) continue;
    // g univariate in y: swap roles to reuse the x-root finder
    std::map<Poly2::Key, Scalar> sw;
    for (const auto& [k, v] : g.terms()) sw.emplace(Poly2::Key{k.second, k.first}, v);
    auto [yroots, yleft] = rational_roots_x(Poly2(f, std::move(sw)));
    out.cluster_degree += yleft;
    for (const auto& y0 : yroots) out.pts.emplace_back(x0, y0);
  }
  return out;
}

void affine_zeros(const Poly2& p, const Poly2& q, const Poly2& r,
                  std::vector<std::pair<mpq_class, mpq_class>>& pts, int& cluster) {
  // V(p,q,r) = [V(g,r)] with g=gcd(p,q), plus V(p/g, q/g, r)
  if (p.is_zero() && q.is_zero()) {
    if (!r.is_zero()) {
      // zeros of a single curve: positive-dimensional, not a base-point set
    }
    return;
  }
  if (p.is_zero()) return affine_zeros(q, r, r, pts, cluster);
  if (q.is_zero()) return affine_zeros(p, r, r, pts, cluster);
  Poly2 g = gcd_poly2(p, q);
  if (!g.is_constant()) {
    PairZeros pz = coprime_pair_zeros(g, r);
    for (auto& pt : pz.pts) pts.push_back(std::move(pt));
    cluster += pz.cluster_degree;
    Poly2 pr = p.divide_exact(g), qr = q.divide_exact(g);
    if (!pr.is_constant() || !qr.is_constant()) affine_zeros(pr, qr, r, pts, cluster);
    return;
  }
  PairZeros pz = coprime_pair_zeros(p, q);
  cluster += pz.cluster_degree;
  const FieldPtr& f = join_field(p.field(), r.field());
  for (auto& [x0, y0] : pz.pts) {
    if (r.eval(Scalar(x0), Scalar(y0)).is_zero()) pts.emplace_back(x0, y0);
  }
  (void)f;
}

}  // namespace

BasePointReport proper_base_points(const RationalMapP2& phi) {
  BasePointReport rep;
  if (phi.degree() <= 1) return rep;
  const FieldPtr& f = phi.field();
  const auto& c = phi.components();

  // chart z = 1
  std::vector<std::pair<mpq_class, mpq_class>> pts;
  int cluster = 0;
  affine_zeros(dehomogenize(c[0]), dehomogenize(c[1]), dehomogenize(c[2]), pts, cluster);
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<ProjPoint> found;
  for (const auto& [x0, y0] : pts) {
    ProjPoint p(std::array<Scalar, 3>{Scalar(x0), Scalar(y0), Scalar(1)});
    auto key = std::make_pair(x0.get_str(), y0.get_str());
    if (!seen.insert(key).second) continue;
    found.push_back(p);
  }

  // line z = 0: restrict to (1:t:0) and check (0:1:0) separately
  {
    auto restrict_line = [&](const HomPoly& p) {
      std::map<Poly2::Key, Scalar> m;
      for (const auto& t : p.terms()) {
        if (t.m.c != 0) continue;
        auto it = m.find(Poly2::Key{t.m.b, 0});
        if (it == m.end()) m.emplace(Poly2::Key{t.m.b, 0}, t.c);
        else it->second += t.c;
      }
      return Poly2(f, std::move(m));  // polynomial in t (named x internally)
    };
    Poly2 r0 = restrict_line(c[0]), r1 = restrict_line(c[1]), r2 = restrict_line(c[2]);
    Poly2 g = Poly2::constant(f, Scalar::one(f));
    bool first = true;
    for (const Poly2* pp : {&r0, &r1, &r2}) {
      if (pp->is_zero()) continue;
      g = first ? *pp : gcd_poly2(g, *pp);
      first = false;
    }
    if (!first && !g.is_constant()) {
      auto [roots, left] = rational_roots_x(g);
      if (left > 0) rep.clusters.push_back({left, "line at infinity"});
      for (const auto& t0 : roots) found.emplace_back(std::array<Scalar, 3>{Scalar(1), Scalar(t0), Scalar(0)});
    }
    ProjPoint p010(std::array<Scalar, 3>{Scalar(0), Scalar(1), Scalar(0)});
    bool vanish = true;
    for (const auto& comp : c)
      if (!comp.is_zero() && !comp.eval(p010.c[0], p010.c[1], p010.c[2]).is_zero()) vanish = false;
    if (vanish) found.push_back(p010);
  }
  if (cluster > 0) rep.clusters.push_back({cluster, "affine chart"});

  for (const auto& p : found) {
    // confirm and compute multiplicity
    bool vanish = true;
    for (const auto& comp : c)
      if (!comp.is_zero() && !comp.eval(p.c[0], p.c[1], p.c[2]).is_zero()) vanish = false;
    if (!vanish) continue;
    int mult = phi.degree();
    for (const auto& comp : c)
      if (!comp.is_zero()) mult = std::min(mult, vanishing_order_at(comp, p.c));
    rep.points.push_back({p, mult});
  }
  return rep;
}

long jonquieres_bp_count(long d) {
  if (d < 1) throw input_error("degree must be >= 1");
  return d == 1 ? 0 : 2 * d - 1;
}

bool validate_profile(const MultiplicityProfile& p) {
  long s1 = 0, s2 = 0;
  for (long m : p.mults) {
    s1 += m;
    s2 += m * m;
  }
  return s1 == 3 * (p.degree - 1) && s2 == p.degree * p.degree - 1;
}

bool preserves_pencil_through(const RationalMapP2& phi, const ProjPoint& p0) {
  const FieldPtr& f = phi.field();
  // move p0 to (1:0:0)
  int piv = 0;
  for (int i = 0; i < 3; ++i)
    if (!p0.c[i].is_zero()) piv = i;
  std::array<std::array<Scalar, 3>, 3> m;
  for (auto& row : m) row = {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
  for (int i = 0; i < 3; ++i) m[i][0] = p0.c[i];
  int col = 1;
  for (int j = 0; j < 3; ++j) {
    if (j == piv) continue;
    m[j][col++] = Scalar::one(f);
  }
  RationalMapP2 T = RationalMapP2::linear(f, m);
  auto Tinv = inverse_up_to_degree2(T);
  if (!Tinv) throw math_error("chart matrix is singular");
  RationalMapP2 psi = compose(*Tinv, compose(phi, T));
  const auto& pc = psi.components();
  if (pc[1].is_zero() || pc[2].is_zero()) return false;
  HomPoly g = gcd_hom(pc[1], pc[2]);
  HomPoly q1 = pc[1].divide_exact(g);
  HomPoly q2 = pc[2].divide_exact(g);
  if (q1.degree() != 1) return false;
  for (const auto& t : q1.terms())
    if (t.m.a != 0) return false;
  for (const auto& t : q2.terms())
    if (t.m.a != 0) return false;
  return true;
}

std::optional<ProjPoint> find_pencil_center(const RationalMapP2& phi) {
  auto bp = proper_base_points(phi);
  // the center carries multiplicity d-1; try the deepest points first
  std::sort(bp.points.begin(), bp.points.end(),
            [](const BasePoint& a, const BasePoint& b) { return a.multiplicity > b.multiplicity; });
  for (const auto& p : bp.points)
    if (preserves_pencil_through(phi, p.pt)) return p.pt;
  return std::nullopt;
}

MuEstimate mu_estimate(const RationalMapP2& phi, const std::optional<ProjPoint>& pencil_point,
                       int K, bool accept_slope_only) {
  if (K < 6) throw input_error("mu estimate needs a horizon of at least 6");
  MuEstimate est;
  if (pencil_point) {
    est.pencil_verified = preserves_pencil_through(phi, *pencil_point);
    if (!est.pencil_verified && !accept_slope_only)
      throw input_error("map does not preserve the pencil of lines through the given point");
  } else if (!accept_slope_only) {
    auto center = find_pencil_center(phi);
    if (center) est.pencil_verified = true;
    else throw input_error("no pencil of lines found; pass a pencil point or accept slope-only output");
  }
  std::vector<long> degs = iterate_degrees(phi, K);
  est.slope = tail_slope(degs);
  est.raw = 2 * est.slope;
  mpq_class rounded = est.raw + mpq_class(1, 2);
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), rounded.get_num().get_mpz_t(), rounded.get_den().get_mpz_t());
  est.mu = fl.get_si();
  mpq_class err = abs(est.raw - mpq_class(est.mu));
  if (err > mpq_class(1, 10))
    throw math_error("mu is not integral within tolerance 0.1 (wrong horizon or non-Jonquieres input)");
  return est;
}

PersistenceReport persistence_scan(const RationalMapP2& phi, const RationalMapP2& phi_inv, int N) {
  if (N < 2) throw input_error("persistence scan needs N >= 2");
  if (!verify_inverse(phi, phi_inv)) throw input_error("persistence scan: inverse fails verification");
  PersistenceReport rep;
  rep.N = N;

  IterateCache fwd(phi), bwd(phi_inv);
  auto bpf = proper_base_points(phi);
  auto bpb = proper_base_points(phi_inv);
  for (const auto& cl : bpf.clusters)
    rep.flags.push_back("unsplit cluster of degree " + std::to_string(cl.degree) + " in Base(phi)");
  for (const auto& cl : bpb.clusters)
    rep.flags.push_back("unsplit cluster of degree " + std::to_string(cl.degree) + " in Base(phi^-1)");

  std::vector<PersistRecord> recs;
  auto add_candidate = [&](const BasePoint& b) {
    for (const auto& r : recs)
      if (r.pt == b.pt) return;
    PersistRecord r;
    r.pt = b.pt;
    r.multiplicity = b.multiplicity;
    recs.push_back(std::move(r));
  };
  for (const auto& b : bpf.points) add_candidate(b);
  for (const auto& b : bpb.points) add_candidate(b);

  auto is_base_of = [&](const RationalMapP2& m, const ProjPoint& p) {
    for (const auto& comp : m.components())
      if (!comp.is_zero() && !comp.eval(p.c[0], p.c[1], p.c[2]).is_zero()) return false;
    return true;
  };

  for (auto& r : recs) {
    for (int k = 1; k <= N; ++k) {
      r.membership[k] = is_base_of(fwd.get(k), r.pt);
      r.membership[-k] = is_base_of(bwd.get(k), r.pt);
    }
    int w0 = (N + 1) / 2;
    auto stable = [&](int sign) -> std::optional<bool> {
      bool v = r.membership.at(sign * w0);
      for (int k = w0; k <= N; ++k)
        if (r.membership.at(sign * k) != v) return std::nullopt;
      return v;
    };
    auto fs = stable(+1), bs = stable(-1);
    if (!fs || !bs) r.cls = "periodic";
    else if (*fs && *bs) r.cls = "B++";
    else if (*fs && !*bs) r.cls = "B+-";
    else if (!*fs && *bs) r.cls = "B-+";
    else r.cls = "B--";
  }

  // orbit classes among the persistent points
  std::vector<size_t> persistent;
  for (size_t i = 0; i < recs.size(); ++i)
    if (recs[i].cls == "B+-") persistent.push_back(i);
  int next_orbit = 0;
  for (size_t idx : persistent) {
    if (recs[idx].orbit_id >= 0) continue;
    recs[idx].orbit_id = next_orbit;
    // forward/backward images by phi^k identify orbit mates
    for (size_t jdx : persistent) {
      if (recs[jdx].orbit_id >= 0) continue;
      bool mate = false;
      for (int k = 1; k <= N && !mate; ++k) {
        if (!recs[idx].membership.at(k)) {
          auto img = fwd.get(k).eval(recs[idx].pt);
          if (img && *img == recs[jdx].pt) mate = true;
        }
        if (!recs[idx].membership.at(-k)) {
          auto img = bwd.get(k).eval(recs[idx].pt);
          if (img && *img == recs[jdx].pt) mate = true;
        }
      }
      if (mate) recs[jdx].orbit_id = recs[idx].orbit_id;
    }
    ++next_orbit;
  }
  rep.nu_proper = next_orbit;

  // b-counts: pinned by the profile when a pencil of lines is preserved
  auto center = find_pencil_center(phi);
  rep.pencil_profile = center.has_value();
  for (int k = 1; k <= N; ++k) {
    long dk = fwd.get(k).degree();
    if (rep.pencil_profile) rep.b_counts.push_back(jonquieres_bp_count(dk));
    else {
      auto bk = proper_base_points(fwd.get(k));
      long cnt = static_cast<long>(bk.points.size());
      for (const auto& cl : bk.clusters) cnt += cl.degree;
      rep.b_counts.push_back(cnt);
    }
  }
  if (!rep.pencil_profile) rep.flags.push_back("proper-only");

  rep.records = std::move(recs);
  return rep;
}

}  // namespace cremona
