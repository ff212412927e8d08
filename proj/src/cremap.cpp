#include "cremona/cremap.hpp"

#include <sstream>

namespace cremona {

ProjPoint::ProjPoint(std::array<Scalar, 3> coords) : c(std::move(coords)) {
  int last = -1;
  for (int i = 2; i >= 0; --i)
    if (!c[i].is_zero()) {
      last = i;
      break;
    }
  if (last < 0) throw input_error("projective point cannot be (0:0:0)");
  if (!c[last].is_one()) {
    Scalar inv = c[last].inverse();
    for (auto& v : c) v *= inv;
  }
}

bool ProjPoint::operator==(const ProjPoint& o) const {
  return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2];
}

std::string ProjPoint::to_string() const {
  return "(" + c[0].to_string() + " : " + c[1].to_string() + " : " + c[2].to_string() + ")";
}

void RationalMapP2::canonicalize() {
  // one scalar applied to the whole triple
  bool rat = true;
  for (const auto& p : c_)
    for (const auto& t : p.terms())
      if (!t.c.is_rational()) rat = false;
  const HomPoly* first = nullptr;
  for (const auto& p : c_)
    if (!p.is_zero()) {
      first = &p;
      break;
    }
  if (!first) throw input_error("map cannot be (0:0:0)");
  Scalar factor = Scalar::one(field_);
  if (rat) {
    mpz_class g = 0, l = 1;
    for (const auto& p : c_)
      for (const auto& t : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.rational().get_num().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.rational().get_den().get_mpz_t());
      }
    mpq_class f(g, l);
    f.canonicalize();
    if (first->leading_coeff().rational() < 0) f = -f;
    factor = Scalar(f);
  } else {
    factor = first->leading_coeff();
  }
  if (!factor.is_one()) {
    Scalar inv = factor.inverse();
    for (auto& p : c_) p = p.scaled(inv);
  }
}

RationalMapP2 RationalMapP2::from_components(std::array<HomPoly, 3> comps, bool reduce) {
  RationalMapP2 m;
  m.field_ = join_field(join_field(comps[0].field(), comps[1].field()), comps[2].field());
  bool all_zero = comps[0].is_zero() && comps[1].is_zero() && comps[2].is_zero();
  if (all_zero) throw input_error("map cannot be (0:0:0)");
  int d = -1;
  for (const auto& p : comps)
    if (!p.is_zero()) {
      if (d < 0) d = p.degree();
      else if (p.degree() != d) throw input_error("components must have equal degree");
    }
  if (reduce) {
    HomPoly g = gcd3(comps[0], comps[1], comps[2]);
    if (g.degree() > 0) {
      for (auto& p : comps)
        if (!p.is_zero()) p = p.divide_exact(g);
      d -= g.degree();
    }
  }
  for (auto& p : comps)
    if (p.is_zero()) p = HomPoly(m.field_, d);
  m.c_ = std::move(comps);
  m.deg_ = d;
  m.canonicalize();
  return m;
}

RationalMapP2 RationalMapP2::identity(const FieldPtr& f) {
  return from_components({HomPoly::variable(f, 0), HomPoly::variable(f, 1), HomPoly::variable(f, 2)},
                         false);
}

RationalMapP2 RationalMapP2::linear(const FieldPtr& f, const std::array<std::array<Scalar, 3>, 3>& m) {
  std::array<HomPoly, 3> comps;
  for (int i = 0; i < 3; ++i) {
    std::vector<HomPoly::Term> ts;
    for (int j = 0; j < 3; ++j) {
      if (m[i][j].is_zero()) continue;
      Mono mo;
      (j == 0 ? mo.a : j == 1 ? mo.b : mo.c) = 1;
      ts.push_back({mo, m[i][j]});
    }
    comps[i] = HomPoly(f, 1, std::move(ts));
  }
  return from_components(std::move(comps));
}

RationalMapP2 RationalMapP2::from_affine(const AffineBirMap& m) {
  FieldPtr f = join_field(m.f1.field(), m.f2.field());
  const Poly2 &n1 = m.f1.num(), &d1 = m.f1.den();
  const Poly2 &n2 = m.f2.num(), &d2 = m.f2.den();
  Poly2 g = gcd_poly2(d1, d2);
  Poly2 d1r = d1.divide_exact(g);
  Poly2 d2r = d2.divide_exact(g);
  Poly2 lcm = d1 * d2r;
  Poly2 a = n1 * d2r;
  Poly2 b = n2 * d1r;
  int deg = std::max({a.total_degree(), b.total_degree(), lcm.total_degree()});
  return from_components({a.homogenize(deg), b.homogenize(deg), lcm.homogenize(deg)});
}

AffineBirMap RationalMapP2::to_affine() const {
  if (c_[2].is_zero()) throw math_error("map does not define an affine self-map (z-image is 0)");
  Poly2 den = dehomogenize(c_[2]);
  return AffineBirMap{RatFunc(dehomogenize(c_[0]), den), RatFunc(dehomogenize(c_[1]), den)};
}

bool RationalMapP2::is_identity() const { return equals(*this, identity(field_)); }

std::optional<ProjPoint> RationalMapP2::eval(const ProjPoint& p) const {
  std::array<Scalar, 3> img;
  bool all_zero = true;
  for (int i = 0; i < 3; ++i) {
    img[i] = c_[i].is_zero() ? Scalar::zero(field_) : c_[i].eval(p.c[0], p.c[1], p.c[2]);
    all_zero = all_zero && img[i].is_zero();
  }
  if (all_zero) return std::nullopt;
  return ProjPoint(std::move(img));
}

size_t RationalMapP2::max_coeff_bits() const {
  size_t m = 0;
  for (const auto& p : c_) m = std::max(m, p.max_coeff_bits());
  return m;
}

std::string RationalMapP2::to_string() const {
  std::ostringstream os;
  os << "[" << c_[0].to_string() << ", " << c_[1].to_string() << ", " << c_[2].to_string() << "]";
  return os.str();
}

RationalMapP2 compose(const RationalMapP2& phi, const RationalMapP2& psi) {
  SubstCache cache;
  std::array<HomPoly, 3> comps;
  const auto& pc = psi.components();
  std::array<HomPoly, 3> inner{pc[0], pc[1], pc[2]};
  for (int i = 0; i < 3; ++i) comps[i] = substitute(phi.components()[i], inner, cache);
  if (comps[0].is_zero() && comps[1].is_zero() && comps[2].is_zero())
    throw math_error("composition is identically (0:0:0): image lies in the indeterminacy locus");
  return RationalMapP2::from_components(std::move(comps));
}

bool equals(const RationalMapP2& a, const RationalMapP2& b) {
  if (a.degree() != b.degree()) return false;
  const auto& p = a.components();
  const auto& q = b.components();
  static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : pairs) {
    int i = pr[0], j = pr[1];
    if (!(p[i] * q[j] == p[j] * q[i])) return false;
  }
  return true;
}

bool verify_inverse(const RationalMapP2& phi, const RationalMapP2& psi) {
  try {
    return compose(phi, psi).is_identity() && compose(psi, phi).is_identity();
  } catch (const math_error&) {
    return false;
  }
}

RationalMapP2 conjugate(const RationalMapP2& psi, const RationalMapP2& psi_inv,
                        const RationalMapP2& phi) {
  if (!verify_inverse(psi, psi_inv)) throw input_error("conjugate: inverse pair fails verification");
  return compose(psi, compose(phi, psi_inv));
}

bool commutes(const RationalMapP2& a, const RationalMapP2& b) {
  return equals(compose(a, b), compose(b, a));
}

std::vector<long> iterate_degrees(const RationalMapP2& phi, int K, size_t max_bits) {
  if (K < 1) throw input_error("horizon must be >= 1");
  std::vector<long> degs;
  degs.reserve(static_cast<size_t>(K));
  RationalMapP2 cur = phi;
  degs.push_back(cur.degree());
  for (int k = 2; k <= K; ++k) {
    cur = compose(phi, cur);
    if (cur.max_coeff_bits() > max_bits)
      throw bitcap_exceeded("iterate coefficients exceed the configured bit cap");
    degs.push_back(cur.degree());
  }
  return degs;
}

IterateCache::IterateCache(RationalMapP2 base, size_t max_bits) : max_bits_(max_bits) {
  pows_.push_back(RationalMapP2::identity(base.field()));
  pows_.push_back(std::move(base));
}

const RationalMapP2& IterateCache::get(int k) {
  if (k < 0) throw input_error("IterateCache wants k >= 0");
  while (static_cast<int>(pows_.size()) <= k) {
    RationalMapP2 next = compose(pows_[1], pows_.back());
    if (next.max_coeff_bits() > max_bits_)
      throw bitcap_exceeded("iterate coefficients exceed the configured bit cap");
    pows_.push_back(std::move(next));
  }
  return pows_[static_cast<size_t>(k)];
}

namespace {

// kernel of an m x n matrix over the scalar field (Gauss), returned as a
// basis of column vectors
std::vector<std::vector<Scalar>> kernel_basis(std::vector<std::vector<Scalar>> m, int ncols,
                                              const FieldPtr& f) {
  int nrows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int piv = -1;
    for (int r = row; r < nrows; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    Scalar inv = m[row][col].inverse();
    for (int c = col; c < ncols; ++c) m[row][c] *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      Scalar factor = m[r][col];
      for (int c = col; c < ncols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int freec = 0; freec < ncols; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Scalar> v(ncols, Scalar::zero(f));
    v[freec] = Scalar::one(f);
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -m[r][freec];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::optional<RationalMapP2> inverse_up_to_degree2(const RationalMapP2& phi) {
  const FieldPtr& f = phi.field();
  if (phi.degree() == 1) {
    Scalar a[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a[i][j] = Scalar::zero(f);
    for (int i = 0; i < 3; ++i)
      for (const auto& t : phi.components()[i].terms()) {
        int j = t.m.a ? 0 : t.m.b ? 1 : 2;
        a[i][j] = t.c;
      }
    std::array<std::array<Scalar, 3>, 3> adj;
    auto det2 = [&](int r0, int r1, int c0, int c1) {
      return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) adj[i][j] = det2((j + 1) % 3, (j + 2) % 3, (i + 1) % 3, (i + 2) % 3);
    RationalMapP2 cand = RationalMapP2::linear(f, adj);
    if (verify_inverse(phi, cand)) return cand;
    return std::nullopt;
  }
  if (phi.degree() != 2) return std::nullopt;

  // 18 unknowns: coefficients of three quadratics in grlex order
  std::vector<Mono> monos;
  for (int a2 = 2; a2 >= 0; --a2)
    for (int b2 = 2 - a2; b2 >= 0; --b2) monos.push_back(Mono{a2, b2, 2 - a2 - b2});
  const int M = static_cast<int>(monos.size());  // 6
  std::vector<std::vector<Scalar>> rows;
  int points_used = 0;
  for (long s = 2; s < 40 && points_used < 14; ++s) {
    ProjPoint p(std::array<Scalar, 3>{Scalar(1), Scalar(s), Scalar(s * s + 1)});
    auto q = phi.eval(p);
    if (!q) continue;
    ++points_used;
    // monomial values at q
    std::vector<Scalar> mv(M, Scalar::zero(f));
    for (int m = 0; m < M; ++m)
      mv[m] = q->c[0].pow(monos[m].a) * q->c[1].pow(monos[m].b) * q->c[2].pow(monos[m].c);
    // psi_i(q) * p_j - psi_j(q) * p_i = 0
    static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : pairs) {
      int i = pr[0], j = pr[1];
      std::vector<Scalar> row(3 * M, Scalar::zero(f));
      for (int m = 0; m < M; ++m) {
        row[i * M + m] += mv[m] * p.c[j];
        row[j * M + m] -= mv[m] * p.c[i];
      }
      rows.push_back(std::move(row));
    }
  }
  auto basis = kernel_basis(std::move(rows), 3 * M, f);
  for (const auto& v : basis) {
    std::array<HomPoly, 3> comps;
    bool nonzero = false;
    for (int i = 0; i < 3; ++i) {
      std::vector<HomPoly::Term> ts;
      for (int m = 0; m < M; ++m)
        if (!v[i * M + m].is_zero()) ts.push_back({monos[m], v[i * M + m]});
      if (!ts.empty()) nonzero = true;
      comps[i] = HomPoly(f, 2, std::move(ts));
    }
    if (!nonzero) continue;
    try {
      RationalMapP2 cand = RationalMapP2::from_components(comps);
      if (verify_inverse(phi, cand)) return cand;
    } catch (const error&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace cremona
