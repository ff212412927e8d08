// Exact GCD machinery for the composition/cancellation pipeline.
//
// Rational-context inputs take a layered route: a sound coprimality
// certificate (restriction to a line plus integer evaluation beyond a
// single-factor coefficient bound), then a Brown-style evaluation/
// interpolation producer whose candidates are verified by exact division,
// with subresultant / primitive PRS as the deterministic fallback.  All
// routes stay in exact integer/rational arithmetic.  Extension-field inputs
// go through a generic primitive PRS, which is enough at the degrees those
// see.

#include <algorithm>
#include <map>
#include <optional>

#include "cremona/hompoly.hpp"

namespace cremona {

namespace {

// ---------------------------------------------------------------------------
// univariate integer polynomials, dense low-to-high

using ZP = std::vector<mpz_class>;

int zp_deg(const ZP& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

void zp_trim(ZP& p) { p.resize(static_cast<size_t>(std::max(zp_deg(p), -1) + 1)); }

mpz_class zp_content(const ZP& p) {
  mpz_class g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZP zp_pp(ZP p) {
  mpz_class g = zp_content(p);
  if (g == 0) return {};
  int d = zp_deg(p);
  if (p[d] < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  zp_trim(p);
  return p;
}

mpz_class zp_maxabs(const ZP& p) {
  mpz_class m = 0;
  for (const auto& c : p) {
    mpz_class a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

mpz_class zp_eval(const ZP& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
    acc *= x;
    acc += p[i];
  }
  return acc;
}

ZP zp_mul(const ZP& a, const ZP& b) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

ZP zp_scale(ZP p, const mpz_class& s) {
  for (auto& c : p) c *= s;
  return p;
}

// divide p by integer s, exact
ZP zp_divexact_int(ZP p, const mpz_class& s) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  return p;
}

// pseudo-remainder: lc(b)^(da-db+1) * a  mod  b
ZP zp_prem(ZP a, const ZP& b) {
  int db = zp_deg(b);
  int da = zp_deg(a);
  if (da < db) {
    // still multiply by lc^(delta+1) with delta<0 treated as scale 1
    return a;
  }
  const mpz_class& lb = b[db];
  int e = da - db + 1;
  while (true) {
    da = zp_deg(a);
    if (da < db) break;
    mpz_class la = a[da];
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] -= la * b[j];
    --e;
  }
  // bring the scaling to exactly lc^(delta+1)
  mpz_class extra;
  mpz_pow_ui(extra.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(std::max(e, 0)));
  for (auto& c : a) c *= extra;
  zp_trim(a);
  return a;
}

// subresultant PRS on primitive inputs; returns primitive gcd
ZP zp_gcd_subres(ZP a, ZP b) {
  if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
  mpz_class g = 1, h = 1;
  while (true) {
    int db = zp_deg(b);
    if (db < 0) return zp_pp(a);
    if (db == 0) return ZP{mpz_class(1)};
    int delta = zp_deg(a) - db;
    ZP r = zp_prem(a, b);
    if (zp_deg(r) < 0) return zp_pp(b);
    a = b;
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    b = zp_divexact_int(std::move(r), g * hd);
    g = a[zp_deg(a)];
    if (delta > 0) {
      mpz_class gd;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_class hd1;
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
  }
}

// evaluation point beyond twice any coefficient of a degree<=d divisor of p
mpz_class divisor_bound_point(const ZP& p) {
  int d = std::max(zp_deg(p), 1);
  mpz_class m = zp_maxabs(p);
  size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2) + static_cast<size_t>(d) + 8;
  mpz_class n = 1;
  n <<= bits;
  return n + 2;
}

// true => the primitive parts are certainly coprime
bool zp_coprime_cert(const ZP& a, const ZP& b) {
  if (zp_deg(a) < 1 || zp_deg(b) < 1) return true;
  mpz_class n = divisor_bound_point(zp_deg(a) <= zp_deg(b) ? a : b);
  for (int t = 0; t < 2; ++t) {
    mpz_class g;
    mpz_class va = zp_eval(a, n), vb = zp_eval(b, n);
    mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    if (g == 1) return true;
    n += 1;
  }
  return false;
}

// does g divide p over Q?
bool zp_divides(const ZP& g, const ZP& p) {
  int dg = zp_deg(g), dp = zp_deg(p);
  if (dg < 0) return dp < 0;
  if (dp < dg) return dp < 0;
  std::vector<mpq_class> r(p.begin(), p.end());
  mpq_class lg(g[dg]);
  for (int i = dp; i >= dg; --i) {
    if (r[i] == 0) continue;
    mpq_class q = mpq_class(r[i]) / lg;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] -= q * g[j];
  }
  for (const auto& c : r)
    if (c != 0) return false;
  return true;
}

// Char-Geddes-Gonnet heuristic gcd; empty on failure
std::optional<ZP> zp_gcd_heu(const ZP& a, const ZP& b) {
  mpz_class xi = 2 * std::min(zp_maxabs(a), zp_maxabs(b)) + 2;
  if (xi < 4) xi = 4;
  for (int tries = 0; tries < 5; ++tries) {
    mpz_class va = zp_eval(a, xi), vb = zp_eval(b, xi);
    mpz_class gv;
    mpz_gcd(gv.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    ZP g;
    mpz_class rem = gv;
    mpz_class half = xi / 2;
    while (rem != 0) {
      mpz_class digit = rem % xi;
      if (digit > half) digit -= xi;
      else if (digit < -half) digit += xi;
      g.push_back(digit);
      rem = (rem - digit) / xi;
    }
    g = zp_pp(std::move(g));
    if (!g.empty() && zp_divides(g, a) && zp_divides(g, b)) return g;
    xi = xi * 73794 / 27011 + 1;
  }
  return std::nullopt;
}

// full univariate gcd over Z (primitive result times content gcd)
ZP zp_gcd(ZP a, ZP b) {
  if (zp_deg(a) < 0) return zp_pp(std::move(b));
  if (zp_deg(b) < 0) return zp_pp(std::move(a));
  mpz_class ca = zp_content(a), cb = zp_content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = zp_pp(std::move(a));
  b = zp_pp(std::move(b));
  ZP g;
  if (zp_deg(a) == 0 || zp_deg(b) == 0 || zp_coprime_cert(a, b)) {
    g = ZP{mpz_class(1)};
  } else if (std::max(zp_deg(a), zp_deg(b)) > 48) {
    auto heu = zp_gcd_heu(a, b);
    g = heu ? *heu : zp_gcd_subres(a, b);
  } else {
    g = zp_gcd_subres(a, b);
  }
  return zp_scale(std::move(g), cg);
}

// ---------------------------------------------------------------------------
// bivariate integer polynomials: c[i] is the y-polynomial coefficient of x^i

struct ZP2 {
  std::vector<ZP> c;
};

int zp2_deg_x(const ZP2& p) {
  for (int i = static_cast<int>(p.c.size()) - 1; i >= 0; --i)
    if (zp_deg(p.c[i]) >= 0) return i;
  return -1;
}

int zp2_deg_y(const ZP2& p) {
  int d = -1;
  for (const auto& cy : p.c) d = std::max(d, zp_deg(cy));
  return d;
}

bool zp2_zero(const ZP2& p) { return zp2_deg_x(p) < 0; }

void zp2_trim(ZP2& p) {
  for (auto& cy : p.c) zp_trim(cy);
  p.c.resize(static_cast<size_t>(std::max(zp2_deg_x(p), -1) + 1));
}

ZP zp2_content_x(const ZP2& p) {
  ZP g;
  for (const auto& cy : p.c) {
    if (zp_deg(cy) < 0) continue;
    g = g.empty() ? zp_pp(cy) : zp_gcd(g, cy);
    if (zp_deg(g) == 0 && g[0] == 1) break;
  }
  return g;
}

// exact division of every coefficient by a univariate d(y)
ZP2 zp2_div_ucoef(const ZP2& p, const ZP& d) {
  if (zp_deg(d) == 0 && d[0] == 1) return p;
  ZP2 r;
  r.c.reserve(p.c.size());
  int dd = zp_deg(d);
  for (const auto& cy : p.c) {
    int dc = zp_deg(cy);
    if (dc < 0) {
      r.c.push_back({});
      continue;
    }
    // exact univariate division over Z
    ZP rem = cy, q(static_cast<size_t>(dc - dd + 1), mpz_class(0));
    for (int i = dc; i >= dd; --i) {
      if (rem[i] == 0) continue;
      mpz_class f;
      mpz_divexact(f.get_mpz_t(), rem[i].get_mpz_t(), d[dd].get_mpz_t());
      q[i - dd] = f;
      for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d[j];
    }
    r.c.push_back(std::move(q));
  }
  zp2_trim(r);
  return r;
}

ZP zp2_eval_y(const ZP2& p, long y0) {
  ZP r(p.c.size(), mpz_class(0));
  mpz_class yy(y0);
  for (size_t i = 0; i < p.c.size(); ++i) r[i] = zp_eval(p.c[i], yy);
  zp_trim(r);
  return r;
}

ZP2 zp2_mul(const ZP2& a, const ZP2& b) {
  ZP2 r;
  if (zp2_zero(a) || zp2_zero(b)) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, ZP{});
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (zp_deg(a.c[i]) < 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (zp_deg(b.c[j]) < 0) continue;
      ZP prod = zp_mul(a.c[i], b.c[j]);
      ZP& slot = r.c[i + j];
      if (slot.size() < prod.size()) slot.resize(prod.size(), mpz_class(0));
      for (size_t k = 0; k < prod.size(); ++k) slot[k] += prod[k];
    }
  }
  zp2_trim(r);
  return r;
}

ZP2 zp2_sub(ZP2 a, const ZP2& b) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size());
  for (size_t i = 0; i < b.c.size(); ++i) {
    ZP& s = a.c[i];
    if (s.size() < b.c[i].size()) s.resize(b.c[i].size(), mpz_class(0));
    for (size_t k = 0; k < b.c[i].size(); ++k) s[k] -= b.c[i][k];
  }
  zp2_trim(a);
  return a;
}

ZP2 zp2_scale_u(const ZP2& p, const ZP& s) {
  ZP2 r;
  r.c.reserve(p.c.size());
  for (const auto& cy : p.c) r.c.push_back(zp_mul(cy, s));
  zp2_trim(r);
  return r;
}

mpz_class zp2_int_content(const ZP2& p) {
  mpz_class g = 0;
  for (const auto& cy : p.c)
    for (const auto& v : cy) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

// does g divide p exactly (over Q)?  long division in x with rational-function
// arithmetic avoided by pseudo-division: works because we only need yes/no.
bool zp2_divides(const ZP2& g, const ZP2& p) {
  int dg = zp2_deg_x(g);
  if (dg < 0) return zp2_zero(p);
  if (dg == 0) {
    // univariate in y: every coefficient must be divisible
    ZP d = zp_pp(g.c[0]);
    for (const auto& cy : p.c)
      if (zp_deg(cy) >= 0 && !zp_divides(d, cy)) return false;
    return true;
  }
  ZP2 rem = p;
  const ZP& lg = g.c[dg];
  int guard = zp2_deg_x(p) - dg + 2;
  while (true) {
    int dr = zp2_deg_x(rem);
    if (dr < dg) return dr < 0;
    if (--guard < 0) return false;
    // rem = lg*rem - lr*x^(dr-dg)*g ; kills the top coefficient if divisible,
    // otherwise the loop guard fires
    ZP lr = rem.c[dr];
    ZP2 scaled = zp2_scale_u(rem, lg);
    ZP2 shift;
    shift.c.assign(static_cast<size_t>(dr - dg) + g.c.size(), ZP{});
    for (size_t i = 0; i < g.c.size(); ++i) shift.c[i + dr - dg] = zp_mul(g.c[i], lr);
    rem = zp2_sub(std::move(scaled), shift);
    if (zp2_deg_x(rem) >= dr) return false;
  }
}

// primitive PRS in x over Z[y]; exact but only used as fallback
ZP2 zp2_gcd_prs(ZP2 a, ZP2 b) {
  while (true) {
    if (zp2_deg_x(a) < zp2_deg_x(b)) std::swap(a, b);
    int db = zp2_deg_x(b);
    if (db < 0) return a;
    if (db == 0) {
      ZP2 r;
      r.c.push_back(ZP{mpz_class(1)});
      return r;  // primitive inputs, x-degree 0 divisor must be trivial
    }
    // pseudo-remainder of a by b in x
    int da = zp2_deg_x(a);
    const ZP lb = b.c[db];
    ZP2 rem = a;
    int steps = da - db + 1;
    while (zp2_deg_x(rem) >= db && steps-- >= 0) {
      int dr = zp2_deg_x(rem);
      ZP lr = rem.c[dr];
      ZP2 scaled = zp2_scale_u(rem, lb);
      ZP2 shift;
      shift.c.assign(static_cast<size_t>(dr - db) + b.c.size(), ZP{});
      for (size_t i = 0; i < b.c.size(); ++i) shift.c[i + dr - db] = zp_mul(b.c[i], lr);
      rem = zp2_sub(std::move(scaled), shift);
    }
    if (zp2_zero(rem)) return b;
    // keep remainders primitive
    ZP cont = zp2_content_x(rem);
    if (zp_deg(cont) > 0 || (zp_deg(cont) == 0 && cont[0] != 1)) rem = zp2_div_ucoef(rem, cont);
    mpz_class ic = zp2_int_content(rem);
    if (ic > 1)
      for (auto& cy : rem.c)
        for (auto& v : cy) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), ic.get_mpz_t());
    a = std::move(b);
    b = std::move(rem);
  }
}

// interpolation through (t_j, v_j), Newton form, exact rationals
std::vector<mpq_class> interpolate(const std::vector<long>& ts, std::vector<mpq_class> v) {
  size_t n = ts.size();
  for (size_t k = 1; k < n; ++k)
    for (size_t j = n - 1; j >= k; --j) {
      v[j] = (v[j] - v[j - 1]) / mpq_class(ts[j] - ts[j - k]);
      if (j == k) break;
    }
  std::vector<mpq_class> poly{v[n - 1]};
  for (int j = static_cast<int>(n) - 2; j >= 0; --j) {
    poly.insert(poly.begin(), mpq_class(0));
    for (size_t i = 0; i + 1 < poly.size(); ++i) poly[i] -= mpq_class(ts[j]) * poly[i + 1];
    poly[0] += v[j];
  }
  return poly;
}

// gcd of primitive bivariate polynomials via evaluation/interpolation;
// nullopt when the point pattern misbehaves (caller falls back to PRS)
std::optional<ZP2> zp2_gcd_brown(const ZP2& A, const ZP2& B) {
  int dxa = zp2_deg_x(A), dxb = zp2_deg_x(B);
  const ZP& lca = A.c[dxa];
  const ZP& lcb = B.c[dxb];
  ZP lg = zp_gcd(lca, lcb);
  int by = zp_deg(lg) + std::min(zp2_deg_y(A), zp2_deg_y(B));
  int need = by + 1;
  int e = std::min(dxa, dxb) + 1;  // current bound on deg_x of the gcd
  std::vector<long> pts;
  std::vector<std::vector<mpq_class>> samples;  // per point: e+1 rational coords
  long y0 = 0;
  int misses = 0;
  mpz_class lgv;
  for (int collected = 0; collected < need;) {
    long yj = y0;
    y0 = (y0 <= 0) ? -y0 + 1 : -y0;  // 0, 1, -1, 2, -2, ...
    if (misses > 200 + 4 * need) return std::nullopt;
    mpz_class la = zp_eval(lca, mpz_class(yj));
    mpz_class lb = zp_eval(lcb, mpz_class(yj));
    if (la == 0 || lb == 0) {
      ++misses;
      continue;
    }
    ZP u = zp_gcd(zp2_eval_y(A, yj), zp2_eval_y(B, yj));
    int du = zp_deg(u);
    if (du > e) {
      ++misses;
      continue;  // unlucky point
    }
    if (du < e) {
      // sharper degree bound: previous points were all unlucky
      e = du;
      pts.clear();
      samples.clear();
      collected = 0;
      if (e == 0) {
        ZP2 one;
        one.c.push_back(ZP{mpz_class(1)});
        return one;
      }
    }
    lgv = zp_eval(lg, mpz_class(yj));
    std::vector<mpq_class> s(static_cast<size_t>(e) + 1, mpq_class(0));
    mpq_class scale = mpq_class(lgv) / mpq_class(u[du]);
    for (int i = 0; i <= du; ++i) s[static_cast<size_t>(i)] = mpq_class(u[i]) * scale;
    pts.push_back(yj);
    samples.push_back(std::move(s));
    ++collected;
  }
  // interpolate each x-coefficient in y
  ZP2 H;
  H.c.assign(static_cast<size_t>(e) + 1, ZP{});
  mpz_class den = 1;
  std::vector<std::vector<mpq_class>> qc(static_cast<size_t>(e) + 1);
  for (int i = 0; i <= e; ++i) {
    std::vector<mpq_class> vals(pts.size());
    for (size_t j = 0; j < pts.size(); ++j) vals[j] = samples[j][static_cast<size_t>(i)];
    qc[static_cast<size_t>(i)] = interpolate(pts, std::move(vals));
    for (const auto& q : qc[static_cast<size_t>(i)])
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  }
  for (int i = 0; i <= e; ++i) {
    ZP cy(qc[static_cast<size_t>(i)].size(), mpz_class(0));
    for (size_t k = 0; k < cy.size(); ++k) {
      const mpq_class& q = qc[static_cast<size_t>(i)][k];
      cy[k] = q.get_num() * (den / q.get_den());
    }
    H.c[static_cast<size_t>(i)] = std::move(cy);
  }
  zp2_trim(H);
  if (zp2_zero(H)) return std::nullopt;
  ZP hc = zp2_content_x(H);
  if (zp_deg(hc) > 0 || (zp_deg(hc) == 0 && hc[0] != 1)) H = zp2_div_ucoef(H, hc);
  mpz_class ic = zp2_int_content(H);
  if (ic > 1)
    for (auto& cy : H.c)
      for (auto& v : cy) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), ic.get_mpz_t());
  if (zp2_divides(H, A) && zp2_divides(H, B)) return H;
  return std::nullopt;
}

ZP2 zp2_gcd(const ZP2& A0, const ZP2& B0) {
  if (zp2_zero(A0)) return B0;
  if (zp2_zero(B0)) return A0;
  ZP ca = zp2_content_x(A0), cb = zp2_content_x(B0);
  ZP cg = zp_gcd(ca, cb);
  ZP2 A = zp2_div_ucoef(A0, ca);
  ZP2 B = zp2_div_ucoef(B0, cb);
  ZP2 G;
  int dxa = zp2_deg_x(A), dxb = zp2_deg_x(B);
  if (dxa == 0 || dxb == 0) {
    G.c.push_back(ZP{mpz_class(1)});  // primitive parts with x-degree 0
  } else {
    // coprimality fast path at a good point
    bool settled = false;
    long y0 = 0;
    for (int tries = 0; tries < 24 && !settled; ++tries) {
      long yj = y0;
      y0 = (y0 <= 0) ? -y0 + 1 : -y0;
      if (zp_eval(A.c[dxa], mpz_class(yj)) == 0 || zp_eval(B.c[dxb], mpz_class(yj)) == 0) continue;
      ZP u = zp_gcd(zp2_eval_y(A, yj), zp2_eval_y(B, yj));
      if (zp_deg(u) == 0) {
        G.c.push_back(ZP{mpz_class(1)});
        settled = true;
      }
      break;  // one good point decides whether to go on
    }
    if (!settled) {
      auto brown = zp2_gcd_brown(A, B);
      G = brown ? *brown : zp2_gcd_prs(A, B);
    }
  }
  return zp2_scale_u(G, cg);
}

// ---------------------------------------------------------------------------
// trivariate homogeneous layer (rational context)

struct HTermZ {
  int a, b, c;
  mpz_class v;
};

std::vector<HTermZ> to_integer_terms(const HomPoly& p) {
  mpz_class den = 1;
  for (const auto& t : p.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.rational().get_den().get_mpz_t());
  std::vector<HTermZ> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    const mpq_class& q = t.c.rational();
    out.push_back({t.m.a, t.m.b, t.m.c, mpz_class(q.get_num() * (den / q.get_den()))});
  }
  return out;
}

// restriction to the line s -> (s, a s, c s + 1); sound for divisor-degree
// arguments whenever p(1,a,c) != 0
ZP restrict_line(const std::vector<HTermZ>& terms, long a, long c, int deg) {
  // powers of (c s + 1)
  std::vector<ZP> pw(static_cast<size_t>(deg) + 1);
  pw[0] = ZP{mpz_class(1)};
  ZP lin{mpz_class(1), mpz_class(c)};
  for (int k = 1; k <= deg; ++k) pw[static_cast<size_t>(k)] = zp_mul(pw[static_cast<size_t>(k - 1)], lin);
  ZP acc(static_cast<size_t>(deg) + 1, mpz_class(0));
  mpz_class ap;
  for (const auto& t : terms) {
    mpz_pow_ui(ap.get_mpz_t(), mpz_class(a).get_mpz_t(), static_cast<unsigned long>(t.b));
    mpz_class coef = t.v * ap;
    const ZP& zk = pw[static_cast<size_t>(t.c)];
    int shift = t.a + t.b;
    for (size_t j = 0; j < zk.size(); ++j) mpz_addmul(acc[shift + j].get_mpz_t(), coef.get_mpz_t(), zk[j].get_mpz_t());
  }
  zp_trim(acc);
  return acc;
}

mpz_class eval_dir(const std::vector<HTermZ>& terms, long a, long c, int deg) {
  // p(1, a, c): sum v * a^b * c^c
  mpz_class acc = 0, t1, t2;
  (void)deg;
  for (const auto& t : terms) {
    mpz_pow_ui(t1.get_mpz_t(), mpz_class(a).get_mpz_t(), static_cast<unsigned long>(t.b));
    mpz_pow_ui(t2.get_mpz_t(), mpz_class(c).get_mpz_t(), static_cast<unsigned long>(t.c));
    acc += t.v * t1 * t2;
  }
  return acc;
}

// sound certificate that the inputs share no factor of positive degree
bool hom_coprime_cert(const std::vector<std::vector<HTermZ>>& ps, const std::vector<int>& degs) {
  static const long dirs[][2] = {{1, 1}, {2, 3}, {-1, 2}, {3, -2}, {5, 2}};
  for (const auto& [a, c] : dirs) {
    int bound_ix = -1;
    for (size_t i = 0; i < ps.size(); ++i) {
      if (eval_dir(ps[i], a, c, degs[i]) != 0) {
        bound_ix = static_cast<int>(i);
        break;
      }
    }
    if (bound_ix < 0) continue;
    std::vector<ZP> rests(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) rests[i] = restrict_line(ps[i], a, c, degs[i]);
    mpz_class n = divisor_bound_point(rests[static_cast<size_t>(bound_ix)]);
    for (int t = 0; t < 2; ++t) {
      mpz_class g = 0;
      for (const auto& rp : rests) {
        mpz_class v = zp_eval(rp, n);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
      }
      if (g == 1) return true;
      n += 1;
    }
    return false;  // one valid direction is enough to decide "maybe not"
  }
  return false;
}

ZP2 hom_to_zp2(const std::vector<HTermZ>& terms) {
  ZP2 r;
  for (const auto& t : terms) {
    if (static_cast<size_t>(t.a) >= r.c.size()) r.c.resize(static_cast<size_t>(t.a) + 1);
    ZP& cy = r.c[static_cast<size_t>(t.a)];
    if (static_cast<size_t>(t.b) >= cy.size()) cy.resize(static_cast<size_t>(t.b) + 1, mpz_class(0));
    cy[static_cast<size_t>(t.b)] += t.v;
  }
  zp2_trim(r);
  return r;
}

int zp2_total_degree(const ZP2& p) {
  int d = -1;
  for (size_t i = 0; i < p.c.size(); ++i) {
    int dy = zp_deg(p.c[i]);
    if (dy >= 0) d = std::max(d, static_cast<int>(i) + dy);
  }
  return d;
}

HomPoly zp2_to_hom(const FieldPtr& f, const ZP2& p) {
  int d = zp2_total_degree(p);
  std::vector<HomPoly::Term> ts;
  for (size_t i = 0; i < p.c.size(); ++i)
    for (size_t j = 0; j < p.c[i].size(); ++j) {
      if (p.c[i][j] == 0) continue;
      ts.push_back({Mono{static_cast<int>(i), static_cast<int>(j), d - static_cast<int>(i) - static_cast<int>(j)},
                    Scalar(mpq_class(p.c[i][j]))});
    }
  return HomPoly(f, d, std::move(ts));
}

bool rational_terms(const HomPoly& p) {
  if (!p.field()) return true;
  for (const auto& t : p.terms())
    if (!t.c.is_rational()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// generic route for extension-field coefficients: primitive PRS over Scalar

using SPoly1 = std::vector<Scalar>;  // univariate, low-to-high

int sp_deg(const SPoly1& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

SPoly1 sp_gcd(SPoly1 a, SPoly1 b, const FieldPtr& f) {
  while (true) {
    int db = sp_deg(b);
    if (db < 0) {
      int da = sp_deg(a);
      if (da < 0) return a;
      Scalar inv = a[da].inverse();
      for (auto& c : a) c *= inv;
      a.resize(static_cast<size_t>(da) + 1);
      return a;
    }
    int da = sp_deg(a);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    // remainder
    Scalar linv = b[db].inverse();
    for (int i = da; i >= db; --i) {
      if (a[i].is_zero()) continue;
      Scalar q = a[i] * linv;
      for (int j = 0; j <= db; ++j) a[i - db + j] -= q * b[j];
    }
    std::swap(a, b);
    (void)f;
  }
}

// univariate-in-y view of a Poly2 with deg_x == 0
SPoly1 poly2_to_y(const Poly2& p) {
  SPoly1 c(static_cast<size_t>(p.deg_y()) + 1, Scalar::zero(p.field()));
  for (const auto& [k, v] : p.terms()) c[static_cast<size_t>(k.second)] = v;
  return c;
}

Poly2 y_to_poly2(const FieldPtr& f, const SPoly1& c) {
  std::map<Poly2::Key, Scalar> m;
  for (size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) m.emplace(Poly2::Key{0, static_cast<int>(i)}, c[i]);
  return Poly2(f, std::move(m));
}

// x-coefficients of a Poly2, each univariate in y
std::vector<Poly2> x_coeffs(const Poly2& p) {
  std::vector<Poly2> c(static_cast<size_t>(p.deg_x()) + 1, Poly2(p.field()));
  std::vector<std::map<Poly2::Key, Scalar>> maps(c.size());
  for (const auto& [k, v] : p.terms()) maps[static_cast<size_t>(k.first)].emplace(Poly2::Key{0, k.second}, v);
  for (size_t i = 0; i < c.size(); ++i) c[i] = Poly2(p.field(), std::move(maps[i]));
  return c;
}

Poly2 assemble_x(const FieldPtr& f, const std::vector<Poly2>& cs) {
  Poly2 acc(f);
  Poly2 xv = Poly2::variable(f, 0);
  Poly2 xpow = Poly2::constant(f, Scalar::one(f));
  for (const auto& cy : cs) {
    acc = acc + cy * xpow;
    xpow = xpow * xv;
  }
  return acc;
}

Poly2 poly2_content_x(const Poly2& p) {
  auto cs = x_coeffs(p);
  SPoly1 g;
  bool first = true;
  for (const auto& cy : cs) {
    if (cy.is_zero()) continue;
    if (first) {
      g = poly2_to_y(cy);
      int d = sp_deg(g);
      Scalar inv = g[static_cast<size_t>(d)].inverse();
      for (auto& c : g) c *= inv;
      first = false;
    } else {
      g = sp_gcd(std::move(g), poly2_to_y(cy), p.field());
    }
    if (sp_deg(g) == 0) break;
  }
  if (first) return Poly2::constant(p.field(), Scalar::one(p.field()));
  return y_to_poly2(p.field(), g);
}

Poly2 gcd_poly2_generic(Poly2 a, Poly2 b) {
  FieldPtr f = join_field(a.field(), b.field());
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.deg_x() == 0 && b.deg_x() == 0)
    return y_to_poly2(f, sp_gcd(poly2_to_y(a), poly2_to_y(b), f)).monic();
  Poly2 ca = poly2_content_x(a), cb = poly2_content_x(b);
  Poly2 cg = y_to_poly2(f, sp_gcd(poly2_to_y(ca), poly2_to_y(cb), f));
  a = a.divide_exact(ca);
  b = b.divide_exact(cb);
  // primitive PRS in x
  while (true) {
    if (a.deg_x() < b.deg_x()) std::swap(a, b);
    if (b.is_zero()) break;
    if (b.deg_x() == 0) {
      a = Poly2::constant(f, Scalar::one(f));
      break;
    }
    auto ac = x_coeffs(a), bc = x_coeffs(b);
    int da = a.deg_x(), db = b.deg_x();
    const Poly2& lb = bc[static_cast<size_t>(db)];
    // pseudo-remainder
    Poly2 rem = a;
    int guard = da - db + 2;
    while (!rem.is_zero() && rem.deg_x() >= db && guard-- > 0) {
      auto rc = x_coeffs(rem);
      int dr = rem.deg_x();
      const Poly2& lr = rc[static_cast<size_t>(dr)];
      Poly2 xshift = Poly2::constant(f, Scalar::one(f));
      for (int i = 0; i < dr - db; ++i) xshift = xshift * Poly2::variable(f, 0);
      rem = rem * lb - b * lr * xshift;
    }
    if (rem.is_zero()) {
      a = b;
      break;
    }
    Poly2 rcont = poly2_content_x(rem);
    rem = rem.divide_exact(rcont);
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return cg.monic();
  Poly2 ppg = a.monic();
  return (cg * ppg).monic();
}

}  // namespace

Poly2 gcd_poly2(const Poly2& a, const Poly2& b) { return gcd_poly2_generic(a, b); }

namespace {

HomPoly gcd_hom_list(std::vector<HomPoly> ps) {
  std::erase_if(ps, [](const HomPoly& p) { return p.is_zero(); });
  if (ps.empty()) throw math_error("gcd of all-zero polynomials");
  FieldPtr f;
  for (const auto& p : ps) f = join_field(f, p.field());
  for (const auto& p : ps)
    if (p.is_constant()) return HomPoly::constant(f, Scalar::one(f));
  if (ps.size() == 1) return ps[0].normalized();

  // common monomial factor
  Mono common = ps[0].min_exponents();
  for (size_t i = 1; i < ps.size(); ++i) {
    Mono m = ps[i].min_exponents();
    common.a = std::min(common.a, m.a);
    common.b = std::min(common.b, m.b);
    common.c = std::min(common.c, m.c);
  }
  if (common.deg() > 0)
    for (auto& p : ps) p = p.divide_mono(common);
  HomPoly mono_part = HomPoly::monomial(f, common);
  for (const auto& p : ps)
    if (p.is_constant()) return mono_part;

  bool rat = true;
  for (const auto& p : ps) rat = rat && rational_terms(p);
  if (rat) {
    std::vector<std::vector<HTermZ>> zs;
    std::vector<int> degs;
    zs.reserve(ps.size());
    for (const auto& p : ps) {
      zs.push_back(to_integer_terms(p));
      degs.push_back(p.degree());
    }
    if (hom_coprime_cert(zs, degs)) return mono_part;
    ZP2 g = hom_to_zp2(zs[0]);
    for (size_t i = 1; i < zs.size(); ++i) {
      g = zp2_gcd(g, hom_to_zp2(zs[i]));
      if (zp2_total_degree(g) == 0) return mono_part;
    }
    HomPoly gh = zp2_to_hom(f, g);
    return (mono_part * gh).normalized();
  }

  // extension-field route: dehomogenized generic gcds
  Poly2 g = dehomogenize(ps[0]);
  for (size_t i = 1; i < ps.size(); ++i) {
    g = gcd_poly2_generic(g, dehomogenize(ps[i]));
    if (g.is_constant()) return mono_part;
  }
  HomPoly gh = g.homogenize(g.total_degree());
  return (mono_part * gh).normalized();
}

}  // namespace

namespace {
HomPoly monic_lead(HomPoly g) {
  if (g.is_zero() || g.leading_coeff().is_one()) return g;
  return g.scaled(g.leading_coeff().inverse());
}
}  // namespace

HomPoly gcd3(const HomPoly& p, const HomPoly& q, const HomPoly& r) {
  return monic_lead(gcd_hom_list({p, q, r}));
}

HomPoly gcd_hom(const HomPoly& p, const HomPoly& q) {
  return monic_lead(gcd_hom_list({p, q}));
}

}  // namespace cremona
