#include "cremona/hompoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cremona {

namespace {
bool term_desc(const HomPoly::Term& l, const HomPoly::Term& r) { return mono_less(r.m, l.m); }
}  // namespace

HomPoly::HomPoly(FieldPtr f, int degree, std::vector<Term> terms)
    : field_(std::move(f)), deg_(degree) {
  for (auto& t : terms) {
    if (t.m.a < 0 || t.m.b < 0 || t.m.c < 0) throw input_error("negative exponent");
    if (t.m.deg() != deg_) throw input_error("non-homogeneous term");
  }
  std::sort(terms.begin(), terms.end(), term_desc);
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().m == t.m)
      terms_.back().c += t.c;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const Term& t) { return t.c.is_zero(); });
}

HomPoly HomPoly::monomial(FieldPtr f, Mono m, Scalar c) {
  return HomPoly(f, m.deg(), {Term{m, std::move(c)}});
}

HomPoly HomPoly::constant(FieldPtr f, Scalar c) {
  return HomPoly(f, 0, {Term{Mono{}, std::move(c)}});
}

HomPoly HomPoly::variable(FieldPtr f, int which) {
  Mono m;
  (which == 0 ? m.a : which == 1 ? m.b : m.c) = 1;
  return monomial(std::move(f), m);
}

const Scalar& HomPoly::leading_coeff() const {
  if (terms_.empty()) throw math_error("zero polynomial has no leading coefficient");
  return terms_.front().c;
}

Mono HomPoly::min_exponents() const {
  if (terms_.empty()) return Mono{0, 0, 0};
  Mono m = terms_.front().m;
  for (const auto& t : terms_) {
    m.a = std::min(m.a, t.m.a);
    m.b = std::min(m.b, t.m.b);
    m.c = std::min(m.c, t.m.c);
  }
  return m;
}

HomPoly HomPoly::operator-() const {
  HomPoly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

HomPoly operator+(const HomPoly& a, const HomPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() != b.degree()) throw input_error("degree mismatch in +");
  FieldPtr f = join_field(a.field(), b.field());
  HomPoly r(f, a.degree());
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    bool take_a;
    if (i == a.terms_.size()) take_a = false;
    else if (j == b.terms_.size()) take_a = true;
    else if (a.terms_[i].m == b.terms_[j].m) {
      Scalar s = a.terms_[i].c + b.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(s)});
      ++i, ++j;
      continue;
    } else {
      take_a = mono_less(b.terms_[j].m, a.terms_[i].m);
    }
    r.terms_.push_back(take_a ? a.terms_[i++] : b.terms_[j++]);
  }
  return r;
}

HomPoly operator-(const HomPoly& a, const HomPoly& b) { return a + (-b); }

namespace {

// triangular index for dense homogeneous storage
inline size_t tri_index(int d, int i, int j) {
  return static_cast<size_t>(i) * (d + 1) - static_cast<size_t>(i) * (i - 1) / 2 + j;
}

struct DenseQ {
  int d = 0;
  mpz_class den{1};
  std::vector<mpz_class> c;
};

bool all_rational(const HomPoly& p) {
  if (!p.field()) return true;
  for (const auto& t : p.terms())
    if (!t.c.is_rational()) return false;
  return true;
}

DenseQ to_dense(const HomPoly& p) {
  DenseQ d;
  d.d = p.degree();
  d.c.assign((static_cast<size_t>(d.d) + 1) * (d.d + 2) / 2, mpz_class(0));
  for (const auto& t : p.terms()) mpz_lcm(d.den.get_mpz_t(), d.den.get_mpz_t(), t.c.rational().get_den().get_mpz_t());
  for (const auto& t : p.terms()) {
    const mpq_class& q = t.c.rational();
    mpz_class scale = d.den / q.get_den();
    d.c[tri_index(d.d, t.m.a, t.m.b)] = q.get_num() * scale;
  }
  return d;
}

HomPoly from_dense(const FieldPtr& f, const DenseQ& d) {
  std::vector<HomPoly::Term> terms;
  for (int i = d.d; i >= 0; --i)
    for (int j = d.d - i; j >= 0; --j) {
      const mpz_class& v = d.c[tri_index(d.d, i, j)];
      if (v == 0) continue;
      mpq_class q(v, d.den);
      q.canonicalize();
      terms.push_back({Mono{i, j, d.d - i - j}, Scalar(q)});
    }
  return HomPoly(f, d.d, std::move(terms));
}

HomPoly mul_dense_q(const HomPoly& a, const HomPoly& b) {
  DenseQ da = to_dense(a), db = to_dense(b);
  DenseQ r;
  r.d = da.d + db.d;
  r.den = da.den * db.den;
  r.c.assign((static_cast<size_t>(r.d) + 1) * (r.d + 2) / 2, mpz_class(0));
  struct SparseEntry {
    int i, j;
    const mpz_class* v;
  };
  std::vector<SparseEntry> sa;
  for (int i = 0; i <= da.d; ++i)
    for (int j = 0; j <= da.d - i; ++j) {
      const mpz_class& v = da.c[tri_index(da.d, i, j)];
      if (v != 0) sa.push_back({i, j, &v});
    }
  for (int i2 = 0; i2 <= db.d; ++i2)
    for (int j2 = 0; j2 <= db.d - i2; ++j2) {
      const mpz_class& w = db.c[tri_index(db.d, i2, j2)];
      if (w == 0) continue;
      for (const auto& e : sa) {
        mpz_class& slot = r.c[tri_index(r.d, e.i + i2, e.j + j2)];
        mpz_addmul(slot.get_mpz_t(), e.v->get_mpz_t(), w.get_mpz_t());
      }
    }
  return from_dense(a.field() ? a.field() : b.field(), r);
}

}  // namespace

HomPoly mul_generic(const HomPoly& a, const HomPoly& b) {
  FieldPtr f = join_field(a.field(), b.field());
  std::map<std::array<int, 2>, Scalar> acc;
  int d = a.degree() + b.degree();
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      Scalar prod = ta.c * tb.c;
      auto key = std::array<int, 2>{ta.m.a + tb.m.a, ta.m.b + tb.m.b};
      auto it = acc.find(key);
      if (it == acc.end()) acc.emplace(key, std::move(prod));
      else it->second += prod;
    }
  std::vector<HomPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [k, v] : acc) {
    if (v.is_zero()) continue;
    terms.push_back({Mono{k[0], k[1], d - k[0] - k[1]}, std::move(v)});
  }
  return HomPoly(f, d, std::move(terms));
}

HomPoly operator*(const HomPoly& a, const HomPoly& b) {
  if (a.is_zero() || b.is_zero()) return HomPoly(join_field(a.field(), b.field()), a.degree() + b.degree());
  if (all_rational(a) && all_rational(b) && a.term_count() * b.term_count() > 64)
    return mul_dense_q(a, b);
  return mul_generic(a, b);
}

HomPoly HomPoly::scaled(const Scalar& s) const {
  if (s.is_zero()) return HomPoly(field_, deg_);
  HomPoly r = *this;
  for (auto& t : r.terms_) t.c *= s;
  return r;
}

bool HomPoly::operator==(const HomPoly& o) const {
  if (deg_ != o.deg_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

HomPoly HomPoly::divide_exact(const HomPoly& divisor) const {
  if (divisor.is_zero()) throw math_error("division by zero polynomial");
  if (is_zero()) return HomPoly(field_, deg_ - divisor.deg_);
  if (divisor.is_constant()) return scaled(divisor.terms_[0].c.inverse());
  HomPoly rem = *this;
  int dq = deg_ - divisor.deg_;
  if (dq < 0) throw math_error("inexact polynomial division");
  std::vector<Term> quot;
  const Term& dlt = divisor.terms_.front();
  Scalar dinv = dlt.c.inverse();
  while (!rem.is_zero()) {
    const Term& rlt = rem.terms_.front();
    Mono qm{rlt.m.a - dlt.m.a, rlt.m.b - dlt.m.b, rlt.m.c - dlt.m.c};
    if (qm.a < 0 || qm.b < 0 || qm.c < 0) throw math_error("inexact polynomial division");
    Scalar qc = rlt.c * dinv;
    quot.push_back({qm, qc});
    rem = rem - divisor * HomPoly::monomial(field_, qm, qc);
  }
  return HomPoly(field_, dq, std::move(quot));
}

HomPoly HomPoly::divide_mono(const Mono& m) const {
  std::vector<Term> terms = terms_;
  for (auto& t : terms) {
    t.m.a -= m.a;
    t.m.b -= m.b;
    t.m.c -= m.c;
    if (t.m.a < 0 || t.m.b < 0 || t.m.c < 0) throw math_error("monomial does not divide");
  }
  return HomPoly(field_, deg_ - m.deg(), std::move(terms));
}

Scalar HomPoly::eval(const Scalar& x, const Scalar& y, const Scalar& z) const {
  std::vector<Scalar> px{Scalar::one(field_)}, py{Scalar::one(field_)}, pz{Scalar::one(field_)};
  auto pw = [](std::vector<Scalar>& v, const Scalar& base, int e) -> const Scalar& {
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * base);
    return v[e];
  };
  Scalar acc = Scalar::zero(field_);
  for (const auto& t : terms_)
    acc += t.c * pw(px, x, t.m.a) * pw(py, y, t.m.b) * pw(pz, z, t.m.c);
  return acc;
}

Scalar HomPoly::content_scalar() const {
  if (terms_.empty()) return Scalar::one(field_);
  bool rat = all_rational(*this);
  if (!rat) return leading_coeff();
  mpz_class g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.rational().get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.rational().get_den().get_mpz_t());
  }
  mpq_class f(g, l);
  f.canonicalize();
  if (terms_.front().c.rational() < 0) f = -f;
  return Scalar(f);
}

HomPoly HomPoly::normalized() const {
  if (terms_.empty()) return *this;
  return scaled(content_scalar().inverse());
}

size_t HomPoly::max_coeff_bits() const {
  size_t m = 0;
  for (const auto& t : terms_) m = std::max(m, t.c.bit_size());
  return m;
}

std::string HomPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = t.c.to_string();
    bool neg = cs.size() && cs[0] == '-' && cs.find(' ') == std::string::npos &&
               cs.find('+') == std::string::npos;
    if (!first) {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    } else if (neg && t.c.is_rational()) {
      // keep sign attached for the leading term
    }
    bool has_vars = t.m.deg() > 0;
    bool unit = (cs == "1" && has_vars);
    bool neg_unit = (cs == "-1" && has_vars && first);
    if (!first && cs == "1" && has_vars) unit = true;
    bool wrap = !t.c.is_rational();
    if (neg_unit) os << "-";
    else if (!unit) {
      if (wrap) os << "(" << cs << ")";
      else os << cs;
      if (has_vars) os << "*";
    }
    const char* names[3] = {"x", "y", "z"};
    int exps[3] = {t.m.a, t.m.b, t.m.c};
    bool fv = true;
    for (int v = 0; v < 3; ++v) {
      if (!exps[v]) continue;
      if (!fv) os << "*";
      os << names[v];
      if (exps[v] > 1) os << "^" << exps[v];
      fv = false;
    }
    if (!has_vars && unit) os << cs;
    first = false;
  }
  return os.str();
}

HomPoly substitute(const HomPoly& outer, const std::array<HomPoly, 3>& psi, SubstCache& cache) {
  FieldPtr f = outer.field() ? outer.field() : psi[0].field();
  int e = psi[0].degree();
  if (psi[1].degree() != e || psi[2].degree() != e)
    throw input_error("substitution components must have equal degree");
  for (int v = 0; v < 3; ++v)
    if (cache.pw[v].empty()) cache.pw[v].push_back(HomPoly::constant(psi[v].field(), Scalar::one(psi[v].field())));
  auto power = [&](int v, int k) -> const HomPoly& {
    auto& vec = cache.pw[v];
    while (static_cast<int>(vec.size()) <= k) vec.push_back(vec.back() * psi[v]);
    return vec[k];
  };
  HomPoly acc(join_field(f, psi[0].field()), outer.degree() * e);
  for (const auto& t : outer.terms()) {
    HomPoly prod = power(0, t.m.a);
    if (t.m.b) prod = prod * power(1, t.m.b);
    if (t.m.c) prod = prod * power(2, t.m.c);
    acc = acc + prod.scaled(t.c);
  }
  return acc;
}

int vanishing_order(const HomPoly& p, const std::array<std::array<Scalar, 3>, 3>& chart) {
  if (p.is_zero()) throw math_error("vanishing order of zero polynomial");
  const FieldPtr& f = p.field();
  std::array<HomPoly, 3> lin;
  for (int i = 0; i < 3; ++i) {
    std::vector<HomPoly::Term> ts;
    for (int j = 0; j < 3; ++j) {
      if (chart[i][j].is_zero()) continue;
      Mono m;
      (j == 0 ? m.a : j == 1 ? m.b : m.c) = 1;
      ts.push_back({m, chart[i][j]});
    }
    lin[i] = HomPoly(f, 1, std::move(ts));
  }
  SubstCache cache;
  HomPoly moved = substitute(p, lin, cache);
  if (moved.is_zero()) throw math_error("degenerate chart (singular matrix)");
  int best = moved.degree() + 1;
  for (const auto& t : moved.terms()) best = std::min(best, t.m.b + t.m.c);
  return best;
}

int vanishing_order_at(const HomPoly& p, const std::array<Scalar, 3>& point) {
  // build an invertible chart whose first column is the point
  int piv = -1;
  for (int i = 0; i < 3; ++i)
    if (!point[i].is_zero()) piv = i;
  if (piv < 0) throw input_error("zero point");
  std::array<std::array<Scalar, 3>, 3> M;
  for (auto& row : M) row = {Scalar(0), Scalar(0), Scalar(0)};
  for (int i = 0; i < 3; ++i) M[i][0] = point[i];
  int col = 1;
  for (int j = 0; j < 3 && col < 3; ++j) {
    if (j == piv) continue;
    M[j][col++] = Scalar(1);
  }
  return vanishing_order(p, M);
}

// ---------------------------------------------------------------------------

Poly2::Poly2(FieldPtr f, std::map<Key, Scalar> terms) : field_(std::move(f)), t_(std::move(terms)) {
  trim();
}

void Poly2::trim() {
  for (auto it = t_.begin(); it != t_.end();)
    it = it->second.is_zero() ? t_.erase(it) : std::next(it);
}

Poly2 Poly2::constant(FieldPtr f, Scalar c) {
  std::map<Key, Scalar> m;
  if (!c.is_zero()) m.emplace(Key{0, 0}, std::move(c));
  return Poly2(std::move(f), std::move(m));
}

Poly2 Poly2::variable(FieldPtr f, int which) {
  std::map<Key, Scalar> m;
  m.emplace(which == 0 ? Key{1, 0} : Key{0, 1}, Scalar(1));
  return Poly2(std::move(f), std::move(m));
}

bool Poly2::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Key{0, 0});
}

Scalar Poly2::constant_value() const {
  if (t_.empty()) return Scalar::zero(field_);
  if (!is_constant()) throw math_error("not a constant polynomial");
  return t_.begin()->second;
}

int Poly2::deg_x() const {
  int d = 0;
  for (const auto& [k, v] : t_) d = std::max(d, k.first);
  return d;
}

int Poly2::deg_y() const {
  int d = 0;
  for (const auto& [k, v] : t_) d = std::max(d, k.second);
  return d;
}

int Poly2::total_degree() const {
  int d = 0;
  for (const auto& [k, v] : t_) d = std::max(d, k.first + k.second);
  return d;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [k, v] : r.t_) v = -v;
  return r;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  Poly2 r = a;
  r.field_ = join_field(a.field_, b.field_);
  for (const auto& [k, v] : b.t_) {
    auto it = r.t_.find(k);
    if (it == r.t_.end()) r.t_.emplace(k, v);
    else it->second += v;
  }
  r.trim();
  return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r(join_field(a.field_, b.field_));
  for (const auto& [ka, va] : a.t_)
    for (const auto& [kb, vb] : b.t_) {
      Poly2::Key k{ka.first + kb.first, ka.second + kb.second};
      Scalar prod = va * vb;
      auto it = r.t_.find(k);
      if (it == r.t_.end()) r.t_.emplace(k, std::move(prod));
      else it->second += prod;
    }
  r.trim();
  return r;
}

Poly2 Poly2::scaled(const Scalar& s) const {
  if (s.is_zero()) return Poly2(field_);
  Poly2 r = *this;
  for (auto& [k, v] : r.t_) v *= s;
  return r;
}

bool Poly2::operator==(const Poly2& o) const {
  if (t_.size() != o.t_.size()) return false;
  auto i = t_.begin();
  auto j = o.t_.begin();
  for (; i != t_.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

namespace {
// grlex on bivariate keys
bool key_less(const Poly2::Key& l, const Poly2::Key& r) {
  int dl = l.first + l.second, dr = r.first + r.second;
  if (dl != dr) return dl < dr;
  return l.first < r.first;
}
}  // namespace

const Scalar& Poly2::leading_coeff() const {
  if (t_.empty()) throw math_error("zero polynomial has no leading coefficient");
  auto best = t_.begin();
  for (auto it = t_.begin(); it != t_.end(); ++it)
    if (key_less(best->first, it->first)) best = it;
  return best->second;
}

Poly2 Poly2::monic() const {
  if (t_.empty()) return *this;
  return scaled(leading_coeff().inverse());
}

Poly2 Poly2::divide_exact(const Poly2& divisor) const {
  if (divisor.is_zero()) throw math_error("division by zero polynomial");
  Poly2 rem = *this;
  Poly2 quot(field_);
  // leading divisor term under grlex
  auto dl = divisor.t_.begin();
  for (auto it = divisor.t_.begin(); it != divisor.t_.end(); ++it)
    if (key_less(dl->first, it->first)) dl = it;
  Scalar dinv = dl->second.inverse();
  while (!rem.is_zero()) {
    auto rl = rem.t_.begin();
    for (auto it = rem.t_.begin(); it != rem.t_.end(); ++it)
      if (key_less(rl->first, it->first)) rl = it;
    int qi = rl->first.first - dl->first.first;
    int qj = rl->first.second - dl->first.second;
    if (qi < 0 || qj < 0) throw math_error("inexact polynomial division");
    Scalar qc = rl->second * dinv;
    std::map<Key, Scalar> qt;
    qt.emplace(Key{qi, qj}, qc);
    Poly2 qterm(field_, std::move(qt));
    quot = quot + qterm;
    rem = rem - divisor * qterm;
  }
  return quot;
}

Scalar Poly2::eval(const Scalar& x, const Scalar& y) const {
  std::vector<Scalar> px{Scalar::one(field_)}, py{Scalar::one(field_)};
  auto pw = [](std::vector<Scalar>& v, const Scalar& base, int e) -> const Scalar& {
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * base);
    return v[e];
  };
  Scalar acc = Scalar::zero(field_);
  for (const auto& [k, v] : t_) acc += v * pw(px, x, k.first) * pw(py, y, k.second);
  return acc;
}

Poly2 Poly2::subst_x(const Poly2& vx) const {
  std::vector<Poly2> pw{Poly2::constant(field_, Scalar::one(field_))};
  auto power = [&](int e) -> const Poly2& {
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * vx);
    return pw[e];
  };
  Poly2 acc(field_);
  Poly2 yv = Poly2::variable(field_, 1);
  for (const auto& [k, v] : t_) {
    Poly2 term = power(k.first).scaled(v);
    for (int j = 0; j < k.second; ++j) term = term * yv;
    acc = acc + term;
  }
  return acc;
}

Poly2 Poly2::subst_y(const Poly2& vy) const {
  std::vector<Poly2> pw{Poly2::constant(field_, Scalar::one(field_))};
  auto power = [&](int e) -> const Poly2& {
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * vy);
    return pw[e];
  };
  Poly2 acc(field_);
  Poly2 xv = Poly2::variable(field_, 0);
  for (const auto& [k, v] : t_) {
    Poly2 term = power(k.second).scaled(v);
    for (int j = 0; j < k.first; ++j) term = term * xv;
    acc = acc + term;
  }
  return acc;
}

HomPoly Poly2::homogenize(int d) const {
  std::vector<HomPoly::Term> ts;
  for (const auto& [k, v] : t_) {
    int slack = d - k.first - k.second;
    if (slack < 0) throw input_error("homogenization degree too small");
    ts.push_back({Mono{k.first, k.second, slack}, v});
  }
  return HomPoly(field_, d, std::move(ts));
}

std::string Poly2::to_string() const {
  if (t_.empty()) return "0";
  // print in descending grlex
  std::vector<std::pair<Key, Scalar>> v(t_.begin(), t_.end());
  std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return key_less(r.first, l.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    std::string cs = c.to_string();
    bool neg = cs.size() && cs[0] == '-' && cs.find(' ') == std::string::npos &&
               cs.find('+') == std::string::npos;
    if (!first) {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    bool has_vars = k.first + k.second > 0;
    bool wrap = !c.is_rational();
    if (cs == "1" && has_vars) {
      // suppress unit coefficient
    } else if (cs == "-1" && has_vars && first) {
      os << "-";
    } else {
      if (wrap) os << "(" << cs << ")";
      else os << cs;
      if (has_vars) os << "*";
    }
    if (k.first) {
      os << "x";
      if (k.first > 1) os << "^" << k.first;
      if (k.second) os << "*";
    }
    if (k.second) {
      os << "y";
      if (k.second > 1) os << "^" << k.second;
    }
    first = false;
  }
  return os.str();
}

Poly2 dehomogenize(const HomPoly& p) {
  std::map<Poly2::Key, Scalar> m;
  for (const auto& t : p.terms()) m.emplace(Poly2::Key{t.m.a, t.m.b}, t.c);
  return Poly2(p.field(), std::move(m));
}

bool is_univariate_x(const Poly2& p) { return p.deg_y() == 0; }

std::vector<Scalar> univariate_x_coeffs(const Poly2& p) {
  std::vector<Scalar> c(p.deg_x() + 1, Scalar::zero(p.field()));
  for (const auto& [k, v] : p.terms()) {
    if (k.second != 0) throw input_error("polynomial is not univariate in x");
    c[k.first] = v;
  }
  return c;
}

Poly2 from_univariate_x(FieldPtr f, const std::vector<Scalar>& coeffs) {
  std::map<Poly2::Key, Scalar> m;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) m.emplace(Poly2::Key{static_cast<int>(i), 0}, coeffs[i]);
  return Poly2(std::move(f), std::move(m));
}

}  // namespace cremona
