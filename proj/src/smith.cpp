#include "cremona/smith.hpp"

namespace cremona {

ZMat zmat_identity(size_t n) {
  ZMat m(n, std::vector<mpz_class>(n, mpz_class(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
  size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  ZMat m(r, std::vector<mpz_class>(c, mpz_class(0)));
  for (size_t i = 0; i < r; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < c; ++j) m[i][j] += a[i][t] * b[t][j];
    }
  return m;
}

std::vector<mpz_class> zmat_apply(const ZMat& a, const std::vector<mpz_class>& v) {
  std::vector<mpz_class> r(a.size(), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

ZMat zmat_pow(const ZMat& a, long e) {
  if (e < 0) throw input_error("negative matrix power");
  ZMat r = zmat_identity(a.size());
  ZMat b = a;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r = zmat_mul(r, b);
    b = zmat_mul(b, b);
    u >>= 1;
  }
  return r;
}

mpz_class zmat_det(ZMat a) {
  size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  bool neg = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t sw = k;
      for (size_t i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          sw = i;
          break;
        }
      if (sw == k) return 0;
      std::swap(a[k], a[sw]);
      neg = !neg;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return neg ? mpz_class(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

bool zmat_equal(const ZMat& a, const ZMat& b) { return a == b; }

SmithResult smith_normal_form(const ZMat& m0) {
  ZMat a = m0;
  size_t r = a.size(), c = r ? a[0].size() : 0;
  ZMat u = zmat_identity(r), v = zmat_identity(c);

  auto row_sub = [&](size_t i, size_t k, const mpz_class& q) {
    for (size_t j = 0; j < c; ++j) a[i][j] -= q * a[k][j];
    for (size_t j = 0; j < r; ++j) u[i][j] -= q * u[k][j];
  };
  auto col_sub = [&](size_t j, size_t k, const mpz_class& q) {
    for (size_t i = 0; i < r; ++i) a[i][j] -= q * a[i][k];
    for (size_t i = 0; i < c; ++i) v[i][j] -= q * v[i][k];
  };
  auto row_swap = [&](size_t i, size_t k) {
    std::swap(a[i], a[k]);
    std::swap(u[i], u[k]);
  };
  auto col_swap = [&](size_t j, size_t k) {
    for (size_t i = 0; i < r; ++i) std::swap(a[i][j], a[i][k]);
    for (size_t i = 0; i < c; ++i) std::swap(v[i][j], v[i][k]);
  };
  auto row_add = [&](size_t i, size_t k) {  // row_i += row_k
    for (size_t j = 0; j < c; ++j) a[i][j] += a[k][j];
    for (size_t j = 0; j < r; ++j) u[i][j] += u[k][j];
  };

  size_t n = std::min(r, c);
  for (size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero entry of the trailing submatrix to (t,t)
      size_t pi = t, pj = t;
      bool found = false;
      mpz_class best;
      for (size_t i = t; i < r; ++i)
        for (size_t j = t; j < c; ++j) {
          if (a[i][j] == 0) continue;
          mpz_class ab = abs(a[i][j]);
          if (!found || ab < best) {
            best = ab;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) {
        t = n;  // all done
        break;
      }
      if (pi != t) row_swap(t, pi);
      if (pj != t) col_swap(t, pj);

      bool clean = true;
      for (size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_sub(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_sub(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // the pivot must divide the rest of the submatrix for the chain
      bool divides = true;
      for (size_t i = t + 1; i < r && divides; ++i)
        for (size_t j = t + 1; j < c && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_add(t, i);
            divides = false;
          }
      if (divides) break;
    }
    if (t >= n) break;
  }
  for (size_t t = 0; t < n; ++t)
    if (a[t][t] < 0) {
      for (size_t j = 0; j < c; ++j) a[t][j] = -a[t][j];
      for (size_t j = 0; j < r; ++j) u[t][j] = -u[t][j];
    }
  return SmithResult{std::move(u), std::move(a), std::move(v)};
}

std::vector<std::vector<mpz_class>> integer_kernel(const ZMat& m) {
  size_t r = m.size(), c = r ? m[0].size() : 0;
  if (c == 0) return {};
  SmithResult s = smith_normal_form(m);
  std::vector<std::vector<mpz_class>> basis;
  for (size_t j = 0; j < c; ++j) {
    bool zero_col = j >= r || s.d[j][j] == 0;
    if (!zero_col) continue;
    std::vector<mpz_class> x(c, mpz_class(0));
    for (size_t i = 0; i < c; ++i) x[i] = s.v[i][j];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<std::vector<mpz_class>> solve_integer(const ZMat& m, const std::vector<mpz_class>& b) {
  size_t r = m.size(), c = r ? m[0].size() : 0;
  SmithResult s = smith_normal_form(m);
  std::vector<mpz_class> ub = zmat_apply(s.u, b);
  std::vector<mpz_class> y(c, mpz_class(0));
  for (size_t i = 0; i < r; ++i) {
    mpz_class d = (i < c) ? s.d[i][i] : mpz_class(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (ub[i] % d != 0) return std::nullopt;
    y[i] = ub[i] / d;
  }
  return zmat_apply(s.v, y);
}

}  // namespace cremona
