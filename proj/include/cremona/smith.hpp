#pragma once
// Smith normal form and the little integer linear algebra the lattice and
// conjugacy modules need.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat zmat_identity(size_t n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
std::vector<mpz_class> zmat_apply(const ZMat& a, const std::vector<mpz_class>& v);
ZMat zmat_pow(const ZMat& a, long e);  // e >= 0
mpz_class zmat_det(ZMat a);            // fraction-free elimination
bool zmat_equal(const ZMat& a, const ZMat& b);

struct SmithResult {
  ZMat u, d, v;  // u * m * v = d, u and v unimodular, diagonal divisibility chain
};

SmithResult smith_normal_form(const ZMat& m);

// basis of { x : m x = 0 } as column vectors
std::vector<std::vector<mpz_class>> integer_kernel(const ZMat& m);

// one integer solution of m x = b, if any
std::optional<std::vector<mpz_class>> solve_integer(const ZMat& m, const std::vector<mpz_class>& b);

}  // namespace cremona
