#pragma once
// Multiplicative constants modeled in a declared finitely generated group
// Gamma = Z/N + Z^r.  The free generators are assumed multiplicatively
// independent; the torsion generator is a fixed primitive N-th root of unity.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cremona/field.hpp"

namespace cremona {

class TorusGroup;
using TorusGroupPtr = std::shared_ptr<const TorusGroup>;

class TorusGroup {
 public:
  TorusGroup(long torsion, int free_rank);
  long torsion() const { return n_; }
  int free_rank() const { return r_; }
  std::string to_string() const;  // "N=5, free=2"
  static TorusGroupPtr make(long torsion, int free_rank);

 private:
  long n_;
  int r_;
};

bool same_group(const TorusGroupPtr& a, const TorusGroupPtr& b);

class TorusElem {
 public:
  TorusElem() = default;
  TorusElem(TorusGroupPtr g, long e0, std::vector<long> e);

  const TorusGroupPtr& group() const { return grp_; }
  long torsion_exp() const { return e0_; }
  const std::vector<long>& free_exp() const { return e_; }

  bool is_identity() const;
  TorusElem operator*(const TorusElem& o) const;
  TorusElem inverse() const;
  TorusElem pow(long k) const;
  bool operator==(const TorusElem& o) const;
  bool operator!=(const TorusElem& o) const { return !(*this == o); }

  // exact multiplicative order; nullopt = infinite
  std::optional<long> order() const;

  std::string to_string() const;  // "(e0; e1,e2)"

 private:
  TorusGroupPtr grp_;
  long e0_ = 0;
  std::vector<long> e_;
};

}  // namespace cremona
