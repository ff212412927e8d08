#include "cremona/torus.hpp"

#include <numeric>
#include <sstream>

namespace cremona {

TorusGroup::TorusGroup(long torsion, int free_rank) : n_(torsion), r_(free_rank) {
  if (n_ < 1) throw input_error("torsion order must be >= 1");
  if (r_ < 0) throw input_error("free rank must be >= 0");
}

TorusGroupPtr TorusGroup::make(long torsion, int free_rank) {
  return std::make_shared<const TorusGroup>(torsion, free_rank);
}

std::string TorusGroup::to_string() const {
  std::ostringstream os;
  os << "N=" << n_ << ", free=" << r_;
  return os.str();
}

bool same_group(const TorusGroupPtr& a, const TorusGroupPtr& b) {
  if (a == b) return true;
  if (a && b) return a->torsion() == b->torsion() && a->free_rank() == b->free_rank();
  return false;
}

namespace {
long mod_pos(long a, long n) {
  long m = a % n;
  return m < 0 ? m + n : m;
}
}  // namespace

TorusElem::TorusElem(TorusGroupPtr g, long e0, std::vector<long> e)
    : grp_(std::move(g)), e0_(e0), e_(std::move(e)) {
  if (!grp_) throw input_error("torus element needs a group context");
  if (static_cast<int>(e_.size()) != grp_->free_rank())
    throw input_error("free exponent vector has wrong length");
  e0_ = mod_pos(e0_, grp_->torsion());
}

bool TorusElem::is_identity() const {
  if (e0_ != 0) return false;
  for (long v : e_)
    if (v != 0) return false;
  return true;
}

TorusElem TorusElem::operator*(const TorusElem& o) const {
  if (!same_group(grp_, o.grp_)) throw field_mismatch("torus group context mismatch");
  std::vector<long> e(e_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return TorusElem(grp_, e0_ + o.e0_, std::move(e));
}

TorusElem TorusElem::inverse() const {
  std::vector<long> e(e_);
  for (auto& v : e) v = -v;
  return TorusElem(grp_, -e0_, std::move(e));
}

TorusElem TorusElem::pow(long k) const {
  std::vector<long> e(e_);
  for (auto& v : e) v *= k;
  return TorusElem(grp_, e0_ * k, std::move(e));
}

bool TorusElem::operator==(const TorusElem& o) const {
  if (!same_group(grp_, o.grp_)) throw field_mismatch("torus group context mismatch");
  return e0_ == o.e0_ && e_ == o.e_;
}

std::optional<long> TorusElem::order() const {
  for (long v : e_)
    if (v != 0) return std::nullopt;
  if (e0_ == 0) return 1;
  long n = grp_->torsion();
  return n / std::gcd(n, e0_);
}

std::string TorusElem::to_string() const {
  std::ostringstream os;
  os << "(" << e0_ << ";";
  for (size_t i = 0; i < e_.size(); ++i) os << (i ? "," : " ") << e_[i];
  os << ")";
  return os.str();
}

}  // namespace cremona
