#include "drinfeld/ratk.hpp"

#include <stdexcept>

namespace drinfeld {

RatK::RatK(PolyA num) : num_(std::move(num)), den_(PolyA::constant(num_.field(), num_.field()->one())) {}

RatK::RatK(PolyA num, PolyA den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatK::normalize() {
  const FqPtr F = den_.field();
  if (num_.is_zero()) {
    num_ = PolyA::zero(F);
    den_ = PolyA::constant(F, F->one());
    return;
  }
  const PolyA g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const FqElem lead_inv = F->inv(den_.leading());
  num_ = num_.scaled(lead_inv);
  den_ = den_.scaled(lead_inv);
}

RatK RatK::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in K");
  return RatK(den_, num_);
}

RatK operator+(const RatK& a, const RatK& b) {
  return RatK(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatK operator-(const RatK& a, const RatK& b) {
  return RatK(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatK operator*(const RatK& a, const RatK& b) {
  return RatK(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RatK::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace drinfeld
