#pragma once

#include <string>

#include "drinfeld/poly.hpp"

namespace drinfeld {

// Element of K = F_q(T) in canonical form: gcd(num, den) = 1, den monic.
class RatK {
 public:
  RatK() = default;
  explicit RatK(PolyA num);
  // Throws std::domain_error when den is zero.
  RatK(PolyA num, PolyA den);

  static RatK zero(const FqPtr& F) { return RatK(PolyA::zero(F)); }
  static RatK one(const FqPtr& F) { return RatK(PolyA::constant(F, F->one())); }
  static RatK constant(const FqPtr& F, FqElem c) { return RatK(PolyA::constant(F, c)); }

  const PolyA& num() const noexcept { return num_; }
  const PolyA& den() const noexcept { return den_; }
  const FqPtr& field() const noexcept { return num_.field(); }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RatK operator-() const { return RatK(-num_, den_); }
  RatK inverse() const;

  friend RatK operator+(const RatK& a, const RatK& b);
  friend RatK operator-(const RatK& a, const RatK& b);
  friend RatK operator*(const RatK& a, const RatK& b);
  friend RatK operator/(const RatK& a, const RatK& b) { return a * b.inverse(); }
  friend bool operator==(const RatK& a, const RatK& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "num" when den = 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  void normalize();

  PolyA num_;
  PolyA den_;
};

}  // namespace drinfeld
