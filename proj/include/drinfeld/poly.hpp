#pragma once

#include <string>
#include <utility>
#include <vector>

#include "drinfeld/fq.hpp"

namespace drinfeld {

// Element of A = F_q[T]. Coefficients lowest degree first with no trailing
// zeros, so the zero polynomial has an empty coefficient list.
class PolyA {
 public:
  PolyA() = default;
  PolyA(FqPtr field, std::vector<FqElem> coeffs);

  static PolyA zero(FqPtr field) { return PolyA(std::move(field), {}); }
  static PolyA constant(FqPtr field, FqElem c);
  static PolyA monomial(FqPtr field, FqElem c, int degree);
  static PolyA T(FqPtr field) { return monomial(field, field->one(), 1); }

  const FqPtr& field() const noexcept { return field_; }
  const std::vector<FqElem>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  FqElem coeff(int i) const;
  FqElem leading() const;
  PolyA monic() const;

  PolyA operator-() const;
  PolyA& operator+=(const PolyA& o);
  PolyA& operator-=(const PolyA& o);
  PolyA& operator*=(const PolyA& o);
  PolyA scaled(FqElem c) const;

  friend PolyA operator+(PolyA a, const PolyA& b) { return a += b; }
  friend PolyA operator-(PolyA a, const PolyA& b) { return a -= b; }
  friend PolyA operator*(PolyA a, const PolyA& b) { return a *= b; }
  friend bool operator==(const PolyA& a, const PolyA& b) { return a.coeffs_ == b.coeffs_; }
  // Lexicographic by degree then coefficients from the top, for canonical sorting.
  friend bool operator<(const PolyA& a, const PolyA& b);

  // Euclidean division; throws std::domain_error on division by zero.
  std::pair<PolyA, PolyA> divmod(const PolyA& divisor) const;
  PolyA operator%(const PolyA& m) const { return divmod(m).second; }
  PolyA operator/(const PolyA& m) const { return divmod(m).first; }

  // Canonical text: decreasing degree, explicit '*' and '^', e.g. "4*T+3".
  std::string to_string() const;

 private:
  void trim();

  FqPtr field_;
  std::vector<FqElem> coeffs_;
};

// Monic gcd (zero if both are zero).
PolyA gcd(PolyA a, PolyA b);

// All polynomials of degree <= max_degree (including zero), in increasing
// order of their base-q coefficient code.
std::vector<PolyA> polys_up_to_degree(const FqPtr& field, int max_degree);

}  // namespace drinfeld
