#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "drinfeld/ratk.hpp"

namespace drinfeld {

// Truncated element of K_inf = F_q((1/T)):
//   sum_{i < prec} coeffs[i] * (1/T)^(valuation + i)  +  O((1/T)^(valuation + prec)).
// Valuation follows |a|_inf = q^deg(a), so v(T) = -1 and v(1/T) = +1.
class LaurentKInf {
 public:
  static constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

  LaurentKInf() = default;
  // Leading zeros are stripped (consuming precision); an all-zero window
  // yields the zero series.
  LaurentKInf(FqPtr field, long valuation, std::vector<FqElem> coeffs);

  static LaurentKInf zero(FqPtr field);

  const FqPtr& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long valuation() const noexcept { return is_zero() ? kInfiniteValuation : valuation_; }
  std::size_t prec() const noexcept { return coeffs_.size(); }
  // Exponent of the first unknown term.
  long absolute_prec() const noexcept { return valuation_ + static_cast<long>(coeffs_.size()); }
  const std::vector<FqElem>& coeffs() const noexcept { return coeffs_; }
  FqElem leading() const;
  // Coefficient of (1/T)^n; zero below the valuation. Throws PrecisionError
  // at or beyond absolute_prec().
  FqElem coeff_at(long n) const;

  LaurentKInf truncated(std::size_t prec) const;

  LaurentKInf operator-() const;
  friend LaurentKInf operator+(const LaurentKInf& a, const LaurentKInf& b);
  friend LaurentKInf operator-(const LaurentKInf& a, const LaurentKInf& b) { return a + (-b); }
  friend LaurentKInf operator*(const LaurentKInf& a, const LaurentKInf& b);
  // Equal valuation and coefficients over the shared precision.
  bool agrees_with(const LaurentKInf& o) const;

 private:
  FqPtr field_;
  long valuation_ = 0;
  std::vector<FqElem> coeffs_;
};

inline constexpr std::size_t kDefaultLaurentPrec = 32;

// Expansion of x at the place at infinity with `prec` retained terms.
LaurentKInf laurent_expand(const RatK& x, std::size_t prec = kDefaultLaurentPrec);

// Square test in K_inf: even valuation, square leading coefficient, and a
// Hensel-lifted square root that reproduces f over the retained window.
// Throws std::invalid_argument for zero, PrecisionError when prec < 2.
bool is_square_kinf(const LaurentKInf& f);

// Square root of a square in K_inf to the precision of f. Precondition as
// for is_square_kinf and the result of is_square_kinf(f) must be true.
LaurentKInf sqrt_kinf(const LaurentKInf& f);

// Irreducibility of z^2 + b z + c over K_inf via the discriminant b^2 - 4c.
bool quad_irreducible_kinf(const RatK& b, const RatK& c,
                           std::size_t prec = kDefaultLaurentPrec);

bool is_square_fq(const Fq& F, FqElem x);

}  // namespace drinfeld
