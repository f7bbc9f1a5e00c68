#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drinfeld/congruence.hpp"
#include "drinfeld/ratk.hpp"

namespace drinfeld {

inline constexpr std::size_t kDefaultUSeriesPrec = 64;

// Truncated expansion  sum_{n < prec} a_n u^n  of a form of weight k and
// (optionally) type l at infinity. Indices start at 0 (holomorphic at
// infinity).
class USeries {
 public:
  USeries() = default;
  USeries(FqPtr field, std::vector<RatK> coeffs, long weight,
          std::optional<long> type = std::nullopt);
  static USeries zero(FqPtr field, std::size_t prec, long weight,
                      std::optional<long> type = std::nullopt);

  const FqPtr& field() const noexcept { return field_; }
  const std::vector<RatK>& coeffs() const noexcept { return coeffs_; }
  const RatK& coeff(std::size_t n) const { return coeffs_.at(n); }
  std::size_t prec() const noexcept { return coeffs_.size(); }
  long weight() const noexcept { return weight_; }
  std::optional<long> type() const noexcept { return type_; }
  bool is_zero() const;

  USeries with_type(std::optional<long> type) const;

  // Coefficientwise; same weight is not enforced.
  friend USeries operator+(const USeries& f, const USeries& g);
  USeries scaled(const RatK& c) const;
  // Same coefficients over the shared precision (metadata ignored).
  bool coefficients_equal(const USeries& o) const;

  // e.g. "u^2+3*u^4"; coefficients use the polynomial grammar, rational ones in parentheses.
  std::string to_string() const;

 private:
  FqPtr field_;
  std::vector<RatK> coeffs_;
  long weight_ = 0;
  std::optional<long> type_;
};

// Sum of c*u^n terms with c in the polynomial grammar of parse_poly.
USeries parse_series(std::string_view src, const FqPtr& field, long weight,
                     std::size_t prec = kDefaultUSeriesPrec);

// f(alpha z): a_n -> a_n alpha^(-n). Throws std::invalid_argument for alpha = 0.
USeries scale_u(const USeries& f, FqElem alpha);

// Every nonzero a_n has 2n = k (mod q - 1).
bool check_support(const USeries& f, long k);

// Smallest n with a_n != 0 and 2n != k (mod q - 1), if any.
std::optional<std::size_t> first_support_violation(const USeries& f, long k);

// (f1, f2) with f1 on n = k/2 and f2 on n = k/2 + (q-1)/2 (mod q - 1),
// typed l1, l2. Throws DomainViolation naming the offending exponent when
// the support check fails, std::invalid_argument for odd k.
std::pair<USeries, USeries> split(const USeries& f, long k);

// Cauchy product to the smaller precision; weights add, types add mod q - 1.
USeries mul(const USeries& f, const USeries& g);

struct FormRegistryEntry {
  std::string name;
  long weight = 0;
  std::optional<long> type;
  GroupSpec group;
};

// g, Delta, h (level one), E_T, Delta_T, Delta_W (Gamma_0(T)).
std::vector<FormRegistryEntry> form_registry(const FqPtr& F);

}  // namespace drinfeld
