#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace drinfeld {

// Element of F_q, stored as its coordinate vector over F_p packed base p
// (coordinate i is the coefficient of x^i in the polynomial basis).
struct FqElem {
  std::uint32_t code = 0;

  bool is_zero() const noexcept { return code == 0; }
  auto operator<=>(const FqElem&) const = default;
};

// The finite field F_q, q = p^e with p an odd prime. Doubles as the
// parameter record: the modulus (for e > 1) and the multiplicative
// generator are fixed at construction so that every result is reproducible.
class Fq {
 public:
  // Picks the first monic irreducible modulus in lexicographic order of its
  // lower coefficients and the smallest-code generator of F_q^x.
  static std::shared_ptr<const Fq> make(std::uint32_t q);
  // `modulus` is monic of degree e, lowest coefficient first.
  static std::shared_ptr<const Fq> make(std::uint32_t p, std::uint32_t e,
                                        std::vector<std::uint32_t> modulus);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  FqElem generator() const noexcept { return generator_; }

  FqElem zero() const noexcept { return {0}; }
  FqElem one() const noexcept { return {1}; }
  // Image of an integer in the prime subfield.
  FqElem from_int(std::int64_t n) const;
  FqElem from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(FqElem x) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, std::int64_t n) const;

  // Discrete logarithm to the base generator(); a must be nonzero.
  std::uint32_t log(FqElem a) const;
  FqElem exp(std::int64_t k) const;

  // Throws std::invalid_argument on zero.
  bool is_square(FqElem a) const;
  // Some y with y^2 = a. Throws std::invalid_argument if a is not a square.
  FqElem sqrt(FqElem a) const;

  bool in_prime_field(FqElem a) const noexcept { return a.code < p_; }
  std::vector<FqElem> elements() const;
  std::vector<FqElem> units() const;

  // Integer for prime-field elements, "a^k" otherwise.
  std::string to_string(FqElem a) const;

 private:
  Fq(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);
  FqElem slow_mul(FqElem a, FqElem b) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  FqElem generator_;
  std::vector<std::uint32_t> log_;  // indexed by code, log_[0] unused
  std::vector<std::uint32_t> exp_;  // exp_[k] = code of generator^k, k < q-1
};

using FqPtr = std::shared_ptr<const Fq>;

bool is_prime(std::uint32_t n);

}  // namespace drinfeld
