#include "drinfeld/fq.hpp"

#include <algorithm>
#include <stdexcept>

namespace drinfeld {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Multiply coordinate vectors modulo the monic modulus over F_p.
std::vector<std::uint32_t> mul_mod(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b,
                                   const std::vector<std::uint32_t>& modulus,
                                   std::uint32_t p) {
  const std::size_t e = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * e, 0);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) {
      prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    }
  }
  for (std::size_t k = prod.size(); k-- > e;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= e; ++i) {
      const std::size_t idx = k - e + i;
      prod[idx] = (prod[idx] + (p - c) * modulus[i]) % p;
    }
  }
  return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(e)};
}

// Brute-force irreducibility over F_p: no monic factor of degree <= e/2.
bool irreducible_over_fp(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  auto divides = [&](const std::vector<std::uint32_t>& g) {
    std::vector<std::int64_t> r(f.begin(), f.end());
    const std::size_t dg = g.size() - 1;
    for (std::size_t k = r.size(); k-- > dg;) {
      const std::int64_t c = r[k] % p;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dg; ++i) {
        r[k - dg + i] = ((r[k - dg + i] - c * g[i]) % p + p) % p;
      }
    }
    return std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(dg),
                       [&](std::int64_t c) { return c % p == 0; });
  };
  for (std::size_t d = 1; d <= e / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (divides(g)) return false;
    }
  }
  return true;
}

}  // namespace

Fq::Fq(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < e_; ++i) q_ *= p_;
  log_.assign(q_, 0);
  exp_.assign(q_ - 1, 0);
  for (std::uint32_t cand = 2; cand < q_; ++cand) {
    const FqElem g{cand};
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      x = slow_mul(FqElem{x}, g).code;
      ++order;
    } while (x != 1 && order < q_);
    if (order == q_ - 1) {
      generator_ = g;
      break;
    }
  }
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = slow_mul(FqElem{x}, generator_).code;
  }
}

std::shared_ptr<const Fq> Fq::make(std::uint32_t q) {
  if (q < 3) throw std::invalid_argument("q must be an odd prime power >= 3");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint32_t e = 0;
  std::uint32_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (e == 1) return make(p, 1, {0, 1});
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(e + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[e] = 1;
    if (irreducible_over_fp(f, p)) return make(p, e, f);
  }
  throw std::logic_error("no irreducible modulus found");
}

std::shared_ptr<const Fq> Fq::make(std::uint32_t p, std::uint32_t e,
                                   std::vector<std::uint32_t> modulus) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
  if (e == 0) throw std::invalid_argument("exponent must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  if (q > (1u << 16)) throw std::invalid_argument("q too large (limit 65536)");
  if (e == 1) modulus = {0, 1};
  if (modulus.size() != e + 1 || modulus.back() != 1) {
    throw std::invalid_argument("modulus must be monic of degree e");
  }
  for (auto c : modulus) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (e > 1 && !irreducible_over_fp(modulus, p)) {
    throw std::invalid_argument("modulus is reducible over F_p");
  }
  return std::shared_ptr<const Fq>(new Fq(p, e, std::move(modulus)));
}

FqElem Fq::slow_mul(FqElem a, FqElem b) const {
  if (e_ == 1) {
    return FqElem{static_cast<std::uint32_t>(std::uint64_t{a.code} * b.code % p_)};
  }
  return from_coords(mul_mod(coords(a), coords(b), modulus_, p_));
}

FqElem Fq::from_int(std::int64_t n) const {
  const std::int64_t r = ((n % p_) + p_) % p_;
  return FqElem{static_cast<std::uint32_t>(r)};
}

FqElem Fq::from_coords(std::span<const std::uint32_t> c) const {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p_ + c[i] % p_;
  return FqElem{code};
}

std::vector<std::uint32_t> Fq::coords(FqElem x) const {
  std::vector<std::uint32_t> out(e_, 0);
  std::uint32_t c = x.code;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out[i] = c % p_;
    c /= p_;
  }
  return out;
}

FqElem Fq::add(FqElem a, FqElem b) const {
  if (e_ == 1) return FqElem{(a.code + b.code) % p_};
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a.code;
  std::uint32_t y = b.code;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return FqElem{out};
}

FqElem Fq::neg(FqElem a) const {
  if (e_ == 1) return FqElem{(p_ - a.code) % p_};
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a.code;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return FqElem{out};
}

FqElem Fq::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Fq::mul(FqElem a, FqElem b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  return FqElem{exp_[(log_[a.code] + log_[b.code]) % (q_ - 1)]};
}

FqElem Fq::inv(FqElem a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero in F_q");
  return FqElem{exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)]};
}

FqElem Fq::pow(FqElem a, std::int64_t n) const {
  if (a.is_zero()) {
    if (n < 0) throw std::domain_error("negative power of zero");
    return n == 0 ? one() : zero();
  }
  return exp(static_cast<std::int64_t>(log_[a.code]) * n);
}

std::uint32_t Fq::log(FqElem a) const {
  if (a.is_zero()) throw std::domain_error("log of zero");
  return log_[a.code];
}

FqElem Fq::exp(std::int64_t k) const {
  const std::int64_t m = q_ - 1;
  return FqElem{exp_[static_cast<std::size_t>(((k % m) + m) % m)]};
}

bool Fq::is_square(FqElem a) const {
  if (a.is_zero()) throw std::invalid_argument("is_square: zero input");
  return log_[a.code] % 2 == 0;
}

FqElem Fq::sqrt(FqElem a) const {
  if (a.is_zero()) return zero();
  if (!is_square(a)) throw std::invalid_argument("sqrt of a non-square");
  return exp(log_[a.code] / 2);
}

std::vector<FqElem> Fq::elements() const {
  std::vector<FqElem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = FqElem{i};
  return out;
}

std::vector<FqElem> Fq::units() const {
  std::vector<FqElem> out;
  out.reserve(q_ - 1);
  for (std::uint32_t i = 1; i < q_; ++i) out.push_back(FqElem{i});
  return out;
}

std::string Fq::to_string(FqElem a) const {
  if (in_prime_field(a)) return std::to_string(a.code);
  const auto k = log(a);
  return k == 1 ? std::string("a") : "a^" + std::to_string(k);
}

}  // namespace drinfeld
