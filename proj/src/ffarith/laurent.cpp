#include "drinfeld/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

LaurentKInf::LaurentKInf(FqPtr field, long valuation, std::vector<FqElem> coeffs)
    : field_(std::move(field)), valuation_(valuation), coeffs_(std::move(coeffs)) {
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                                  [](FqElem c) { return !c.is_zero(); });
  valuation_ += static_cast<long>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) valuation_ = 0;
}

LaurentKInf LaurentKInf::zero(FqPtr field) { return LaurentKInf(std::move(field), 0, {}); }

FqElem LaurentKInf::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero series");
  return coeffs_.front();
}

FqElem LaurentKInf::coeff_at(long n) const {
  if (is_zero()) return FqElem{0};
  if (n < valuation_) return FqElem{0};
  if (n >= absolute_prec()) throw PrecisionError("coefficient beyond retained precision");
  return coeffs_[static_cast<std::size_t>(n - valuation_)];
}

LaurentKInf LaurentKInf::truncated(std::size_t prec) const {
  LaurentKInf r = *this;
  if (r.coeffs_.size() > prec) r.coeffs_.resize(prec);
  return LaurentKInf(r.field_, r.valuation_, std::move(r.coeffs_));
}

LaurentKInf LaurentKInf::operator-() const {
  LaurentKInf r = *this;
  for (auto& c : r.coeffs_) c = field_->neg(c);
  return r;
}

// A zero operand is treated as exact; otherwise the result is known up to
// the smaller absolute precision.
LaurentKInf operator+(const LaurentKInf& a, const LaurentKInf& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const FqPtr& F = a.field_;
  const long start = std::min(a.valuation_, b.valuation_);
  const long end = std::min(a.absolute_prec(), b.absolute_prec());
  if (end <= start) return LaurentKInf::zero(F);
  std::vector<FqElem> out(static_cast<std::size_t>(end - start), FqElem{0});
  for (long n = start; n < end; ++n) {
    out[static_cast<std::size_t>(n - start)] = F->add(a.coeff_at(n), b.coeff_at(n));
  }
  return LaurentKInf(F, start, std::move(out));
}

LaurentKInf operator*(const LaurentKInf& a, const LaurentKInf& b) {
  if (a.is_zero() || b.is_zero()) return LaurentKInf::zero(a.field_ ? a.field_ : b.field_);
  const FqPtr& F = a.field_;
  const std::size_t prec = std::min(a.prec(), b.prec());
  std::vector<FqElem> out(prec, FqElem{0});
  for (std::size_t i = 0; i < prec; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < prec; ++j) {
      out[i + j] = F->add(out[i + j], F->mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return LaurentKInf(F, a.valuation_ + b.valuation_, std::move(out));
}

bool LaurentKInf::agrees_with(const LaurentKInf& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (valuation_ != o.valuation_) return false;
  const std::size_t n = std::min(prec(), o.prec());
  return std::equal(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n),
                    o.coeffs_.begin());
}

LaurentKInf laurent_expand(const RatK& x, std::size_t prec) {
  const FqPtr& F = x.field();
  if (x.is_zero()) return LaurentKInf::zero(F);
  // In u = 1/T: a(T) = T^deg(a) * rev(a)(u), with rev(a)(0) = lead(a) != 0.
  const auto& n = x.num().coeffs();
  const auto& d = x.den().coeffs();
  auto rev_at = [](const std::vector<FqElem>& c, std::size_t j) {
    return j < c.size() ? c[c.size() - 1 - j] : FqElem{0};
  };
  const FqElem d0_inv = F->inv(d.back());
  std::vector<FqElem> out(prec, FqElem{0});
  for (std::size_t k = 0; k < prec; ++k) {
    FqElem acc = rev_at(n, k);
    for (std::size_t j = 1; j <= k && j < d.size(); ++j) {
      acc = F->sub(acc, F->mul(rev_at(d, j), out[k - j]));
    }
    out[k] = F->mul(acc, d0_inv);
  }
  const long v = x.den().degree() - x.num().degree();
  return LaurentKInf(F, v, std::move(out));
}

namespace {

// Unit power series square root by the recurrence 2 s_0 s_n = g_n - sum s_i s_{n-i}.
std::vector<FqElem> unit_sqrt(const Fq& F, const std::vector<FqElem>& g) {
  std::vector<FqElem> s(g.size(), FqElem{0});
  s[0] = F.sqrt(g[0]);
  const FqElem two_s0_inv = F.inv(F.add(s[0], s[0]));
  for (std::size_t n = 1; n < g.size(); ++n) {
    FqElem acc = g[n];
    for (std::size_t i = 1; i < n; ++i) acc = F.sub(acc, F.mul(s[i], s[n - i]));
    s[n] = F.mul(acc, two_s0_inv);
  }
  return s;
}

void require_decidable(const LaurentKInf& f) {
  if (f.is_zero()) throw std::invalid_argument("square test of the zero series");
  if (f.prec() < 2) throw PrecisionError("square test needs at least two retained terms");
}

}  // namespace

bool is_square_kinf(const LaurentKInf& f) {
  require_decidable(f);
  const Fq& F = *f.field();
  if (f.valuation() % 2 != 0) return false;
  if (!F.is_square(f.leading())) return false;
  const auto s = unit_sqrt(F, f.coeffs());
  LaurentKInf root(f.field(), f.valuation() / 2, s);
  if (!(root * root).agrees_with(f)) {
    throw PrecisionError("Hensel refinement of the square root failed");
  }
  return true;
}

LaurentKInf sqrt_kinf(const LaurentKInf& f) {
  if (!is_square_kinf(f)) throw std::domain_error("sqrt_kinf of a non-square");
  return LaurentKInf(f.field(), f.valuation() / 2, unit_sqrt(*f.field(), f.coeffs()));
}

bool quad_irreducible_kinf(const RatK& b, const RatK& c, std::size_t prec) {
  const FqPtr& F = b.field() ? b.field() : c.field();
  const RatK four = RatK::constant(F, F->from_int(4));
  const RatK disc = b * b - four * c;
  // A repeated root lies in K.
  if (disc.is_zero()) return false;
  return !is_square_kinf(laurent_expand(disc, prec));
}

bool is_square_fq(const Fq& F, FqElem x) { return F.is_square(x); }

}  // namespace drinfeld
