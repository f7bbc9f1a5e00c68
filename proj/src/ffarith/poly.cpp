#include "drinfeld/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace drinfeld {

PolyA::PolyA(FqPtr field, std::vector<FqElem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

PolyA PolyA::constant(FqPtr field, FqElem c) { return PolyA(std::move(field), {c}); }

PolyA PolyA::monomial(FqPtr field, FqElem c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<FqElem> v(static_cast<std::size_t>(degree) + 1, field->zero());
  v.back() = c;
  return PolyA(std::move(field), std::move(v));
}

void PolyA::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FqElem PolyA::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return FqElem{0};
  return coeffs_[static_cast<std::size_t>(i)];
}

FqElem PolyA::leading() const { return coeffs_.empty() ? FqElem{0} : coeffs_.back(); }

PolyA PolyA::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

PolyA PolyA::operator-() const {
  PolyA r = *this;
  for (auto& c : r.coeffs_) c = field_->neg(c);
  return r;
}

PolyA& PolyA::operator+=(const PolyA& o) {
  if (!field_) field_ = o.field_;
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), FqElem{0});
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[i] = field_->add(coeffs_[i], o.coeffs_[i]);
  }
  trim();
  return *this;
}

PolyA& PolyA::operator-=(const PolyA& o) {
  if (!field_) field_ = o.field_;
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), FqElem{0});
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    coeffs_[i] = field_->sub(coeffs_[i], o.coeffs_[i]);
  }
  trim();
  return *this;
}

PolyA& PolyA::operator*=(const PolyA& o) {
  if (!field_) field_ = o.field_;
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<FqElem> out(coeffs_.size() + o.coeffs_.size() - 1, FqElem{0});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyA PolyA::scaled(FqElem c) const {
  PolyA r = *this;
  for (auto& x : r.coeffs_) x = field_->mul(x, c);
  r.trim();
  return r;
}

bool operator<(const PolyA& a, const PolyA& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

std::pair<PolyA, PolyA> PolyA::divmod(const PolyA& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  const FqPtr& F = field_ ? field_ : divisor.field_;
  std::vector<FqElem> rem = coeffs_;
  const int db = divisor.degree();
  if (degree() < db) return {PolyA::zero(F), *this};
  std::vector<FqElem> quot(static_cast<std::size_t>(degree() - db + 1), FqElem{0});
  const FqElem lead_inv = F->inv(divisor.leading());
  for (int k = degree(); k >= db; --k) {
    const FqElem c = rem[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const FqElem f = F->mul(c, lead_inv);
    quot[static_cast<std::size_t>(k - db)] = f;
    for (int i = 0; i <= db; ++i) {
      auto& slot = rem[static_cast<std::size_t>(k - db + i)];
      slot = F->sub(slot, F->mul(f, divisor.coeffs_[static_cast<std::size_t>(i)]));
    }
  }
  return {PolyA(F, std::move(quot)), PolyA(F, std::move(rem))};
}

std::string PolyA::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const FqElem c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    const bool unit = c == field_->one();
    if (i == 0) {
      out += field_->to_string(c);
      continue;
    }
    if (!unit) out += field_->to_string(c) + "*";
    out += "T";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

PolyA gcd(PolyA a, PolyA b) {
  while (!b.is_zero()) {
    PolyA r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<PolyA> polys_up_to_degree(const FqPtr& field, int max_degree) {
  std::vector<PolyA> out;
  if (max_degree < 0) {
    out.push_back(PolyA::zero(field));
    return out;
  }
  const std::size_t len = static_cast<std::size_t>(max_degree) + 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < len; ++i) count *= field->q();
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<FqElem> c(len);
    std::uint64_t x = code;
    for (std::size_t i = 0; i < len; ++i) {
      c[i] = FqElem{static_cast<std::uint32_t>(x % field->q())};
      x /= field->q();
    }
    out.emplace_back(field, std::move(c));
  }
  return out;
}

}  // namespace drinfeld
