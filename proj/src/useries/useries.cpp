#include "drinfeld/useries.hpp"

#include <algorithm>
#include <stdexcept>

#include "drinfeld/errors.hpp"
#include "drinfeld/parse.hpp"
#include "drinfeld/weights.hpp"

namespace drinfeld {

USeries::USeries(FqPtr field, std::vector<RatK> coeffs, long weight, std::optional<long> type)
    : field_(std::move(field)), coeffs_(std::move(coeffs)), weight_(weight) {
  if (type) type_ = canonical_residue(*type, field_->q() - 1);
}

USeries USeries::zero(FqPtr field, std::size_t prec, long weight, std::optional<long> type) {
  std::vector<RatK> c(prec, RatK::zero(field));
  return USeries(std::move(field), std::move(c), weight, type);
}

bool USeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RatK& c) { return c.is_zero(); });
}

USeries USeries::with_type(std::optional<long> type) const {
  return USeries(field_, coeffs_, weight_, type);
}

USeries operator+(const USeries& f, const USeries& g) {
  const std::size_t n = std::min(f.prec(), g.prec());
  std::vector<RatK> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(f.coeffs_[i] + g.coeffs_[i]);
  return USeries(f.field_, std::move(c), f.weight_, f.type_ == g.type_ ? f.type_ : std::nullopt);
}

USeries USeries::scaled(const RatK& s) const {
  USeries out = *this;
  for (auto& c : out.coeffs_) c = c * s;
  return out;
}

bool USeries::coefficients_equal(const USeries& o) const {
  const std::size_t n = std::min(prec(), o.prec());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(coeffs_[i] == o.coeffs_[i])) return false;
  }
  return true;
}

std::string USeries::to_string() const {
  std::string out;
  auto append = [&](const std::string& coeff, std::size_t n) {
    if (!out.empty()) out += '+';
    if (n == 0) {
      out += coeff;
      return;
    }
    if (coeff != "1") out += coeff + "*";
    out += "u";
    if (n > 1) out += "^" + std::to_string(n);
  };
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const RatK& c = coeffs_[n];
    if (c.is_zero()) continue;
    if (c.den().degree() > 0) {
      append(c.to_string(), n);
      continue;
    }
    // one term per power of T keeps the output parseable
    const auto& pc = c.num().coeffs();
    for (std::size_t i = pc.size(); i-- > 0;) {
      if (pc[i].is_zero()) continue;
      append(PolyA::monomial(field_, pc[i], static_cast<int>(i)).to_string(), n);
    }
  }
  return out.empty() ? "0" : out;
}

USeries parse_series(std::string_view src, const FqPtr& field, long weight, std::size_t prec) {
  const auto parts = parse_bivariate(src, field, 'u');
  std::size_t needed = prec;
  for (const auto& [n, poly] : parts) {
    (void)poly;
    needed = std::max(needed, static_cast<std::size_t>(n) + 1);
  }
  std::vector<RatK> c(needed, RatK::zero(field));
  for (const auto& [n, poly] : parts) c[static_cast<std::size_t>(n)] = RatK(poly);
  return USeries(field, std::move(c), weight);
}

USeries scale_u(const USeries& f, FqElem alpha) {
  const Fq& F = *f.field();
  if (alpha.is_zero()) throw std::invalid_argument("scale_u: alpha must be nonzero");
  std::vector<RatK> c;
  c.reserve(f.prec());
  for (std::size_t n = 0; n < f.prec(); ++n) {
    const FqElem s = F.pow(alpha, -static_cast<std::int64_t>(n));
    c.push_back(f.coeff(n) * RatK::constant(f.field(), s));
  }
  return USeries(f.field(), std::move(c), f.weight(), f.type());
}

std::optional<std::size_t> first_support_violation(const USeries& f, long k) {
  const long m = f.field()->q() - 1;
  for (std::size_t n = 0; n < f.prec(); ++n) {
    if (f.coeff(n).is_zero()) continue;
    if (canonical_residue(2 * static_cast<long>(n) - k, m) != 0) return n;
  }
  return std::nullopt;
}

bool check_support(const USeries& f, long k) {
  if (k % 2 != 0) throw std::invalid_argument("check_support: k must be even");
  return !first_support_violation(f, k).has_value();
}

std::pair<USeries, USeries> split(const USeries& f, long k) {
  const unsigned q = f.field()->q();
  if (k % 2 != 0) throw std::invalid_argument("split: k must be even");
  if (const auto bad = first_support_violation(f, k)) {
    throw DomainViolation("split: coefficient of u^" + std::to_string(*bad) +
                          " violates 2n = k (mod q-1)");
  }
  const auto [l1, l2] = decompose_gamma2(k, canonical_residue(k / 2, (q - 1) / 2), q);
  const long m = q - 1;
  USeries f1 = USeries::zero(f.field(), f.prec(), k, l1);
  USeries f2 = USeries::zero(f.field(), f.prec(), k, l2);
  std::vector<RatK> c1 = f1.coeffs();
  std::vector<RatK> c2 = f2.coeffs();
  for (std::size_t n = 0; n < f.prec(); ++n) {
    if (f.coeff(n).is_zero()) continue;
    if (canonical_residue(static_cast<long>(n) - k / 2, m) == 0) {
      c1[n] = f.coeff(n);
    } else {
      c2[n] = f.coeff(n);
    }
  }
  return {USeries(f.field(), std::move(c1), k, l1), USeries(f.field(), std::move(c2), k, l2)};
}

USeries mul(const USeries& f, const USeries& g) {
  const std::size_t n = std::min(f.prec(), g.prec());
  std::vector<RatK> c(n, RatK::zero(f.field()));
  for (std::size_t i = 0; i < n; ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (g.coeff(j).is_zero()) continue;
      c[i + j] = c[i + j] + f.coeff(i) * g.coeff(j);
    }
  }
  std::optional<long> type;
  if (f.type() && g.type()) {
    type = graded_mult_type({f.weight(), *f.type()}, {g.weight(), *g.type()}, f.field()->q()).l;
  }
  return USeries(f.field(), std::move(c), f.weight() + g.weight(), type);
}

std::vector<FormRegistryEntry> form_registry(const FqPtr& F) {
  const long q = F->q();
  const GroupSpec full = GroupSpec::full();
  const GroupSpec g0T = GroupSpec::of(Family::Gamma0, PolyA::T(F));
  return {
      {"g", q - 1, 0, full},
      {"Delta", q * q - 1, 0, full},
      {"h", q + 1, 1, full},
      {"E_T", 2, 1, g0T},
      // types of Delta_T, Delta_W are constrained to {0, (q-1)/2} but not fixed
      {"Delta_T", q - 1, std::nullopt, g0T},
      {"Delta_W", q - 1, std::nullopt, g0T},
  };
}

}  // namespace drinfeld
