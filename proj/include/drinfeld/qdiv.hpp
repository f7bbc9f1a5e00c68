#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "drinfeld/curveinv.hpp"

namespace drinfeld {

// Supported points of P^1: the elliptic point sits at 1, cusps at 0 and infinity.
enum class QPoint { Zero, One, Infinity };

std::string to_string(QPoint p);

// Q-divisor on P^1 with support in {0, 1, infinity}.
class QDivisor {
 public:
  QDivisor() = default;
  QDivisor(std::initializer_list<std::pair<const QPoint, mpq_class>> terms);

  mpq_class coeff(QPoint p) const;
  void set(QPoint p, const mpq_class& c);
  const std::map<QPoint, mpq_class>& terms() const { return terms_; }
  mpq_class degree() const;
  bool is_integral() const;

  QDivisor scaled(const mpq_class& s) const;
  friend QDivisor operator+(const QDivisor& a, const QDivisor& b);
  friend bool operator==(const QDivisor& a, const QDivisor& b) { return a.terms_ == b.terms_; }

  // e.g. "(2/3)(1) + (-1/2)(inf)"
  std::string to_string() const;

 private:
  std::map<QPoint, mpq_class> terms_;  // zero coefficients are not stored
};

QDivisor floor_div(const QDivisor& D);

// Genus-0 Riemann-Roch: deg floor(D) + 1, or 0 when that degree is negative.
long h0(const QDivisor& D);

// The rational function t^t_exp * (t - 1)^t1_exp.
struct SectionMonomial {
  long t_exp = 0;
  long t1_exp = 0;
  friend bool operator==(const SectionMonomial&, const SectionMonomial&) = default;
};

struct SectionBasis {
  QDivisor div;  // floor(D)
  std::vector<SectionMonomial> basis;
};

// With floor(D) = A(0) + B(1) + C(inf), H^0 is spanned by
// t^(m - A) (t - 1)^(-B) for m = 0 .. A + B + C.
SectionBasis rr_basis(const QDivisor& D);

// Strictly improving floor(b alpha)/b for b = 1, 2, ..., ending at alpha.
// Throws std::invalid_argument for negative alpha.
std::vector<mpq_class> best_lower_approximations(const mpq_class& alpha);

// K_{P^1} + sum_e (1 - 1/e_x) x + sum_s (1 + 1/e_s) s, elliptic point at 1,
// cusps at infinity ((u, 0)) and 0 ((0, v)).
QDivisor log_canonical_divisor(const CurveInvariants& inv);

// 2 floor((k/2) alpha) + k + 1 with alpha = (2k - 2l - kq) / (k (q - 1)),
// clamped below at 0. Only the Gamma0T_2 preset is supported.
long h0_weighted(Preset preset, unsigned q, long k, long l);

struct PresentationGenerator {
  long weight = 0;
  long degree = 0;         // weight / 2
  long section_index = 0;  // m in the degree-d model t^m / (t^A (t - 1)^B)
};

struct RelationTerm {
  mpq_class coeff;
  std::vector<unsigned> exponents;  // one per generator, padded with zeros
};

struct PresentationRelation {
  long weight = 0;
  std::vector<RelationTerm> terms;  // nonzero coefficients only
};

struct DegreeStats {
  long degree = 0;
  long h0 = 0;
  std::size_t monomials = 0;
  std::size_t kernel_dim = 0;
  std::size_t consequence_dim = 0;
  std::size_t new_generators = 0;
  std::size_t new_relations = 0;
};

struct RingPresentation {
  std::vector<PresentationGenerator> generators;
  std::vector<PresentationRelation> relations;
  long truncation_weight = 0;
  std::vector<DegreeStats> stats;
};

inline constexpr std::size_t kDefaultPresentationWorkBound = 200'000;

// Degree-by-degree generators and relations of the section ring
// sum_d H^0(floor(d D)) up to weight 2d <= max_weight. Throws
// WorkBoundExceeded when a degree has more than work_bound monomials.
RingPresentation presentation(const QDivisor& D, long max_weight,
                              std::size_t work_bound = kDefaultPresentationWorkBound);

}  // namespace drinfeld
