#include "drinfeld/weights.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace drinfeld {

namespace {

void require_odd_q(unsigned q) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("q must be odd");
}

}  // namespace

long canonical_residue(long l, long m) { return ((l % m) + m) % m; }

std::vector<long> type_solutions(long k, unsigned q) {
  require_odd_q(q);
  if (k % 2 != 0) return {};
  const long m = q - 1;
  const long l1 = canonical_residue(k / 2, m);
  return {l1, canonical_residue(l1 + m / 2, m)};
}

std::pair<long, long> decompose_gamma2(long k, long l2_residue, unsigned q) {
  require_odd_q(q);
  if (k % 2 != 0) throw std::invalid_argument("decompose_gamma2: odd weight has no types");
  const long half = (q - 1) / 2;
  if (canonical_residue(l2_residue - k / 2, half) != 0) {
    throw std::invalid_argument("decompose_gamma2: type " + std::to_string(l2_residue) +
                                " is incompatible with weight " + std::to_string(k));
  }
  const auto sols = type_solutions(k, q);
  return {sols[0], sols[1]};
}

std::vector<long> idempotent_decomposition(long /*k*/, long l, unsigned n, unsigned n_prime,
                                           unsigned q) {
  require_odd_q(q);
  if (n_prime == 0 || n == 0 || n % n_prime != 0 || (q - 1) % n != 0) {
    throw std::invalid_argument("idempotent_decomposition: need n' | n | q - 1");
  }
  std::vector<long> out;
  for (unsigned i = 0; i < n / n_prime; ++i) {
    out.push_back(canonical_residue(l + static_cast<long>(i) * n_prime, q - 1));
  }
  return out;
}

long dim_gamma0T(long k, long l, unsigned q) {
  require_odd_q(q);
  const long m = q - 1;
  const long diff = k - 2 * canonical_residue(l, m);
  if (diff < 0 || diff % m != 0) return 0;
  return 1 + diff / m;
}

bool valence_check(const VanishingProfile& prof, unsigned q) {
  require_odd_q(q);
  const long Q = q;
  mpq_class lhs = 0;
  for (long v : prof.v_other) lhs += v;
  auto frac = [](long n, long d) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
  };
  lhs += frac(prof.v_e, Q + 1);
  lhs += frac(prof.v_inf, Q - 1);
  return lhs == frac(prof.k, Q * Q - 1);
}

WeightType graded_mult_type(const WeightType& a, const WeightType& b, unsigned q) {
  return {a.k + b.k, canonical_residue(a.l + b.l, q - 1)};
}

}  // namespace drinfeld
