#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace drinfeld {

// Weight k and type l mod (q - 1); l is kept in [0, q - 1).
struct WeightType {
  long k = 0;
  long l = 0;
  friend bool operator==(const WeightType&, const WeightType&) = default;
};

// Vanishing orders of a level-one form: at infinity, at the elliptic point,
// and at the remaining (non-elliptic) classes.
struct VanishingProfile {
  long k = 0;
  long v_inf = 0;
  long v_e = 0;
  std::vector<long> v_other;
};

// Reduces l into [0, m).
long canonical_residue(long l, long m);

// {l in [0, q-1) : 2l = k mod (q-1)}, ordered (k/2, k/2 + (q-1)/2); empty for odd k.
std::vector<long> type_solutions(long k, unsigned q);

// The two Gamma-types (l1, l2) whose spaces sum to M_{k, l}(Gamma_2), where
// l2_residue is the Gamma_2 type modulo (q-1)/2. Throws std::invalid_argument
// for odd k or an incompatible residue.
std::pair<long, long> decompose_gamma2(long k, long l2_residue, unsigned q);

// Types l + i n' (i < n / n') through which M_{k,l}(Gamma') splits over
// Gamma, for det-image orders n' | n | q - 1.
std::vector<long> idempotent_decomposition(long k, long l, unsigned n, unsigned n_prime,
                                           unsigned q);

// dim M_{k,l}(Gamma_0(T)) = 1 + (k - 2l)/(q - 1) when that is a non-negative
// integer count, else 0; l is read in [0, q - 1).
long dim_gamma0T(long k, long l, unsigned q);

// Exact check of  sum v_other + v_e/(q+1) + v_inf/(q-1) = k/(q^2-1).
bool valence_check(const VanishingProfile& prof, unsigned q);

// (k + k', l + l' mod q - 1).
WeightType graded_mult_type(const WeightType& a, const WeightType& b, unsigned q);

}  // namespace drinfeld
