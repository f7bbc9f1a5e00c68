#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/congruence.hpp"
#include "drinfeld/ratk.hpp"

namespace drinfeld {

// Vector in (A/N)^2, entries reduced to degree < deg N.
using ResidueVec = std::array<PolyA, 2>;

struct CuspSet {
  std::vector<ResidueVec> reps;
  std::vector<std::size_t> orbit_sizes;  // parallel to reps
  std::size_t count() const { return reps.size(); }
};

// Non-scalar element of G fixing a point of Omega: the fixed-point quadratic
// z^2 + quad_b z + quad_c has no root in K_inf.
struct EllipticWitness {
  Mat2 gamma;
  RatK quad_b;  // (d - a) / c
  RatK quad_c;  // -b / c
  FqElem det;
  bool det_is_square = false;
};

struct Parity {
  enum class Kind { Square, NonSquare, NoWitnessFound };
  Kind kind = Kind::NoWitnessFound;
  unsigned bound = 0;
  std::optional<EllipticWitness> witness;  // set for NonSquare (and Square)

  std::string to_string() const;
};

struct EllipticPoint {
  EllipticWitness witness;
  unsigned stab_order = 0;         // |G_e / F_q^x|
  unsigned stab_order_gamma2 = 0;  // |(G_2)_e / F_q^x|
};

struct CurveInvariants {
  unsigned q = 0;
  GroupSpec group;  // the Gamma_2-type group whose curve is described
  unsigned genus = 0;
  CuspSet cusps;
  std::vector<unsigned> cusp_stab_orders;  // parallel to cusps.reps
  std::vector<EllipticPoint> elliptic_points;
  Parity parity;
};

enum class Preset { GL2A_2, Gamma0T_2 };

inline constexpr std::size_t kDefaultWorkBound = 20'000'000;

// All (u, v) in (A/N)^2 with gcd(u, v, N) = 1. Throws std::invalid_argument
// for constant N.
std::vector<ResidueVec> primitive_vectors(const PolyA& N, std::size_t work_bound = kDefaultWorkBound);

// Orbits of primitive vectors under the image of G mod N together with the
// scalars F_q^x. Full has the single cusp (1, 0).
CuspSet cusps(const GroupSpec& G, const FqPtr& F, std::size_t work_bound = kDefaultWorkBound);

// Exhaustive search over the parameter box of polynomials of degree
// <= deg_bound. Output is sorted by matrix entries.
std::vector<EllipticWitness> elliptic_search(const GroupSpec& G, const FqPtr& F,
                                             unsigned deg_bound,
                                             std::size_t work_bound = kDefaultWorkBound);

// Groups witnesses by their fixed-point quadratic (one elliptic point each).
std::vector<std::vector<EllipticWitness>> group_by_quadratic(
    const std::vector<EllipticWitness>& witnesses);

Parity parity(const GroupSpec& G, const FqPtr& F, unsigned deg_bound,
              std::size_t work_bound = kDefaultWorkBound);

// [G_e : (G_2)_e]; throws DomainViolation for an undecided parity.
unsigned stabilizer_index(const Parity& p);

// Order of the diagonal torus of G modulo scalars, i.e. the tame part of a
// cusp stabilizer.
unsigned cusp_stabilizer_order(const GroupSpec& G, const Fq& F);

Preset parse_preset(std::string_view name);
std::string to_string(Preset p);

CurveInvariants assemble_invariants(Preset preset, const FqPtr& F);

}  // namespace drinfeld
