#include "drinfeld/curveinv.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "drinfeld/errors.hpp"
#include "drinfeld/laurent.hpp"

namespace drinfeld {

namespace {

// A/N with residues indexed by their base-q coefficient code; addition and
// multiplication are tabulated.
class ResidueRing {
 public:
  ResidueRing(const PolyA& N, std::size_t work_bound) : N_(N), F_(N.field()) {
    if (N.degree() < 1) throw std::invalid_argument("level must be non-constant");
    size_ = 1;
    for (int i = 0; i < N.degree(); ++i) {
      size_ *= F_->q();
      if (size_ * size_ > work_bound) {
        throw WorkBoundExceeded("residue ring A/N too large for the work bound");
      }
    }
    elems_ = polys_up_to_degree(F_, N.degree() - 1);
    add_.resize(size_ * size_);
    mul_.resize(size_ * size_);
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) {
        add_[i * size_ + j] = code(elems_[i] + elems_[j]);
        mul_[i * size_ + j] = code(elems_[i] * elems_[j]);
      }
    }
  }

  std::size_t size() const { return size_; }
  const PolyA& poly(std::size_t c) const { return elems_[c]; }
  std::size_t code(const PolyA& x) const {
    const PolyA r = x % N_;
    std::size_t c = 0;
    for (int i = N_.degree() - 1; i >= 0; --i) c = c * F_->q() + r.coeff(i).code;
    return c;
  }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size_ + b]; }
  bool is_unit(std::size_t a) const { return gcd(elems_[a], N_).degree() == 0; }

 private:
  PolyA N_;
  FqPtr F_;
  std::size_t size_ = 0;
  std::vector<PolyA> elems_;
  std::vector<std::size_t> add_;
  std::vector<std::size_t> mul_;
};

struct CodeMat {
  std::size_t a, b, c, d;
};

std::vector<CodeMat> image_generators(const GroupSpec& G, const Fq& F, const ResidueRing& R) {
  const std::size_t zero = 0;
  const std::size_t one = 1;
  std::vector<CodeMat> gens;
  if (G.family == Family::GammaN) return gens;
  const unsigned n = det_image_order(G, F);
  const FqElem delta = F.exp((F.q() - 1) / n);
  gens.push_back({one, zero, zero, R.code(PolyA::constant(G.level->field(), delta))});
  const int deg = G.level->degree();
  for (int i = 0; i < deg; ++i) {
    for (std::uint32_t j = 0; j < F.e(); ++j) {
      std::vector<std::uint32_t> coords(F.e(), 0);
      coords[j] = 1;
      const PolyA shift = PolyA::monomial(G.level->field(), F.from_coords(coords), i);
      gens.push_back({one, R.code(shift), zero, one});
    }
  }
  if (G.family == Family::Gamma0) {
    for (std::size_t u = 1; u < R.size(); ++u) {
      if (!R.is_unit(u)) continue;
      for (std::size_t w = 1; w < R.size(); ++w) {
        if (R.mul(u, w) == one) {
          gens.push_back({u, zero, zero, w});
          break;
        }
      }
    }
  }
  return gens;
}

}  // namespace

std::vector<ResidueVec> primitive_vectors(const PolyA& N, std::size_t work_bound) {
  const ResidueRing R(N, work_bound);
  std::vector<ResidueVec> out;
  for (std::size_t u = 0; u < R.size(); ++u) {
    for (std::size_t v = 0; v < R.size(); ++v) {
      if (gcd(gcd(R.poly(u), R.poly(v)), N).degree() == 0) {
        out.push_back({R.poly(u), R.poly(v)});
      }
    }
  }
  return out;
}

CuspSet cusps(const GroupSpec& G, const FqPtr& F, std::size_t work_bound) {
  validate(G, *F);
  CuspSet out;
  if (G.family == Family::Full) {
    out.reps.push_back({PolyA::constant(F, F->one()), PolyA::zero(F)});
    out.orbit_sizes.push_back(1);
    return out;
  }
  const ResidueRing R(*G.level, work_bound);
  const std::size_t S = R.size();
  const auto gens = image_generators(G, *F, R);
  const std::size_t scalar = R.code(PolyA::constant(F, F->generator()));

  std::vector<char> primitive(S * S, 0);
  for (std::size_t u = 0; u < S; ++u) {
    for (std::size_t v = 0; v < S; ++v) {
      primitive[u * S + v] = gcd(gcd(R.poly(u), R.poly(v)), *G.level).degree() == 0;
    }
  }
  std::vector<char> seen(S * S, 0);
  for (std::size_t start = 0; start < S * S; ++start) {
    if (!primitive[start] || seen[start]) continue;
    std::size_t size = 0;
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    auto visit = [&](std::size_t u, std::size_t v) {
      const std::size_t idx = u * S + v;
      if (!seen[idx]) {
        seen[idx] = 1;
        queue.push_back(idx);
      }
    };
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      ++size;
      const std::size_t u = cur / S;
      const std::size_t v = cur % S;
      for (const auto& g : gens) {
        visit(R.add(R.mul(g.a, u), R.mul(g.b, v)), R.add(R.mul(g.c, u), R.mul(g.d, v)));
      }
      visit(R.mul(scalar, u), R.mul(scalar, v));
    }
    out.reps.push_back({R.poly(start / S), R.poly(start % S)});
    out.orbit_sizes.push_back(size);
  }
  return out;
}

std::vector<EllipticWitness> elliptic_search(const GroupSpec& G, const FqPtr& F,
                                             unsigned deg_bound, std::size_t work_bound) {
  validate(G, *F);
  if (G.family == Family::GammaN) {
    throw std::invalid_argument("elliptic_search supports full, gamma0 and gamma1 only");
  }
  const PolyA one = PolyA::constant(F, F->one());
  std::vector<PolyA> upper_left_offsets;  // r in a*N + r
  if (G.family == Family::Gamma1) {
    upper_left_offsets.push_back(one);
  } else if (G.family == Family::Gamma0) {
    for (auto& r : polys_up_to_degree(F, G.level->degree() - 1)) {
      if (!r.is_zero()) upper_left_offsets.push_back(r);
    }
  }
  const double box = std::pow(static_cast<double>(F->q()), static_cast<double>(deg_bound) + 1);
  const double work = box * box * box * box *
                      static_cast<double>(std::max<std::size_t>(1, upper_left_offsets.size()));
  if (work > static_cast<double>(work_bound)) {
    std::ostringstream msg;
    msg << "elliptic_search: " << std::setprecision(3) << work
        << " candidate matrices exceed the work bound of " << work_bound;
    throw WorkBoundExceeded(msg.str());
  }
  const auto params = polys_up_to_degree(F, static_cast<int>(deg_bound));

  std::vector<EllipticWitness> out;
  auto consider = [&](Mat2 gamma) {
    if (gamma.c.is_zero()) return;
    if (!member(gamma, G)) return;
    RatK qb(gamma.d - gamma.a, gamma.c);
    RatK qc(-gamma.b, gamma.c);
    if (!quad_irreducible_kinf(qb, qc)) return;
    const FqElem det = gamma.det().leading();
    out.push_back({std::move(gamma), std::move(qb), std::move(qc), det, F->is_square(det)});
  };
  for (const auto& a : params) {
    for (const auto& b : params) {
      for (const auto& c : params) {
        if (c.is_zero()) continue;
        for (const auto& d : params) {
          if (G.family == Family::Full) {
            consider({a, b, c, d});
          } else {
            const PolyA& N = *G.level;
            for (const auto& r : upper_left_offsets) consider({a * N + r, b, c * N, d});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const EllipticWitness& x, const EllipticWitness& y) { return x.gamma < y.gamma; });
  return out;
}

std::vector<std::vector<EllipticWitness>> group_by_quadratic(
    const std::vector<EllipticWitness>& witnesses) {
  std::vector<std::vector<EllipticWitness>> groups;
  for (const auto& w : witnesses) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) {
      return g.front().quad_b == w.quad_b && g.front().quad_c == w.quad_c;
    });
    if (it == groups.end()) {
      groups.push_back({w});
    } else {
      it->push_back(w);
    }
  }
  return groups;
}

std::string Parity::to_string() const {
  switch (kind) {
    case Kind::Square: return "Square";
    case Kind::NonSquare: return "NonSquare";
    case Kind::NoWitnessFound: return "undecided(" + std::to_string(bound) + ")";
  }
  return "?";
}

Parity parity(const GroupSpec& G, const FqPtr& F, unsigned deg_bound, std::size_t work_bound) {
  const auto witnesses = elliptic_search(G, F, deg_bound, work_bound);
  Parity p;
  p.bound = deg_bound;
  if (witnesses.empty()) return p;
  const auto nonsquare = std::find_if(witnesses.begin(), witnesses.end(),
                                      [](const EllipticWitness& w) { return !w.det_is_square; });
  if (nonsquare != witnesses.end()) {
    p.kind = Parity::Kind::NonSquare;
    p.witness = *nonsquare;
  } else {
    p.kind = Parity::Kind::Square;
    p.witness = witnesses.front();
  }
  return p;
}

unsigned stabilizer_index(const Parity& p) {
  switch (p.kind) {
    case Parity::Kind::Square: return 1;
    case Parity::Kind::NonSquare: return 2;
    case Parity::Kind::NoWitnessFound: break;
  }
  throw DomainViolation("stabilizer_index: parity undecided up to degree bound " +
                        std::to_string(p.bound));
}

unsigned cusp_stabilizer_order(const GroupSpec& G, const Fq& F) {
  if (G.family == Family::GammaN) return 1;
  return det_image_order(G, F);
}

Preset parse_preset(std::string_view name) {
  if (name == "GL2A_2") return Preset::GL2A_2;
  if (name == "Gamma0T_2") return Preset::Gamma0T_2;
  throw std::invalid_argument("unknown preset '" + std::string(name) +
                              "' (expected GL2A_2 or Gamma0T_2)");
}

std::string to_string(Preset p) { return p == Preset::GL2A_2 ? "GL2A_2" : "Gamma0T_2"; }

CurveInvariants assemble_invariants(Preset preset, const FqPtr& F) {
  const DetRestriction squares{DetRestriction::Kind::Squares};
  CurveInvariants inv;
  inv.q = F->q();
  inv.genus = 0;
  const GroupSpec parent = preset == Preset::GL2A_2
                               ? GroupSpec::full()
                               : GroupSpec::of(Family::Gamma0, PolyA::T(F));
  inv.group = parent.with_det(squares);
  inv.cusps = cusps(inv.group, F);
  inv.cusp_stab_orders.assign(inv.cusps.count(), cusp_stabilizer_order(inv.group, *F));
  inv.parity = parity(parent, F, 0);
  const auto witnesses = elliptic_search(parent, F, 0);
  if (preset == Preset::GL2A_2) {
    // GL_2(A) has a single elliptic point up to conjugacy; its stabilizer
    // modulo scalars is F_{q^2}^x / F_q^x.
    const unsigned order = F->q() + 1;
    inv.elliptic_points.push_back(
        {witnesses.front(), order, order / stabilizer_index(inv.parity)});
  } else if (!witnesses.empty()) {
    throw std::logic_error("Gamma0(T) unexpectedly has elliptic witnesses");
  }
  return inv;
}

}  // namespace drinfeld
