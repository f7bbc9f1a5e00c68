#include "drinfeld/congruence.hpp"

#include <stdexcept>
#include <string>

#include "drinfeld/errors.hpp"
#include "drinfeld/parse.hpp"

namespace drinfeld {

Mat2 Mat2::identity(const FqPtr& F) { return diagonal(F, F->one(), F->one()); }

Mat2 Mat2::diagonal(const FqPtr& F, FqElem x, FqElem y) {
  return {PolyA::constant(F, x), PolyA::zero(F), PolyA::zero(F), PolyA::constant(F, y)};
}

bool Mat2::has_unit_det() const {
  const PolyA D = det();
  return D.degree() == 0;
}

bool Mat2::is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }

Mat2 Mat2::inverse() const {
  if (!has_unit_det()) throw std::domain_error("matrix is not in GL_2(A)");
  const FqElem inv = field()->inv(det().leading());
  return {d.scaled(inv), (-b).scaled(inv), (-c).scaled(inv), a.scaled(inv)};
}

std::string Mat2::to_string() const {
  return "(" + a.to_string() + ", " + b.to_string() + "; " + c.to_string() + ", " +
         d.to_string() + ")";
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

bool operator<(const Mat2& x, const Mat2& y) {
  if (!(x.a == y.a)) return x.a < y.a;
  if (!(x.b == y.b)) return x.b < y.b;
  if (!(x.c == y.c)) return x.c < y.c;
  return x.d < y.d;
}

GroupSpec GroupSpec::of(Family family, PolyA level, DetRestriction det) {
  GroupSpec g;
  g.family = family;
  if (family != Family::Full) g.level = std::move(level);
  g.det = det;
  return g;
}

std::string GroupSpec::to_string() const {
  std::string out;
  switch (family) {
    case Family::Full: out = "full"; break;
    case Family::GammaN: out = "gammaN:"; break;
    case Family::Gamma1: out = "gamma1:"; break;
    case Family::Gamma0: out = "gamma0:"; break;
  }
  if (level) out += level->to_string();
  switch (det.kind) {
    case DetRestriction::Kind::All: break;
    case DetRestriction::Kind::Squares: out += "!sq"; break;
    case DetRestriction::Kind::One: out += "!one"; break;
    case DetRestriction::Kind::IndexM: out += "!idx" + std::to_string(det.m); break;
  }
  return out;
}

GroupSpec parse_group(std::string_view src, const FqPtr& F) {
  GroupSpec g;
  std::string_view body = src;
  const auto bang = src.find('!');
  if (bang != std::string_view::npos) {
    body = src.substr(0, bang);
    const std::string_view suffix = src.substr(bang + 1);
    if (suffix == "sq") {
      g.det.kind = DetRestriction::Kind::Squares;
    } else if (suffix == "one") {
      g.det.kind = DetRestriction::Kind::One;
    } else if (suffix.starts_with("idx") && suffix.size() > 3) {
      unsigned m = 0;
      for (std::size_t i = 3; i < suffix.size(); ++i) {
        const char ch = suffix[i];
        if (ch < '0' || ch > '9') throw ParseError("bad index in '!idx<m>'", bang + 1 + i);
        m = m * 10 + static_cast<unsigned>(ch - '0');
        if (m > 1'000'000) throw ParseError("index too large", bang + 1 + i);
      }
      g.det = {DetRestriction::Kind::IndexM, m};
    } else {
      throw ParseError("unknown determinant restriction '" + std::string(suffix) + "'", bang + 1);
    }
  }
  const auto colon = body.find(':');
  const std::string_view name = body.substr(0, colon);
  if (name == "full") {
    if (colon != std::string_view::npos) throw ParseError("'full' takes no level", colon);
    g.family = Family::Full;
  } else {
    if (name == "gamma0") {
      g.family = Family::Gamma0;
    } else if (name == "gamma1") {
      g.family = Family::Gamma1;
    } else if (name == "gammaN") {
      g.family = Family::GammaN;
    } else {
      throw ParseError("unknown group family '" + std::string(name) + "'", 0);
    }
    if (colon == std::string_view::npos) throw ParseError("missing ':<level>'", body.size());
    try {
      g.level = parse_poly(body.substr(colon + 1), F);
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad level: ") + e.what(), colon + 1 + e.position());
    }
  }
  validate(g, *F);
  return g;
}

namespace {

unsigned family_det_order(const GroupSpec& G, const Fq& F) {
  return G.family == Family::GammaN ? 1u : F.q() - 1;
}

}  // namespace

void validate(const GroupSpec& G, const Fq& F) {
  if (G.family == Family::Full) {
    if (G.level) throw std::invalid_argument("full group carries no level");
  } else {
    if (!G.level || G.level->degree() < 1) {
      throw std::invalid_argument("level must be a non-constant polynomial");
    }
  }
  if (G.det.kind == DetRestriction::Kind::IndexM) {
    const unsigned n = family_det_order(G, F);
    if (G.det.m == 0 || n % G.det.m != 0) {
      throw std::invalid_argument("index " + std::to_string(G.det.m) +
                                  " does not divide the determinant-image order " +
                                  std::to_string(n));
    }
  }
}

unsigned det_image_order(const GroupSpec& G, const Fq& F) {
  validate(G, F);
  const unsigned n = family_det_order(G, F);
  switch (G.det.kind) {
    case DetRestriction::Kind::All: return n;
    // image intersected with the squares of F_q^x
    case DetRestriction::Kind::Squares: return n % 2 == 0 ? n / 2 : n;
    case DetRestriction::Kind::One: return 1;
    case DetRestriction::Kind::IndexM: return n / G.det.m;
  }
  return n;
}

bool det_allowed(const GroupSpec& G, const Fq& F, FqElem x) {
  if (x.is_zero()) return false;
  const unsigned n = det_image_order(G, F);
  return F.pow(x, n) == F.one();
}

bool member(const Mat2& gamma, const GroupSpec& G) {
  const FqPtr& F = gamma.field();
  if (!gamma.has_unit_det()) return false;
  if (G.family != Family::Full) {
    const PolyA& N = *G.level;
    const PolyA one = PolyA::constant(F, F->one());
    auto zero_mod = [&](const PolyA& x) { return (x % N).is_zero(); };
    switch (G.family) {
      case Family::GammaN:
        if (!zero_mod(gamma.a - one) || !zero_mod(gamma.b) || !zero_mod(gamma.c) ||
            !zero_mod(gamma.d - one)) {
          return false;
        }
        break;
      case Family::Gamma1:
        if (!zero_mod(gamma.a - one) || !zero_mod(gamma.c)) return false;
        break;
      case Family::Gamma0:
        if (!zero_mod(gamma.c)) return false;
        break;
      case Family::Full: break;
    }
  }
  return det_allowed(G, *F, gamma.det().leading());
}

unsigned index_gamma2(const GroupSpec& G) {
  if (G.family == Family::GammaN) {
    throw std::invalid_argument("index_gamma2: Gamma(N) does not contain the diagonal matrices");
  }
  return 2;
}

Mat2 coset_rep_nonsquare(const FqPtr& F) {
  return Mat2::diagonal(F, F->generator(), F->one());
}

unsigned quotient_order(const GroupSpec& outer, const GroupSpec& inner, const Fq& F) {
  if (outer.family != inner.family || outer.level.has_value() != inner.level.has_value() ||
      (outer.level && !(*outer.level == *inner.level))) {
    throw std::invalid_argument("quotient_order: groups differ in family or level");
  }
  const unsigned n_out = det_image_order(outer, F);
  const unsigned n_in = det_image_order(inner, F);
  // Subgroups of the cyclic group F_q^x are nested iff their orders divide.
  if (n_out % n_in != 0) {
    throw std::invalid_argument("quotient_order: inner group is not contained in outer");
  }
  return n_out / n_in;
}

}  // namespace drinfeld
