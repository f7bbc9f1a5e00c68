#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "drinfeld/poly.hpp"

namespace drinfeld {

// 2x2 matrix over A. Elements of GL_2(A) have det in F_q^x; Mat2 itself
// does not enforce that so that intermediate products can be formed.
struct Mat2 {
  PolyA a, b, c, d;

  static Mat2 identity(const FqPtr& F);
  static Mat2 diagonal(const FqPtr& F, FqElem x, FqElem y);

  const FqPtr& field() const { return a.field(); }
  PolyA det() const { return a * d - b * c; }
  // True when det is a nonzero constant.
  bool has_unit_det() const;
  bool is_scalar() const;
  // Throws std::domain_error unless has_unit_det().
  Mat2 inverse() const;
  std::string to_string() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend bool operator<(const Mat2& x, const Mat2& y);
};

enum class Family { Full, GammaN, Gamma1, Gamma0 };

struct DetRestriction {
  enum class Kind { All, Squares, One, IndexM };
  Kind kind = Kind::All;
  unsigned m = 1;  // only for IndexM
};

// Congruence subgroup descriptor. Levels need not be monic.
struct GroupSpec {
  Family family = Family::Full;
  std::optional<PolyA> level;
  DetRestriction det;

  static GroupSpec full() { return {}; }
  static GroupSpec of(Family family, PolyA level, DetRestriction det = {});
  GroupSpec with_det(DetRestriction r) const {
    GroupSpec g = *this;
    g.det = r;
    return g;
  }
  // Text form accepted by parse_group, e.g. "gamma1:4*T+3!sq".
  std::string to_string() const;
};

// `full`, `gamma0:<poly>`, `gamma1:<poly>`, `gammaN:<poly>`, optionally
// followed by `!sq`, `!one` or `!idx<m>`. Throws ParseError or
// std::invalid_argument.
GroupSpec parse_group(std::string_view src, const FqPtr& F);

// Throws std::invalid_argument for ill-formed descriptors.
void validate(const GroupSpec& G, const Fq& F);

// Order of {det g : g in G} inside F_q^x.
unsigned det_image_order(const GroupSpec& G, const Fq& F);

// Whether x lies in the determinant image of G (the unique subgroup of
// F_q^x of order det_image_order).
bool det_allowed(const GroupSpec& G, const Fq& F, FqElem x);

bool member(const Mat2& gamma, const GroupSpec& G);

// [G : G_2] = 2 for groups containing the diagonal matrices. GammaN is rejected.
unsigned index_gamma2(const GroupSpec& G);

// (alpha 0; 0 1) with alpha the fixed generator of F_q^x.
Mat2 coset_rep_nonsquare(const FqPtr& F);

// [outer : inner] for groups of the same family and level whose inner
// determinant image is contained in the outer one.
unsigned quotient_order(const GroupSpec& outer, const GroupSpec& inner, const Fq& F);

}  // namespace drinfeld
