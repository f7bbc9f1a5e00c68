#include <gtest/gtest.h>

#include <set>

#include "drinfeld/errors.hpp"
#include "drinfeld/fq.hpp"
#include "drinfeld/laurent.hpp"
#include "drinfeld/parse.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/ratk.hpp"
#include "oracles.hpp"

using namespace drinfeld;

namespace {

PolyA P(const FqPtr& F, const char* s) { return parse_poly(s, F); }

std::vector<std::uint32_t> codes(const LaurentKInf& f) {
  std::vector<std::uint32_t> r;
  for (auto x : f.coeffs()) r.push_back(x.code);
  return r;
}

}  // namespace

class FieldAxioms : public ::testing::TestWithParam<unsigned> {};

TEST_P(FieldAxioms, Exhaustive) {
  const auto F = Fq::make(GetParam());
  const auto els = F->elements();
  ASSERT_EQ(els.size(), GetParam());
  for (auto a : els) {
    EXPECT_EQ(F->pow(a, F->q()), a);
    EXPECT_EQ(F->add(a, F->neg(a)), F->zero());
    if (!a.is_zero()) EXPECT_EQ(F->mul(a, F->inv(a)), F->one());
    for (auto b : els) {
      EXPECT_EQ(F->add(a, b), F->add(b, a));
      EXPECT_EQ(F->mul(a, b), F->mul(b, a));
      for (auto c : els) {
        EXPECT_EQ(F->add(F->add(a, b), c), F->add(a, F->add(b, c)));
        EXPECT_EQ(F->mul(F->mul(a, b), c), F->mul(a, F->mul(b, c)));
        EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
      }
    }
  }
}

TEST_P(FieldAxioms, GeneratorHasFullOrder) {
  const auto F = Fq::make(GetParam());
  const auto g = F->generator();
  FqElem x = F->one();
  for (unsigned k = 1; k < F->q() - 1; ++k) {
    x = F->mul(x, g);
    EXPECT_NE(x, F->one()) << "order " << k;
  }
  EXPECT_EQ(F->mul(x, g), F->one());
}

TEST_P(FieldAxioms, SquaresMatchExhaustiveSquaring) {
  const auto F = Fq::make(GetParam());
  std::set<FqElem> squares;
  for (auto y : F->units()) squares.insert(F->mul(y, y));
  EXPECT_EQ(squares.size(), (F->q() - 1) / 2);
  for (auto x : F->units()) {
    EXPECT_EQ(is_square_fq(*F, x), squares.count(x) == 1);
    if (squares.count(x)) EXPECT_EQ(F->mul(F->sqrt(x), F->sqrt(x)), x);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms, ::testing::Values(3u, 5u, 7u, 9u));

TEST(Fq, ModulusIsIrreducible) {
  for (unsigned q : {9u, 25u, 27u}) {
    const auto F = Fq::make(q);
    const auto& m = F->modulus();
    ASSERT_EQ(m.size(), F->e() + 1);
    EXPECT_EQ(m.back(), 1u);
    // Degree 2 and 3: irreducible iff no root in F_p.
    for (unsigned r = 0; r < F->p(); ++r) {
      unsigned long v = 0;
      for (std::size_t i = m.size(); i-- > 0;) v = (v * r + m[i]) % F->p();
      EXPECT_NE(v, 0u) << "q=" << q << " root " << r;
    }
  }
}

TEST(Fq, RejectsEvenOrNonPrimePower) {
  EXPECT_THROW(Fq::make(2), std::invalid_argument);
  EXPECT_THROW(Fq::make(4), std::invalid_argument);
  EXPECT_THROW(Fq::make(15), std::invalid_argument);
  EXPECT_THROW(Fq::make(1), std::invalid_argument);
}

TEST(Fq, GeneratorsForPrimeFields) {
  EXPECT_EQ(Fq::make(7)->generator().code, 3u);
  EXPECT_EQ(Fq::make(5)->generator().code, 2u);
}

TEST(Fq, SquareExamples) {
  const auto F = Fq::make(7);
  EXPECT_TRUE(is_square_fq(*F, F->from_int(2)));
  EXPECT_FALSE(is_square_fq(*F, F->from_int(3)));
  EXPECT_TRUE(is_square_fq(*F, F->one()));
  EXPECT_THROW(is_square_fq(*F, F->zero()), std::invalid_argument);
}

TEST(Parse, Examples) {
  const auto F7 = Fq::make(7);
  const auto p = P(F7, "4*T+3");
  ASSERT_EQ(p.coeffs().size(), 2u);
  EXPECT_EQ(p.coeff(0).code, 3u);
  EXPECT_EQ(p.coeff(1).code, 4u);
  EXPECT_TRUE(P(F7, "0").is_zero());
  EXPECT_TRUE(P(F7, "0").coeffs().empty());

  const auto F3 = Fq::make(3);
  const auto t = P(F3, "T^2+1");
  ASSERT_EQ(t.coeffs().size(), 3u);
  EXPECT_EQ(t.coeff(0).code, 1u);
  EXPECT_EQ(t.coeff(1).code, 0u);
  EXPECT_EQ(t.coeff(2).code, 1u);
}

TEST(Parse, Errors) {
  const auto F7 = Fq::make(7);
  EXPECT_THROW(P(F7, "4*T+"), ParseError);
  EXPECT_THROW(P(F7, "9*T"), ParseError);
  EXPECT_THROW(P(F7, "4*X"), ParseError);
  EXPECT_THROW(P(F7, "a^2"), ParseError);
  try {
    P(F7, "T+x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}

TEST(Parse, ExtensionFieldCoefficients) {
  const auto F9 = Fq::make(9);
  const auto p = P(F9, "a^3*T^2+a*T-1");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeff(2), F9->exp(3));
  EXPECT_EQ(p.coeff(1), F9->generator());
  EXPECT_EQ(p.coeff(0), F9->neg(F9->one()));
}

TEST(Parse, RoundTripsRandomPolynomials) {
  oracle::Rng rng(11);
  for (unsigned q : {3u, 7u, 9u, 25u}) {
    const auto F = Fq::make(q);
    for (int i = 0; i < 200; ++i) {
      const auto a = oracle::random_poly(F, 6, rng);
      const auto text = a.to_string();
      EXPECT_EQ(parse_poly(text, F), a) << text;
      EXPECT_EQ(parse_poly(text, F).to_string(), text);
    }
  }
}

TEST(PolyA, DegreeIsAdditiveAndDivisionExact) {
  oracle::Rng rng(12);
  for (unsigned q : {3u, 5u, 9u}) {
    const auto F = Fq::make(q);
    for (int i = 0; i < 200; ++i) {
      const auto a = oracle::random_nonzero_poly(F, 5, rng);
      const auto b = oracle::random_nonzero_poly(F, 4, rng);
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
      const auto [qt, r] = a.divmod(b);
      EXPECT_EQ(qt * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
      const auto g = gcd(a, b);
      EXPECT_TRUE((a % g).is_zero());
      EXPECT_TRUE((b % g).is_zero());
      EXPECT_EQ(g.leading(), F->one());
    }
  }
}

TEST(RatK, CanonicalForm) {
  const auto F = Fq::make(7);
  const RatK x(P(F, "T^2+T"), P(F, "2*T"));
  EXPECT_EQ(x.den(), P(F, "1"));
  EXPECT_EQ(x.num(), P(F, "4*T+4"));
  EXPECT_THROW(RatK(P(F, "1"), P(F, "0")), std::domain_error);
  const RatK y(P(F, "3"), P(F, "5*T+2"));
  EXPECT_EQ(y.den(), P(F, "T+6"));
}

TEST(Laurent, Examples) {
  const auto F7 = Fq::make(7);
  const auto t = laurent_expand(RatK(P(F7, "T")), 8);
  EXPECT_EQ(t.valuation(), -1);
  EXPECT_EQ(codes(t)[0], 1u);
  for (std::size_t i = 1; i < t.prec(); ++i) EXPECT_EQ(codes(t)[i], 0u);

  const auto F3 = Fq::make(3);
  const auto x = laurent_expand(RatK(P(F3, "1"), P(F3, "T+1")), 10);
  EXPECT_EQ(x.valuation(), 1);
  for (std::size_t i = 0; i < x.prec(); ++i) EXPECT_EQ(codes(x)[i], i % 2 == 0 ? 1u : 2u);
  // Multiply back by T+1.
  const auto back = x * laurent_expand(RatK(P(F3, "T+1")), 10);
  EXPECT_TRUE(back.agrees_with(laurent_expand(RatK::one(F3), 10)));

  const auto y = laurent_expand(RatK(P(F7, "T^2+T"), P(F7, "T")), 8);
  EXPECT_TRUE(y.agrees_with(laurent_expand(RatK(P(F7, "T+1")), 8)));
  EXPECT_EQ(y.valuation(), -1);

  EXPECT_TRUE(laurent_expand(RatK::zero(F7)).is_zero());
  EXPECT_EQ(laurent_expand(RatK::zero(F7)).valuation(), LaurentKInf::kInfiniteValuation);
}

TEST(Laurent, ValuationIsMinusDegree) {
  for (unsigned q : {3u, 5u, 9u}) {
    const auto F = Fq::make(q);
    oracle::Rng rng(q);
    for (int d = 0; d <= 10; ++d) {
      for (int i = 0; i < 10; ++i) {
        auto a = oracle::random_poly(F, d, rng);
        if (a.degree() != d) a = a + PolyA::monomial(F, F->one(), d);
        if (a.degree() != d) continue;
        EXPECT_EQ(laurent_expand(RatK(a)).valuation(), -d);
      }
    }
  }
}

TEST(Laurent, ExpansionIsMultiplicative) {
  oracle::Rng rng(13);
  for (unsigned q : {3u, 5u, 7u, 9u}) {
    const auto F = Fq::make(q);
    for (int i = 0; i < 150; ++i) {
      const auto x = oracle::random_nonzero_ratk(F, 3, rng);
      const auto y = oracle::random_nonzero_ratk(F, 3, rng);
      EXPECT_TRUE(laurent_expand(x * y, 24).agrees_with(laurent_expand(x, 24) * laurent_expand(y, 24)));
      // Expansion times the denominator recovers the numerator.
      EXPECT_TRUE((laurent_expand(x, 24) * laurent_expand(RatK(x.den()), 24))
                      .agrees_with(laurent_expand(RatK(x.num()), 24)));
    }
  }
}

TEST(SquareKInf, Examples) {
  const auto F7 = Fq::make(7);
  EXPECT_TRUE(is_square_kinf(laurent_expand(RatK(P(F7, "T^2")))));
  EXPECT_FALSE(is_square_kinf(laurent_expand(RatK(P(F7, "T")))));
  EXPECT_THROW(is_square_kinf(LaurentKInf::zero(F7)), std::invalid_argument);
  EXPECT_THROW(is_square_kinf(LaurentKInf(F7, 0, {F7->one()})), PrecisionError);

  // Discriminant of z^2 + ((2T+4)/(T+6)) z + 4/(T+6): 4(T^2+1)/(T+6)^2.
  const RatK b(P(F7, "2*T+4"), P(F7, "T+6"));
  const RatK c(P(F7, "4"), P(F7, "T+6"));
  const RatK disc = b * b - RatK(P(F7, "4")) * c;
  EXPECT_EQ(disc, RatK(P(F7, "4*T^2+4"), P(F7, "T^2+5*T+1")));
  // Even valuation with leading coefficient 4 = 2^2: a square in K_inf.
  const auto e = laurent_expand(disc);
  EXPECT_EQ(e.valuation(), 0);
  EXPECT_EQ(e.leading().code, 4u);
  EXPECT_TRUE(is_square_kinf(e));
  const auto r = sqrt_kinf(e);
  EXPECT_TRUE((r * r).agrees_with(e));
}

TEST(SquareKInf, RandomSquaresAndNonSquares) {
  oracle::Rng rng(14);
  for (unsigned q : {3u, 5u, 7u, 9u}) {
    const auto F = Fq::make(q);
    for (int i = 0; i < 250; ++i) {
      const auto x = oracle::random_series(F, 6, 32, rng);
      EXPECT_TRUE(is_square_kinf(x * x));
      const bool crit = x.valuation() % 2 == 0 && is_square_fq(*F, x.leading());
      EXPECT_EQ(is_square_kinf(x), crit);
    }
  }
}

TEST(QuadIrreducible, Examples) {
  const auto F7 = Fq::make(7);
  const RatK b(P(F7, "2*T+4"), P(F7, "T+6"));
  const RatK c(P(F7, "4"), P(F7, "T+6"));
  // Irreducible over K but split over K_inf.
  EXPECT_FALSE(quad_irreducible_kinf(b, c));
  EXPECT_TRUE(oracle::quadratic_has_root(b, c, 7, 30));

  EXPECT_FALSE(quad_irreducible_kinf(RatK::zero(F7), RatK(P(F7, "6"))));
  EXPECT_TRUE(quad_irreducible_kinf(RatK::zero(F7), RatK(-P(F7, "T"))));
  // z^2 - 3: 3 is not a square mod 7.
  EXPECT_TRUE(quad_irreducible_kinf(RatK::zero(F7), RatK(P(F7, "4"))));
}

TEST(QuadIrreducible, AgreesWithRootSearch) {
  oracle::Rng rng(15);
  for (unsigned q : {3u, 5u, 7u}) {
    const auto F = Fq::make(q);
    int irreducible = 0;
    for (int i = 0; i < 150; ++i) {
      const auto b = oracle::random_ratk(F, 2, rng);
      const auto c = oracle::random_ratk(F, 2, rng);
      const bool irr = quad_irreducible_kinf(b, c, 30);
      irreducible += irr;
      EXPECT_EQ(irr, !oracle::quadratic_has_root(b, c, q, 30))
          << "q=" << q << " b=" << b.to_string() << " c=" << c.to_string();
    }
    EXPECT_GT(irreducible, 0);
    EXPECT_LT(irreducible, 150);
  }
}
