#include <gtest/gtest.h>

#include <random>

#include "kleinian/series.hpp"

using namespace kleinian;
using namespace kleinian::series;

namespace {

RatFun2 frac(LaurentPoly2 num, std::vector<Monomial2> den) { return RatFun2(std::move(num), den); }
LaurentPoly2 mono(long r, long s, Rational c = 1) { return LaurentPoly2::monomial({r, s}, c); }

// Independent oracle: multiply the truncated expansion back by the denominator
// product and compare with the numerator on the terms that are fully determined.
int expect_expansion_inverts(const RatFun2& f, LinearForm form, long level) {
  const auto e = expand(f, form, level);
  LaurentPoly2 series;
  for (const auto& [m, c] : e.coefficients) series.add_term(m, c);
  const auto prod = series * f.denominator_product();
  // Terms of prod with form value <= level + min(form over the denominator support) are exact.
  long min_form = 0;
  const auto den = f.denominator_product();
  for (const auto& [m, c] : den.terms()) min_form = std::min(min_form, form(m));
  std::map<Monomial2, Rational> keys;
  for (const auto& [m, c] : prod.terms()) keys[m] += 0;
  for (const auto& [m, c] : f.numerator().terms()) keys[m] += 0;
  int compared = 0;
  for (const auto& [m, unused] : keys) {
    if (form(m) > level + min_form) continue;
    EXPECT_EQ(prod.coefficient(m), f.numerator().coefficient(m)) << "q^" << m.r << " t^" << m.s;
    ++compared;
  }
  return compared;
}

}  // namespace

TEST(Series, GeometricSeries) {
  const auto e = expand(frac(mono(0, 0), {{1, 0}}), {1, 0}, 3);
  ASSERT_EQ(e.coefficients.size(), 4u);
  for (long r = 0; r <= 3; ++r) EXPECT_EQ(e.coefficient({r, 0}), 1);
}

TEST(Series, FlipOfNegativeFactor) {
  // 1/(1 - t q^{-1}) along (3,1): form(-1,1) = -2 < 0, so the expansion is -q t^{-1} - q^2 t^{-2} - ...
  const auto f = frac(mono(0, 0), {{-1, 1}});
  const auto flipped = f.flipped({-1, 1});
  EXPECT_TRUE(ratfun_equal(f, flipped));
  EXPECT_EQ(flipped.denominator_factors(), (std::vector<Monomial2>{{1, -1}}));
  EXPECT_EQ(flipped.numerator(), mono(1, -1, -1));
  const auto e = expand(f, {3, 1}, 6);
  EXPECT_EQ(e.coefficient({1, -1}), -1);
  EXPECT_EQ(e.coefficient({2, -2}), -1);
  EXPECT_EQ(e.coefficient({3, -3}), -1);
  EXPECT_EQ(e.coefficient({0, 0}), 0);
  EXPECT_EQ(e.coefficients.size(), 3u);
}

TEST(Series, ZeroFormValueIsRejected) {
  EXPECT_THROW(expand(frac(mono(0, 0), {{1, -1}}), {1, 1}, 5), std::domain_error);
  EXPECT_THROW(frac(mono(0, 0), {{0, 0}}), std::invalid_argument);
}

TEST(Series, FlipIsAnInvolution) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-3, 3);
  for (int t = 0; t < 50; ++t) {
    Monomial2 m{e(rng), e(rng)};
    if (m.is_one()) continue;
    LaurentPoly2 num = mono(e(rng), e(rng), 2) + mono(e(rng), e(rng), Rational(-1, 3));
    const auto f = frac(num, {m, {1, 2}});
    const auto twice = f.flipped(m).flipped(-m);
    EXPECT_EQ(twice.numerator(), f.numerator());
    EXPECT_EQ(twice.denominator(), f.denominator());
  }
}

TEST(Series, RatFunEquality) {
  const auto f = frac(mono(0, 0), {{1, 0}});
  EXPECT_TRUE(ratfun_equal(f, f));
  EXPECT_TRUE(ratfun_equal(f, frac(mono(0, 0) + mono(1, 0), {{2, 0}})));
  EXPECT_FALSE(ratfun_equal(f, frac(mono(0, 0), {{2, 0}})));
}

TEST(Series, SumOverCommonDenominator) {
  // 1/(1-q) + 1/(1-t) = (2 - q - t)/((1-q)(1-t))
  const auto s = frac(mono(0, 0), {{1, 0}}) + frac(mono(0, 0), {{0, 1}});
  EXPECT_TRUE(ratfun_equal(s, frac(mono(0, 0, 2) - mono(1, 0) - mono(0, 1), {{1, 0}, {0, 1}})));
  EXPECT_EQ(s.denominator_factors().size(), 2u);
}

TEST(Series, TimesOneMinusCancels) {
  const auto f = frac(mono(0, 0), {{1, 0}, {0, 2}});
  const auto g = f.times_one_minus({0, 2});
  EXPECT_EQ(g.denominator_factors(), (std::vector<Monomial2>{{1, 0}}));
  EXPECT_TRUE(ratfun_equal(g, frac(mono(0, 0), {{1, 0}})));
}

TEST(Series, ExpansionCorrectnessBound) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> e(-3, 3);
  int compared = 0;
  for (int t = 0; t < 30; ++t) {
    std::vector<Monomial2> den;
    for (int j = 0; j < 3; ++j) {
      Monomial2 m{e(rng), e(rng)};
      if (3 * m.r + m.s != 0) den.push_back(m);
    }
    LaurentPoly2 num = mono(e(rng), e(rng)) + mono(e(rng), e(rng), Rational(3, 2));
    compared += expect_expansion_inverts(frac(num, den), {3, 1}, 8);
  }
  EXPECT_GT(compared, 30);
}

TEST(Series, OneVariableExpansion) {
  const long f[] = {2};
  const OneVarSeries g(LaurentPoly1::monomial(0, 2), f);
  const auto e = g.expand(6);
  EXPECT_EQ(e.at(0), 2);
  EXPECT_EQ(e.count(1) ? e.at(1) : Rational(0), 0);
  EXPECT_EQ(e.at(6), 2);
  // 1/(1 - s^{-1}) = -s/(1 - s) = -s - s^2 - ...
  const long neg[] = {-1};
  const auto h = OneVarSeries(LaurentPoly1::monomial(0), neg).expand(3);
  EXPECT_EQ(h.at(1), -1);
  EXPECT_EQ(h.at(3), -1);
  EXPECT_EQ(h.count(0) ? h.at(0) : Rational(0), 0);
}

TEST(Series, ObarClosedForms) {
  // b = 0: n/(1 - s^n); the s^0 coefficient is n.
  for (int n = 2; n <= 5; ++n) {
    const std::vector<long> b(n - 1, 0);
    const auto o = obar_series(n, b);
    EXPECT_EQ(o.expand(0).at(0), n);
  }
  // n = 3, b = (1,0): inner sums give exponents 0, 0, 3, so (2 + s^3)/(1 - s^3).
  {
    const std::vector<long> b{1, 0};
    LaurentPoly1 num = LaurentPoly1::monomial(0, 2) + LaurentPoly1::monomial(3);
    const long f[] = {3};
    EXPECT_TRUE(ratfun_equal(obar_series(3, b), OneVarSeries(num, f)));
  }
  // n = 2, b = (1): (1 + s^2)/(1 - s^2).
  {
    const std::vector<long> b{1};
    LaurentPoly1 num = LaurentPoly1::monomial(0) + LaurentPoly1::monomial(2);
    const long f[] = {2};
    EXPECT_TRUE(ratfun_equal(obar_series(2, b), OneVarSeries(num, f)));
  }
  // n = 3, b = (0,1): s^3 + s^3 + 1 over (1 - s^3).
  {
    const std::vector<long> b{0, 1};
    LaurentPoly1 num = LaurentPoly1::monomial(0) + LaurentPoly1::monomial(3, 2);
    const long f[] = {3};
    EXPECT_TRUE(ratfun_equal(obar_series(3, b), OneVarSeries(num, f)));
  }
}

TEST(Series, AntidiagonalSpecialization) {
  // q^2 t / (1 - q t^{-1}) -> s / (1 - s^2)
  const auto f = frac(mono(2, 1), {{1, -1}});
  const auto g = specialize_antidiagonal(f);
  const long den[] = {2};
  EXPECT_TRUE(ratfun_equal(g, OneVarSeries(LaurentPoly1::monomial(1), den)));
  EXPECT_THROW(specialize_antidiagonal(frac(mono(0, 0), {{1, 1}})), std::domain_error);
}
