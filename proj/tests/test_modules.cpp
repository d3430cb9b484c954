#include <gtest/gtest.h>

#include <random>

#include "kleinian/standard_module.hpp"

using namespace kleinian;
using namespace kleinian::modules;

TEST(StandardModule, ClosedForms) {
  for (int n = 2; n <= 4; ++n) {
    const ParamVector r = ParamVector::zero(n);
    // eps_0: 1/(1 - s^n); eps_{n-1}: basis y^{1 + nm}, s/(1 - s^n); full module 1/(1 - s)
    const auto s0 = standard_series_closed_form(n, 0, true).expand(12);
    const auto s1 = standard_series_closed_form(n, n - 1, true).expand(12);
    const auto full = standard_series_closed_form(n, 0, false).expand(12);
    for (long a = 0; a <= 12; ++a) {
      auto at = [a](const std::map<long, Rational>& t) { return t.count(a) ? t.at(a) : Rational(0); };
      EXPECT_EQ(at(s0), a % n == 0 ? 1 : 0);
      EXPECT_EQ(at(s1), a % n == 1 ? 1 : 0);
      EXPECT_EQ(at(full), 1);
    }
    for (int i = 0; i < n; ++i) {
      const StandardModule m(r, i);
      EXPECT_EQ(m.series(true, 12), standard_series_closed_form(n, i, true).expand(12));
      EXPECT_EQ(m.series(false, 12), standard_series_closed_form(n, i, false).expand(12));
    }
  }
}

TEST(StandardModule, RelationsHold) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 4; ++n)
    for (int t = 0; t < 3; ++t) {
      std::vector<Rational> v;
      for (int i = 0; i < n - 1; ++i) v.push_back(random_rational(rng, 5, 3));
      const ParamVector r(n, v);
      for (int i = 0; i < n; ++i) {
        const auto check = check_module_relations(StandardModule(r, i), 2L * n, 11u);
        EXPECT_TRUE(check.holds) << check.failed;
      }
    }
}

TEST(StandardModule, ThetaActsByShiftedDegree) {
  const ParamVector r(3, {Rational(1, 2), Rational(-3)});
  const StandardModule m(r, 1);
  const auto v = m.act(weyl::theta(3), StandardModule::basis_vector(4));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.at(4), Rational(4) + Rational(1, 2));
  EXPECT_TRUE(m.act(weyl::d_element(r), StandardModule::basis_vector(0)).empty());
  EXPECT_THROW(StandardModule(r, 3), std::invalid_argument);
}

TEST(GModule, DimensionsMatchClass) {
  for (int n = 2; n <= 4; ++n) {
    const auto dims = g_module_dims(ParamVector::zero(n), -(n - 1), 8, 8);
    const auto closed = g_module_series(n).expand(8);
    for (long m = -(n - 1); m <= 8; ++m) {
      // (1 + s^{-1} + ... + s^{-(n-1)})/(1 - s): coefficient min(n, m + n) for m > -n
      const long expected = std::min<long>(n, m + n);
      EXPECT_EQ(dims.at(m), expected) << "n=" << n << " m=" << m;
      EXPECT_EQ(closed.count(m) ? closed.at(m) : Rational(0), expected);
    }
  }
}
