#include <gtest/gtest.h>

#include <random>

#include "kleinian/identities.hpp"

using namespace kleinian;
using namespace kleinian::weyl;

namespace {

using E = CrossedElement;

ParamVector random_k(int n, std::mt19937_64& rng) {
  std::vector<Rational> v;
  for (int i = 0; i < n - 1; ++i) v.push_back(random_rational(rng, 6, 3));
  return ParamVector(n, v);
}

// prod_{i=1}^p (theta + i - sum_j k_{i+j} e_j), written out directly.
E ty1_rhs(const ParamVector& k, int p) {
  const int n = k.n();
  E out = E::one(n);
  for (int i = 1; i <= p; ++i) {
    E factor = theta(n) + E::scalar(n, i);
    for (int j = 0; j < n; ++j) factor -= k.at(i + j) * E::idempotent(n, j);
    out = out * factor;
  }
  return out;
}

}  // namespace

TEST(Identities, FirstProductFormulaDirect) {
  for (int n = 2; n <= 4; ++n) {
    std::mt19937_64 rng(n);
    for (int t = 0; t < 3; ++t) {
      const ParamVector k = random_k(n, rng);
      const E d = d_element(k);
      for (int p = 1; p <= n; ++p)
        EXPECT_EQ(power(d, p) * E::y_power(n, p), ty1_rhs(k, p)) << k.to_string() << " p=" << p;
    }
  }
}

TEST(Identities, AllHoldForRandomParameters) {
  for (int n = 2; n <= 4; ++n) {
    std::mt19937_64 rng(40 + n);
    for (int t = 0; t < 5; ++t) {
      const ParamVector k = random_k(n, rng);
      const auto checks = all_identities(k);
      EXPECT_FALSE(checks.empty());
      for (const auto& c : checks) EXPECT_TRUE(c.holds) << c.id << " " << c.params;
    }
  }
}

TEST(Identities, KappaMatchesClosedForm) {
  // The engine reads kappa off the difference; compare with p - n - k_p.
  for (int n = 2; n <= 4; ++n) {
    std::mt19937_64 rng(7 * n);
    const ParamVector k = random_k(n, rng);
    for (int p = 1; p <= n - 1; ++p) {
      const auto c = check_theta_intertwining(k, p);
      ASSERT_TRUE(c.holds);
      ASSERT_TRUE(c.kappa.has_value());
      EXPECT_EQ(*c.kappa, Rational(p - n) - k.at(p));
    }
  }
}

TEST(Identities, PerturbedParametersBreakTheFirstFormula) {
  const ParamVector k(3, {Rational(1, 3), Rational(-2)});
  const ParamVector k2(3, {Rational(4, 3), Rational(-2)});
  EXPECT_TRUE(check_ty1(k, k, 1).holds);
  EXPECT_FALSE(check_ty1(k, k2, 1).holds);
}

TEST(Identities, ConjugationByYPower) {
  for (int n = 2; n <= 4; ++n) {
    std::mt19937_64 rng(90 + n);
    const ParamVector k = random_k(n, rng);
    for (int p = 1; p <= n - 1; ++p) {
      // y^p e d_k^n = e_p d_{k'}^n y^p, computed here without the library helpers
      const E lhs = E::y_power(n, p) * E::idempotent(n, 0) * power(d_element(k), n);
      const E rhs = E::idempotent(n, p) * power(d_element(k.plus_w(p)), n) * E::y_power(n, p);
      EXPECT_EQ(lhs, rhs);
      EXPECT_TRUE(check_dn_intertwining(k, p).holds);
      EXPECT_TRUE(check_ty_conjugation(k, p).holds);
    }
  }
}
