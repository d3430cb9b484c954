#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kleinian/rootmorita.hpp"

using namespace kleinian;
using namespace kleinian::roots;

TEST(Roots, ZeroIsDominant) {
  for (int n = 2; n <= 6; ++n) {
    const auto ev = is_dominant(ParamVector::zero(n));
    EXPECT_TRUE(ev.dominant);
    EXPECT_TRUE(ev.integral_roots.empty());
    EXPECT_EQ(RootContext{n}.positive_roots().size(), static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(Roots, NegativeOneIsNotDominantForNTwo) {
  const auto ev = is_dominant(ParamVector(2, {Rational(-1)}));
  EXPECT_FALSE(ev.dominant);
  ASSERT_EQ(ev.culprits.size(), 1u);
  EXPECT_EQ(ev.culprits[0].i, 1);
  EXPECT_EQ(ev.culprits[0].j, 2);
  EXPECT_EQ(ev.culprits[0].a_pairing, 0);
  EXPECT_EQ(ev.culprits[0].k_rho_pairing, 0);
}

TEST(Roots, AVectorAndDominanceByHand) {
  // a_i = (n - i + k_i)/n, and (a, v_i - v_j) integral iff (k + rho, v_i - v_j) in nZ
  const ParamVector k(3, {Rational(1), Rational(-2)});
  EXPECT_EQ(a_vector(k), (std::vector<Rational>{Rational(1), Rational(-1, 3), Rational(0)}));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 4;
    std::vector<Rational> v;
    std::uniform_int_distribution<int> small(-4, 4);
    for (int i = 0; i < n - 1; ++i) {
      Rational x(small(rng), 1 + t % 3);
      x.canonicalize();
      v.push_back(x);
    }
    const ParamVector kk(n, v);
    bool dominant = true;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Rational ki = i < n ? kk.at(i) : Rational(0);
        const Rational kj = j < n ? kk.at(j) : Rational(0);
        const Rational pairing = ki - kj + (j - i);  // (k + rho, v_i - v_j)
        const Rational q = pairing / n;
        if (q.get_den() == 1 && pairing <= 0) dominant = false;
      }
    EXPECT_EQ(is_dominant(kk).dominant, dominant) << kk.to_string();
  }
}

TEST(Roots, TranslationLattice) {
  for (int n = 2; n <= 5; ++n) EXPECT_TRUE(fundamental_weights_check(n));
  EXPECT_EQ(f_index({1, 0, 2}), 7);
  EXPECT_EQ(index_shift(3, {1, 1}), (std::vector<Rational>{6, 3}));
}

TEST(Roots, DominanceIsStableUnderTranslation) {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 20; ++t) {
      const ParamVector k = random_dominant(n, rng);
      for (const auto& v : k.values()) EXPECT_LE(v.get_den(), 6);
      for (int p = 1; p <= n - 1; ++p) EXPECT_TRUE(is_dominant(k.plus_w(p)).dominant);
    }
}

TEST(Morita, CertificatesAtZero) {
  std::mt19937_64 rng(1);
  for (int n = 2; n <= 5; ++n)
    for (int p = 1; p <= n - 1; ++p) {
      const auto [c1, c2] = morita_certificates(ParamVector::zero(n), p, rng);
      for (const auto* c : {&c1, &c2}) {
        EXPECT_TRUE(c->coprime);
        EXPECT_TRUE(c->sets_disjoint);
        EXPECT_TRUE(c->bezout_verified);
        EXPECT_EQ(c->alpha * c->g + c->beta * c->h, QPolynomial::constant(1));
        ASSERT_EQ(c->sample_points.size(), 3u);
        for (const auto& x : c->sample_points) EXPECT_EQ(c->alpha(x) * c->g(x) + c->beta(x) * c->h(x), 1);
      }
      EXPECT_TRUE(morita_substrate(ParamVector::zero(n), p).holds);
    }
  // n = 2, p = 1: condition-1 compares {1} with {2}
  const auto [c1, c2] = morita_certificates(ParamVector::zero(2), 1, rng);
  EXPECT_EQ(c1.left_set, (std::vector<Rational>{1}));
  EXPECT_EQ(c1.right_set, (std::vector<Rational>{2}));
}

TEST(Morita, CollisionWitness) {
  std::mt19937_64 rng(1);
  const auto [c1, c2] = morita_certificates(ParamVector(2, {Rational(-1)}), 1, rng);
  EXPECT_FALSE(c1.coprime);
  EXPECT_FALSE(c1.sets_disjoint);
  ASSERT_TRUE(c1.witness.has_value());
  EXPECT_EQ(*c1.witness, (std::pair<int, int>{1, 2}));
  EXPECT_EQ(c1.witness_value, 2);
  EXPECT_EQ(c1.left_set, (std::vector<Rational>{2}));
  EXPECT_EQ(c1.right_set, (std::vector<Rational>{2}));
  EXPECT_GT(c1.gcd.degree(), 0);
  EXPECT_TRUE(c2.coprime);
}

TEST(QPoly, ExtendedGcd) {
  const auto a = QPolynomial::from_roots({1, 2, Rational(1, 2)});
  const auto b = QPolynomial::from_roots({2, 3});
  const auto g = extended_gcd(a, b);
  EXPECT_EQ(g.gcd, QPolynomial::from_roots({2}));
  EXPECT_EQ(g.s * a + g.t * b, g.gcd);
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_THROW(divmod(a, QPolynomial()), std::domain_error);
}

TEST(Hodges, ParametersForNTwo) {
  const Rational k1(2, 7);
  const auto h = hodges_data(ParamVector(2, {k1}));
  EXPECT_EQ(h.a, (std::vector<Rational>{(1 + k1) / 2, 0}));
  EXPECT_EQ(h.v, QPolynomial::from_roots({(1 + k1) / 2, 0}));
  EXPECT_EQ(h.lambda, (std::vector<Rational>{Rational(1, 2) - k1, Rational(1, 2) + k1}));
}

TEST(Hodges, TraceAndRoundtrip) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(hodges_data(ParamVector::zero(n)).lambda, std::vector<Rational>(n, Rational(1, n)));
    EXPECT_EQ(cbh_roundtrip(n, std::vector<Rational>(n, Rational(1, n))), ParamVector::zero(n));
    for (int t = 0; t < 5; ++t) {
      const ParamVector k = random_params(n, rng);
      const auto h = hodges_data(k);
      Rational trace = 0;
      for (const auto& l : h.lambda) trace += l;
      EXPECT_EQ(trace, 1);
      EXPECT_EQ(cbh_roundtrip(n, h.lambda), k);
    }
  }
  EXPECT_THROW(cbh_roundtrip(2, {Rational(1), Rational(1)}), std::invalid_argument);
}

TEST(Hodges, DotActionPermutesRoots) {
  std::mt19937_64 rng(8);
  for (int n = 3; n <= 5; ++n) {
    const ParamVector k = random_params(n, rng);
    std::vector<int> perm(n - 1);
    for (int i = 0; i < n - 1; ++i) perm[i] = i;
    EXPECT_EQ(dot_action(perm, k), k);
    do {
      const auto moved = dot_action(perm, k);
      auto a = hodges_data(k).a, b = hodges_data(moved).a;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b);
      EXPECT_EQ(dot_action(inverse_permutation(perm), moved), k);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}
