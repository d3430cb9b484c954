#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "kleinian/weylcross.hpp"

using namespace kleinian;
using namespace kleinian::weyl;

namespace {

using E = CrossedElement;

// Oracle representation on the span of y^m eps_j (m in Z, j in Z/n) with
// del y^m eps_j = (m + c_j) y^{m-1} eps_j, y y^m eps_j = y^{m+1} eps_j and
// e_i y^m eps_j = [i = m + j mod n] y^m eps_j. Generic c_j make it faithful
// enough to separate the elements used here.
struct Vec {
  std::map<std::pair<long, int>, Rational> c;
  bool operator==(const Vec& o) const { return c == o.c; }
};

struct Oracle {
  int n;
  std::vector<Rational> shift;

  Vec apply_term(long a, long b, int i, const Rational& coeff, const Vec& v) const {
    Vec out;
    for (const auto& [key, x] : v.c) {
      const auto [m, j] = key;
      if (mod(m + j, n) != i) continue;
      Rational f = coeff * x;
      for (long t = 0; t < b; ++t) f *= Rational(m - t) + shift[j];
      if (f == 0) continue;
      out.c[{m - b + a, j}] += f;
    }
    for (auto it = out.c.begin(); it != out.c.end();) it = it->second == 0 ? out.c.erase(it) : std::next(it);
    return out;
  }

  Vec apply(const E& x, const Vec& v) const {
    Vec out;
    for (const auto& [key, coeff] : x.terms())
      for (const auto& [k2, val] : apply_term(key.a, key.b, key.i, coeff, v).c) out.c[k2] += val;
    for (auto it = out.c.begin(); it != out.c.end();) it = it->second == 0 ? out.c.erase(it) : std::next(it);
    return out;
  }
};

Oracle make_oracle(int n) {
  Oracle o{n, {}};
  for (int j = 0; j < n; ++j) o.shift.push_back(Rational(2 * j + 1, 7 + j));
  return o;
}

E random_element(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> a(-3, 3), b(0, 3);
  std::uniform_int_distribution<int> i(0, n - 1);
  E x(n);
  for (int t = 0; t < 3; ++t) x.add_term({a(rng), b(rng), i(rng)}, random_rational(rng, 5, 4));
  return x;
}

E sum_over_idempotents(int n, long a, long b, const Rational& c = 1) {
  E x(n);
  for (int i = 0; i < n; ++i) x.add_term({a, b, i}, c);
  return x;
}

}  // namespace

TEST(Crossed, WeylRelation) {
  for (int n = 1; n <= 3; ++n) {
    const E del = E::del_power(n, 1), y = E::y_power(n, 1);
    EXPECT_EQ(del * y, y * del + E::one(n));
  }
}

TEST(Crossed, IdempotentsTwistPastY) {
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i < n; ++i) {
      const E e = E::idempotent(n, i), y = E::y_power(n, 1);
      EXPECT_EQ(y * e, E::idempotent(n, i + 1) * y);
      EXPECT_EQ(e * e, e);
      EXPECT_TRUE((e * E::idempotent(n, i + 1)).is_zero());
    }
  const E e0 = E::idempotent(3, 0);
  EXPECT_EQ(e0 * E::y_power(3, 1), E::y_power(3, 1) * E::idempotent(3, 2));
}

TEST(Crossed, DelSquaredPastInverseY) {
  // del^2 y^{-1} = y^{-1} del^2 - 2 y^{-2} del + 2 y^{-3}
  const int n = 2;
  const E lhs = E::del_power(n, 2) * E::y_power(n, -1);
  const E rhs = sum_over_idempotents(n, -1, 2) + sum_over_idempotents(n, -2, 1, -2) + sum_over_idempotents(n, -3, 0, 2);
  EXPECT_EQ(lhs, rhs);
}

TEST(Crossed, DeformedGenerator) {
  EXPECT_EQ(d_element(ParamVector::zero(3)), E::del_power(3, 1));
  const Rational k1(3, 5);
  const ParamVector k(2, {k1});
  EXPECT_EQ(d_element(k), E::del_power(2, 1) - k1 * E::term(2, -1, 0, 1));
  // theta = y d + sum k_i e_i
  for (int n = 2; n <= 4; ++n) {
    std::mt19937_64 rng(n);
    std::vector<Rational> v;
    for (int i = 0; i < n - 1; ++i) v.push_back(random_rational(rng, 5, 3));
    const ParamVector kk(n, v);
    E rhs = E::y_power(n, 1) * d_element(kk);
    for (int i = 1; i <= n - 1; ++i) rhs += kk.at(i) * E::idempotent(n, i);
    EXPECT_EQ(theta(n), rhs);
  }
}

TEST(Crossed, DeformedSquareNormalForm) {
  // Hand reduction for n = 2, k = (1/2): d = del - 1/2 y^{-1} e_1, and
  // d^2 = del^2 - 1/2 y^{-1} del + 1/2 y^{-2} e_1.
  const ParamVector k(2, {Rational(1, 2)});
  const E d = d_element(k);
  const E expected = E::del_power(2, 2) - Rational(1, 2) * sum_over_idempotents(2, -1, 1) +
                     Rational(1, 2) * E::term(2, -2, 0, 1);
  EXPECT_EQ(d * d, expected);
}

TEST(Crossed, FirstProductFormula) {
  // n = 2, p = 1: d y = theta + 1 - k_1 e_0
  const Rational k1(-7, 3);
  const ParamVector k(2, {k1});
  const E lhs = d_element(k) * E::y_power(2, 1);
  EXPECT_EQ(lhs, theta(2) + E::one(2) - k1 * E::idempotent(2, 0));
}

TEST(Crossed, AgreesWithOracleRepresentation) {
  for (int n = 1; n <= 4; ++n) {
    const Oracle o = make_oracle(n);
    std::mt19937_64 rng(100 + n);
    for (int t = 0; t < 60; ++t) {
      const E x = random_element(n, rng), y = random_element(n, rng);
      for (long m = -3; m <= 3; ++m)
        for (int j = 0; j < n; ++j) {
          Vec v;
          v.c[{m, j}] = 1;
          EXPECT_EQ(o.apply(x * y, v), o.apply(x, o.apply(y, v)));
        }
    }
  }
}

TEST(Crossed, AssociativityFuzz) {
  for (int n = 2; n <= 4; ++n) {
    std::mt19937_64 rng(n);
    for (int t = 0; t < 100; ++t) {
      const E x = random_element(n, rng), y = random_element(n, rng), z = random_element(n, rng);
      EXPECT_EQ((x * y) * z, x * (y * z));
    }
  }
}

TEST(Crossed, DegreeIsAdditive) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> a(-3, 3), b(0, 3);
  for (int t = 0; t < 100; ++t) {
    const int n = 3;
    const long a1 = a(rng), b1 = b(rng), a2 = a(rng), b2 = b(rng);
    const E x = E::term(n, a1, b1, 0, 2) + E::term(n, a1 + 1, b1 + 1, 1, -1);
    const E y = E::term(n, a2, b2, 2, Rational(1, 3));
    const E xy = x * y;
    EXPECT_EQ(x.degree(), a1 - b1);
    if (!xy.is_zero()) EXPECT_EQ(xy.degree(), (a1 - b1) + (a2 - b2));
  }
  EXPECT_FALSE((E::one(2) + E::y_power(2, 1)).degree().has_value());
  EXPECT_EQ(E(2).order(), -1);
}

TEST(Crossed, RenderIsStable) {
  const E x = E::term(2, -1, 2, 0) - Rational(3, 2) * E::term(2, 0, 1, 1) + E::term(2, 2, 0, 0);
  EXPECT_EQ(x.render(), x.render());
  EXPECT_EQ(E(3).render(), "0");
  EXPECT_NE(x.render().find("3/2"), std::string::npos);
}

TEST(Params, PeriodicAccessAndShifts) {
  const ParamVector k(3, {Rational(1, 2), Rational(-2)});
  EXPECT_EQ(k.at(0), 0);
  EXPECT_EQ(k.at(3), 0);
  EXPECT_EQ(k.at(4), Rational(1, 2));
  EXPECT_EQ(k.at(-1), -2);
  EXPECT_EQ(ParamVector(2, {0}).plus_w(1), ParamVector(2, {2}));
  EXPECT_EQ(w_vector(3, 2), (std::vector<Rational>{3, 3}));
  EXPECT_THROW(ParamVector(3, {1}), std::invalid_argument);
  EXPECT_THROW(w_vector(3, 3), std::invalid_argument);
}

TEST(Crossed, GoldenRenderings) {
  std::ifstream in(std::string(KLEINIAN_TEST_DATA) + "/normal_forms.tsv");
  ASSERT_TRUE(in.good());
  std::map<std::string, std::string> golden;
  for (std::string line; std::getline(in, line);) {
    const auto tab = line.find('\t');
    if (tab != std::string::npos) golden[line.substr(0, tab)] = line.substr(tab + 1);
  }
  ASSERT_EQ(golden.size(), 2u);
  EXPECT_EQ((E::del_power(2, 2) * E::y_power(2, -1)).render(), golden["del2_yinv"]);
  const E d = d_element(ParamVector(2, {Rational(1, 2)}));
  EXPECT_EQ((d * d).render(), golden["d_squared_n2_k1_2"]);
}
