#pragma once

// Normal-form arithmetic in Q = C[d, y^{+-1}] * Z_n written in the idempotent
// basis: every element is a finite sum c * y^a del^b e_i with a in Z, b >= 0,
// i in Z/n. Relations: e_i e_j = delta_ij e_i, e_i y = y e_{i-1},
// e_i del = del e_{i+1}, del y = y del + 1.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kleinian/rational.hpp"

namespace kleinian::weyl {

/// Deformation parameters k_1..k_{n-1}, extended by k_0 = 0 and n-periodicity.
class ParamVector {
 public:
  ParamVector() = default;
  /// Throws std::invalid_argument unless values.size() == n - 1 and n >= 2.
  ParamVector(int n, std::vector<Rational> values);
  static ParamVector zero(int n);

  int n() const { return n_; }
  const std::vector<Rational>& values() const { return values_; }
  /// k_j for any integer j.
  Rational at(long j) const;

  ParamVector operator+(const std::vector<Rational>& delta) const;
  /// k + w_p
  ParamVector plus_w(int p) const;
  std::string to_string() const;

  friend bool operator==(const ParamVector&, const ParamVector&) = default;

 private:
  int n_ = 0;
  std::vector<Rational> values_;
};

/// w_p = n (v_1 + ... + v_p) in Q^{n-1}. Throws unless 1 <= p <= n-1.
std::vector<Rational> w_vector(int n, int p);

struct TermKey {
  long a = 0;  // power of y
  long b = 0;  // power of del
  int i = 0;   // idempotent index in [0, n)
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// Filtration-first order (b, a, i) used for echelon pivots.
struct PivotOrder {
  bool operator()(const TermKey& x, const TermKey& y) const {
    if (x.b != y.b) return x.b < y.b;
    if (x.a != y.a) return x.a < y.a;
    return x.i < y.i;
  }
};

class CrossedElement {
 public:
  using TermMap = std::map<TermKey, Rational>;

  CrossedElement() = default;
  explicit CrossedElement(int n);

  static CrossedElement one(int n);
  static CrossedElement scalar(int n, const Rational& c);
  static CrossedElement term(int n, long a, long b, int i, const Rational& c = 1);
  static CrossedElement idempotent(int n, long i);
  /// y^a (any integer a)
  static CrossedElement y_power(int n, long a);
  /// del^b
  static CrossedElement del_power(int n, long b);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(TermKey key) const;
  void add_term(TermKey key, const Rational& c);

  /// Largest del-power in the support; -1 for zero.
  long order() const;
  /// a - b if every term has the same value, otherwise nullopt (also for zero).
  std::optional<long> degree() const;

  CrossedElement& operator+=(const CrossedElement& o);
  CrossedElement& operator-=(const CrossedElement& o);
  CrossedElement& operator*=(const Rational& c);
  friend CrossedElement operator+(CrossedElement x, const CrossedElement& y) { return x += y; }
  friend CrossedElement operator-(CrossedElement x, const CrossedElement& y) { return x -= y; }
  friend CrossedElement operator-(CrossedElement x) { return x *= Rational(-1); }
  friend CrossedElement operator*(CrossedElement x, const Rational& c) { return x *= c; }
  friend CrossedElement operator*(const Rational& c, CrossedElement x) { return x *= c; }
  friend CrossedElement operator*(const CrossedElement& x, const CrossedElement& y);
  friend bool operator==(const CrossedElement&, const CrossedElement&) = default;

  /// Stable text form "c y^a D^b e_i + ...", terms in (a, b, i) order.
  std::string render() const;

 private:
  int n_ = 0;
  TermMap terms_;
};

CrossedElement power(const CrossedElement& x, int p);

/// d_k = del - y^{-1} sum_i k_i e_i
CrossedElement d_element(const ParamVector& k);
/// theta = y del
CrossedElement theta(int n);
/// idempotent * prod_t (theta + shifts[t])
CrossedElement theta_product(int n, long idempotent, const std::vector<Rational>& shifts);

}  // namespace kleinian::weyl
