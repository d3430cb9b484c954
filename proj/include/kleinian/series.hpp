#pragma once

// Exact bigraded rational functions N(q,t) / prod (1 - q^r t^s), their
// truncated expansion along a linear functional, and the one-variable
// rational functions obtained on the antidiagonal q = s, t = 1/s.

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "kleinian/rational.hpp"

namespace kleinian::series {

/// Exponent pair of q^r t^s. Also used as a torus weight r*chi_1 + s*chi_2.
struct Monomial2 {
  long r = 0;
  long s = 0;

  friend auto operator<=>(const Monomial2&, const Monomial2&) = default;
  Monomial2 operator+(Monomial2 o) const { return {r + o.r, s + o.s}; }
  Monomial2 operator-(Monomial2 o) const { return {r - o.r, s - o.s}; }
  Monomial2 operator-() const { return {-r, -s}; }
  bool is_one() const { return r == 0 && s == 0; }
};

class LaurentPoly2 {
 public:
  using TermMap = std::map<Monomial2, Rational>;

  LaurentPoly2() = default;
  static LaurentPoly2 constant(const Rational& c);
  static LaurentPoly2 monomial(Monomial2 m, const Rational& c = 1);
  /// 1 - q^r t^s
  static LaurentPoly2 one_minus(Monomial2 m);

  const TermMap& terms() const { return terms_; }
  Rational coefficient(Monomial2 m) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(Monomial2 m, const Rational& c);

  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const Rational& c);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

 private:
  TermMap terms_;
};

/// numerator / prod over the denominator multiset of (1 - q^r t^s).
class RatFun2 {
 public:
  RatFun2() = default;
  /// Throws std::invalid_argument if a factor is (1 - q^0 t^0).
  RatFun2(LaurentPoly2 numerator, std::span<const Monomial2> factors);

  const LaurentPoly2& numerator() const { return numerator_; }
  const std::map<Monomial2, int>& denominator() const { return denominator_; }
  /// Denominator factors with multiplicity, in ascending order.
  std::vector<Monomial2> denominator_factors() const;
  LaurentPoly2 denominator_product() const;

  RatFun2 times(const LaurentPoly2& p) const;
  /// Multiplies by (1 - m), cancelling one copy of that factor when present.
  RatFun2 times_one_minus(Monomial2 m) const;
  /// Rewrites one copy of 1/(1 - m) as -m^{-1}/(1 - m^{-1}).
  RatFun2 flipped(Monomial2 factor) const;

  /// Sum over the least common multiple of the two denominator multisets.
  friend RatFun2 operator+(const RatFun2& f, const RatFun2& g);

 private:
  LaurentPoly2 numerator_;
  std::map<Monomial2, int> denominator_;
};

/// Equality as rational functions, by cross-multiplication.
bool ratfun_equal(const RatFun2& f, const RatFun2& g);

/// l(r, s) = cr * r + cs * s
struct LinearForm {
  long cr = 1;
  long cs = 1;
  long operator()(Monomial2 m) const { return cr * m.r + cs * m.s; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct TruncatedSeries2 {
  LinearForm form;
  long level = 0;
  std::map<Monomial2, Rational> coefficients;  // every key has form(key) <= level

  Rational coefficient(Monomial2 m) const;
};

/// Formal expansion in which each factor 1/(1 - m) with form(m) < 0 is first
/// flipped, after which every factor is a geometric series in a monomial of
/// positive form value. Terms with form value above `level` are dropped.
/// Throws std::domain_error when some factor has form value zero.
TruncatedSeries2 expand(const RatFun2& f, LinearForm form, long level);

class LaurentPoly1 {
 public:
  using TermMap = std::map<long, Rational>;

  LaurentPoly1() = default;
  static LaurentPoly1 monomial(long e, const Rational& c = 1);
  const TermMap& terms() const { return terms_; }
  Rational coefficient(long e) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(long e, const Rational& c);

  LaurentPoly1& operator+=(const LaurentPoly1& o);
  LaurentPoly1& operator-=(const LaurentPoly1& o);
  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) { return a += b; }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) { return a -= b; }
  friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b);
  friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

 private:
  TermMap terms_;
};

/// numerator(s) / prod over the denominator multiset of (1 - s^a).
class OneVarSeries {
 public:
  OneVarSeries() = default;
  /// Throws std::invalid_argument on a factor (1 - s^0).
  OneVarSeries(LaurentPoly1 numerator, std::span<const long> factors);

  const LaurentPoly1& numerator() const { return numerator_; }
  const std::map<long, int>& denominator() const { return denominator_; }
  std::vector<long> denominator_factors() const;
  LaurentPoly1 denominator_product() const;

  OneVarSeries times(const LaurentPoly1& p) const;
  OneVarSeries times_one_minus(long a) const;
  friend OneVarSeries operator+(const OneVarSeries& f, const OneVarSeries& g);

  /// Laurent expansion in increasing powers of s (factors with a < 0 are
  /// flipped first); coefficients of degree <= max_degree.
  std::map<long, Rational> expand(long max_degree) const;

 private:
  LaurentPoly1 numerator_;
  std::map<long, int> denominator_;
};

bool ratfun_equal(const OneVarSeries& f, const OneVarSeries& g);

/// q -> s, t -> 1/s. Throws std::domain_error if a factor collapses to (1 - s^0).
OneVarSeries specialize_antidiagonal(const RatFun2& f);

/// Closed form of the one-variable series of sections modulo z:
///   sum_{i=0}^{n-1} s^{n * sum_{j=n-i}^{n-1} b_j} / (1 - s^n).
/// Requires b in N^{n-1}.
OneVarSeries obar_series(int n, std::span<const long> b);

}  // namespace kleinian::series
