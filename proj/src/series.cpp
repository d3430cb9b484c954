#include "kleinian/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleinian::series {

// ---------------------------------------------------------------------------
// LaurentPoly2

LaurentPoly2 LaurentPoly2::constant(const Rational& c) { return monomial({0, 0}, c); }

LaurentPoly2 LaurentPoly2::monomial(Monomial2 m, const Rational& c) {
  LaurentPoly2 p;
  p.add_term(m, c);
  return p;
}

LaurentPoly2 LaurentPoly2::one_minus(Monomial2 m) {
  LaurentPoly2 p = constant(1);
  p.add_term(m, -1);
  return p;
}

Rational LaurentPoly2::coefficient(Monomial2 m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly2::add_term(Monomial2 m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

// ---------------------------------------------------------------------------
// RatFun2

RatFun2::RatFun2(LaurentPoly2 numerator, std::span<const Monomial2> factors) : numerator_(std::move(numerator)) {
  for (auto m : factors) {
    if (m.is_one()) throw std::invalid_argument("denominator factor (1 - q^0 t^0) vanishes identically");
    ++denominator_[m];
  }
}

std::vector<Monomial2> RatFun2::denominator_factors() const {
  std::vector<Monomial2> out;
  for (const auto& [m, count] : denominator_)
    for (int i = 0; i < count; ++i) out.push_back(m);
  return out;
}

LaurentPoly2 RatFun2::denominator_product() const {
  LaurentPoly2 p = LaurentPoly2::constant(1);
  for (auto m : denominator_factors()) p = p * LaurentPoly2::one_minus(m);
  return p;
}

RatFun2 RatFun2::times(const LaurentPoly2& p) const {
  RatFun2 out = *this;
  out.numerator_ = numerator_ * p;
  return out;
}

RatFun2 RatFun2::times_one_minus(Monomial2 m) const {
  RatFun2 out = *this;
  auto it = out.denominator_.find(m);
  if (it != out.denominator_.end()) {
    if (--it->second == 0) out.denominator_.erase(it);
  } else {
    out.numerator_ = out.numerator_ * LaurentPoly2::one_minus(m);
  }
  return out;
}

RatFun2 RatFun2::flipped(Monomial2 factor) const {
  auto it = denominator_.find(factor);
  if (it == denominator_.end()) throw std::invalid_argument("flipped: factor not present in denominator");
  RatFun2 out = *this;
  auto jt = out.denominator_.find(factor);
  if (--jt->second == 0) out.denominator_.erase(jt);
  ++out.denominator_[-factor];
  out.numerator_ = out.numerator_ * LaurentPoly2::monomial(-factor, -1);
  return out;
}

RatFun2 operator+(const RatFun2& f, const RatFun2& g) {
  RatFun2 out;
  std::map<Monomial2, int> lcm = f.denominator_;
  for (const auto& [m, c] : g.denominator_) lcm[m] = std::max(lcm[m], c);
  auto complement = [&](const std::map<Monomial2, int>& den) {
    LaurentPoly2 p = LaurentPoly2::constant(1);
    for (const auto& [m, c] : lcm) {
      auto it = den.find(m);
      const int have = it == den.end() ? 0 : it->second;
      for (int i = have; i < c; ++i) p = p * LaurentPoly2::one_minus(m);
    }
    return p;
  };
  out.numerator_ = f.numerator_ * complement(f.denominator_) + g.numerator_ * complement(g.denominator_);
  out.denominator_ = std::move(lcm);
  return out;
}

bool ratfun_equal(const RatFun2& f, const RatFun2& g) {
  return f.numerator() * g.denominator_product() == g.numerator() * f.denominator_product();
}

// ---------------------------------------------------------------------------
// Expansion

Rational TruncatedSeries2::coefficient(Monomial2 m) const {
  auto it = coefficients.find(m);
  return it == coefficients.end() ? Rational(0) : it->second;
}

TruncatedSeries2 expand(const RatFun2& f, LinearForm form, long level) {
  LaurentPoly2 numerator = f.numerator();
  std::vector<Monomial2> factors;
  for (auto m : f.denominator_factors()) {
    const long value = form(m);
    if (value == 0)
      throw std::domain_error("expand: denominator factor with zero functional value has no expansion direction");
    if (value < 0) {
      numerator = numerator * LaurentPoly2::monomial(-m, -1);
      m = -m;
    }
    factors.push_back(m);
  }

  std::map<Monomial2, Rational> current;
  for (const auto& [m, c] : numerator.terms())
    if (form(m) <= level) current.emplace(m, c);

  // Multiply by each geometric series sum_j m^j. All multipliers have
  // positive form value, so dropped terms never come back below the level.
  for (auto step : factors) {
    std::map<Monomial2, Rational> next = current;
    for (const auto& [m, c] : current) {
      Monomial2 w = m + step;
      while (form(w) <= level) {
        next[w] += c;
        w = w + step;
      }
    }
    current.clear();
    for (auto& [m, c] : next)
      if (c != 0) current.emplace(m, std::move(c));
  }
  return TruncatedSeries2{form, level, std::move(current)};
}

// ---------------------------------------------------------------------------
// LaurentPoly1

LaurentPoly1 LaurentPoly1::monomial(long e, const Rational& c) {
  LaurentPoly1 p;
  p.add_term(e, c);
  return p;
}

Rational LaurentPoly1::coefficient(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly1::add_term(long e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
  LaurentPoly1 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

namespace {
LaurentPoly1 one_minus_1(long a) {
  LaurentPoly1 p = LaurentPoly1::monomial(0, 1);
  p.add_term(a, -1);
  return p;
}
}  // namespace

// ---------------------------------------------------------------------------
// OneVarSeries

OneVarSeries::OneVarSeries(LaurentPoly1 numerator, std::span<const long> factors) : numerator_(std::move(numerator)) {
  for (long a : factors) {
    if (a == 0) throw std::invalid_argument("denominator factor (1 - s^0) vanishes identically");
    ++denominator_[a];
  }
}

std::vector<long> OneVarSeries::denominator_factors() const {
  std::vector<long> out;
  for (const auto& [a, count] : denominator_)
    for (int i = 0; i < count; ++i) out.push_back(a);
  return out;
}

LaurentPoly1 OneVarSeries::denominator_product() const {
  LaurentPoly1 p = LaurentPoly1::monomial(0, 1);
  for (long a : denominator_factors()) p = p * one_minus_1(a);
  return p;
}

OneVarSeries OneVarSeries::times(const LaurentPoly1& p) const {
  OneVarSeries out = *this;
  out.numerator_ = numerator_ * p;
  return out;
}

OneVarSeries OneVarSeries::times_one_minus(long a) const {
  OneVarSeries out = *this;
  auto it = out.denominator_.find(a);
  if (it != out.denominator_.end()) {
    if (--it->second == 0) out.denominator_.erase(it);
  } else {
    out.numerator_ = out.numerator_ * one_minus_1(a);
  }
  return out;
}

OneVarSeries operator+(const OneVarSeries& f, const OneVarSeries& g) {
  std::map<long, int> lcm = f.denominator_;
  for (const auto& [a, c] : g.denominator_) lcm[a] = std::max(lcm[a], c);
  auto complement = [&](const std::map<long, int>& den) {
    LaurentPoly1 p = LaurentPoly1::monomial(0, 1);
    for (const auto& [a, c] : lcm) {
      auto it = den.find(a);
      const int have = it == den.end() ? 0 : it->second;
      for (int i = have; i < c; ++i) p = p * one_minus_1(a);
    }
    return p;
  };
  OneVarSeries out;
  out.numerator_ = f.numerator_ * complement(f.denominator_) + g.numerator_ * complement(g.denominator_);
  out.denominator_ = std::move(lcm);
  return out;
}

std::map<long, Rational> OneVarSeries::expand(long max_degree) const {
  LaurentPoly1 numerator = numerator_;
  std::vector<long> steps;
  for (long a : denominator_factors()) {
    if (a < 0) {
      numerator = numerator * LaurentPoly1::monomial(-a, -1);
      a = -a;
    }
    steps.push_back(a);
  }
  std::map<long, Rational> current;
  for (const auto& [e, c] : numerator.terms())
    if (e <= max_degree) current.emplace(e, c);
  for (long step : steps) {
    std::map<long, Rational> next = current;
    for (const auto& [e, c] : current)
      for (long w = e + step; w <= max_degree; w += step) next[w] += c;
    current.clear();
    for (auto& [e, c] : next)
      if (c != 0) current.emplace(e, std::move(c));
  }
  return current;
}

bool ratfun_equal(const OneVarSeries& f, const OneVarSeries& g) {
  return f.numerator() * g.denominator_product() == g.numerator() * f.denominator_product();
}

OneVarSeries specialize_antidiagonal(const RatFun2& f) {
  LaurentPoly1 numerator;
  for (const auto& [m, c] : f.numerator().terms()) numerator.add_term(m.r - m.s, c);
  std::vector<long> factors;
  for (auto m : f.denominator_factors()) {
    const long a = m.r - m.s;
    if (a == 0)
      throw std::domain_error("specialize_antidiagonal: factor (1 - q^" + std::to_string(m.r) + " t^" +
                              std::to_string(m.s) + ") collapses to (1 - s^0)");
    factors.push_back(a);
  }
  return OneVarSeries(std::move(numerator), factors);
}

OneVarSeries obar_series(int n, std::span<const long> b) {
  if (n < 2) throw std::invalid_argument("obar_series: order n must be at least 2");
  if (static_cast<int>(b.size()) != n - 1) throw std::invalid_argument("obar_series: dimension mismatch for b");
  for (long v : b)
    if (v < 0) throw std::invalid_argument("obar_series: b must lie in N^{n-1}");
  LaurentPoly1 numerator;
  for (int i = 0; i < n; ++i) {
    long sum = 0;
    for (int j = n - i; j <= n - 1; ++j) sum += b[j - 1];
    numerator.add_term(static_cast<long>(n) * sum, 1);
  }
  const long factor = n;
  return OneVarSeries(std::move(numerator), std::span<const long>(&factor, 1));
}

}  // namespace kleinian::series
