#pragma once

#include <string>
#include <vector>

#include "kleinian/rational.hpp"

namespace kleinian {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward,
/// with no trailing zeros.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coefficients);
  static QPolynomial constant(const Rational& c);
  /// prod (x - r) over the given roots
  static QPolynomial from_roots(const std::vector<Rational>& roots);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational operator()(const Rational& x) const;
  QPolynomial monic() const;
  std::string to_string(const std::string& var = "x") const;

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b);

struct ExtendedGcd {
  QPolynomial gcd;  // monic, or zero when both inputs are zero
  QPolynomial s;
  QPolynomial t;    // s * a + t * b = gcd
};

ExtendedGcd extended_gcd(const QPolynomial& a, const QPolynomial& b);

}  // namespace kleinian
