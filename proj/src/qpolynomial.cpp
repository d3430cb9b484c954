#include "kleinian/qpolynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace kleinian {

QPolynomial::QPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPolynomial QPolynomial::constant(const Rational& c) { return QPolynomial({c}); }

QPolynomial QPolynomial::from_roots(const std::vector<Rational>& roots) {
  QPolynomial p = constant(1);
  for (const auto& r : roots) p = p * QPolynomial({-r, Rational(1)});
  return p;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lead = leading();
  for (auto& v : c) v /= lead;
  return QPolynomial(std::move(c));
}

std::string QPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[d];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (mag != 1 || d == 0) os << mag.get_str();
    if (d >= 1) os << (mag != 1 ? "*" : "") << var;
    if (d >= 2) os << "^" << d;
  }
  return os.str();
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + b * QPolynomial::constant(-1); }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPolynomial(std::move(c));
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const long db = b.degree();
  const long da = a.degree();
  std::vector<Rational> quot(da >= db ? da - db + 1 : 0, Rational(0));
  for (long d = da; d >= db; --d) {
    const Rational c = rem[d] / b.leading();
    quot[d - db] = c;
    if (c == 0) continue;
    for (long i = 0; i <= db; ++i) rem[d - db + i] -= c * b.coefficients()[i];
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

ExtendedGcd extended_gcd(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r0 = a, r1 = b;
  QPolynomial s0 = QPolynomial::constant(1), s1;
  QPolynomial t0, t1 = QPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    QPolynomial s2 = s0 - q * s1;
    QPolynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const QPolynomial scale = QPolynomial::constant(1 / r0.leading());
  return {r0 * scale, s0 * scale, t0 * scale};
}

}  // namespace kleinian
