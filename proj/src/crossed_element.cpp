#include "kleinian/weylcross.hpp"

#include <sstream>
#include <stdexcept>

namespace kleinian::weyl {

ParamVector::ParamVector(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  if (n < 2) throw std::invalid_argument("invalid order n = " + std::to_string(n) + " (need n >= 2)");
  if (static_cast<int>(values_.size()) != n - 1)
    throw std::invalid_argument("dimension mismatch: k has " + std::to_string(values_.size()) +
                                " entries, expected " + std::to_string(n - 1));
}

ParamVector ParamVector::zero(int n) { return ParamVector(n, std::vector<Rational>(n - 1, Rational(0))); }

Rational ParamVector::at(long j) const {
  const int r = mod(j, n_);
  return r == 0 ? Rational(0) : values_[r - 1];
}

ParamVector ParamVector::operator+(const std::vector<Rational>& delta) const {
  if (delta.size() != values_.size()) throw std::invalid_argument("dimension mismatch in parameter shift");
  std::vector<Rational> out = values_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += delta[i];
  return ParamVector(n_, std::move(out));
}

ParamVector ParamVector::plus_w(int p) const { return *this + w_vector(n_, p); }

std::string ParamVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += kleinian::to_string(values_[i]);
  }
  return s + ")";
}

std::vector<Rational> w_vector(int n, int p) {
  if (p < 1 || p > n - 1)
    throw std::invalid_argument("step p = " + std::to_string(p) + " out of range 1.." + std::to_string(n - 1));
  std::vector<Rational> w(n - 1, Rational(0));
  for (int i = 0; i < p; ++i) w[i] = n;
  return w;
}

CrossedElement::CrossedElement(int n) : n_(n) {}

CrossedElement CrossedElement::one(int n) {
  CrossedElement x(n);
  for (int i = 0; i < n; ++i) x.add_term({0, 0, i}, 1);
  return x;
}

CrossedElement CrossedElement::scalar(int n, const Rational& c) { return one(n) * c; }

CrossedElement CrossedElement::term(int n, long a, long b, int i, const Rational& c) {
  if (b < 0) throw std::invalid_argument("negative power of del");
  CrossedElement x(n);
  x.add_term({a, b, mod(i, n)}, c);
  return x;
}

CrossedElement CrossedElement::idempotent(int n, long i) { return term(n, 0, 0, mod(i, n)); }

CrossedElement CrossedElement::y_power(int n, long a) {
  CrossedElement x(n);
  for (int i = 0; i < n; ++i) x.add_term({a, 0, i}, 1);
  return x;
}

CrossedElement CrossedElement::del_power(int n, long b) {
  CrossedElement x(n);
  for (int i = 0; i < n; ++i) x.add_term({0, b, i}, 1);
  return x;
}

Rational CrossedElement::coefficient(TermKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CrossedElement::add_term(TermKey key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

long CrossedElement::order() const {
  long best = -1;
  for (const auto& [key, c] : terms_) best = std::max(best, key.b);
  return best;
}

std::optional<long> CrossedElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  const long d = terms_.begin()->first.a - terms_.begin()->first.b;
  for (const auto& [key, c] : terms_)
    if (key.a - key.b != d) return std::nullopt;
  return d;
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& o) {
  if (n_ == 0) n_ = o.n_;
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

CrossedElement& CrossedElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

CrossedElement operator*(const CrossedElement& x, const CrossedElement& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("multiply: elements over different groups");
  const int n = x.n_;
  CrossedElement out(n);
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      // e_i y^c del^d = y^c del^d e_{i-c+d}
      if (mod(kx.i - ky.a + ky.b, n) != ky.i) continue;
      const Rational base = cx * cy;
      Integer binom = 1;
      Integer falling = 1;
      for (long t = 0; t <= kx.b; ++t) {
        if (t > 0) {
          binom = binom * (kx.b - t + 1) / t;
          falling *= ky.a - (t - 1);
          if (falling == 0) break;
        }
        out.add_term({kx.a + ky.a - t, kx.b - t + ky.b, ky.i}, base * Rational(binom * falling));
      }
    }
  }
  return out;
}

std::string CrossedElement::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag.get_str() << " ";
    if (key.a == 1) os << "y ";
    else if (key.a != 0) os << "y^" << key.a << " ";
    if (key.b == 1) os << "D ";
    else if (key.b != 0) os << "D^" << key.b << " ";
    os << "e_" << key.i;
  }
  return os.str();
}

CrossedElement power(const CrossedElement& x, int p) {
  if (p < 0) throw std::invalid_argument("power: negative exponent");
  CrossedElement out = CrossedElement::one(x.n());
  for (int t = 0; t < p; ++t) out = out * x;
  return out;
}

CrossedElement d_element(const ParamVector& k) {
  const int n = k.n();
  CrossedElement d = CrossedElement::del_power(n, 1);
  for (int i = 1; i < n; ++i) d.add_term({-1, 0, i}, -k.at(i));
  return d;
}

CrossedElement theta(int n) {
  CrossedElement t(n);
  for (int i = 0; i < n; ++i) t.add_term({1, 1, i}, 1);
  return t;
}

CrossedElement theta_product(int n, long idempotent, const std::vector<Rational>& shifts) {
  CrossedElement out = CrossedElement::idempotent(n, idempotent);
  const CrossedElement th = theta(n);
  for (const auto& c : shifts) out = out * (th + CrossedElement::scalar(n, c));
  return out;
}

}  // namespace kleinian::weyl
