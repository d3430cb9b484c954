#include "kleinian/rootmorita.hpp"

#include <algorithm>
#include <stdexcept>

namespace kleinian::roots {

using weyl::CrossedElement;

std::vector<std::pair<int, int>> RootContext::positive_roots() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<Rational> RootContext::rho() const {
  std::vector<Rational> r;
  for (int i = 1; i <= n - 1; ++i) r.emplace_back(n - i);
  return r;
}

Rational RootContext::pairing(const std::vector<Rational>& x, int i, int j) const {
  auto coord = [&](int t) { return t <= static_cast<int>(x.size()) ? x[t - 1] : Rational(0); };
  return coord(i) - coord(j);
}

std::vector<Rational> a_vector(const ParamVector& k) {
  const int n = k.n();
  std::vector<Rational> a;
  for (int i = 1; i <= n - 1; ++i) a.push_back((Rational(n - i) + k.at(i)) / n);
  a.emplace_back(0);
  return a;
}

DominanceEvidence is_dominant(const ParamVector& k) {
  const RootContext ctx{k.n()};
  const auto a = a_vector(k);
  std::vector<Rational> k_rho = k.values();
  const auto rho = ctx.rho();
  for (std::size_t i = 0; i < k_rho.size(); ++i) k_rho[i] += rho[i];
  DominanceEvidence ev;
  for (auto [i, j] : ctx.positive_roots()) {
    const Rational ap = a[i - 1] - a[j - 1];
    if (ap.get_den() != 1) continue;
    RootPairing rp{i, j, ap, ctx.pairing(k_rho, i, j)};
    ev.integral_roots.push_back(rp);
    if (rp.k_rho_pairing <= 0) {
      ev.dominant = false;
      ev.culprits.push_back(rp);
    }
  }
  return ev;
}

std::vector<Rational> index_shift(int n, const std::vector<long>& b) {
  if (static_cast<int>(b.size()) != n - 1)
    throw std::invalid_argument("dimension mismatch: b has " + std::to_string(b.size()) + " entries, expected " +
                                std::to_string(n - 1));
  std::vector<Rational> out(n - 1, Rational(0));
  for (int j = 1; j <= n - 1; ++j) {
    const auto w = weyl::w_vector(n, j);
    for (int i = 0; i < n - 1; ++i) out[i] += b[j - 1] * w[i];
  }
  return out;
}

long f_index(const std::vector<long>& b) {
  long f = 0;
  for (std::size_t j = 0; j < b.size(); ++j) f += static_cast<long>(j + 1) * b[j];
  return f;
}

bool fundamental_weights_check(int n) {
  const RootContext ctx{n};
  for (int p = 1; p <= n - 1; ++p) {
    auto w = weyl::w_vector(n, p);
    std::vector<Rational> omega(n);
    for (int i = 0; i < n; ++i) omega[i] = ((i < n - 1 ? w[i] : Rational(0)) - p) / n;
    for (int i = 1; i <= n - 1; ++i) {
      const Rational pr = omega[i - 1] - omega[i];
      if (pr != (i == p ? 1 : 0)) return false;
    }
    // ( w_p, alpha_i ) = n delta_ip
    for (int i = 1; i <= n - 1; ++i)
      if (ctx.pairing(w, i, i + 1) != (i == p ? n : 0)) return false;
  }
  return true;
}

namespace {

MoritaCertificate certify(std::string condition, int p, const std::vector<Rational>& g_roots,
                          const std::vector<Rational>& h_roots, const std::vector<Rational>& left_set,
                          const std::vector<Rational>& right_set, int j_offset, std::mt19937_64& rng) {
  MoritaCertificate c;
  c.condition = std::move(condition);
  c.p = p;
  c.g = QPolynomial::from_roots(g_roots);
  c.h = QPolynomial::from_roots(h_roots);
  c.left_set = left_set;
  c.right_set = right_set;
  const auto eg = extended_gcd(c.g, c.h);
  c.gcd = eg.gcd;
  c.coprime = eg.gcd.degree() == 0;
  c.sets_disjoint = true;
  for (std::size_t i = 0; i < left_set.size() && c.sets_disjoint; ++i)
    for (std::size_t j = 0; j < right_set.size(); ++j)
      if (left_set[i] == right_set[j]) {
        c.sets_disjoint = false;
        c.witness = std::make_pair(static_cast<int>(i + 1), static_cast<int>(j + j_offset));
        c.witness_value = left_set[i];
        break;
      }
  if (c.coprime) {
    c.alpha = eg.s;
    c.beta = eg.t;
    const QPolynomial combo = c.alpha * c.g + c.beta * c.h;
    bool ok = combo == QPolynomial::constant(1);
    for (int t = 0; t < 3; ++t) {
      const Rational x = random_rational(rng, 12, 20);
      c.sample_points.push_back(x);
      ok = ok && c.alpha(x) * c.g(x) + c.beta(x) * c.h(x) == 1;
    }
    c.bezout_verified = ok;
  }
  return c;
}

}  // namespace

std::pair<MoritaCertificate, MoritaCertificate> morita_certificates(const ParamVector& k, int p,
                                                                    std::mt19937_64& rng) {
  const int n = k.n();
  if (p < 1 || p > n - 1)
    throw std::invalid_argument("step p = " + std::to_string(p) + " out of range 1.." + std::to_string(n - 1));
  std::vector<Rational> g_roots, h1_roots, h2_roots, left, right1, right2;
  for (int i = 1; i <= p; ++i) {
    g_roots.push_back(Rational(n - i) + k.at(i));
    left.push_back(Rational(i) - k.at(i));
  }
  for (int j = p + 1; j <= n; ++j) {
    h1_roots.push_back(Rational(n - j) + k.at(j));
    h2_roots.push_back(k.at(j) - j);
    right1.push_back(Rational(j) - k.at(j));
    right2.push_back(Rational(j + n) - k.at(j));
  }
  return {certify("condition-1", p, g_roots, h1_roots, left, right1, p + 1, rng),
          certify("condition-2", p, g_roots, h2_roots, left, right2, p + 1, rng)};
}

MoritaSubstrate morita_substrate(const ParamVector& k, int p) {
  const int n = k.n();
  const ParamVector k1 = k.plus_w(p);
  const CrossedElement e = CrossedElement::idempotent(n, 0);
  const CrossedElement d1 = weyl::d_element(k1);
  std::vector<Rational> g, h, h2;
  for (int i = 1; i <= p; ++i) g.push_back(Rational(i - n) - k.at(i));
  for (int j = p + 1; j <= n; ++j) {
    h.push_back(Rational(j - n) - k.at(j));
    h2.push_back(Rational(j) - k.at(j));
  }
  const CrossedElement b1 = e * weyl::power(d1, p) * CrossedElement::y_power(n, p);
  if (b1 != weyl::theta_product(n, 0, g)) return {false, "e d'^p y^p = e g(theta)"};
  const CrossedElement yd = e * CrossedElement::y_power(n, n - p) * weyl::power(d1, n - p);
  if (yd != weyl::theta_product(n, 0, h)) return {false, "e y^(n-p) d'^(n-p) = e h(theta)"};
  const CrossedElement c2 = CrossedElement::y_power(n, -p) * weyl::power(d1, n - p) * e;
  const CrossedElement b2 = e * CrossedElement::y_power(n, n);
  if (c2 * b2 != weyl::theta_product(n, 0, h2)) return {false, "(y^-p d'^(n-p) e)(e y^n) = e h2(theta)"};
  return {true, ""};
}

HodgesData hodges_data(const ParamVector& k) {
  HodgesData hd;
  hd.n = k.n();
  hd.k = k;
  hd.a = a_vector(k);
  hd.v = QPolynomial::from_roots(hd.a);
  for (int j = 0; j < hd.n; ++j) hd.lambda.push_back(Rational(1, hd.n) + k.at(j) - k.at(j + 1));
  return hd;
}

ParamVector cbh_roundtrip(int n, const std::vector<Rational>& lambda) {
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("dimension mismatch: lambda has " + std::to_string(lambda.size()) +
                                " entries, expected " + std::to_string(n));
  Rational trace = 0;
  for (const auto& l : lambda) trace += l;
  if (trace != 1) throw std::invalid_argument("lambda must have trace 1, got " + to_string(trace));
  std::vector<Rational> k(n - 1);
  Rational prev = 0;
  for (int j = 0; j < n - 1; ++j) {
    prev = prev + Rational(1, n) - lambda[j];
    k[j] = prev;
  }
  return ParamVector(n, std::move(k));
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

ParamVector dot_action(const std::vector<int>& perm, const ParamVector& k) {
  const int n = k.n();
  if (static_cast<int>(perm.size()) != n - 1) throw std::invalid_argument("dot_action: permutation has wrong size");
  const auto rho = RootContext{n}.rho();
  std::vector<Rational> shifted(n - 1), out(n - 1);
  for (int i = 0; i < n - 1; ++i) shifted[i] = k.values()[i] + rho[i];
  for (int i = 0; i < n - 1; ++i) out[perm[i]] = shifted[i];
  for (int i = 0; i < n - 1; ++i) out[i] -= rho[i];
  return ParamVector(n, std::move(out));
}

ParamVector random_params(int n, std::mt19937_64& rng, int max_den, int max_abs) {
  std::vector<Rational> k;
  for (int i = 0; i < n - 1; ++i) k.push_back(random_rational(rng, max_den, max_abs));
  return ParamVector(n, std::move(k));
}

ParamVector random_dominant(int n, std::mt19937_64& rng, int max_den, int max_abs) {
  for (;;) {
    ParamVector k = random_params(n, rng, max_den, max_abs);
    if (is_dominant(k).dominant) return k;
  }
}

}  // namespace kleinian::roots
