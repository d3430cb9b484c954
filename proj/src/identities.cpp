#include "kleinian/identities.hpp"

namespace kleinian::weyl {
namespace {

using E = CrossedElement;

IdentityCheck make_check(std::string id, std::string params, E lhs, E rhs) {
  IdentityCheck c;
  c.id = std::move(id);
  c.params = std::move(params);
  c.holds = lhs == rhs;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

std::string describe(const ParamVector& k, int p, int q = 0) {
  std::string s = "n=" + std::to_string(k.n()) + " k=" + k.to_string() + " p=" + std::to_string(p);
  if (q) s += " q=" + std::to_string(q);
  return s;
}

// prod_{i} (theta + c_i - sum_j shift(i, j) e_j)
template <class Shift>
E theta_idempotent_product(const ParamVector& k, int lo, int hi, long c_offset, Shift shift) {
  const int n = k.n();
  const E th = theta(n);
  E out = E::one(n);
  for (int i = lo; i <= hi; ++i) {
    E factor = th;
    for (int j = 0; j < n; ++j) factor.add_term({0, 0, j}, Rational(i * c_offset) - shift(i, j));
    out = out * factor;
  }
  return out;
}

}  // namespace

IdentityCheck check_ty1(const ParamVector& lhs_params, const ParamVector& rhs_params, int p) {
  const int n = lhs_params.n();
  E lhs = power(d_element(lhs_params), p) * E::y_power(n, p);
  E rhs = theta_idempotent_product(rhs_params, 1, p, 1, [&](int i, int j) { return rhs_params.at(i + j); });
  return make_check("dpyp-product", describe(lhs_params, p), std::move(lhs), std::move(rhs));
}

std::vector<IdentityCheck> verify_ty(const ParamVector& k, int p) {
  const int n = k.n();
  std::vector<IdentityCheck> out;
  out.push_back(check_ty1(k, k, p));

  const E dp = power(d_element(k), p);
  const E yp = E::y_power(n, p);
  const E dpyp = dp * yp;
  const E ypdp = yp * dp;
  // y^p d^p = prod_{i=0}^{p-1} (theta - i - sum_j k_{j-i} e_j)
  out.push_back(make_check("ypdp-product", describe(k, p), ypdp,
                           theta_idempotent_product(k, 0, p - 1, -1, [&](int i, int j) { return k.at(j - i); })));

  for (int j = 0; j < n; ++j) {
    std::vector<Rational> forward;
    std::vector<Rational> backward;
    for (int i = 1; i <= p; ++i) forward.push_back(Rational(i) - k.at(i + j));
    for (int i = 0; i <= p - 1; ++i) backward.push_back(Rational(-i) - k.at(j - i));
    const E ej = E::idempotent(n, j);
    out.push_back(make_check("dpyp-component[j=" + std::to_string(j) + "]", describe(k, p), ej * dpyp,
                             theta_product(n, j, forward)));
    out.push_back(make_check("ypdp-component[j=" + std::to_string(j) + "]", describe(k, p), ej * ypdp,
                             theta_product(n, j, backward)));
  }
  return out;
}

IdentityCheck check_ty_conjugation(const ParamVector& k, int p) {
  const int n = k.n();
  const ParamVector k1 = k.plus_w(p);
  E lhs = E::y_power(n, p) * E::idempotent(n, 0) * power(d_element(k), n) * E::y_power(n, -p);
  E rhs = E::idempotent(n, p) * power(d_element(k1), n);
  return make_check("dn-conjugation", describe(k, p), std::move(lhs), std::move(rhs));
}

IdentityCheck check_dn_intertwining(const ParamVector& k, int p) {
  const int n = k.n();
  const ParamVector k1 = k.plus_w(p);
  E lhs = E::y_power(n, p) * E::idempotent(n, 0) * power(d_element(k), n);
  E rhs = E::idempotent(n, p) * power(d_element(k1), n) * E::y_power(n, p);
  return make_check("dn-intertwining", describe(k, p), std::move(lhs), std::move(rhs));
}

IdentityCheck check_theta_intertwining(const ParamVector& k, int p) {
  const int n = k.n();
  const ParamVector k1 = k.plus_w(p);
  const E y = E::y_power(n, 1);
  const E lhs = E::y_power(n, p) * E::idempotent(n, 0) * y * d_element(k);
  const E ep_yp = E::idempotent(n, p) * E::y_power(n, p);
  const E base = E::idempotent(n, p) * y * d_element(k1) * E::y_power(n, p);
  // lhs - base = -kappa e_p y^p
  const Rational kappa = -(lhs - base).coefficient({p, 0, 0});
  const E rhs = base - kappa * ep_yp;
  IdentityCheck c = make_check("theta-intertwining", describe(k, p), lhs, rhs);
  c.kappa = kappa;
  return c;
}

std::vector<IdentityCheck> bimodule_identities(const ParamVector& k, int p, int q) {
  const int n = k.n();
  const ParamVector k1 = k.plus_w(p);
  const ParamVector k2 = k.plus_w(q);
  const ParamVector k3 = k1.plus_w(q);
  const E e = E::idempotent(n, 0);
  auto y = [n](long a) { return E::y_power(n, a); };
  auto dpow = [](const ParamVector& params, int m) { return power(d_element(params), m); };

  std::vector<IdentityCheck> out;
  out.push_back(make_check("route-exchange", describe(k, p, q), e * dpow(k3, q) * y(q) * dpow(k1, p) * y(p),
                           e * dpow(k3, p) * y(p) * dpow(k2, q) * y(q)));
  if (p <= q) {
    out.push_back(make_check("yn-generator", describe(k, p, q), e * y(n) * dpow(k1, p) * y(p),
                             e * dpow(k3, p) * y(p + n)));
    std::vector<Rational> shifts;
    for (int i = p + 1; i <= q; ++i) shifts.push_back(Rational(i - n) - k.at(i));
    const E coeff = theta_product(n, 0, shifts);
    out.push_back(make_check("route-membership-1", describe(k, p, q), e * dpow(k3, q) * y(q + n),
                             coeff * e * dpow(k3, p) * y(p) * y(n)));
    out.push_back(make_check("route-membership-2", describe(k, p, q), e * y(n) * dpow(k2, q) * y(q),
                             e * y(n) * dpow(k1, p) * y(p) * coeff));
  }
  return out;
}

std::vector<IdentityCheck> all_identities(const ParamVector& k) {
  const int n = k.n();
  std::vector<IdentityCheck> out;
  for (int p = 1; p <= n; ++p) {
    auto ty = verify_ty(k, p);
    out.insert(out.end(), ty.begin(), ty.end());
  }
  for (int p = 1; p <= n - 1; ++p) {
    out.push_back(check_ty_conjugation(k, p));
    out.push_back(check_dn_intertwining(k, p));
    out.push_back(check_theta_intertwining(k, p));
    for (int q = 1; q <= n - 1; ++q) {
      auto z = bimodule_identities(k, p, q);
      out.insert(out.end(), z.begin(), z.end());
    }
  }
  return out;
}

}  // namespace kleinian::weyl
