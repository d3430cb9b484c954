#pragma once

// Exact identity checks between the deformed generators d_k, y and theta.
// Notation: k' = k + w_p, k'' = k + w_q, k''' = k + w_p + w_q, e = e_0.

#include <optional>
#include <string>
#include <vector>

#include "kleinian/weylcross.hpp"

namespace kleinian::weyl {

struct IdentityCheck {
  std::string id;
  std::string params;
  bool holds = false;
  CrossedElement lhs;
  CrossedElement rhs;
  std::optional<Rational> kappa;
};

/// d^p y^p = prod_{i=1}^p (theta + i - sum_j k_{i+j} e_j), left side built from
/// `lhs_params`, right side from `rhs_params` (equal in the honest check).
IdentityCheck check_ty1(const ParamVector& lhs_params, const ParamVector& rhs_params, int p);

/// Both product formulas for d^p y^p and y^p d^p, and their e_j-components.
std::vector<IdentityCheck> verify_ty(const ParamVector& k, int p);

/// y^p e d_k^n y^{-p} = e_p d_{k'}^n
IdentityCheck check_ty_conjugation(const ParamVector& k, int p);
/// y^p e d_k^n = e_p d_{k'}^n y^p
IdentityCheck check_dn_intertwining(const ParamVector& k, int p);
/// y^p e y d_k = e_p (y d_{k'} - kappa) y^p, with kappa read off the difference.
IdentityCheck check_theta_intertwining(const ParamVector& k, int p);

/// e d^q_{k'''} y^q d^p_{k'} y^p = e d^p_{k'''} y^p d^q_{k''} y^q together with,
/// when p <= q, e y^n d^p_{k'} y^p = e d^p_{k'''} y^{p+n} and the two membership
/// identities that express e d^q_{k'''} y^{q+n} and e y^n d^q_{k''} y^q through
/// the other route's generators with theta-polynomial coefficients.
std::vector<IdentityCheck> bimodule_identities(const ParamVector& k, int p, int q);

/// Everything above for every valid p and q.
std::vector<IdentityCheck> all_identities(const ParamVector& k);

}  // namespace kleinian::weyl
