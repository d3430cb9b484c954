#pragma once

// Graded standard modules M_r(eps_i) = H_r (x)_{C[d]*Z_n} C eps_i realized on
// the basis y^a eps_i (a >= 0), and the module G = H_r e (x)_{C[d^n]} C.
//
// The realization sits inside the Q-module spanned by y^a eps_i, a in Z, where
// del (y^a eps_i) = (a + r_i) y^{a-1} eps_i and e_j (y^a eps_i) = delta_{j, a+i} y^a eps_i;
// theta then acts on y^a eps_i by a + r_i and d_r (eps_i) = 0.

#include <map>
#include <string>

#include "kleinian/series.hpp"
#include "kleinian/weylcross.hpp"

namespace kleinian::modules {

using weyl::CrossedElement;
using weyl::ParamVector;

using ModuleVector = std::map<long, Rational>;  // a -> coefficient of y^a eps_i

class StandardModule {
 public:
  StandardModule(ParamVector r, int i);

  const ParamVector& params() const { return r_; }
  int index() const { return i_; }
  /// r_i, the theta-eigenvalue on eps_i
  Rational top_eigenvalue() const { return r_.at(i_); }

  ModuleVector act(const CrossedElement& x, const ModuleVector& v) const;
  static ModuleVector basis_vector(long a) { return {{a, Rational(1)}}; }

  /// Counts of basis vectors y^a eps_i, a <= max_degree; spherical restricts to a + i = 0 mod n.
  std::map<long, Rational> series(bool spherical, long max_degree) const;

 private:
  ParamVector r_;
  int i_;
};

/// s^{(n - i) mod n} / (1 - s^n) for the spherical part, 1/(1 - s) otherwise.
series::OneVarSeries standard_series_closed_form(int n, int i, bool spherical);

struct RelationCheck {
  bool holds = true;
  std::string failed;
};

/// On y^a eps_i for a <= max_a: d_r y^a eps_i = (a + r_i - r_{i+a}) y^{a-1} eps_i, d_r eps_i = 0,
/// theta y^a eps_i = (a + r_i) y^a eps_i, e_j d_r^p y^p acts by prod_{t=1}^p (a + r_i + t - r_{t+j})
/// on its e_j-component (1 <= p <= n), and act(x*y) = act(x) act(y) on random products.
RelationCheck check_module_relations(const StandardModule& m, long max_a, unsigned seed);

/// dim of (H_r e)_m / (H_r e d^n)_m from the order <= L window, degrees in [lo, hi].
std::map<long, long> g_module_dims(const ParamVector& r, long lo, long hi, long order_bound);

/// (1 + s^{-1} + ... + s^{-(n-1)}) / (1 - s), the class [G] = [M(eps_0)] + sum_i [M(eps_{n-i})[-i]].
series::OneVarSeries g_module_series(int n);

}  // namespace kleinian::modules
