#pragma once

// Finite (degree, order) windows into the spherical algebras U_k = e H_k e and
// the translation bimodules between them, the associated graded symbols, and
// the quotient modulo right multiplication by d^n.
//
// Degree of y^a del^b e_i is a - b; order is b.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kleinian/weylcross.hpp"

namespace kleinian::weyl {

/// Exact row reduction over Q with pivots chosen as the PivotOrder-largest
/// term, so that rows with pivot order <= N span the order <= N part.
class EchelonSpace {
 public:
  using Row = std::map<TermKey, Rational, PivotOrder>;

  explicit EchelonSpace(int n) : n_(n) {}

  /// Adds x to the span; returns true if it was independent.
  bool insert(const CrossedElement& x);
  bool contains(const CrossedElement& x) const;
  std::size_t rank() const { return rows_.size(); }
  /// Rows whose pivot has order <= max_order.
  std::size_t rank_up_to(long max_order) const;
  std::vector<CrossedElement> basis(long max_order) const;
  const std::map<TermKey, Row, PivotOrder>& rows() const { return rows_; }

 private:
  Row reduce(Row v) const;
  int n_;
  std::map<TermKey, Row, PivotOrder> rows_;  // keyed by pivot
};

struct Window {
  long min_degree = 0;
  long max_degree = 0;
  long max_order = 0;
};

struct GradedSubspaceBasis {
  int n = 0;
  std::string context;
  Window window;
  std::map<long, std::vector<CrossedElement>> pieces;  // degree -> basis of the order <= max_order part

  std::size_t dimension(long degree) const;
  std::map<long, std::size_t> dimensions() const;
};

/// Same spans degree by degree.
bool same_span(const GradedSubspaceBasis& x, const GradedSubspaceBasis& y);

/// e (y^n)^alpha (y d_k)^beta (d_k^n)^gamma with order beta + n gamma <= N.
GradedSubspaceBasis spherical_window(const ParamVector& k, Window window);
/// e y^a d_k^b with a = b mod n.
GradedSubspaceBasis spherical_pbw_window(const ParamVector& k, Window window);
/// Products of window elements whose order and degree stay inside the window
/// lie in the window span. On failure `witness` gets the offending product.
bool closed_under_products(const GradedSubspaceBasis& basis, CrossedElement* witness = nullptr);

/// Composite bimodule B(r_s, r_{s-1}) ... B(r_1, r_0), r_0 = source, r_t = r_{t-1} + w_{route[t-1]}.
class BimoduleHandle {
 public:
  BimoduleHandle(ParamVector source, std::vector<int> route);

  const ParamVector& source() const { return source_; }
  const std::vector<int>& route() const { return route_; }
  ParamVector target() const { return chain().back(); }
  /// r_0, ..., r_s
  std::vector<ParamVector> chain() const;
  /// Per step t: (e d_{r_t}^{p_t} y^{p_t}, e y^n), the generators of B(r_t, r_{t-1}) over U_{r_t}.
  std::vector<std::pair<CrossedElement, CrossedElement>> generators() const;
  std::string describe() const;

 private:
  ParamVector source_;
  std::vector<int> route_;
};

/// Throws std::invalid_argument unless 1 <= p <= n-1.
BimoduleHandle basic_bimodule(const ParamVector& k, int p);
/// Steps for F(b): b_j copies of w_j, ascending in j.
std::vector<int> route_for(const std::vector<long>& b);

/// All 2^s products g_s ... g_1 with g_t one of the two step-t generators; {e} for the empty route.
std::vector<CrossedElement> generator_words(const BimoduleHandle& handle);

/// e y^a d_{k'}^b y^p with b = a + p mod n: the spanning set of e H_{k'} e_p y^p.
GradedSubspaceBasis basic_bimodule_pbw_window(const ParamVector& k, int p, Window window);

/// Window of U_{r_s} * span(generator words), generated with left factors of
/// order up to max_order + slack, then cut to order <= max_order.
GradedSubspaceBasis compose_bimodules(const BimoduleHandle& handle, Window window, long slack);

struct StableWindow {
  GradedSubspaceBasis basis;
  bool stable = false;
  long slack = 0;
};

/// Generates at slack and slack + n and reports whether the two agree.
StableWindow compose_bimodules_stable(const BimoduleHandle& handle, Window window, long slack);

/// y^p * (spherical window of k) against e_p * (spherical window of k + w_p) * y^p.
bool y_power_shift_holds(const ParamVector& k, int p, Window window);

struct GrMonomial {
  long alpha = 0;  // power of u
  long beta = 0;   // power of v
  int i = 0;
  friend auto operator<=>(const GrMonomial&, const GrMonomial&) = default;
};

/// Top-order part, y^a del^b e_i -> u^a v^b e_i. Throws std::invalid_argument on zero.
std::map<GrMonomial, Rational> gr_symbol(const CrossedElement& x);

struct GrSpace {
  std::set<GrMonomial> monomials;
  /// Whether every graded piece is spanned by the listed monomials themselves.
  bool monomial_basis = true;
};

GrSpace gr_space(const GradedSubspaceBasis& basis);

struct QuotientDims {
  std::map<long, long> dims;        // at the requested order bound N
  std::map<long, long> dims_next;   // at N + n
  bool stable = false;
};

/// dim of B_m / (B_{m+n} e d_{r_0}^n) in each degree of the window, computed
/// from the order <= N window and certified against order <= N + n.
QuotientDims quotient_dims_mod_dn(const BimoduleHandle& handle, long min_degree, long max_degree, long order_bound,
                                  long slack);

}  // namespace kleinian::weyl
