#pragma once

// Type A_{n-1} root data attached to a parameter vector k, the dominance test,
// the translation lattice spanned by the w_p, Bezout certificates for the two
// coprimality conditions behind B_p(k) C_p(k) = U_{k'} and C_p(k) B_p(k) = U_k,
// and the parameter dictionaries of Hodges and Crawley-Boevey--Holland.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kleinian/qpolynomial.hpp"
#include "kleinian/weylcross.hpp"

namespace kleinian::roots {

using weyl::ParamVector;

/// Positive roots v_i - v_j (1 <= i < j <= n) of A_{n-1} inside Q^n, with Q^{n-1}
/// embedded as Q^{n-1} x {0} and rho = (n-1, ..., 1).
struct RootContext {
  int n = 0;

  std::vector<std::pair<int, int>> positive_roots() const;
  std::vector<Rational> rho() const;
  /// (x, v_i - v_j) for x in Q^{n-1} (coordinate n is zero), 1-based indices.
  Rational pairing(const std::vector<Rational>& x, int i, int j) const;
};

struct RootPairing {
  int i = 0;
  int j = 0;
  Rational a_pairing;    // (a, v_i - v_j)
  Rational k_rho_pairing;  // (k + rho, v_i - v_j)
};

struct DominanceEvidence {
  bool dominant = true;
  std::vector<RootPairing> integral_roots;  // Phi_a intersected with Phi^+
  std::vector<RootPairing> culprits;        // those with (k + rho, alpha) <= 0
};

/// a_i = (n - i + k_i)/n for i < n, a_n = 0 (length n).
std::vector<Rational> a_vector(const ParamVector& k);
DominanceEvidence is_dominant(const ParamVector& k);

/// F(b) = sum_j b_j w_j
std::vector<Rational> index_shift(int n, const std::vector<long>& b);
/// f(b) = sum_j j b_j
long f_index(const std::vector<long>& b);
/// (w_p - p 1)/n paired with alpha_i is delta_{ip} for all 1 <= i, p <= n-1.
bool fundamental_weights_check(int n);

struct MoritaCertificate {
  std::string condition;  // "condition-1" or "condition-2"
  int p = 0;
  QPolynomial g;
  QPolynomial h;
  QPolynomial gcd;
  bool coprime = false;
  QPolynomial alpha;  // alpha g + beta h = 1 when coprime
  QPolynomial beta;
  bool bezout_verified = false;  // exact identity plus evaluation at the sample points
  std::vector<Rational> sample_points;
  std::optional<std::pair<int, int>> witness;  // (i, j) with equal values
  Rational witness_value;
  std::vector<Rational> left_set;
  std::vector<Rational> right_set;
  bool sets_disjoint = false;  // independent direct comparison
};

/// condition-1: g = prod_{i<=p} (x + i - n - k_i), h = prod_{p<j<=n} (x + j - n - k_j);
/// condition-2: the same g against prod_{p<j<=n} (x + j - k_j).
std::pair<MoritaCertificate, MoritaCertificate> morita_certificates(const ParamVector& k, int p,
                                                                    std::mt19937_64& rng);

struct MoritaSubstrate {
  bool holds = false;
  std::string failed;  // name of the first identity that failed
};

/// In the engine: e d_{k'}^p y^p = e g(theta), e y^{n-p} d_{k'}^{n-p} = e h(theta),
/// and (y^{-p} d_{k'}^{n-p} e)(e y^n) = e h2(theta) for the condition-2 polynomial h2.
MoritaSubstrate morita_substrate(const ParamVector& k, int p);

struct HodgesData {
  int n = 0;
  ParamVector k;
  std::vector<Rational> a;       // a_1 .. a_n
  QPolynomial v;                 // prod (x - a_i)
  std::vector<Rational> lambda;  // lambda_0 .. lambda_{n-1}
};

HodgesData hodges_data(const ParamVector& k);
/// Unique k with lambda_j = 1/n + k_j - k_{j+1}, k_0 = 0. Throws
/// std::invalid_argument unless sum lambda_j = 1.
ParamVector cbh_roundtrip(int n, const std::vector<Rational>& lambda);

/// s . k = s(k + rho) - rho with s(x)_{s(i)} = x_i; perm[i] = s(i), 0-based, on n-1 letters.
ParamVector dot_action(const std::vector<int>& perm, const ParamVector& k);
std::vector<int> inverse_permutation(const std::vector<int>& perm);

/// Random rational k with denominators <= max_den that passes is_dominant.
ParamVector random_dominant(int n, std::mt19937_64& rng, int max_den = 6, int max_abs = 3);
ParamVector random_params(int n, std::mt19937_64& rng, int max_den = 6, int max_abs = 3);

}  // namespace kleinian::roots
