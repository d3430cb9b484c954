#pragma once

// The minimal toric resolution X of C^2/Z_n: fan, torus-invariant divisors
// D(b), chart generators, lattice-point sections and the fixed-point
// Poincare series.
//
// Chart convention: a chart index i in {0..n-1} always means the chart X_{i+1}
// of the cone sigma_{i+1} = cone(v_i, v_{i+1}), with coordinate ring
// C[x^{i+1} z^{-1}, x^{-i} z].

#include <map>
#include <utility>
#include <vector>

#include "kleinian/series.hpp"

namespace kleinian::toric {

struct LatticePoint {
  long x = 0;
  long y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

long det(LatticePoint a, LatticePoint b);
long pairing(LatticePoint m, LatticePoint v);

struct Cone {
  LatticePoint first;
  LatticePoint second;
};

struct Fan {
  int n = 0;
  std::vector<LatticePoint> rays;        // v_0 .. v_n
  std::vector<Cone> cones;               // cones[i-1] = sigma_i = cone(v_{i-1}, v_i), i = 1..n
  std::vector<Cone> dual_cones;          // dual_cones[i-1] = ((i, -1), (1 - i, 1))

  /// Exponents of the two generators of the coordinate ring of chart X_{chart+1}.
  std::pair<LatticePoint, LatticePoint> chart_generators(int chart) const;
};

/// Throws std::invalid_argument for n < 2.
Fan build_fan(int n);

struct DivisorSpec {
  int n = 0;
  std::vector<long> b;  // b_1 .. b_{n-1}, stored 0-based
  std::vector<long> a;  // a_0 .. a_n

  long b_at(int j) const { return b[j - 1]; }
  /// f(b) = sum j b_j, which equals a_n.
  long f() const;
  bool nonnegative() const;
};

/// a_k = sum_{j=n+1-k}^{n-1} (j + k - n) b_j. Throws std::invalid_argument on a
/// length mismatch and std::logic_error if the result disagrees with the
/// reduced class of sum b_i D(i).
DivisorSpec divisor_spec(int n, const std::vector<long>& b);

/// Ray coefficients c_0..c_n of sum_i b_i D(i), with D(i) = sum_{j<i} (i-j) D_{n-j}.
std::vector<long> divisor_coefficients_from_basis(int n, const std::vector<long>& b);

/// Subtracts the principal divisor of x^{m1} z^{m2} that clears c_0 and c_1.
std::vector<long> reduce_class(std::vector<long> c);

/// Generator x^{m1} z^{m2} of O(D(b)) on chart X_{chart+1}, from the b-sums.
LatticePoint chart_generator(const DivisorSpec& spec, int chart);
/// The same generator from the a-coefficients: (i a_{i+1} - (i+1) a_i, a_i - a_{i+1}).
LatticePoint chart_generator_from_coefficients(const DivisorSpec& spec, int chart);

/// Whether the exponent vector lies in sigma_{chart+1}^dual.
bool in_chart_monoid(int n, int chart, LatticePoint u);

struct WeightBox {
  long max_r = 0;
  long max_s = 0;
  friend bool operator==(const WeightBox&, const WeightBox&) = default;
};

struct SectionMonomial {
  long u1 = 0;
  long u2 = 0;
  /// (r, s) = (u1, u1 + n u2)
  series::Monomial2 weight(int n) const { return {u1, u1 + n * u2}; }
  friend auto operator<=>(const SectionMonomial&, const SectionMonomial&) = default;
};

struct SectionSet {
  DivisorSpec divisor;
  WeightBox box;
  std::vector<SectionMonomial> monomials;  // sorted, distinct

  std::map<series::Monomial2, long> weight_counts() const;
  bool contains(SectionMonomial m) const;
};

/// u1 + j u2 >= -a_j for all 0 <= j <= n
bool is_section(const DivisorSpec& spec, SectionMonomial m);

/// All global sections with weight r <= max_r, s <= max_s. Requires b >= 0
/// (std::invalid_argument otherwise).
SectionSet enumerate_sections(const DivisorSpec& spec, WeightBox box);

struct SectionProduct {
  DivisorSpec divisor;                      // D(b + c)
  WeightBox reliable;                       // every section of D(b + c) here factors within the input boxes
  std::vector<SectionMonomial> monomials;   // all pairwise products, sorted, distinct
};

SectionProduct multiply_section_sets(const SectionSet& lhs, const SectionSet& rhs);

/// Products inside the reliable box compared with enumerate_sections(b + c).
/// On failure `witness` receives the first monomial in the symmetric difference.
bool multiplicativity_holds(const SectionProduct& product, SectionMonomial* witness = nullptr);

/// Fixed-point contributions q^{sum (n-j) b_j} t^{-sum j b_j} / ((1 - q^{i+1} t^{i+1-n})(1 - q^{-i} t^{n-i})),
/// sums over n-i <= j <= n-1,
/// indexed by the chart i = 0..n-1. Requires b >= 0.
std::vector<series::RatFun2> abl_fixed_point_terms(const DivisorSpec& spec);
series::RatFun2 abl_series(const DivisorSpec& spec);

}  // namespace kleinian::toric
