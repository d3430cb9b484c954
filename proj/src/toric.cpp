#include "kleinian/toric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kleinian::toric {

long det(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }

long pairing(LatticePoint m, LatticePoint v) { return m.x * v.x + m.y * v.y; }

std::pair<LatticePoint, LatticePoint> Fan::chart_generators(int chart) const {
  if (chart < 0 || chart >= n) throw std::out_of_range("chart index must lie in 0.." + std::to_string(n - 1));
  const Cone& dual = dual_cones[chart];
  return {dual.first, dual.second};
}

Fan build_fan(int n) {
  if (n < 2) throw std::invalid_argument("invalid order n = " + std::to_string(n) + " (need n >= 2)");
  Fan fan;
  fan.n = n;
  for (long i = 0; i <= n; ++i) fan.rays.push_back({1, i});
  for (long i = 1; i <= n; ++i) {
    fan.cones.push_back({fan.rays[i - 1], fan.rays[i]});
    fan.dual_cones.push_back({{i, -1}, {1 - i, 1}});
  }
  return fan;
}

long DivisorSpec::f() const {
  long sum = 0;
  for (int j = 1; j <= n - 1; ++j) sum += j * b_at(j);
  return sum;
}

bool DivisorSpec::nonnegative() const {
  return std::all_of(b.begin(), b.end(), [](long v) { return v >= 0; });
}

std::vector<long> divisor_coefficients_from_basis(int n, const std::vector<long>& b) {
  std::vector<long> c(n + 1, 0);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 0; j <= i - 1; ++j) c[n - j] += (i - j) * b[i - 1];
  return c;
}

std::vector<long> reduce_class(std::vector<long> c) {
  const long m1 = c[0];
  const long m2 = c[1] - c[0];
  for (std::size_t j = 0; j < c.size(); ++j) c[j] -= m1 + static_cast<long>(j) * m2;
  return c;
}

DivisorSpec divisor_spec(int n, const std::vector<long>& b) {
  if (n < 2) throw std::invalid_argument("invalid order n = " + std::to_string(n) + " (need n >= 2)");
  if (static_cast<int>(b.size()) != n - 1)
    throw std::invalid_argument("dimension mismatch: b has " + std::to_string(b.size()) + " entries, expected " +
                                std::to_string(n - 1));
  DivisorSpec spec{n, b, std::vector<long>(n + 1, 0)};
  for (int k = 0; k <= n; ++k)
    for (int j = std::max(1, n + 1 - k); j <= n - 1; ++j) spec.a[k] += (j + k - n) * spec.b_at(j);
  if (reduce_class(divisor_coefficients_from_basis(n, b)) != spec.a)
    throw std::logic_error("divisor_spec: coefficient vector does not represent the class of D(b)");
  return spec;
}

LatticePoint chart_generator(const DivisorSpec& spec, int chart) {
  const int n = spec.n;
  if (chart < 0 || chart >= n) throw std::out_of_range("chart index must lie in 0.." + std::to_string(n - 1));
  LatticePoint m;
  for (int j = n - chart; j <= n - 1; ++j) {
    m.x += (n - j) * spec.b_at(j);
    m.y -= spec.b_at(j);
  }
  return m;
}

LatticePoint chart_generator_from_coefficients(const DivisorSpec& spec, int chart) {
  if (chart < 0 || chart >= spec.n) throw std::out_of_range("chart index must lie in 0.." + std::to_string(spec.n - 1));
  const long i = chart;
  return {i * spec.a[i + 1] - (i + 1) * spec.a[i], spec.a[i] - spec.a[i + 1]};
}

bool in_chart_monoid(int n, int chart, LatticePoint u) {
  if (chart < 0 || chart >= n) throw std::out_of_range("chart index must lie in 0.." + std::to_string(n - 1));
  const long i = chart;
  return pairing(u, {1, i}) >= 0 && pairing(u, {1, i + 1}) >= 0;
}

std::map<series::Monomial2, long> SectionSet::weight_counts() const {
  std::map<series::Monomial2, long> counts;
  for (const auto& m : monomials) ++counts[m.weight(divisor.n)];
  return counts;
}

bool SectionSet::contains(SectionMonomial m) const { return std::binary_search(monomials.begin(), monomials.end(), m); }

bool is_section(const DivisorSpec& spec, SectionMonomial m) {
  for (long j = 0; j <= spec.n; ++j)
    if (m.u1 + j * m.u2 < -spec.a[j]) return false;
  return true;
}

SectionSet enumerate_sections(const DivisorSpec& spec, WeightBox box) {
  if (!spec.nonnegative()) throw std::invalid_argument("section enumeration requires b with nonnegative entries");
  SectionSet out{spec, box, {}};
  const long n = spec.n;
  const long an = spec.a[n];
  for (long r = 0; r <= box.max_r; ++r) {
    const long lo = ceil_div(-an - r, n);
    const long hi = floor_div(box.max_s - r, n);
    for (long u2 = lo; u2 <= hi; ++u2) {
      SectionMonomial m{r, u2};
      if (is_section(spec, m)) out.monomials.push_back(m);
    }
  }
  return out;
}

SectionProduct multiply_section_sets(const SectionSet& lhs, const SectionSet& rhs) {
  if (lhs.divisor.n != rhs.divisor.n) throw std::invalid_argument("multiply_section_sets: different orders n");
  std::vector<long> sum(lhs.divisor.b);
  for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += rhs.divisor.b[j];
  SectionProduct out;
  out.divisor = divisor_spec(lhs.divisor.n, sum);
  out.reliable = {std::min(lhs.box.max_r, rhs.box.max_r),
                  std::min(lhs.box.max_s - rhs.divisor.f(), rhs.box.max_s - lhs.divisor.f())};
  for (const auto& p : lhs.monomials)
    for (const auto& q : rhs.monomials) out.monomials.push_back({p.u1 + q.u1, p.u2 + q.u2});
  std::sort(out.monomials.begin(), out.monomials.end());
  out.monomials.erase(std::unique(out.monomials.begin(), out.monomials.end()), out.monomials.end());
  return out;
}

bool multiplicativity_holds(const SectionProduct& product, SectionMonomial* witness) {
  const int n = product.divisor.n;
  std::vector<SectionMonomial> restricted;
  for (const auto& m : product.monomials) {
    auto w = m.weight(n);
    if (w.r <= product.reliable.max_r && w.s <= product.reliable.max_s) restricted.push_back(m);
  }
  const SectionSet expected = enumerate_sections(product.divisor, product.reliable);
  std::vector<SectionMonomial> diff;
  std::set_symmetric_difference(restricted.begin(), restricted.end(), expected.monomials.begin(),
                                expected.monomials.end(), std::back_inserter(diff));
  if (diff.empty()) return true;
  if (witness) *witness = diff.front();
  return false;
}

std::vector<series::RatFun2> abl_fixed_point_terms(const DivisorSpec& spec) {
  if (!spec.nonnegative()) throw std::invalid_argument("the fixed-point series requires b with nonnegative entries");
  const long n = spec.n;
  std::vector<series::RatFun2> terms;
  for (long i = 0; i < n; ++i) {
    long qexp = 0;
    long texp = 0;
    for (long j = n - i; j <= n - 1; ++j) {
      qexp += (n - j) * spec.b_at(static_cast<int>(j));
      texp -= j * spec.b_at(static_cast<int>(j));
    }
    const series::Monomial2 factors[] = {{i + 1, i + 1 - n}, {-i, n - i}};
    terms.emplace_back(series::LaurentPoly2::monomial({qexp, texp}), factors);
  }
  return terms;
}

series::RatFun2 abl_series(const DivisorSpec& spec) {
  auto terms = abl_fixed_point_terms(spec);
  series::RatFun2 total = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) total = total + terms[i];
  return total;
}

}  // namespace kleinian::toric
