#include "kleinian/standard_module.hpp"

#include <random>
#include <stdexcept>

#include "kleinian/windows.hpp"

namespace kleinian::modules {

StandardModule::StandardModule(ParamVector r, int i) : r_(std::move(r)), i_(i) {
  if (i < 0 || i >= r_.n()) throw std::invalid_argument("standard module index out of range");
}

ModuleVector StandardModule::act(const CrossedElement& x, const ModuleVector& v) const {
  const int n = r_.n();
  const Rational ri = top_eigenvalue();
  ModuleVector out;
  for (const auto& [key, c] : x.terms()) {
    for (const auto& [a, coeff] : v) {
      if (mod(a + i_, n) != key.i) continue;
      Rational factor = c * coeff;
      for (long t = 0; t < key.b && factor != 0; ++t) factor *= Rational(a - t) + ri;
      if (factor == 0) continue;
      const long target = a - key.b + key.a;
      auto [it, inserted] = out.try_emplace(target, factor);
      if (!inserted) {
        it->second += factor;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

std::map<long, Rational> StandardModule::series(bool spherical, long max_degree) const {
  std::map<long, Rational> out;
  for (long a = 0; a <= max_degree; ++a)
    if (!spherical || mod(a + i_, r_.n()) == 0) out[a] += 1;
  return out;
}

series::OneVarSeries standard_series_closed_form(int n, int i, bool spherical) {
  if (!spherical) {
    const long f = 1;
    return series::OneVarSeries(series::LaurentPoly1::monomial(0), std::span<const long>(&f, 1));
  }
  const long f = n;
  return series::OneVarSeries(series::LaurentPoly1::monomial(mod(n - i, n)), std::span<const long>(&f, 1));
}

RelationCheck check_module_relations(const StandardModule& m, long max_a, unsigned seed) {
  const ParamVector& r = m.params();
  const int n = r.n();
  const int i = m.index();
  const CrossedElement d = weyl::d_element(r);
  const CrossedElement th = weyl::theta(n);
  const Rational ri = m.top_eigenvalue();

  if (!m.act(d, StandardModule::basis_vector(0)).empty()) return {false, "d eps_i = 0"};
  for (long a = 0; a <= max_a; ++a) {
    const auto v = StandardModule::basis_vector(a);
    ModuleVector expect_d;
    const Rational cd = Rational(a) + ri - r.at(i + a);
    if (a > 0 && cd != 0) expect_d[a - 1] = cd;
    if (m.act(d, v) != expect_d) return {false, "d y^a eps_i closed form at a=" + std::to_string(a)};
    ModuleVector expect_t;
    if (Rational(a) + ri != 0) expect_t[a] = Rational(a) + ri;
    if (m.act(th, v) != expect_t) return {false, "theta eigenvalue at a=" + std::to_string(a)};
    const int j = mod(a + i, n);
    for (int p = 1; p <= n; ++p) {
      const CrossedElement op = CrossedElement::idempotent(n, j) * weyl::power(d, p) * CrossedElement::y_power(n, p);
      Rational scalar = 1;
      for (int t = 1; t <= p; ++t) scalar *= Rational(a + t) + ri - r.at(t + j);
      ModuleVector expect;
      if (scalar != 0) expect[a] = scalar;
      if (m.act(op, v) != expect)
        return {false, "e_j d^p y^p scalar at a=" + std::to_string(a) + " p=" + std::to_string(p)};
    }
  }

  std::mt19937_64 rng(seed);
  auto random_element = [&]() {
    std::uniform_int_distribution<long> ya(0, 2), db(0, 2);
    std::uniform_int_distribution<int> idx(0, n - 1);
    CrossedElement x(n);
    for (int t = 0; t < 3; ++t) x.add_term({ya(rng), db(rng), idx(rng)}, random_rational(rng, 4, 3));
    return x;
  };
  for (int trial = 0; trial < 20; ++trial) {
    const CrossedElement x = random_element();
    const CrossedElement y = random_element();
    for (long a = 0; a <= 3; ++a) {
      const auto v = StandardModule::basis_vector(a);
      if (m.act(x * y, v) != m.act(x, m.act(y, v))) return {false, "action of a product"};
    }
  }
  return {};
}

std::map<long, long> g_module_dims(const ParamVector& r, long lo, long hi, long order_bound) {
  using weyl::EchelonSpace;
  const int n = r.n();
  const CrossedElement d = weyl::d_element(r);
  const CrossedElement e = CrossedElement::idempotent(n, 0);
  std::vector<CrossedElement> dpow{e};
  for (long b = 1; b <= order_bound; ++b) dpow.push_back(d * dpow.back());
  const CrossedElement dn = weyl::power(d, n);
  auto element = [&](long a, long b) { return CrossedElement::y_power(n, a) * dpow[b]; };

  std::map<long, long> dims;
  for (long m = lo; m <= hi; ++m) {
    EchelonSpace image(n);
    for (long b = std::max(0L, -(m + n)); b <= order_bound - n; ++b) image.insert(element(m + n + b, b) * dn);
    EchelonSpace total = image;
    for (long b = std::max(0L, -m); b <= order_bound; ++b) total.insert(element(m + b, b));
    dims[m] = static_cast<long>(total.rank()) - static_cast<long>(image.rank());
  }
  return dims;
}

series::OneVarSeries g_module_series(int n) {
  series::LaurentPoly1 num;
  for (int b = 0; b < n; ++b) num.add_term(-b, 1);
  const long f = 1;
  return series::OneVarSeries(std::move(num), std::span<const long>(&f, 1));
}

}  // namespace kleinian::modules
