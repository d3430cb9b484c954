#include "kleinian/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "kleinian/identities.hpp"
#include "kleinian/json_io.hpp"
#include "kleinian/standard_module.hpp"
#include "kleinian/windows.hpp"

namespace kleinian::verify {
namespace {

using series::Monomial2;
using weyl::CrossedElement;

Json k_json(const ParamVector& k) { return json_io::rational_list(k.values()); }

VerificationReport start(std::string id, Json params, Json window) {
  VerificationReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.window = std::move(window);
  return r;
}

void fail(VerificationReport& r, std::string witness) {
  if (r.outcome == Outcome::Fail) return;
  r.outcome = Outcome::Fail;
  r.witness = std::move(witness);
}

std::string rat(const Rational& x) { return kleinian::to_string(x); }

void require_nonnegative(const std::vector<long>& b) {
  for (long v : b)
    if (v < 0) throw std::invalid_argument("b must have nonnegative entries");
}

void require_dominant(const ParamVector& k) {
  if (!roots::is_dominant(k).dominant) throw std::invalid_argument("k = " + k.to_string() + " is not dominant");
}

// Compares two coefficient tables on [lo, hi]; returns the first degree that differs.
std::optional<long> first_difference(const std::map<long, Rational>& x, const std::map<long, Rational>& y, long lo,
                                     long hi) {
  auto get = [](const std::map<long, Rational>& t, long m) {
    auto it = t.find(m);
    return it == t.end() ? Rational(0) : it->second;
  };
  for (long m = lo; m <= hi; ++m)
    if (get(x, m) != get(y, m)) return m;
  return std::nullopt;
}

Rational table_at(const std::map<long, Rational>& t, long m) {
  auto it = t.find(m);
  return it == t.end() ? Rational(0) : it->second;
}

std::map<long, Rational> to_table(const std::map<long, long>& dims) {
  std::map<long, Rational> out;
  for (const auto& [m, d] : dims)
    if (d != 0) out[m] = d;
  return out;
}

long integer_shift(const Rational& x) {
  if (x.get_den() != 1) throw std::logic_error("non-integral degree shift " + rat(x));
  return x.get_num().get_si();
}

// sum_{i=0}^{n-1} s^{-i + (r' - r)_{n-i}} p(e M_{r'}(eps_{n-i}), s), measured on realizations.
std::map<long, Rational> assembled_standard_series(const ParamVector& r, const ParamVector& r1, long max_degree) {
  const int n = r.n();
  std::map<long, Rational> out;
  for (int i = 0; i < n; ++i) {
    const int m = mod(n - i, n);
    const long shift = -i + integer_shift(r1.at(m) - r.at(m));
    const modules::StandardModule module(r1, m);
    for (const auto& [deg, c] : module.series(true, max_degree + n)) {
      const long target = deg + shift;
      if (target <= max_degree) out[target] += c;
    }
  }
  return out;
}

std::map<long, Rational> antidiagonal_table(int n, const std::vector<long>& b, long max_degree) {
  const auto h = toric::abl_series(toric::divisor_spec(n, b));
  return series::specialize_antidiagonal(h).times_one_minus(-n).expand(max_degree);
}

std::map<long, Rational> restrict(std::map<long, Rational> t, long lo, long hi) {
  for (auto it = t.begin(); it != t.end();) it = (it->first < lo || it->first > hi) ? t.erase(it) : std::next(it);
  return t;
}

Json table_json(const std::map<long, Rational>& t, long lo, long hi) {
  Json out = Json::array();
  for (long m = lo; m <= hi; ++m) out.push_back(rat(table_at(t, m)));
  return out;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

Json VerificationReport::to_json() const {
  Json out{{"id", id}, {"params", params}, {"window", window}, {"outcome", verify::to_string(outcome)}};
  if (witness) out["witness"] = *witness;
  out["details"] = details;
  return out;
}

// ---------------------------------------------------------------------------

VerificationReport verify_abl(int n, const std::vector<long>& b, long level, bool mutate) {
  auto rep = start("abl", {{"n", n}, {"b", b}, {"mutated", mutate}}, {{"form", {n + 1, 1}}, {"level", level}});
  const auto spec = toric::divisor_spec(n, b);
  auto terms = toric::abl_fixed_point_terms(spec);
  if (mutate) terms[0] = terms[0].times(series::LaurentPoly2::monomial({1, 0}));
  series::RatFun2 h = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) h = h + terms[i];
  const series::LinearForm form{n + 1, 1};
  for (const auto& m : h.denominator_factors())
    if (form(m) == 0) throw std::logic_error("denominator factor with zero functional value");
  const auto expansion = series::expand(h, form, level);

  const long an = spec.a[n];
  const toric::WeightBox box{floor_div(level + an, n + 1), level};
  const auto sections = toric::enumerate_sections(spec, box);
  std::map<Monomial2, Rational> counts;
  for (const auto& [w, c] : sections.weight_counts())
    if (form(w) <= level) counts[w] = c;

  std::set<Monomial2> keys;
  for (const auto& [m, c] : expansion.coefficients) keys.insert(m);
  for (const auto& [m, c] : counts) keys.insert(m);
  for (const auto& m : keys) {
    const Rational lhs = expansion.coefficient(m);
    auto it = counts.find(m);
    const Rational rhs = it == counts.end() ? Rational(0) : it->second;
    if (lhs != rhs) {
      fail(rep, "coefficient of q^" + std::to_string(m.r) + " t^" + std::to_string(m.s) + ": series " + rat(lhs) +
                    ", sections " + rat(rhs));
      break;
    }
  }
  rep.details = {{"compared_weights", keys.size()}, {"sections", sections.monomials.size()},
                 {"section_box", {box.max_r, box.max_s}}};
  return rep;
}

VerificationReport verify_multiplicativity(int n, const std::vector<long>& b, const std::vector<long>& c,
                                           toric::WeightBox box, bool mutate) {
  auto rep = start("multiplicativity", {{"n", n}, {"b", b}, {"c", c}, {"mutated", mutate}},
                   {{"box", {box.max_r, box.max_s}}});
  const auto sb = toric::enumerate_sections(toric::divisor_spec(n, b), box);
  const auto sc = toric::enumerate_sections(toric::divisor_spec(n, c), box);
  auto product = toric::multiply_section_sets(sb, sc);
  if (mutate) {
    auto shifted = product.divisor.b;
    shifted[0] += 1;
    product.divisor = toric::divisor_spec(n, shifted);
  }
  toric::SectionMonomial w;
  if (!toric::multiplicativity_holds(product, &w))
    fail(rep, "x^" + std::to_string(w.u1) + " z^" + std::to_string(w.u2) + " in only one of product and sections(b+c)");

  const auto unit = toric::enumerate_sections(toric::divisor_spec(n, std::vector<long>(n - 1, 0)), {0, 0});
  const bool identity = toric::multiply_section_sets(sb, unit).monomials == sb.monomials;
  if (!identity) fail(rep, "sections(b) * {1} differs from sections(b)");
  rep.details = {{"reliable_box", {product.reliable.max_r, product.reliable.max_s}},
                 {"products", product.monomials.size()},
                 {"unit_law", identity}};
  return rep;
}

VerificationReport verify_identities(const ParamVector& k, bool mutate) {
  const int n = k.n();
  const weyl::Window window{-2L * n, 2L * n, n + 2L};
  auto rep = start("identities", {{"n", n}, {"k", k_json(k)}, {"mutated", mutate}},
                   {{"min_degree", window.min_degree}, {"max_degree", window.max_degree},
                    {"max_order", window.max_order}});
  auto checks = weyl::all_identities(k);
  if (mutate) {
    auto values = k.values();
    values[0] += 1;
    checks.push_back(weyl::check_ty1(k, ParamVector(n, values), 1));
  }
  Json kappa = Json::object();
  std::size_t count = 0;
  for (const auto& c : checks) {
    ++count;
    if (c.kappa) kappa[c.params] = rat(*c.kappa);
    if (!c.holds) fail(rep, c.id + " [" + c.params + "]: lhs " + c.lhs.render() + " ; rhs " + c.rhs.render());
  }
  for (int p = 1; p <= n - 1; ++p) {
    if (!weyl::y_power_shift_holds(k, p, window))
      fail(rep, "y^p eUe vs e_p U' e_p y^p windows differ at p=" + std::to_string(p));
    const auto pbw = weyl::basic_bimodule_pbw_window(k, p, window);
    const auto gen = weyl::compose_bimodules(weyl::basic_bimodule(k, p), window, n);
    if (!weyl::same_span(pbw, gen))
      fail(rep, "basic bimodule spanning set differs from its two-generator description at p=" + std::to_string(p));
  }
  const auto monomial_window = weyl::spherical_window(k, window);
  if (!weyl::same_span(monomial_window, weyl::spherical_pbw_window(k, window)))
    fail(rep, "e[y^n, yd, d^n] window differs from the e y^a d^b window");
  CrossedElement witness;
  if (!weyl::closed_under_products(monomial_window, &witness))
    fail(rep, "spherical window not closed under products: " + witness.render());
  rep.details = {{"identities", count}, {"kappa", kappa}};
  return rep;
}

VerificationReport verify_associativity(int n, std::uint64_t seed, int triples, bool mutate) {
  auto rep = start("associativity", {{"n", n}, {"seed", seed}, {"mutated", mutate}}, {{"triples", triples}});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> ya(-2, 2), db(0, 2);
  std::uniform_int_distribution<int> idx(0, n - 1);
  auto random_element = [&]() {
    CrossedElement x(n);
    for (int t = 0; t < 3; ++t) x.add_term({ya(rng), db(rng), idx(rng)}, random_rational(rng, 5, 4));
    return x;
  };
  for (int t = 0; t < triples; ++t) {
    const auto x = random_element(), y = random_element(), z = random_element();
    if ((x * y) * z != (mutate ? x * (z * y) : x * (y * z))) {
      fail(rep, "(xy)z != x(yz) for x = " + x.render() + ", y = " + y.render() + ", z = " + z.render());
      break;
    }
  }
  return rep;
}

VerificationReport verify_krs(const ParamVector& k, const std::vector<long>& b, long order_bound, bool mutate) {
  const int n = k.n();
  require_nonnegative(b);
  require_dominant(k);
  const long N = order_bound;
  const weyl::Window window{-N, N, N};
  auto rep = start("krs", {{"n", n}, {"k", k_json(k)}, {"b", b}, {"mutated", mutate}},
                   {{"min_degree", -N}, {"max_degree", N}, {"max_order", N}});
  const weyl::BimoduleHandle handle(k, weyl::route_for(b));
  const auto stable = weyl::compose_bimodules_stable(handle, window, n);
  rep.details["slack"] = stable.slack;
  rep.details["stable"] = stable.stable;
  if (!stable.stable) {
    rep.outcome = Outcome::Inconclusive;
    rep.witness = "window did not stabilize between slack " + std::to_string(stable.slack) + " and " +
                  std::to_string(stable.slack + n);
    return rep;
  }
  const auto gr = weyl::gr_space(stable.basis);
  if (!gr.monomial_basis) fail(rep, "a graded piece is not spanned by monomials");
  std::set<std::pair<long, long>> symbols;
  for (const auto& m : gr.monomials) symbols.insert({m.alpha, m.beta});

  const auto spec = toric::divisor_spec(n, b);
  const long f = spec.f() + (mutate ? 1 : 0);
  std::set<std::pair<long, long>> shifted;
  if (N - f >= -spec.a[n]) {
    for (const auto& s : toric::enumerate_sections(spec, {2 * N - f, N - f}).monomials) {
      const auto w = s.weight(n);
      if (w.r - w.s >= -N && w.r - w.s <= N) shifted.insert({w.r + f, w.s + f});
    }
  }
  std::vector<std::pair<long, long>> diff;
  std::set_symmetric_difference(symbols.begin(), symbols.end(), shifted.begin(), shifted.end(),
                                std::back_inserter(diff));
  if (!diff.empty()) {
    const auto [a, bb] = diff.front();
    fail(rep, "u^" + std::to_string(a) + " v^" + std::to_string(bb) + " lies in only " +
                  (symbols.count(diff.front()) ? "the gr side" : "the section side"));
  }

  auto window_set = [&](auto predicate) {
    std::set<std::pair<long, long>> out;
    for (long beta = 0; beta <= N; ++beta)
      for (long alpha = std::max(0L, beta - N); alpha <= beta + N; ++alpha)
        if (mod(alpha - beta, n) == 0 && predicate(alpha, beta)) out.insert({alpha, beta});
    return out;
  };
  if (handle.route().size() == 1) {
    const int p = handle.route()[0];
    const auto two_generators = window_set([&](long a, long bb) { return (a >= p && bb >= p) || a >= n; });
    rep.details["single_step_two_generators"] = two_generators == symbols;
    if (two_generators != symbols) fail(rep, "gr B_p differs from C^G u^p v^p + C^G u^n");
  }
  if (handle.route().empty()) {
    const auto invariants = window_set([](long, long) { return true; });
    rep.details["invariant_monomials"] = invariants == symbols;
    if (invariants != symbols) fail(rep, "gr U_k differs from the invariant monomials");
  }
  rep.details["f"] = spec.f();
  rep.details["gr_monomials"] = symbols.size();
  rep.details["section_monomials"] = shifted.size();
  return rep;
}

VerificationReport verify_obar(const ParamVector& k, const std::vector<long>& b, long max_degree, long order_bound,
                               bool mutate) {
  const int n = k.n();
  require_nonnegative(b);
  require_dominant(k);
  auto rep = start("obar", {{"n", n}, {"k", k_json(k)}, {"b", b}, {"mutated", mutate}},
                   {{"min_degree", -n}, {"max_degree", max_degree}, {"order_bound", order_bound}});
  const weyl::BimoduleHandle handle(k, weyl::route_for(b));
  const auto q = weyl::quotient_dims_mod_dn(handle, -n, max_degree, order_bound, n);
  rep.details["stable"] = q.stable;
  if (!q.stable) {
    rep.outcome = Outcome::Inconclusive;
    rep.witness = "quotient dimensions changed between order " + std::to_string(order_bound) + " and " +
                  std::to_string(order_bound + n);
    return rep;
  }
  auto predicted_b = b;
  if (mutate) predicted_b[0] += 1;
  const auto closed = series::obar_series(n, predicted_b);
  const auto predicted = closed.expand(max_degree);
  const auto measured = to_table(q.dims);
  if (auto m = first_difference(measured, predicted, -n, max_degree))
    fail(rep, "degree " + std::to_string(*m) + ": quotient dimension " + rat(table_at(measured, *m)) +
                  ", closed form " + rat(table_at(predicted, *m)));

  const auto h = toric::abl_series(toric::divisor_spec(n, b));
  const auto via_s = series::specialize_antidiagonal(h).times_one_minus(-n);
  const auto via_t = series::specialize_antidiagonal(h.times_one_minus({0, n}));
  const auto exact = series::obar_series(n, b);
  const bool s_ok = series::ratfun_equal(via_s, exact);
  const bool t_ok = series::ratfun_equal(via_t, exact);
  if (!s_ok) fail(rep, "(1 - s^-n) H(s, 1/s) differs from the closed form");
  if (!t_ok) fail(rep, "((1 - t^n) H)(s, 1/s) differs from the closed form");
  rep.details["series_via_s"] = s_ok;
  rep.details["series_via_t"] = t_ok;
  rep.details["dims"] = table_json(measured, -n, max_degree);
  rep.details["closed_form"] = json_io::one_var(closed);
  return rep;
}

VerificationReport verify_bteng(const ParamVector& k, const std::vector<long>& b, long max_degree,
                                long order_bound, bool mutate) {
  const int n = k.n();
  require_nonnegative(b);
  require_dominant(k);
  auto rep = start("bteng", {{"n", n}, {"k", k_json(k)}, {"b", b}, {"mutated", mutate}},
                   {{"max_degree", max_degree}, {"order_bound", order_bound}});
  const weyl::BimoduleHandle handle(k, weyl::route_for(b));
  const ParamVector r = k;
  const ParamVector r1 = mutate ? r : handle.target();

  Json shifts = Json::array();
  for (int i = 1; i <= n - 1; ++i) {
    long tail = 0;
    for (int j = i; j <= n - 1; ++j) tail += b[j - 1];
    const Rational shift = handle.target().at(i) - r.at(i);
    shifts.push_back(rat(shift));
    if (shift != n * tail) fail(rep, "r'_" + std::to_string(i) + " - r_" + std::to_string(i) + " = " + rat(shift));
  }
  rep.details["shifts"] = shifts;

  for (int m = 0; m < n; ++m) {
    const modules::StandardModule module(r1, m);
    const auto measured = module.series(true, max_degree + n);
    const auto closed = modules::standard_series_closed_form(n, m, true).expand(max_degree + n);
    if (measured != closed) fail(rep, "spherical series of M(eps_" + std::to_string(m) + ") differs from s^i/(1-s^n)");
    const auto rel = modules::check_module_relations(module, 2L * n, 17u + m);
    if (!rel.holds) fail(rep, "standard module M(eps_" + std::to_string(m) + "): " + rel.failed);
  }

  const long g_lo = -(n - 1);
  const long g_hi = std::min<long>(max_degree, 3L * n);
  const auto g_dims = modules::g_module_dims(r, g_lo, g_hi, order_bound);
  const auto g_next = modules::g_module_dims(r, g_lo, g_hi, order_bound + n);
  const auto g_closed = modules::g_module_series(n).expand(g_hi);
  if (g_dims != g_next) {
    rep.outcome = Outcome::Inconclusive;
    rep.witness = "G dimensions not stable in the order bound";
    return rep;
  }
  if (auto m = first_difference(to_table(g_dims), g_closed, g_lo, g_hi))
    fail(rep, "dim G_" + std::to_string(*m) + " differs from the class [G]");

  const auto assembled = assembled_standard_series(r, r1, max_degree);
  const auto closed = series::obar_series(n, b).expand(max_degree);
  if (auto m = first_difference(assembled, closed, 0, max_degree))
    fail(rep, "degree " + std::to_string(*m) + ": assembled " + rat(table_at(assembled, *m)) + ", closed form " +
                  rat(table_at(closed, *m)));

  const auto q = weyl::quotient_dims_mod_dn(handle, 0, max_degree, order_bound, n);
  rep.details["stable"] = q.stable;
  if (!q.stable && rep.outcome == Outcome::Pass) {
    rep.outcome = Outcome::Inconclusive;
    rep.witness = "quotient dimensions not stable in the order bound";
  }
  if (auto m = first_difference(assembled, to_table(q.dims), 0, max_degree))
    fail(rep, "degree " + std::to_string(*m) + ": assembled " + rat(table_at(assembled, *m)) + ", quotient " +
                  std::to_string(q.dims.at(*m)));
  rep.details["assembled"] = table_json(assembled, 0, max_degree);
  return rep;
}

VerificationReport verify_mod_z_chain(const ParamVector& k, const std::vector<long>& b, long max_degree,
                                      long order_bound, bool mutate) {
  const int n = k.n();
  require_nonnegative(b);
  require_dominant(k);
  auto rep = start("mod-z-chain", {{"n", n}, {"k", k_json(k)}, {"b", b}, {"mutated", mutate}},
                   {{"max_degree", max_degree}, {"order_bound", order_bound}});
  const weyl::BimoduleHandle handle(k, weyl::route_for(b));
  const auto q = weyl::quotient_dims_mod_dn(handle, 0, max_degree, order_bound, n);
  rep.details["stable"] = q.stable;
  if (!q.stable) {
    rep.outcome = Outcome::Inconclusive;
    rep.witness = "quotient dimensions not stable in the order bound";
    return rep;
  }
  auto closed_b = b;
  if (mutate) closed_b[0] += 1;
  const std::vector<std::pair<std::string, std::map<long, Rational>>> sources = {
      {"quotient", to_table(q.dims)},
      {"closed_form", series::obar_series(n, closed_b).expand(max_degree)},
      {"standard_modules", assembled_standard_series(k, handle.target(), max_degree)},
      {"antidiagonal", restrict(antidiagonal_table(n, b, max_degree), 0, max_degree)}};
  for (std::size_t x = 0; x < sources.size(); ++x)
    for (std::size_t y = x + 1; y < sources.size(); ++y)
      if (auto m = first_difference(sources[x].second, sources[y].second, 0, max_degree))
        fail(rep, sources[x].first + " and " + sources[y].first + " differ in degree " + std::to_string(*m));
  for (const auto& [name, table] : sources) rep.details[name] = table_json(table, 0, max_degree);
  return rep;
}

VerificationReport verify_hodges(const ParamVector& k, bool mutate) {
  const int n = k.n();
  auto rep = start("hodges", {{"n", n}, {"k", k_json(k)}, {"mutated", mutate}}, Json::object());
  const auto hd = roots::hodges_data(k);
  auto a = hd.a;
  if (mutate) a[0] += 1;
  const CrossedElement e = CrossedElement::idempotent(n, 0);
  const CrossedElement A = e * CrossedElement::y_power(n, n);
  Rational nn = 1;
  for (int i = 0; i < n; ++i) nn *= n;
  const CrossedElement B = e * weyl::power(weyl::d_element(k), n) * (1 / nn);
  const CrossedElement H = e * (weyl::theta(n) + CrossedElement::scalar(n, n)) * Rational(1, n);
  auto v_of = [&](const CrossedElement& x) {
    CrossedElement out = e;
    for (const auto& ai : a) out = out * (x - ai * e);
    return out;
  };
  if (H * A - A * H != A) fail(rep, "HA - AH != A");
  if (H * B - B * H != -B) fail(rep, "HB - BH != -B");
  if (B * A != v_of(H)) fail(rep, "BA != v(H)");
  if (A * B != v_of(H - e)) fail(rep, "AB != v(H - 1)");
  const auto rho = roots::RootContext{n}.rho();
  for (int i = 0; i < n - 1; ++i)
    if (k.values()[i] + rho[i] != n * hd.a[i]) fail(rep, "k + rho != n a");
  rep.details = json_io::hodges(hd);
  return rep;
}

VerificationReport verify_cbh(const ParamVector& k, bool mutate) {
  const int n = k.n();
  auto rep = start("cbh", {{"n", n}, {"k", k_json(k)}, {"mutated", mutate}}, Json::object());
  const auto hd = roots::hodges_data(k);
  auto lambda = hd.lambda;
  Rational trace = 0;
  for (const auto& l : lambda) trace += l;
  if (trace != 1) fail(rep, "trace of lambda is " + rat(trace));
  if (mutate && n >= 2) {
    lambda[0] += 1;
    lambda[1] -= 1;
  }
  const ParamVector back = roots::cbh_roundtrip(n, lambda);
  if (!(back == k)) fail(rep, "roundtrip returned " + back.to_string());
  if (roots::hodges_data(back).lambda != lambda) fail(rep, "lambda of the roundtrip differs");

  const CrossedElement d = weyl::d_element(k);
  const CrossedElement y = CrossedElement::y_power(n, 1);
  const CrossedElement comm = d * y - y * d;
  CrossedElement expected = CrossedElement::one(n);
  for (int j = 0; j < n; ++j) expected.add_term({0, 0, j}, k.at(j) - k.at(j + 1));
  if (comm != expected) fail(rep, "d y - y d = " + comm.render());
  Json coeffs = Json::array(), offsets = Json::array();
  for (int j = 0; j < n; ++j) {
    const Rational c = comm.coefficient({0, 0, j});
    coeffs.push_back(rat(c));
    offsets.push_back(rat(c - hd.lambda[j]));
  }
  rep.details = {{"lambda", json_io::rational_list(hd.lambda)},
                 {"trace", rat(trace)},
                 {"commutator_coefficients", coeffs},
                 {"commutator_minus_lambda", offsets}};
  return rep;
}

VerificationReport verify_morita(const ParamVector& k, int p, std::uint64_t seed, bool mutate) {
  const int n = k.n();
  auto rep = start("morita", {{"n", n}, {"k", k_json(k)}, {"p", p}, {"seed", seed}, {"mutated", mutate}},
                   Json::object());
  std::mt19937_64 rng(seed);
  const auto [c1, c2] = roots::morita_certificates(k, p, rng);
  for (const auto* c : {&c1, &c2}) {
    if (c->coprime != c->sets_disjoint)
      fail(rep, c->condition + ": gcd outcome disagrees with the direct set comparison");
    if (c->coprime && !c->bezout_verified) fail(rep, c->condition + ": Bezout identity did not verify");
    if (!c->coprime && !c->witness) fail(rep, c->condition + ": no collision witness");
  }
  const auto substrate = roots::morita_substrate(k, p);
  if (!substrate.holds) fail(rep, "engine identity failed: " + substrate.failed);

  if (mutate) {
    auto values = k.values();
    values[p - 1] += 1;
    const ParamVector moved(n, values);
    std::mt19937_64 rng2(seed);
    const auto [m1, m2] = roots::morita_certificates(moved, p, rng2);
    const std::pair<const roots::MoritaCertificate*, const roots::MoritaCertificate*> pairs[] = {{&c1, &m1},
                                                                                                 {&c2, &m2}};
    for (const auto& [orig, moved_cert] : pairs) {
      if (orig->coprime) {
        if (orig->alpha * moved_cert->g + orig->beta * moved_cert->h != QPolynomial::constant(1))
          fail(rep, orig->condition + ": certificate does not transfer to the perturbed parameters");
      } else {
        const auto& [i, j] = *orig->witness;
        if (moved_cert->left_set[i - 1] != moved_cert->right_set[j - p - 1])
          fail(rep, orig->condition + ": witness does not transfer to the perturbed parameters");
      }
    }
  }
  rep.details = {{"condition1", json_io::certificate(c1)},
                 {"condition2", json_io::certificate(c2)},
                 {"dominant", json_io::dominance(roots::is_dominant(k))}};
  return rep;
}

VerificationReport verify_dominance(int n, std::uint64_t seed, int samples, bool mutate) {
  auto rep = start("dominance", {{"n", n}, {"seed", seed}, {"mutated", mutate}}, {{"samples", samples}});
  if (!roots::fundamental_weights_check(n)) fail(rep, "(w_p - p 1)/n is not the fundamental weight");
  if (!roots::is_dominant(ParamVector::zero(n)).dominant) fail(rep, "k = 0 is not dominant");
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) {
    ParamVector k = roots::random_dominant(n, rng);
    if (mutate && t == 0) {
      std::vector<Rational> values(n - 1, Rational(0));
      values[0] = -1;
      k = ParamVector(n, values);
    }
    const auto ev = roots::is_dominant(k);
    if (!ev.dominant) {
      fail(rep, "sample k = " + k.to_string() + " is not dominant");
      continue;
    }
    for (int p = 1; p <= n - 1; ++p) {
      const ParamVector k1 = k.plus_w(p);
      const auto ev1 = roots::is_dominant(k1);
      if (!ev1.dominant) fail(rep, "k = " + k.to_string() + " dominant but k + w_" + std::to_string(p) + " is not");
      if (ev1.integral_roots.size() != ev.integral_roots.size())
        fail(rep, "integral roots changed under k -> k + w_" + std::to_string(p));
      for (std::size_t r = 0; r < ev.integral_roots.size() && r < ev1.integral_roots.size(); ++r) {
        const Rational delta = ev1.integral_roots[r].k_rho_pairing - ev.integral_roots[r].k_rho_pairing;
        if (delta != 0 && delta != n) fail(rep, "pairing shifted by " + rat(delta));
      }
    }
  }
  return rep;
}

VerificationReport verify_standard_modules(const ParamVector& r, long max_a, std::uint64_t seed, bool mutate) {
  const int n = r.n();
  auto rep = start("standard-modules", {{"n", n}, {"r", k_json(r)}, {"seed", seed}, {"mutated", mutate}},
                   {{"max_degree", max_a}});
  for (int i = 0; i < n; ++i) {
    const modules::StandardModule m(r, i);
    const auto rel = modules::check_module_relations(m, max_a, static_cast<unsigned>(seed + i));
    if (!rel.holds) fail(rep, "M(eps_" + std::to_string(i) + "): " + rel.failed);
    for (bool spherical : {true, false}) {
      const int compared = mutate ? (i + 1) % n : i;
      const auto closed = modules::standard_series_closed_form(n, compared, spherical).expand(max_a);
      if (m.series(spherical, max_a) != closed)
        fail(rep, std::string(spherical ? "spherical" : "full") + " series of M(eps_" + std::to_string(i) +
                      ") differs from its closed form");
    }
  }
  return rep;
}

}  // namespace kleinian::verify
