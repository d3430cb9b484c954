#include "kleinian/json_io.hpp"

namespace kleinian::json_io {

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json polynomial(const QPolynomial& p) {
  return Json{{"text", p.to_string()}, {"coefficients", rational_list(p.coefficients())}};
}

Json fan(const toric::Fan& f) {
  Json rays = Json::array(), cones = Json::array(), duals = Json::array(), charts = Json::array();
  for (const auto& r : f.rays) rays.push_back({r.x, r.y});
  for (const auto& c : f.cones) cones.push_back({{c.first.x, c.first.y}, {c.second.x, c.second.y}});
  for (const auto& c : f.dual_cones) duals.push_back({{c.first.x, c.first.y}, {c.second.x, c.second.y}});
  for (int i = 0; i < f.n; ++i) {
    auto [g1, g2] = f.chart_generators(i);
    charts.push_back({{"chart", i}, {"generators", {{g1.x, g1.y}, {g2.x, g2.y}}}});
  }
  Json dets = Json::array();
  for (const auto& c : f.cones) dets.push_back(toric::det(c.first, c.second));
  return Json{{"n", f.n}, {"rays", rays}, {"cones", cones}, {"determinants", dets},
              {"dual_cones", duals}, {"charts", charts}};
}

Json divisor(const toric::DivisorSpec& d) { return Json{{"n", d.n}, {"b", d.b}, {"a", d.a}, {"f", d.f()}}; }

Json section_set(const toric::SectionSet& s) {
  Json mons = Json::array();
  for (const auto& m : s.monomials) mons.push_back({m.u1, m.u2});
  return Json{{"n", s.divisor.n},
              {"b", s.divisor.b},
              {"box", {{"max_r", s.box.max_r}, {"max_s", s.box.max_s}}},
              {"monomials", mons}};
}

Json ratfun(const series::RatFun2& f) {
  Json num = Json::array(), den = Json::array();
  for (const auto& [m, c] : f.numerator().terms()) num.push_back({m.r, m.s, to_string(c)});
  for (const auto& m : f.denominator_factors()) den.push_back({m.r, m.s});
  return Json{{"numerator", num}, {"denominator", den}};
}

Json truncated(const series::TruncatedSeries2& t) {
  Json coeffs = Json::array();
  for (const auto& [m, c] : t.coefficients) coeffs.push_back({m.r, m.s, to_string(c)});
  return Json{{"form", {t.form.cr, t.form.cs}}, {"level", t.level}, {"coefficients", coeffs}};
}

Json one_var(const series::OneVarSeries& f) {
  Json num = Json::array();
  for (const auto& [e, c] : f.numerator().terms()) num.push_back({e, to_string(c)});
  return Json{{"numerator", num}, {"denominator", f.denominator_factors()}};
}

Json coefficient_table(const std::map<long, Rational>& table) {
  Json out = Json::array();
  for (const auto& [e, c] : table) out.push_back({e, to_string(c)});
  return out;
}

Json element(const weyl::CrossedElement& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms()) terms.push_back({key.a, key.b, key.i, to_string(c)});
  return Json{{"n", x.n()}, {"terms", terms}, {"text", x.render()}};
}

Json graded_basis(const weyl::GradedSubspaceBasis& b) {
  Json pieces = Json::array();
  for (const auto& [deg, elems] : b.pieces) {
    Json list = Json::array();
    for (const auto& x : elems) list.push_back(element(x)["terms"]);
    pieces.push_back({{"degree", deg}, {"dimension", elems.size()}, {"basis", list}});
  }
  return Json{{"context", b.context},
              {"window",
               {{"min_degree", b.window.min_degree},
                {"max_degree", b.window.max_degree},
                {"max_order", b.window.max_order}}},
              {"pieces", pieces}};
}

namespace {
Json root_pairing(const roots::RootPairing& r) {
  return Json{{"root", {r.i, r.j}}, {"a_pairing", to_string(r.a_pairing)},
              {"k_rho_pairing", to_string(r.k_rho_pairing)}};
}
}  // namespace

Json dominance(const roots::DominanceEvidence& ev) {
  Json integral = Json::array(), culprits = Json::array();
  for (const auto& r : ev.integral_roots) integral.push_back(root_pairing(r));
  for (const auto& r : ev.culprits) culprits.push_back(root_pairing(r));
  return Json{{"ok", ev.dominant}, {"integral_positive_roots", integral}, {"culprits", culprits}};
}

Json certificate(const roots::MoritaCertificate& c) {
  Json out{{"condition", c.condition},
           {"p", c.p},
           {"ok", c.coprime},
           {"g", c.g.to_string()},
           {"h", c.h.to_string()},
           {"gcd", c.gcd.to_string()},
           {"left_set", rational_list(c.left_set)},
           {"right_set", rational_list(c.right_set)},
           {"sets_disjoint", c.sets_disjoint}};
  if (c.coprime) {
    out["certificate"] = {{"alpha", c.alpha.to_string()},
                          {"beta", c.beta.to_string()},
                          {"verified", c.bezout_verified},
                          {"sample_points", rational_list(c.sample_points)}};
  }
  if (c.witness) out["witness"] = {{"i", c.witness->first}, {"j", c.witness->second}, {"value", to_string(c.witness_value)}};
  return out;
}

Json hodges(const roots::HodgesData& h) {
  return Json{{"n", h.n}, {"k", rational_list(h.k.values())}, {"a", rational_list(h.a)},
              {"v", h.v.to_string()}, {"lambda", rational_list(h.lambda)}};
}

}  // namespace kleinian::json_io
