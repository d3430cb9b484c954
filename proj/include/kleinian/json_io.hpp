#pragma once

// JSON records shared by the verifiers and the command-line tool. Rationals
// are written as exact fraction strings.

#include <map>
#include <vector>

#include <json.hpp>

#include "kleinian/qpolynomial.hpp"
#include "kleinian/rootmorita.hpp"
#include "kleinian/series.hpp"
#include "kleinian/toric.hpp"
#include "kleinian/windows.hpp"

namespace kleinian::json_io {

using Json = nlohmann::ordered_json;

Json rational_list(const std::vector<Rational>& v);
Json polynomial(const QPolynomial& p);

Json fan(const toric::Fan& f);
Json divisor(const toric::DivisorSpec& d);
/// {n, b, box, monomials: [[u1, u2], ...]}
Json section_set(const toric::SectionSet& s);
/// {numerator: [[r, s, "c"], ...], denominator: [[r, s], ...]} with repeated factors listed repeatedly
Json ratfun(const series::RatFun2& f);
Json truncated(const series::TruncatedSeries2& t);
Json one_var(const series::OneVarSeries& f);
Json coefficient_table(const std::map<long, Rational>& table);

Json element(const weyl::CrossedElement& x);
Json graded_basis(const weyl::GradedSubspaceBasis& b);

Json dominance(const roots::DominanceEvidence& ev);
Json certificate(const roots::MoritaCertificate& c);
Json hodges(const roots::HodgesData& h);

}  // namespace kleinian::json_io
