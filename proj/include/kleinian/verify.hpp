#pragma once

// Verifiers: each one runs a statement at a stated truncation and returns a
// report with a finite witness on failure. Passing `mutate = true` runs the
// same pipeline on a deliberately corrupted input, which must fail.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kleinian/rootmorita.hpp"
#include "kleinian/toric.hpp"
#include "kleinian/weylcross.hpp"

namespace kleinian::verify {

using Json = nlohmann::ordered_json;
using weyl::ParamVector;

enum class Outcome { Pass, Fail, Inconclusive };
std::string to_string(Outcome o);

struct VerificationReport {
  std::string id;
  Json params = Json::object();
  Json window = Json::object();
  Outcome outcome = Outcome::Pass;
  std::optional<std::string> witness;
  Json details = Json::object();

  bool passed() const { return outcome == Outcome::Pass; }
  Json to_json() const;
};

/// Expansion of the fixed-point series along l = (n+1, 1) up to `level` against section counts.
VerificationReport verify_abl(int n, const std::vector<long>& b, long level, bool mutate = false);

/// Products of section sets against sections of D(b + c) on the reliable box.
VerificationReport verify_multiplicativity(int n, const std::vector<long>& b, const std::vector<long>& c,
                                           toric::WeightBox box, bool mutate = false);

/// Every identity of identities.hpp plus the windowed y^p eUe = e_p U' e_p y^p and
/// the two descriptions of the basic bimodules.
VerificationReport verify_identities(const ParamVector& k, bool mutate = false);

/// (xy)z = x(yz) on random triples. The mutated run compares (xy)z with x(zy).
VerificationReport verify_associativity(int n, std::uint64_t seed, int triples, bool mutate = false);

/// gr of the composite bimodule for F(b) against x^{f(b)} H^0(X, O(D(b))).
/// Throws std::invalid_argument unless k is dominant and b >= 0.
VerificationReport verify_krs(const ParamVector& k, const std::vector<long>& b, long order_bound,
                              bool mutate = false);

/// Quotient dimensions modulo d^n against the closed form, plus both series-level derivations.
VerificationReport verify_obar(const ParamVector& k, const std::vector<long>& b, long max_degree, long order_bound,
                               bool mutate = false);

/// Standard-module assembly of B(b) (x) eG against the closed form and the quotient dimensions.
VerificationReport verify_bteng(const ParamVector& k, const std::vector<long>& b, long max_degree,
                                long order_bound, bool mutate = false);

/// Pairwise agreement of quotient dims, closed form, standard-module assembly and the antidiagonal.
VerificationReport verify_mod_z_chain(const ParamVector& k, const std::vector<long>& b, long max_degree,
                                      long order_bound, bool mutate = false);

/// HA - AH = A, HB - BH = -B, BA = v(H), AB = v(H - 1) in e Q e.
VerificationReport verify_hodges(const ParamVector& k, bool mutate = false);

/// lambda <-> k roundtrip, trace one, and the commutator d y - y d.
VerificationReport verify_cbh(const ParamVector& k, bool mutate = false);

VerificationReport verify_morita(const ParamVector& k, int p, std::uint64_t seed, bool mutate = false);

/// k = 0 dominant, and k + w_p dominant for random dominant k and every p.
VerificationReport verify_dominance(int n, std::uint64_t seed, int samples, bool mutate = false);

/// Relation checks and spherical series of every M_r(eps_i). The mutated run
/// compares M(eps_i) with the closed form of M(eps_{i+1}).
VerificationReport verify_standard_modules(const ParamVector& r, long max_a, std::uint64_t seed,
                                           bool mutate = false);

}  // namespace kleinian::verify
