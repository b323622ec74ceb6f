#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "slicedeg/knot_model.hpp"
#include "slicedeg/lattice.hpp"
#include "slicedeg/rational.hpp"
#include "slicedeg/staircase.hpp"

namespace slicedeg {

// beta <= k - sum |a_i| failed.
struct BetaWitness {
  std::string source;  // "s_0", "s_2", "2tau", "2nu+"
  std::int64_t beta = 0;
  std::int64_t rhs = 0;
};

// sum lambda_i^2 - n >= 8 V_j failed.
struct VsWitness {
  OddVector lambda;
  std::int64_t j = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

// Gamma_K(i) <= 2 kappa_min failed.
struct GammaWitness {
  std::vector<std::int64_t> c;
  Rational kappa;
  std::int64_t index = 0;
  std::string eta;
  Rational gamma;
};

struct NullClassWitness {
  std::string reason;
};

// s(K') > k - sqrt(k) for a k-special friend K'.
struct FriendWitness {
  std::int64_t k = 0;
  std::string friend_name;
  std::int64_t friend_s = 0;
};

using Witness = std::variant<std::monostate, BetaWitness, VsWitness, GammaWitness, NullClassWitness, FriendWitness>;

struct Verdict {
  bool obstructed = false;
  Witness witness;
  std::string note;  // why a check could not conclude, if it is informative

  static Verdict pass(std::string note = {}) { return {false, std::monostate{}, std::move(note)}; }
  static Verdict kill(Witness w) { return {true, std::move(w), {}}; }
};

std::string describe(const Verdict& v);

// An invariant obeying beta(K) <= sum a_i^2 - sum |a_i| for every disk:
// s_p for each characteristic, 2 tau and 2 nu_+.
struct BetaSource {
  std::string label;
  std::int64_t value = 0;
};

Verdict beta_adjunction(const HomologyClass& cls, std::int64_t beta, std::string source = "beta");

// Smallest integer k >= s with k - sqrt(k) >= s, i.e. ceil(s + 1/2 + sqrt(s + 1/4)); 0 for s <= 0.
std::int64_t stau_bound(std::int64_t s);

Verdict vs_obstruction(const HomologyClass& cls, const VsSequence& v);
// Same check with the lambda box enlarged (stability probe).
Verdict vs_obstruction_widened(const HomologyClass& cls, const VsSequence& v, std::int64_t widen);

// `a` and `c` are raw coordinate vectors (any order, any sign).
Verdict gamma_general(std::span<const std::int64_t> a, std::span<const std::int64_t> c, std::int64_t sigma,
                      const std::map<std::int64_t, Rational>& gamma);
Verdict gamma_general(const HomologyClass& cls, std::int64_t sigma, const std::map<std::int64_t, Rational>& gamma);

// Class (2 x p, 1 x q): Gamma_K(-sigma/2) <= p/2 + q/8.
Verdict gamma_21(std::int64_t p, std::int64_t q, std::int64_t sigma, const std::map<std::int64_t, Rational>& gamma);

// Gamma_{D_{m,n}}(1) = (2m - 1)(2n - 1) / (4mn - 1)
Rational double_twist_gamma(std::int64_t m, std::int64_t n);

// Invariants of one knot gathered for the obstruction battery.
struct KnotFacts {
  std::int64_t signature = 0;
  std::vector<BetaSource> betas;
  std::optional<VsSequence> vs;
  std::map<std::int64_t, Rational> gamma;
  std::vector<FriendshipRecord> friends;
};

// Throws OracleDisagreement or DataError when the stored V_s data is
// inconsistent; missing V_s data is simply absent.
KnotFacts gather_facts(const KnotRecord& r);

// k = 0: sigma < 0, any beta > 0, or V_0 > 0.
Verdict null_class_check(const KnotFacts& facts, bool use_beta = true, bool use_vs = true);
Verdict null_class_check(const KnotRecord& r);

Verdict friend_rule(std::int64_t k, std::int64_t friend_s);

}  // namespace slicedeg
