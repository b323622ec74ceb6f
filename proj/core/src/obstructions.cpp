#include "slicedeg/obstructions.hpp"

#include <sstream>

#include "slicedeg/errors.hpp"

namespace slicedeg {

namespace {

std::string render(const std::vector<std::int64_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

}  // namespace

std::string describe(const Verdict& v) {
  struct Visitor {
    std::string operator()(const std::monostate&) const { return "no conclusion"; }
    std::string operator()(const BetaWitness& w) const {
      return "adjunction: " + w.source + " = " + std::to_string(w.beta) + " > k - sum|a| = " +
             std::to_string(w.rhs);
    }
    std::string operator()(const VsWitness& w) const {
      return "V_s: lambda = " + render(w.lambda) + ", j = " + std::to_string(w.j) + ", sum(lambda^2) - n = " +
             std::to_string(w.lhs) + " < 8 V_j = " + std::to_string(w.rhs);
    }
    std::string operator()(const GammaWitness& w) const {
      return "Gamma: c = " + render(w.c) + ", kappa_min = " + to_string(w.kappa) +
             ", i = " + std::to_string(w.index) + ", eta = " + w.eta + ", Gamma(" + std::to_string(w.index) +
             ") = " + to_string(w.gamma) + " > 2 kappa_min = " + to_string(Rational(2) * w.kappa);
    }
    std::string operator()(const NullClassWitness& w) const { return "null class: " + w.reason; }
    std::string operator()(const FriendWitness& w) const {
      return "friend " + w.friend_name + ": s = " + std::to_string(w.friend_s) + " > k - sqrt(k) for k = " +
             std::to_string(w.k);
    }
  };
  if (!v.obstructed) return v.note.empty() ? "pass" : "pass (" + v.note + ")";
  return std::visit(Visitor{}, v.witness);
}

Verdict beta_adjunction(const HomologyClass& cls, std::int64_t beta, std::string source) {
  const std::int64_t rhs = cls.norm() - cls.abs_sum();
  if (beta > rhs) return Verdict::kill(BetaWitness{std::move(source), beta, rhs});
  return Verdict::pass();
}

std::int64_t stau_bound(std::int64_t s) {
  if (s <= 0) return 0;
  std::int64_t k = s;
  while ((k - s) * (k - s) < k) ++k;
  return k;
}

namespace {

Verdict vs_search(const HomologyClass& cls, const VsSequence& v, std::int64_t widen) {
  const auto& a = cls.coords();
  const std::int64_t k = cls.norm();
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  if (v.all_zero()) return Verdict::pass();
  if (a.empty()) {
    if (v(0) > 0) return Verdict::kill(VsWitness{{}, 0, 0, 8 * v(0)});
    return Verdict::pass();
  }
  std::optional<VsWitness> found;
  auto check = [&](const OddVector& lambda) {
    std::int64_t sq = 0, dot = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      sq += lambda[i] * lambda[i];
      dot += lambda[i] * a[i];
    }
    // k and sum lambda_i a_i have the parity of sum a_i.
    const std::int64_t j = (k - dot) / 2;
    const std::int64_t lhs = sq - n;
    const std::int64_t rhs = 8 * v(j);
    if (lhs < rhs) {
      found = VsWitness{lambda, j, lhs, rhs};
      return false;
    }
    return true;
  };
  if (widen > 0) {
    for_each_odd_vector_orbit_widened(a, v(0), widen, check);
  } else {
    for_each_odd_vector_orbit(a, v(0), check);
  }
  if (found) return Verdict::kill(std::move(*found));
  return Verdict::pass();
}

}  // namespace

Verdict vs_obstruction(const HomologyClass& cls, const VsSequence& v) { return vs_search(cls, v, 0); }

Verdict vs_obstruction_widened(const HomologyClass& cls, const VsSequence& v, std::int64_t widen) {
  return vs_search(cls, v, widen);
}

Verdict gamma_general(std::span<const std::int64_t> a, std::span<const std::int64_t> c, std::int64_t sigma,
                      const std::map<std::int64_t, Rational>& gamma) {
  const auto km = kappa_min(a, c);
  std::int64_t k = 0;
  for (auto x : a) k += x * x;
  // i = 4 kappa - k/4 - sigma/2
  const Rational index = Rational(4) * km.value - Rational(k, 4) - Rational(sigma, 2);
  if (index < 0) return Verdict::pass();
  if (boost::multiprecision::denominator(index) != 1) {
    return Verdict::pass("non-integral index " + to_string(index));
  }
  const auto i = static_cast<std::int64_t>(boost::multiprecision::numerator(index));
  auto it = gamma.find(i);
  if (it == gamma.end()) return Verdict::pass("Gamma(" + std::to_string(i) + ") unknown");
  const Rational bound = Rational(2) * km.value;
  if (it->second <= bound) return Verdict::pass();
  const auto e = eta(a, c);
  if (e.is_zero()) return Verdict::pass("eta vanishes");
  return Verdict::kill(GammaWitness{std::vector<std::int64_t>(c.begin(), c.end()), km.value, i, to_string(e),
                                    it->second});
}

Verdict gamma_general(const HomologyClass& cls, std::int64_t sigma, const std::map<std::int64_t, Rational>& gamma) {
  const std::vector<std::int64_t> zeros(cls.size(), 0);
  return gamma_general(cls.coords(), zeros, sigma, gamma);
}

Verdict gamma_21(std::int64_t p, std::int64_t q, std::int64_t sigma, const std::map<std::int64_t, Rational>& gamma) {
  if (p < 0 || q < 0 || p + q < 1) throw std::invalid_argument("gamma_21 requires p, q >= 0 and p + q >= 1");
  if (sigma > 0) return Verdict::pass();
  const std::int64_t i = -sigma / 2;
  auto it = gamma.find(i);
  if (it == gamma.end()) return Verdict::pass("Gamma(" + std::to_string(i) + ") unknown");
  const Rational bound = Rational(p, 2) + Rational(q, 8);
  if (it->second <= bound) return Verdict::pass();
  std::vector<std::int64_t> a(static_cast<std::size_t>(p), 2);
  a.insert(a.end(), static_cast<std::size_t>(q), 1);
  const std::vector<std::int64_t> c(a.size(), 0);
  // kappa_min = p/4 + q/16 and eta = (1 - T^4)^p
  return Verdict::kill(GammaWitness{c, bound / 2, i, to_string(eta(a, c)), it->second});
}

Rational double_twist_gamma(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("double twist parameters must be positive");
  return Rational((2 * m - 1) * (2 * n - 1), 4 * m * n - 1);
}

KnotFacts gather_facts(const KnotRecord& r) {
  KnotFacts f;
  f.signature = r.signature;
  for (const auto& [p, s] : r.s_invariants) f.betas.push_back({"s_" + std::to_string(p), s});
  if (r.tau) f.betas.push_back({"2tau", 2 * *r.tau});
  try {
    f.vs = vs_of(r);
  } catch (const VsUnavailable&) {
    f.vs.reset();
  }
  if (f.vs) f.betas.push_back({"2nu+", 2 * nu_plus(*f.vs)});
  f.gamma = r.gamma;
  f.friends = r.friends;
  return f;
}

Verdict null_class_check(const KnotFacts& facts, bool use_beta, bool use_vs) {
  if (facts.signature < 0) {
    return Verdict::kill(NullClassWitness{"signature " + std::to_string(facts.signature) + " < 0"});
  }
  if (use_beta) {
    for (const auto& b : facts.betas) {
      if (b.value > 0) return Verdict::kill(BetaWitness{b.label, b.value, 0});
    }
  }
  if (use_vs && facts.vs && (*facts.vs)(0) > 0) {
    return Verdict::kill(VsWitness{{}, 0, 0, 8 * (*facts.vs)(0)});
  }
  return Verdict::pass();
}

Verdict null_class_check(const KnotRecord& r) { return null_class_check(gather_facts(r)); }

Verdict friend_rule(std::int64_t k, std::int64_t friend_s) {
  if (k < 0) throw std::invalid_argument("friendship level must be non-negative");
  bool obstructed = friend_s > k;
  if (!obstructed) {
    const std::int64_t d = k - friend_s;
    obstructed = d * d < k;
  }
  if (obstructed) return Verdict::kill(FriendWitness{k, {}, friend_s});
  return Verdict::pass();
}

}  // namespace slicedeg
