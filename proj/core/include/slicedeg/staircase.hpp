#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slicedeg/knot_model.hpp"

namespace slicedeg {

// Non-increasing, eventually-zero sequence V_0, V_1, ... stored as its
// positive prefix.
class VsSequence {
 public:
  VsSequence() = default;
  // Trailing zeros are trimmed. Throws std::invalid_argument if the input is
  // negative somewhere or increases.
  explicit VsSequence(std::vector<std::int64_t> values);

  std::int64_t operator()(std::int64_t s) const {
    return (s >= 0 && static_cast<std::size_t>(s) < values_.size()) ? values_[static_cast<std::size_t>(s)]
                                                                   : 0;
  }
  const std::vector<std::int64_t>& values() const { return values_; }
  std::size_t support() const { return values_.size(); }
  bool all_zero() const { return values_.empty(); }
  // True when every step V_s - V_{s+1} is 0 or 1.
  bool unit_steps() const;

  bool operator==(const VsSequence&) const = default;

 private:
  std::vector<std::int64_t> values_;
};

// Staircase of an L-space knot, read off Delta = (-1)^m + sum (-1)^(m-i)(t^n_i + t^-n_i).
struct Staircase {
  std::vector<std::int64_t> n;  // n_1 < ... < n_m

  std::size_t m() const { return n.size(); }
  std::int64_t top() const { return n.back(); }
  // e_0 > ... > e_2m: (n_m, ..., n_1, 0, -n_1, ..., -n_m)
  std::vector<std::int64_t> exponents() const;
  // delta_t = e_{t-1} - e_t, t = 1..2m (stored 0-based)
  std::vector<std::int64_t> gaps() const;
  // n_m - n_{m-1} + ... + (-1)^(m-1) n_1
  std::int64_t width() const;

  bool operator==(const Staircase&) const = default;
};

// Throws NotLSpaceForm if the coefficients are not of L-space form, and
// std::invalid_argument if the polynomial is not palindromic with Delta(1) = 1.
Staircase staircase_from_alexander(const AlexanderPolynomial& poly);
AlexanderPolynomial alexander_from_staircase(const Staircase& st);

// t_s = sum_{j >= 1} j * a_{s+j}
std::int64_t torsion_coefficient(const AlexanderPolynomial& poly, std::int64_t s);
VsSequence vs_torsion(const AlexanderPolynomial& poly);

VsSequence vs_thin(std::int64_t tau);

// Piecewise closed form for L-space knots (separate branches for m odd and even).
VsSequence vs_lspace_formula(const Staircase& st);

// Computes V_s by explicit F_2 homology of the staircase complex restricted to
// the quotient regions A_s = {max(i, j - s) >= 0} and B = {i >= 0}.
// s_max defaults to n_m.
VsSequence vs_staircase_oracle(const Staircase& st, std::optional<std::int64_t> s_max = std::nullopt);

// Bottom translate level of the tower in H_*(A_s) (or H_*(B) when s is
// nullopt). Exposed for tests.
std::int64_t tower_level(const Staircase& st, std::optional<std::int64_t> s);

// Dispatches on vs_spec. L-space records are cross-checked against the
// torsion coefficients. Throws VsUnavailable / OracleDisagreement.
VsSequence vs_of(const KnotRecord& r);

// min { s : V_s = 0 }
std::int64_t nu_plus(const VsSequence& v);

}  // namespace slicedeg
