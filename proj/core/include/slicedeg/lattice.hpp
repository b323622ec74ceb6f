#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "slicedeg/rational.hpp"

namespace slicedeg {

// Homology class of a disk in a punctured connected sum of negatively oriented
// CP^2's, up to permutation and sign of coordinates: a_1 >= ... >= a_n >= 1.
class HomologyClass {
 public:
  HomologyClass() = default;
  // Normalizes: drops zeros, takes absolute values, sorts descending.
  explicit HomologyClass(std::vector<std::int64_t> coords);

  const std::vector<std::int64_t>& coords() const { return a_; }
  std::size_t size() const { return a_.size(); }
  bool empty() const { return a_.empty(); }
  std::int64_t norm() const;       // k = sum a_i^2
  std::int64_t abs_sum() const;    // sum |a_i|

  auto operator<=>(const HomologyClass&) const = default;

 private:
  std::vector<std::int64_t> a_;
};

// "(2,1,1)"; the null class renders as "()".
std::string to_string(const HomologyClass& c);

// All classes of norm k in lexicographically descending order.
std::vector<HomologyClass> enumerate_classes(std::int64_t k);
// Streaming form; the callback returns false to stop early.
void for_each_class(std::int64_t k, const std::function<bool(const HomologyClass&)>& fn);

using OddVector = std::vector<std::int64_t>;

// Every odd lambda with 0 <= sum lambda_i a_i <= k and
// sum (lambda_i^2 - 1) <= 8 * v0, in descending lexicographic order.
// `coords` may be any integer vector (unsorted, signed).
std::vector<OddVector> enumerate_odd_vectors(std::span<const std::int64_t> coords, std::int64_t v0);
void for_each_odd_vector(std::span<const std::int64_t> coords, std::int64_t v0,
                         const std::function<bool(const OddVector&)>& fn);

// Same domain, one representative per orbit under permutations of equal
// coordinates. Representatives are non-increasing inside each run of equal
// a_i. `coords` must be sorted descending.
void for_each_odd_vector_orbit(std::span<const std::int64_t> coords, std::int64_t v0,
                               const std::function<bool(const OddVector&)>& fn);

// Orbit enumeration over a larger box: |lambda_i| may exceed the per-coordinate
// cap by 2 * widen and the total excess budget is not enforced.
void for_each_odd_vector_orbit_widened(std::span<const std::int64_t> coords, std::int64_t v0,
                                       std::int64_t widen,
                                       const std::function<bool(const OddVector&)>& fn);

// Laurent polynomial in T with arbitrary-precision integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t exponent, BigInt coeff = 1);

  void add_term(std::int64_t exponent, const BigInt& coeff);
  LaurentPoly operator*(const LaurentPoly& other) const;
  LaurentPoly operator+(const LaurentPoly& other) const;

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::int64_t, BigInt>& terms() const { return terms_; }
  BigInt coeff(std::int64_t exponent) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::map<std::int64_t, BigInt> terms_;  // no zero coefficients
};

// "1 - T^4"; ascending exponents.
std::string to_string(const LaurentPoly& p);

// Minimal topological energy of reducibles:
//   min_{z in Z^n} sum (z_i + a_i/4 - c_i/2)^2
// The form is separable, so the argmin set is a product of per-coordinate
// choices.
struct KappaMin {
  Rational value;
  std::vector<std::vector<std::int64_t>> choices;  // per coordinate, ascending

  std::size_t argmin_count() const;
  // Full Phi_min in lexicographic order. Exponential in the number of
  // two-choice coordinates.
  std::vector<std::vector<std::int64_t>> argmin() const;
};

KappaMin kappa_min(std::span<const std::int64_t> a, std::span<const std::int64_t> c);

// Signed count of minimal reducibles:
//   eta = sum_{z in Phi_min} (-1)^{mu(z)} T^{nu(z)},
//   mu(z) = -sum z_i^2, nu(z) = sum a_i (c_i - 2 z_i).
LaurentPoly eta(std::span<const std::int64_t> a, std::span<const std::int64_t> c);

}  // namespace slicedeg
