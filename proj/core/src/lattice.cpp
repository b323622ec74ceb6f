#include "slicedeg/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace slicedeg {

HomologyClass::HomologyClass(std::vector<std::int64_t> coords) {
  for (auto x : coords) {
    if (x != 0) a_.push_back(std::abs(x));
  }
  std::sort(a_.begin(), a_.end(), std::greater<>());
}

std::int64_t HomologyClass::norm() const {
  std::int64_t k = 0;
  for (auto x : a_) k += x * x;
  return k;
}

std::int64_t HomologyClass::abs_sum() const {
  std::int64_t s = 0;
  for (auto x : a_) s += x;
  return s;
}

std::string to_string(const HomologyClass& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c.coords()[i]);
  return out + ")";
}

// ---------------------------------------------------------------------------
// Sum-of-squares partitions

namespace {

std::int64_t isqrt(std::int64_t x) {
  if (x <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

bool partitions(std::int64_t rest, std::int64_t max_part, std::vector<std::int64_t>& cur,
                const std::function<bool(const HomologyClass&)>& fn) {
  if (rest == 0) return fn(HomologyClass(cur));
  for (std::int64_t a = std::min(max_part, isqrt(rest)); a >= 1; --a) {
    cur.push_back(a);
    const bool go_on = partitions(rest - a * a, a, cur, fn);
    cur.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_class(std::int64_t k, const std::function<bool(const HomologyClass&)>& fn) {
  if (k < 0) throw std::invalid_argument("class norm must be non-negative");
  std::vector<std::int64_t> cur;
  partitions(k, isqrt(k), cur, fn);
}

std::vector<HomologyClass> enumerate_classes(std::int64_t k) {
  std::vector<HomologyClass> out;
  for_each_class(k, [&](const HomologyClass& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Odd vectors

namespace {

// Largest odd b with b^2 - 1 <= budget (budget >= 0).
std::int64_t odd_cap(std::int64_t budget) {
  std::int64_t b = 1;
  while ((b + 2) * (b + 2) - 1 <= budget) b += 2;
  return b;
}

struct OddSearch {
  std::span<const std::int64_t> a;
  std::int64_t k = 0;
  std::int64_t budget = 0;
  std::int64_t widen = 0;   // extra +2 steps of per-coordinate slack
  bool orbits = false;
  std::vector<std::int64_t> suffix_abs;  // sum_{j >= i} |a_j|
  const std::function<bool(const OddVector&)>* fn = nullptr;
  OddVector lambda;

  std::int64_t cap_for(std::int64_t remaining_budget) const {
    return widen > 0 ? odd_cap(budget) + 2 * widen : odd_cap(remaining_budget);
  }

  bool run(std::size_t i, std::int64_t used, std::int64_t dot, std::int64_t upper_in_run) {
    if (i == a.size()) {
      if (dot < 0 || dot > k) return true;
      return (*fn)(lambda);
    }
    const std::int64_t remaining = budget - used;
    if (widen == 0 && remaining < 0) return true;
    // Every later coordinate contributes at most cap * |a_j| in absolute value.
    const std::int64_t reach = cap_for(std::max<std::int64_t>(remaining, 0)) * suffix_abs[i];
    if (dot + reach < 0 || dot - reach > k) return true;

    std::int64_t cap = cap_for(std::max<std::int64_t>(remaining, 0));
    if (orbits && i > 0 && a[i] == a[i - 1]) cap = std::min(cap, upper_in_run);
    for (std::int64_t l = cap; l >= -cap_for(std::max<std::int64_t>(remaining, 0)); l -= 2) {
      const std::int64_t cost = l * l - 1;
      if (widen == 0 && used + cost > budget) continue;
      lambda.push_back(l);
      const bool go_on = run(i + 1, used + cost, dot + l * a[i], l);
      lambda.pop_back();
      if (!go_on) return false;
    }
    return true;
  }
};

void odd_search(std::span<const std::int64_t> coords, std::int64_t v0, bool orbits, std::int64_t widen,
                const std::function<bool(const OddVector&)>& fn) {
  if (v0 < 0) throw std::invalid_argument("V_0 must be non-negative");
  OddSearch s;
  s.a = coords;
  for (auto x : coords) s.k += x * x;
  s.budget = 8 * v0;
  s.widen = widen;
  s.orbits = orbits;
  s.fn = &fn;
  s.suffix_abs.assign(coords.size() + 1, 0);
  for (std::size_t i = coords.size(); i-- > 0;) s.suffix_abs[i] = s.suffix_abs[i + 1] + std::abs(coords[i]);
  s.run(0, 0, 0, 0);
}

}  // namespace

void for_each_odd_vector(std::span<const std::int64_t> coords, std::int64_t v0,
                         const std::function<bool(const OddVector&)>& fn) {
  odd_search(coords, v0, false, 0, fn);
}

std::vector<OddVector> enumerate_odd_vectors(std::span<const std::int64_t> coords, std::int64_t v0) {
  std::vector<OddVector> out;
  for_each_odd_vector(coords, v0, [&](const OddVector& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

void for_each_odd_vector_orbit(std::span<const std::int64_t> coords, std::int64_t v0,
                               const std::function<bool(const OddVector&)>& fn) {
  odd_search(coords, v0, true, 0, fn);
}

void for_each_odd_vector_orbit_widened(std::span<const std::int64_t> coords, std::int64_t v0,
                                       std::int64_t widen, const std::function<bool(const OddVector&)>& fn) {
  odd_search(coords, v0, true, widen, fn);
}

// ---------------------------------------------------------------------------
// Laurent polynomials

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, BigInt coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(std::int64_t exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

BigInt LaurentPoly::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "T";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reducibles

std::size_t KappaMin::argmin_count() const {
  std::size_t n = 1;
  for (const auto& c : choices) n *= c.size();
  return n;
}

std::vector<std::vector<std::int64_t>> KappaMin::argmin() const {
  std::vector<std::vector<std::int64_t>> out{{}};
  for (const auto& opts : choices) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& prefix : out) {
      for (auto z : opts) {
        auto v = prefix;
        v.push_back(z);
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

KappaMin kappa_min(std::span<const std::int64_t> a, std::span<const std::int64_t> c) {
  if (a.size() != c.size()) throw std::invalid_argument("class and cohomology vectors differ in length");
  KappaMin out;
  out.value = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    // (z + r/4)^2 with r = a - 2c; minimise 16 * (z + r/4)^2 = (4z + r)^2 over z.
    const std::int64_t r = a[i] - 2 * c[i];
    const std::int64_t z0 = floor_div(-r, 4);
    std::int64_t best = -1;
    std::vector<std::int64_t> zs;
    for (std::int64_t z = z0 - 1; z <= z0 + 2; ++z) {
      const std::int64_t q = (4 * z + r) * (4 * z + r);
      if (best < 0 || q < best) {
        best = q;
        zs = {z};
      } else if (q == best) {
        zs.push_back(z);
      }
    }
    out.value += Rational(best, 16);
    out.choices.push_back(std::move(zs));
  }
  return out;
}

LaurentPoly eta(std::span<const std::int64_t> a, std::span<const std::int64_t> c) {
  const auto km = kappa_min(a, c);
  LaurentPoly total = LaurentPoly::monomial(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    LaurentPoly factor;
    for (auto z : km.choices[i]) {
      const BigInt sign = (z * z) % 2 == 0 ? 1 : -1;
      factor.add_term(a[i] * (c[i] - 2 * z), sign);
    }
    total = total * factor;
  }
  return total;
}

}  // namespace slicedeg
