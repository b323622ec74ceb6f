#include "slicedeg/staircase.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "slicedeg/errors.hpp"

namespace slicedeg {

namespace {

std::string render(const std::vector<std::int64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace

VsSequence::VsSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0) throw std::invalid_argument("V_s must be non-negative");
    if (i + 1 < values_.size() && values_[i + 1] > values_[i]) {
      throw std::invalid_argument("V_s must be non-increasing");
    }
  }
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

bool VsSequence::unit_steps() const {
  for (std::size_t s = 0; s < values_.size(); ++s) {
    if ((*this)(static_cast<std::int64_t>(s)) - (*this)(static_cast<std::int64_t>(s + 1)) > 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Staircase geometry

std::vector<std::int64_t> Staircase::exponents() const {
  std::vector<std::int64_t> e;
  e.reserve(2 * n.size() + 1);
  for (auto it = n.rbegin(); it != n.rend(); ++it) e.push_back(*it);
  e.push_back(0);
  for (auto x : n) e.push_back(-x);
  return e;
}

std::vector<std::int64_t> Staircase::gaps() const {
  auto e = exponents();
  std::vector<std::int64_t> d;
  for (std::size_t t = 1; t < e.size(); ++t) d.push_back(e[t - 1] - e[t]);
  return d;
}

std::int64_t Staircase::width() const {
  std::int64_t w = 0;
  const auto m = n.size();
  for (std::size_t i = 0; i < m; ++i) {
    // n_m enters with +, n_{m-1} with -, ...
    w += ((m - 1 - i) % 2 == 0 ? 1 : -1) * n[i];
  }
  return w;
}

Staircase staircase_from_alexander(const AlexanderPolynomial& poly) {
  if (!poly.palindromic()) throw std::invalid_argument("Alexander polynomial is not palindromic");
  if (poly.value_at_one() != 1) throw std::invalid_argument("Alexander polynomial has Delta(1) != 1");
  Staircase st;
  for (int e = 1; e <= poly.degree(); ++e) {
    const auto c = poly.at(e);
    if (c == 0) continue;
    if (c != 1 && c != -1) {
      throw NotLSpaceForm("coefficient " + std::to_string(c) + " at t^" + std::to_string(e) +
                          " is not +-1");
    }
    st.n.push_back(e);
  }
  const auto m = st.n.size();
  if (m == 0) throw NotLSpaceForm("trivial Alexander polynomial has no staircase");
  for (std::size_t i = 1; i <= m; ++i) {
    const std::int64_t want = ((m - i) % 2 == 0) ? 1 : -1;
    if (poly.at(static_cast<int>(st.n[i - 1])) != want) {
      throw NotLSpaceForm("coefficient at t^" + std::to_string(st.n[i - 1]) + " should be " +
                          std::to_string(want));
    }
  }
  const std::int64_t want0 = (m % 2 == 0) ? 1 : -1;
  if (poly.at(0) != want0) {
    throw NotLSpaceForm("constant coefficient should be " + std::to_string(want0));
  }
  return st;
}

AlexanderPolynomial alexander_from_staircase(const Staircase& st) {
  const auto g = st.top();
  AlexanderPolynomial p;
  p.coeffs.assign(static_cast<std::size_t>(2 * g + 1), 0);
  const auto m = st.n.size();
  p.coeffs[static_cast<std::size_t>(g)] = (m % 2 == 0) ? 1 : -1;
  for (std::size_t i = 1; i <= m; ++i) {
    const std::int64_t c = ((m - i) % 2 == 0) ? 1 : -1;
    p.coeffs[static_cast<std::size_t>(g + st.n[i - 1])] = c;
    p.coeffs[static_cast<std::size_t>(g - st.n[i - 1])] = c;
  }
  return p;
}

// ---------------------------------------------------------------------------
// V_s sources

std::int64_t torsion_coefficient(const AlexanderPolynomial& poly, std::int64_t s) {
  std::int64_t t = 0;
  for (std::int64_t j = 1; s + j <= poly.degree(); ++j) t += j * poly.at(static_cast<int>(s + j));
  return t;
}

VsSequence vs_torsion(const AlexanderPolynomial& poly) {
  std::vector<std::int64_t> v;
  for (std::int64_t s = 0; s < poly.degree(); ++s) v.push_back(torsion_coefficient(poly, s));
  return VsSequence(std::move(v));
}

VsSequence vs_thin(std::int64_t tau) {
  if (tau <= 0) return {};
  std::vector<std::int64_t> v;
  for (std::int64_t s = 0;; ++s) {
    // floor((tau + 1 - s) / 2) for a non-negative numerator
    const std::int64_t num = tau + 1 - s;
    if (num < 2) break;
    v.push_back(num / 2);
  }
  return VsSequence(std::move(v));
}

VsSequence vs_lspace_formula(const Staircase& st) {
  const auto m = static_cast<std::int64_t>(st.m());
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  // l[0] = 0, l[k] = n_k - n_{k-1} with n_0 = 0, l[m+1] = +inf
  std::vector<std::int64_t> l(static_cast<std::size_t>(m + 2), 0);
  for (std::int64_t k = 1; k <= m; ++k) {
    l[static_cast<std::size_t>(k)] = st.n[static_cast<std::size_t>(k - 1)] -
                                     (k >= 2 ? st.n[static_cast<std::size_t>(k - 2)] : 0);
  }
  l[static_cast<std::size_t>(m + 1)] = kInf;
  auto L = [&](std::int64_t k) { return l[static_cast<std::size_t>(k)]; };
  // sum_{k=0}^{upto} l_{2k + offset}; empty when upto < 0
  auto partial = [&](std::int64_t upto, std::int64_t offset) {
    std::int64_t sum = 0;
    for (std::int64_t k = 0; k <= upto; ++k) sum = std::min(kInf, sum + L(2 * k + offset));
    return sum;
  };

  const std::int64_t width = st.width();
  std::vector<std::int64_t> v;
  for (std::int64_t s = 0; s <= st.top(); ++s) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    bool placed = false;
    if (m % 2 == 1) {
      for (std::int64_t N = 1; N <= (m + 1) / 2 && !placed; ++N) {
        if (s < partial(N - 1, 0) || s >= partial(N, 0)) continue;
        placed = true;
        for (std::int64_t i = 1; i <= N; ++i) {
          best = std::max(best, std::min(partial(i - 1, 1), s - partial(i - 1, 0)));
        }
      }
    } else {
      for (std::int64_t N = 0; N <= m / 2 && !placed; ++N) {
        if (s < partial(N - 1, 1) || s >= partial(N, 1)) continue;
        placed = true;
        for (std::int64_t i = 0; i <= N; ++i) {
          best = std::max(best, std::min(partial(i, 0), s - partial(i - 1, 1)));
        }
      }
    }
    if (!placed) throw std::logic_error("s = " + std::to_string(s) + " not covered by any interval");
    v.push_back(width - best);
  }
  return VsSequence(std::move(v));
}

// ---------------------------------------------------------------------------
// Homology oracle

namespace {

struct Point {
  std::int64_t i;
  std::int64_t j;
};

// Generator positions of the level-0 staircase; x_0 = (0, n_m), odd steps go
// right, even steps go down.
std::vector<Point> staircase_points(const Staircase& st) {
  std::vector<Point> pts{{0, st.top()}};
  const auto d = st.gaps();
  for (std::size_t t = 1; t <= d.size(); ++t) {
    Point p = pts.back();
    if (t % 2 == 1) {
      p.i += d[t - 1];
    } else {
      p.j -= d[t - 1];
    }
    pts.push_back(p);
  }
  return pts;
}

bool in_region(Point p, std::optional<std::int64_t> s) {
  if (!s) return p.i >= 0;
  return std::max(p.i, p.j - *s) >= 0;
}

// Is `target` in the F_2 span of `rows`? Plain Gaussian elimination.
bool in_span(std::vector<std::vector<bool>> rows, std::vector<bool> target) {
  const std::size_t width = target.size();
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && !rows[r][col]) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[rank], rows[r]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != rank && rows[k][col]) {
        for (std::size_t c = 0; c < width; ++c) rows[k][c] = rows[k][c] != rows[rank][c];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t k = 0; k < rank; ++k) {
    if (target[pivot_col[k]]) {
      for (std::size_t c = 0; c < width; ++c) target[c] = target[c] != rows[k][c];
    }
  }
  return std::none_of(target.begin(), target.end(), [](bool b) { return b; });
}

// Whether U^(h - level) of the full staircase cycle survives in the homology
// of the quotient complex at the given translate level.
bool tower_class_nonzero(const std::vector<Point>& pts, std::int64_t level, std::optional<std::int64_t> s) {
  const std::size_t count = pts.size();
  std::vector<bool> inside(count);
  for (std::size_t t = 0; t < count; ++t) {
    inside[t] = in_region({pts[t].i + level, pts[t].j + level}, s);
  }
  // Every even generator represents the translate's homology class; take the
  // image of x_0 under the quotient map.
  std::vector<bool> cycle(count, false);
  cycle[0] = inside[0];
  std::vector<std::vector<bool>> boundaries;
  for (std::size_t t = 1; t < count; t += 2) {
    if (!inside[t]) continue;
    std::vector<bool> b(count, false);
    b[t - 1] = inside[t - 1];
    b[t + 1] = inside[t + 1];
    boundaries.push_back(std::move(b));
  }
  return !in_span(std::move(boundaries), std::move(cycle));
}

}  // namespace

std::int64_t tower_level(const Staircase& st, std::optional<std::int64_t> s) {
  if (st.n.empty()) throw std::invalid_argument("empty staircase");
  const auto pts = staircase_points(st);
  // Below -(n_m + 1) every translate lies in {i < 0, j < 0}; at level 1 every
  // translate lies in {i >= 0}.
  const std::int64_t lo = -(st.top() + 1);
  const std::int64_t hi = 1;
  if (!tower_class_nonzero(pts, hi, s)) {
    throw WindowTooSmall("tower class vanishes at the top of the window");
  }
  if (tower_class_nonzero(pts, lo, s)) {
    throw WindowTooSmall("tower class survives at the bottom of the window");
  }
  std::int64_t level = hi;
  for (std::int64_t l = hi; l >= lo; --l) {
    if (!tower_class_nonzero(pts, l, s)) break;
    level = l;
  }
  for (std::int64_t l = lo; l < level; ++l) {
    if (tower_class_nonzero(pts, l, s)) throw std::logic_error("tower classes are not U-divisible");
  }
  return level;
}

VsSequence vs_staircase_oracle(const Staircase& st, std::optional<std::int64_t> s_max) {
  const std::int64_t last = s_max.value_or(st.top());
  const std::int64_t base = tower_level(st, std::nullopt);
  std::vector<std::int64_t> v;
  for (std::int64_t s = 0; s <= last; ++s) v.push_back(base - tower_level(st, s));
  return VsSequence(std::move(v));
}

VsSequence vs_of(const KnotRecord& r) {
  struct Visitor {
    const KnotRecord& r;
    VsSequence operator()(const vs::Unknown&) const {
      throw VsUnavailable("V_s unavailable for '" + r.name + "'");
    }
    VsSequence operator()(const vs::Explicit& ex) const {
      try {
        return VsSequence(ex.values);
      } catch (const std::invalid_argument& e) {
        throw DataError("record '" + r.name + "': " + e.what());
      }
    }
    VsSequence operator()(const vs::Thin&) const {
      if (!r.tau) throw VsUnavailable("thin record '" + r.name + "' has no tau");
      return vs_thin(*r.tau);
    }
    VsSequence operator()(const vs::LSpace&) const {
      if (!r.alexander) throw VsUnavailable("L-space record '" + r.name + "' has no Alexander polynomial");
      const auto st = staircase_from_alexander(*r.alexander);
      auto formula = vs_lspace_formula(st);
      auto torsion = vs_torsion(*r.alexander);
      if (formula != torsion) {
        throw OracleDisagreement("'" + r.name + "': staircase formula " + render(formula.values()) +
                                 " vs torsion coefficients " + render(torsion.values()));
      }
      return formula;
    }
    VsSequence operator()(const vs::MirrorLSpace&) const { return {}; }
  };
  return std::visit(Visitor{r}, r.vs_spec);
}

std::int64_t nu_plus(const VsSequence& v) { return static_cast<std::int64_t>(v.support()); }

}  // namespace slicedeg
