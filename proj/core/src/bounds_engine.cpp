#include "slicedeg/bounds_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <thread>

#include "slicedeg/errors.hpp"

namespace slicedeg {

std::string_view obstruction_name(Obstruction o) {
  switch (o) {
    case Obstruction::kAdjunction:
      return "s";
    case Obstruction::kVs:
      return "vs";
    case Obstruction::kGamma:
      return "gamma";
    case Obstruction::kFriend:
      return "friend";
  }
  return "?";
}

std::optional<Obstruction> parse_obstruction(std::string_view name) {
  for (auto o : all_obstructions()) {
    if (obstruction_name(o) == name) return o;
  }
  return std::nullopt;
}

const std::set<Obstruction>& all_obstructions() {
  static const std::set<Obstruction> all = {Obstruction::kAdjunction, Obstruction::kVs, Obstruction::kGamma,
                                            Obstruction::kFriend};
  return all;
}

// ---------------------------------------------------------------------------
// Per-class battery

namespace {

// c vectors for the optional sweep: within each run of equal coordinates, the
// first t entries are 1 and the rest 0. The all-zero vector comes first.
std::vector<std::vector<std::int64_t>> c_sweep(const HomologyClass& cls) {
  const auto& a = cls.coords();
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // (start, length)
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    runs.emplace_back(i, j - i);
    i = j;
  }
  std::vector<std::vector<std::int64_t>> out{std::vector<std::int64_t>(a.size(), 0)};
  for (const auto& [start, len] : runs) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& c : out) {
      for (std::size_t t = 0; t <= len; ++t) {
        auto v = c;
        for (std::size_t u = 0; u < t; ++u) v[start + u] = 1;
        next.push_back(std::move(v));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::pair<std::string, Verdict> check_class(const KnotFacts& facts, const HomologyClass& cls,
                                            const EngineConfig& cfg) {
  if (cfg.enabled.contains(Obstruction::kAdjunction)) {
    for (const auto& b : facts.betas) {
      auto v = beta_adjunction(cls, b.value, b.label);
      if (v.obstructed) return {"s", std::move(v)};
    }
  }
  if (cfg.enabled.contains(Obstruction::kGamma) && !facts.gamma.empty()) {
    if (cfg.gamma_c_sweep) {
      for (const auto& c : c_sweep(cls)) {
        auto v = gamma_general(cls.coords(), c, facts.signature, facts.gamma);
        if (v.obstructed) return {"gamma", std::move(v)};
      }
    } else {
      auto v = gamma_general(cls, facts.signature, facts.gamma);
      if (v.obstructed) return {"gamma", std::move(v)};
    }
  }
  if (cfg.enabled.contains(Obstruction::kVs) && facts.vs) {
    auto v = vs_obstruction(cls, *facts.vs);
    if (v.obstructed) return {"vs", std::move(v)};
  }
  return {"", Verdict::pass()};
}

// ---------------------------------------------------------------------------
// Lower bound

namespace {

struct LevelOutcome {
  bool obstructed = false;
  std::vector<ClassCertificate> certificates;
  std::optional<HomologyClass> survivor;
};

LevelOutcome check_level(const KnotFacts& facts, std::int64_t k, const EngineConfig& cfg) {
  const auto classes = enumerate_classes(k);
  const std::size_t n = classes.size();
  std::vector<std::optional<std::pair<std::string, Verdict>>> results(n);
  std::atomic<std::size_t> first_survivor{n};

  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < n; i += step) {
      if (i > first_survivor.load(std::memory_order_relaxed)) break;
      auto res = check_class(facts, classes[i], cfg);
      if (!res.second.obstructed) {
        std::size_t cur = first_survivor.load();
        while (i < cur && !first_survivor.compare_exchange_weak(cur, i)) {
        }
      }
      results[i] = std::move(res);
    }
  };

  const std::size_t threads = std::min<std::size_t>(std::max(1u, cfg.parallelism), n);
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  LevelOutcome out;
  const std::size_t survivor = first_survivor.load();
  if (survivor < n) {
    out.survivor = classes[survivor];
    return out;
  }
  out.obstructed = true;
  for (std::size_t i = 0; i < n; ++i) {
    out.certificates.push_back({classes[i], results[i]->first, std::move(results[i]->second)});
  }
  return out;
}

}  // namespace

LowerBound lower_bound(const KnotRecord& r, const EngineConfig& cfg, std::int64_t max_k) {
  if (max_k < 0) throw std::invalid_argument("max_k must be non-negative");
  const KnotFacts facts = gather_facts(r);

  // A triggering k-friendship gives sd_+ > k, so it rules out every level <= k.
  std::optional<Verdict> friend_verdict;
  std::int64_t friend_reach = -1;
  if (cfg.enabled.contains(Obstruction::kFriend)) {
    for (const auto& f : facts.friends) {
      auto v = friend_rule(f.k, f.friend_s);
      if (v.obstructed && f.k > friend_reach) {
        std::get<FriendWitness>(v.witness).friend_name = f.friend_name;
        friend_reach = f.k;
        friend_verdict = std::move(v);
      }
    }
  }

  LowerBound out;
  for (std::int64_t k = 0; k <= max_k; ++k) {
    LevelCertificate cert;
    cert.k = k;
    if (k <= friend_reach) {
      cert.level_verdict = *friend_verdict;
      out.certificates.push_back(std::move(cert));
      continue;
    }
    if (k == 0) {
      auto v = null_class_check(facts, cfg.enabled.contains(Obstruction::kAdjunction),
                                cfg.enabled.contains(Obstruction::kVs));
      if (!v.obstructed) {
        out.value = 0;
        out.surviving_class = HomologyClass{};
        return out;
      }
      cert.level_verdict = std::move(v);
      out.certificates.push_back(std::move(cert));
      continue;
    }
    auto level = check_level(facts, k, cfg);
    if (!level.obstructed) {
      out.value = k;
      out.surviving_class = std::move(level.survivor);
      return out;
    }
    cert.classes = std::move(level.certificates);
    out.certificates.push_back(std::move(cert));
  }
  out.value = max_k + 1;
  out.exhausted = true;
  return out;
}

LowerBound lower_bound(const KnotRecord& r, const EngineConfig& cfg) {
  return lower_bound(r, cfg, cfg.max_k.value_or(kDefaultMaxK));
}

// ---------------------------------------------------------------------------
// Upper bound

namespace {

// Detects cycles among declared concordance / connected-sum references.
std::vector<std::string> reference_cycles(const KnotDatabase& db) {
  std::map<std::string, std::vector<std::string>, std::less<>> edges;
  for (const auto& [name, r] : db.records()) {
    auto& out = edges[name];
    if (r.concordant_to && db.contains(*r.concordant_to)) out.push_back(*r.concordant_to);
    if (r.connected_sum_of) {
      for (const auto& s : *r.connected_sum_of) {
        if (db.contains(s)) out.push_back(s);
      }
    }
  }
  enum class Mark { kNone, kActive, kDone };
  std::map<std::string, Mark, std::less<>> mark;
  std::vector<std::string> warnings;
  std::function<void(const std::string&)> visit = [&](const std::string& u) {
    mark[u] = Mark::kActive;
    for (const auto& v : edges[u]) {
      if (mark[v] == Mark::kActive) {
        warnings.push_back("cyclic relation: '" + u + "' -> '" + v + "'");
      } else if (mark[v] == Mark::kNone) {
        visit(v);
      }
    }
    mark[u] = Mark::kDone;
  };
  for (const auto& [name, _] : db.records()) {
    if (mark[name] == Mark::kNone) visit(name);
  }
  return warnings;
}

void offer(UpperBound& ub, std::int64_t value, const std::string& witness, bool& changed) {
  if (!ub.value || value < *ub.value) {
    ub.value = value;
    ub.witness = witness;
    changed = true;
  }
}

}  // namespace

UpperBoundTable upper_bounds(const KnotDatabase& db) {
  UpperBoundTable table;
  bool changed = false;
  for (const auto& [name, r] : db.records()) {
    UpperBound ub;
    if (r.clasp_plus) offer(ub, 4 * *r.clasp_plus, "4 * positive clasp number (" + std::to_string(*r.clasp_plus) + ")", changed);
    if (r.slicing_number) {
      offer(ub, 4 * *r.slicing_number, "4 * slicing number (" + std::to_string(*r.slicing_number) + ")", changed);
    }
    for (const auto& w : r.upper_witnesses) offer(ub, w.k, w.description, changed);
    table.bounds.emplace(name, std::move(ub));
  }

  // Values only decrease and are bounded below by 0, so this terminates.
  do {
    changed = false;
    for (const auto& [name, r] : db.records()) {
      if (r.connected_sum_of && !r.connected_sum_of->empty()) {
        std::int64_t total = 0;
        bool complete = true;
        std::string parts;
        for (const auto& s : *r.connected_sum_of) {
          auto it = table.bounds.find(s);
          if (it == table.bounds.end() || !it->second.value) {
            complete = false;
            break;
          }
          total += *it->second.value;
          parts += (parts.empty() ? "" : " + ") + s;
        }
        if (complete) offer(table.bounds[name], total, "connected sum " + parts, changed);
      }
      if (r.concordant_to) {
        auto it = table.bounds.find(*r.concordant_to);
        if (it != table.bounds.end()) {
          if (it->second.value) {
            offer(table.bounds[name], *it->second.value, "concordant to " + *r.concordant_to, changed);
          }
          const auto& mine = table.bounds[name];
          if (mine.value) {
            auto value = *mine.value;
            offer(table.bounds[*r.concordant_to], value, "concordant to " + name, changed);
          }
        }
      }
    }
  } while (changed);

  table.warnings = reference_cycles(db);
  return table;
}

UpperBound upper_bound(const KnotRecord& r, const KnotDatabase& db) {
  auto table = upper_bounds(db);
  auto it = table.bounds.find(r.name);
  if (it != table.bounds.end()) return it->second;
  // Record outside the database: only its own sources apply.
  KnotDatabase solo;
  solo.add(r);
  return upper_bounds(solo).bounds.at(r.name);
}

// ---------------------------------------------------------------------------
// Reports

BoundReport bound_report(const KnotRecord& r, const UpperBound& upper, const EngineConfig& cfg) {
  BoundReport rep;
  rep.knot = r.name;
  rep.upper = upper.value;
  rep.upper_witness = upper.witness;
  const std::int64_t cap = cfg.max_k ? *cfg.max_k : upper.value.value_or(kDefaultMaxK);
  auto lb = lower_bound(r, cfg, cap);
  rep.lower = lb.value;
  rep.lower_exhausted = lb.exhausted;
  rep.certificates = std::move(lb.certificates);
  rep.surviving_class = std::move(lb.surviving_class);
  return rep;
}

BoundReport bound_report(const KnotRecord& r, const KnotDatabase& db, const EngineConfig& cfg) {
  return bound_report(r, upper_bound(r, db), cfg);
}

std::vector<BetaRow> beta_table(std::span<const std::int64_t> betas) {
  std::vector<BetaRow> rows;
  for (auto beta : betas) {
    BetaRow row;
    row.beta = beta;
    for (std::int64_t k = 0;; ++k) {
      std::optional<HomologyClass> hit;
      for_each_class(k, [&](const HomologyClass& c) {
        if (beta <= c.norm() - c.abs_sum()) {
          hit = c;
          return false;
        }
        return true;
      });
      if (hit) {
        row.min_k = k;
        row.witness = std::move(*hit);
        break;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      auto na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      while (na.size() > 1 && na[0] == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb[0] == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

std::vector<BoundReport> report_table(const KnotDatabase& db, const EngineConfig& cfg) {
  const auto uppers = upper_bounds(db);
  std::vector<std::string> names;
  for (const auto& [name, _] : db.records()) names.push_back(name);
  std::sort(names.begin(), names.end(), [](const auto& x, const auto& y) { return natural_less(x, y); });

  std::vector<BoundReport> out;
  for (const auto& name : names) {
    const auto& r = db.records().at(name);
    try {
      out.push_back(bound_report(r, uppers.bounds.at(name), cfg));
    } catch (const std::exception& e) {
      BoundReport rep;
      rep.knot = name;
      rep.error = e.what();
      out.push_back(std::move(rep));
    }
  }
  return out;
}

std::string render_interval(const BoundReport& r) {
  if (!r.error.empty()) return "error";
  const auto lo = std::to_string(r.lower);
  if (r.lower_exhausted) {
    return r.upper ? "conflict [" + lo + "," + std::to_string(*r.upper) + "]" : ">=" + lo;
  }
  if (!r.upper) return "[" + lo + ",?]";
  if (*r.upper == r.lower) return lo;
  return "[" + lo + "," + std::to_string(*r.upper) + "]";
}

}  // namespace slicedeg
