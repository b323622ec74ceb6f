#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "slicedeg/knot_model.hpp"
#include "slicedeg/lattice.hpp"
#include "slicedeg/obstructions.hpp"

namespace slicedeg {

enum class Obstruction { kAdjunction, kVs, kGamma, kFriend };

// "s", "vs", "gamma", "friend"
std::string_view obstruction_name(Obstruction o);
std::optional<Obstruction> parse_obstruction(std::string_view name);
const std::set<Obstruction>& all_obstructions();

struct EngineConfig {
  std::optional<std::int64_t> max_k;  // defaults to the upper bound, else 64
  std::set<Obstruction> enabled = all_obstructions();
  bool gamma_c_sweep = false;
  unsigned parallelism = 1;
};

inline constexpr std::int64_t kDefaultMaxK = 64;

struct ClassCertificate {
  HomologyClass cls;
  std::string obstruction;  // which battery member killed it
  Verdict verdict;
};

struct LevelCertificate {
  std::int64_t k = 0;
  // Set when the whole level falls at once (null class, friend rule).
  std::optional<Verdict> level_verdict;
  std::vector<ClassCertificate> classes;
};

struct LowerBound {
  std::int64_t value = 0;
  bool exhausted = false;
  std::vector<LevelCertificate> certificates;
  std::optional<HomologyClass> surviving_class;
};

// Searches k = 0, 1, ... up to max_k (or the default cap). Throws DataError
// for inconsistent V_s data.
LowerBound lower_bound(const KnotRecord& r, const EngineConfig& cfg, std::int64_t max_k);
LowerBound lower_bound(const KnotRecord& r, const EngineConfig& cfg);

// First killing verdict for one class under the enabled battery, in the order
// adjunction, Gamma, V_s. Returns the obstruction name alongside.
std::pair<std::string, Verdict> check_class(const KnotFacts& facts, const HomologyClass& cls, const EngineConfig& cfg);

struct UpperBound {
  std::optional<std::int64_t> value;
  std::string witness;
};

struct UpperBoundTable {
  std::map<std::string, UpperBound, std::less<>> bounds;
  std::vector<std::string> warnings;  // cyclic concordance / sum references
};

// Database-wide monotone fixed point over clasp numbers, slicing numbers,
// explicit witnesses, connected sums and concordances.
UpperBoundTable upper_bounds(const KnotDatabase& db);
UpperBound upper_bound(const KnotRecord& r, const KnotDatabase& db);

struct BoundReport {
  std::string knot;
  std::int64_t lower = 0;
  bool lower_exhausted = false;
  std::optional<std::int64_t> upper;
  std::string upper_witness;
  std::vector<LevelCertificate> certificates;
  std::optional<HomologyClass> surviving_class;
  std::string error;  // set when the record could not be processed
};

BoundReport bound_report(const KnotRecord& r, const KnotDatabase& db, const EngineConfig& cfg);
BoundReport bound_report(const KnotRecord& r, const UpperBound& upper, const EngineConfig& cfg);

struct BetaRow {
  std::int64_t beta = 0;
  std::int64_t min_k = 0;
  HomologyClass witness;
};

// For each beta, the least k admitting a class with beta <= k - sum a_i, and
// the first such class in enumeration order.
std::vector<BetaRow> beta_table(std::span<const std::int64_t> betas);

// Reports for every record in natural name order; per-record failures are
// captured in BoundReport::error.
std::vector<BoundReport> report_table(const KnotDatabase& db, const EngineConfig& cfg);

// "4" or "[5,8]"; "[L,?]" without an upper bound, "(>=L)" when the search was exhausted.
std::string render_interval(const BoundReport& r);

// "3_1" < "9_2" < "9_10"
bool natural_less(std::string_view a, std::string_view b);

}  // namespace slicedeg
