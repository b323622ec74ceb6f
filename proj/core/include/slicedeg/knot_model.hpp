#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "slicedeg/rational.hpp"

namespace slicedeg {

// Symmetrized Alexander polynomial. coeffs[i] is the coefficient of t^(i - g)
// where g = (coeffs.size() - 1) / 2.
struct AlexanderPolynomial {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size() / 2); }
  // Coefficient of t^e; zero outside the stored range.
  std::int64_t at(int e) const;
  bool palindromic() const;
  std::int64_t value_at_one() const;

  bool operator==(const AlexanderPolynomial&) const = default;
};

namespace vs {
struct Explicit {
  std::vector<std::int64_t> values;
  bool operator==(const Explicit&) const = default;
};
struct Thin {
  bool operator==(const Thin&) const = default;
};
struct LSpace {
  bool operator==(const LSpace&) const = default;
};
struct MirrorLSpace {
  bool operator==(const MirrorLSpace&) const = default;
};
struct Unknown {
  bool operator==(const Unknown&) const = default;
};
}  // namespace vs

using VsSpec = std::variant<vs::Unknown, vs::Explicit, vs::Thin, vs::LSpace, vs::MirrorLSpace>;

std::string_view vs_spec_tag(const VsSpec& spec);

struct FriendshipRecord {
  std::int64_t k = 0;
  std::string friend_name;
  std::int64_t friend_s = 0;

  bool operator==(const FriendshipRecord&) const = default;
};

struct UpperWitness {
  std::int64_t k = 0;
  std::string description;

  bool operator==(const UpperWitness&) const = default;
};

struct KnotRecord {
  std::string name;
  std::int64_t signature = 0;
  // characteristic (0 or a prime) -> s_p
  std::map<std::int64_t, std::int64_t> s_invariants;
  std::optional<std::int64_t> tau;
  VsSpec vs_spec = vs::Unknown{};
  std::optional<AlexanderPolynomial> alexander;
  std::optional<std::int64_t> clasp_plus;
  std::optional<std::int64_t> slicing_number;
  std::map<std::int64_t, Rational> gamma;
  std::vector<FriendshipRecord> friends;
  std::vector<UpperWitness> upper_witnesses;
  std::optional<std::string> concordant_to;
  std::optional<std::vector<std::string>> connected_sum_of;

  bool operator==(const KnotRecord&) const = default;
};

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string field;
  std::string message;
};

// Checks every record invariant. Errors first, in field order; warnings for
// V_s steps larger than one.
std::vector<Diagnostic> validate_record(const KnotRecord& r);

class KnotDatabase {
 public:
  KnotDatabase() = default;

  // Throws ParseError on duplicate names or invalid records.
  void add(KnotRecord r);

  const KnotRecord* find(std::string_view name) const;
  const KnotRecord& at(std::string_view name) const;  // throws UnknownKnot
  bool contains(std::string_view name) const { return find(name) != nullptr; }

  const std::map<std::string, KnotRecord, std::less<>>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  // Cross references (concordant_to, connected_sum_of, friend_name) that do
  // not resolve to a record in the database.
  std::vector<Diagnostic> unresolved_references() const;

  // Names closest to `name` by edit distance, for "did you mean" messages.
  std::vector<std::string> near_matches(std::string_view name, std::size_t limit = 3) const;

  bool operator==(const KnotDatabase&) const = default;

 private:
  std::map<std::string, KnotRecord, std::less<>> records_;
};

struct ParseResult {
  KnotDatabase db;
  std::vector<std::string> warnings;
};

// Parses the JSON knot database document. Throws ParseError naming the record
// and field on any failure.
ParseResult parse_knot_db(std::string_view text);
ParseResult load_knot_db(const std::string& path);

// Inverse of parse_knot_db for the fields above; records in name order.
std::string serialize_knot_db(const KnotDatabase& db);

}  // namespace slicedeg
