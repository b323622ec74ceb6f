#include "slicedeg/knot_model.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "slicedeg/errors.hpp"

namespace slicedeg {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("empty integer");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad digit in '" + std::string(s) + "'");
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

// ---------------------------------------------------------------------------
// AlexanderPolynomial

std::int64_t AlexanderPolynomial::at(int e) const {
  const int g = degree();
  if (e < -g || e > g) return 0;
  return coeffs[static_cast<std::size_t>(e + g)];
}

bool AlexanderPolynomial::palindromic() const {
  if (coeffs.size() % 2 == 0) return false;
  return std::equal(coeffs.begin(), coeffs.end(), coeffs.rbegin());
}

std::int64_t AlexanderPolynomial::value_at_one() const {
  std::int64_t sum = 0;
  for (auto c : coeffs) sum += c;
  return sum;
}

std::string_view vs_spec_tag(const VsSpec& spec) {
  struct Tag {
    std::string_view operator()(const vs::Unknown&) const { return "unknown"; }
    std::string_view operator()(const vs::Explicit&) const { return "explicit"; }
    std::string_view operator()(const vs::Thin&) const { return "thin"; }
    std::string_view operator()(const vs::LSpace&) const { return "lspace"; }
    std::string_view operator()(const vs::MirrorLSpace&) const { return "mirror_lspace"; }
  };
  return std::visit(Tag{}, spec);
}

namespace {

bool is_even(std::int64_t x) { return x % 2 == 0; }

// Coefficients (-1)^(m-i) at the positive support n_1 < ... < n_m, (-1)^m at 0,
// zero elsewhere.
bool lspace_form(const AlexanderPolynomial& a) {
  const int g = a.degree();
  std::vector<int> support;
  for (int e = 1; e <= g; ++e) {
    auto c = a.at(e);
    if (c == 0) continue;
    if (c != 1 && c != -1) return false;
    support.push_back(e);
  }
  const auto m = static_cast<int>(support.size());
  if (m == 0) return false;
  for (int i = 1; i <= m; ++i) {
    const std::int64_t want = ((m - i) % 2 == 0) ? 1 : -1;
    if (a.at(support[static_cast<std::size_t>(i - 1)]) != want) return false;
  }
  return a.at(0) == ((m % 2 == 0) ? 1 : -1);
}

void diag(std::vector<Diagnostic>& out, Severity sev, std::string field, std::string msg) {
  out.push_back({sev, std::move(field), std::move(msg)});
}

}  // namespace

std::vector<Diagnostic> validate_record(const KnotRecord& r) {
  std::vector<Diagnostic> out;
  if (r.name.empty()) diag(out, Severity::kError, "name", "name must be non-empty");
  if (!is_even(r.signature)) diag(out, Severity::kError, "signature", "signature must be even");
  for (const auto& [p, s] : r.s_invariants) {
    if (p < 0) diag(out, Severity::kError, "s_invariants", "characteristic must be 0 or a prime");
    if (!is_even(s)) {
      diag(out, Severity::kError, "s_invariants",
           "s_" + std::to_string(p) + " must be even");
    }
  }
  if (r.alexander) {
    if (!r.alexander->palindromic()) {
      diag(out, Severity::kError, "alexander", "Alexander polynomial must be palindromic");
    } else if (r.alexander->value_at_one() != 1) {
      diag(out, Severity::kError, "alexander", "Alexander polynomial must satisfy Delta(1) = 1");
    }
  }
  if (std::holds_alternative<vs::Thin>(r.vs_spec) && !r.tau) {
    diag(out, Severity::kError, "vs_spec", "vs_spec thin requires tau");
  }
  if (std::holds_alternative<vs::LSpace>(r.vs_spec)) {
    if (!r.alexander) {
      diag(out, Severity::kError, "vs_spec", "vs_spec lspace requires alexander");
    } else if (r.alexander->palindromic() && !lspace_form(*r.alexander)) {
      diag(out, Severity::kError, "vs_spec", "alexander is not in L-space form");
    }
  }
  if (const auto* ex = std::get_if<vs::Explicit>(&r.vs_spec)) {
    const auto& v = ex->values;
    bool negative = false, increasing = false, big_step = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) negative = true;
      if (i + 1 < v.size() && v[i + 1] > v[i]) increasing = true;
      const std::int64_t next = i + 1 < v.size() ? v[i + 1] : 0;
      if (v[i] - next > 1) big_step = true;
    }
    if (negative) diag(out, Severity::kError, "vs_spec", "V_s must be non-negative");
    if (increasing) diag(out, Severity::kError, "vs_spec", "V_s must be non-increasing");
    if (big_step && !negative && !increasing) {
      diag(out, Severity::kWarning, "vs_spec", "V_s drops by more than 1");
    }
  }
  if (r.clasp_plus && *r.clasp_plus < 0) diag(out, Severity::kError, "clasp_plus", "clasp_plus must be >= 0");
  if (r.slicing_number && *r.slicing_number < 0) {
    diag(out, Severity::kError, "slicing_number", "slicing_number must be >= 0");
  }
  for (const auto& [s, g] : r.gamma) {
    if (s < 0) diag(out, Severity::kError, "gamma", "gamma index must be >= 0");
    if (g <= 0) diag(out, Severity::kError, "gamma", "gamma values must be positive");
  }
  for (const auto& f : r.friends) {
    if (f.k < 0) diag(out, Severity::kError, "friends", "friendship k must be >= 0");
    if (!is_even(f.friend_s)) diag(out, Severity::kError, "friends", "friend_s must be even");
  }
  for (const auto& w : r.upper_witnesses) {
    if (w.k < 0) diag(out, Severity::kError, "upper_witnesses", "witness k must be >= 0");
  }
  std::stable_partition(out.begin(), out.end(),
                        [](const Diagnostic& d) { return d.severity == Severity::kError; });
  return out;
}

// ---------------------------------------------------------------------------
// KnotDatabase

void KnotDatabase::add(KnotRecord r) {
  for (const auto& d : validate_record(r)) {
    if (d.severity == Severity::kError) {
      throw ParseError("record '" + r.name + "' field '" + d.field + "': " + d.message);
    }
  }
  if (records_.contains(r.name)) throw ParseError("duplicate name '" + r.name + "'");
  auto name = r.name;
  records_.emplace(std::move(name), std::move(r));
}

const KnotRecord* KnotDatabase::find(std::string_view name) const {
  auto it = records_.find(name);
  return it == records_.end() ? nullptr : &it->second;
}

const KnotRecord& KnotDatabase::at(std::string_view name) const {
  if (const auto* r = find(name)) return *r;
  std::string msg = "unknown knot '" + std::string(name) + "'";
  auto near = near_matches(name);
  if (!near.empty()) {
    msg += "; did you mean";
    for (std::size_t i = 0; i < near.size(); ++i) msg += (i ? ", " : " ") + near[i];
    msg += "?";
  }
  throw UnknownKnot(msg);
}

std::vector<Diagnostic> KnotDatabase::unresolved_references() const {
  std::vector<Diagnostic> out;
  auto check = [&](const std::string& owner, const std::string& field, const std::string& target) {
    if (!contains(target)) {
      diag(out, Severity::kWarning, field,
           "record '" + owner + "' references unknown knot '" + target + "'");
    }
  };
  for (const auto& [name, r] : records_) {
    if (r.concordant_to) check(name, "concordant_to", *r.concordant_to);
    if (r.connected_sum_of) {
      for (const auto& s : *r.connected_sum_of) check(name, "connected_sum_of", s);
    }
    for (const auto& f : r.friends) check(name, "friends", f.friend_name);
  }
  return out;
}

namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace

std::vector<std::string> KnotDatabase::near_matches(std::string_view name, std::size_t limit) const {
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& [n, r] : records_) scored.emplace_back(edit_distance(name, n), n);
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (const auto& [d, n] : scored) {
    if (out.size() >= limit || d > std::max<std::size_t>(2, name.size() / 2)) break;
    out.push_back(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON parsing

namespace {

class FieldReader {
 public:
  FieldReader(const json& obj, std::string record) : obj_(obj), record_(std::move(record)) {}

  [[noreturn]] void fail(std::string_view field, std::string_view msg) const {
    throw ParseError("record '" + record_ + "' field '" + std::string(field) + "': " + std::string(msg));
  }

  const json* get(std::string_view field) const {
    auto it = obj_.find(std::string(field));
    if (it == obj_.end() || it->is_null()) return nullptr;
    return &*it;
  }

  std::int64_t integer(const json& v, std::string_view field) const {
    if (v.is_number_integer()) {
      if (v.is_number_unsigned() &&
          v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        fail(field, "integer out of supported range");
      }
      return v.get<std::int64_t>();
    }
    if (v.is_number_float()) fail(field, "expected an integer (non-integral or out of supported range)");
    if (v.is_string()) {
      // Decimal strings are accepted so that large values can be carried losslessly.
      try {
        std::size_t pos = 0;
        auto s = v.get<std::string>();
        long long x = std::stoll(s, &pos);
        if (pos != s.size()) fail(field, "expected an integer");
        return x;
      } catch (const std::out_of_range&) {
        fail(field, "integer out of supported range");
      } catch (const std::invalid_argument&) {
        fail(field, "expected an integer");
      }
    }
    fail(field, "expected an integer");
  }

  std::optional<std::int64_t> opt_integer(std::string_view field) const {
    const json* v = get(field);
    if (!v) return std::nullopt;
    return integer(*v, field);
  }

  std::string string(const json& v, std::string_view field) const {
    if (!v.is_string()) fail(field, "expected a string");
    return v.get<std::string>();
  }

  const json& array(const json& v, std::string_view field) const {
    if (!v.is_array()) fail(field, "expected an array");
    return v;
  }

 private:
  const json& obj_;
  std::string record_;
};

const std::set<std::string, std::less<>> kKnownFields = {
    "name",      "signature",      "s_invariants", "tau",        "vs_spec",
    "alexander", "clasp_plus",     "slicing_number", "gamma",    "friends",
    "upper_witnesses", "concordant_to", "connected_sum_of"};

using UnknownFields = std::map<std::string, std::vector<std::string>>;

KnotRecord parse_record(const json& obj, std::size_t index, std::vector<std::string>& warnings,
                        UnknownFields& unknown) {
  if (!obj.is_object()) {
    throw ParseError("entry " + std::to_string(index) + ": expected an object");
  }
  auto name_it = obj.find("name");
  if (name_it == obj.end() || !name_it->is_string()) {
    throw ParseError("entry " + std::to_string(index) + " field 'name': missing or not a string");
  }
  KnotRecord r;
  r.name = name_it->get<std::string>();
  FieldReader rd(obj, r.name);

  for (const auto& [key, _] : obj.items()) {
    if (!kKnownFields.contains(key)) {
      unknown[key].push_back(r.name);
    }
  }

  const json* sig = rd.get("signature");
  if (!sig) rd.fail("signature", "missing required field");
  r.signature = rd.integer(*sig, "signature");

  if (const json* s = rd.get("s_invariants")) {
    if (!s->is_object()) rd.fail("s_invariants", "expected an object mapping characteristic to s_p");
    for (const auto& [key, val] : s->items()) {
      std::int64_t p = 0;
      try {
        std::size_t pos = 0;
        p = std::stoll(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        rd.fail("s_invariants", "characteristic key '" + key + "' is not an integer");
      }
      r.s_invariants[p] = rd.integer(val, "s_invariants");
    }
  }

  r.tau = rd.opt_integer("tau");

  if (const json* v = rd.get("vs_spec")) {
    if (!v->is_object()) rd.fail("vs_spec", "expected an object with a 'type' field");
    auto t = v->find("type");
    if (t == v->end() || !t->is_string()) rd.fail("vs_spec", "missing 'type'");
    const auto type = t->get<std::string>();
    if (type == "thin") {
      r.vs_spec = vs::Thin{};
    } else if (type == "lspace") {
      r.vs_spec = vs::LSpace{};
    } else if (type == "mirror_lspace") {
      r.vs_spec = vs::MirrorLSpace{};
    } else if (type == "unknown") {
      r.vs_spec = vs::Unknown{};
    } else if (type == "explicit") {
      auto vals = v->find("values");
      if (vals == v->end()) rd.fail("vs_spec", "explicit V_s requires 'values'");
      vs::Explicit ex;
      for (const auto& x : rd.array(*vals, "vs_spec")) ex.values.push_back(rd.integer(x, "vs_spec"));
      r.vs_spec = std::move(ex);
    } else {
      rd.fail("vs_spec", "unknown type '" + type + "'");
    }
  }

  if (const json* a = rd.get("alexander")) {
    AlexanderPolynomial poly;
    for (const auto& x : rd.array(*a, "alexander")) poly.coeffs.push_back(rd.integer(x, "alexander"));
    if (poly.coeffs.empty()) rd.fail("alexander", "empty coefficient list");
    r.alexander = std::move(poly);
  }

  r.clasp_plus = rd.opt_integer("clasp_plus");
  r.slicing_number = rd.opt_integer("slicing_number");

  if (const json* g = rd.get("gamma")) {
    if (!g->is_object()) rd.fail("gamma", "expected an object mapping s to \"num/den\"");
    for (const auto& [key, val] : g->items()) {
      std::int64_t s = 0;
      try {
        std::size_t pos = 0;
        s = std::stoll(key, &pos);
        if (pos != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        rd.fail("gamma", "index '" + key + "' is not an integer");
      }
      if (!val.is_string() && !val.is_number_integer()) rd.fail("gamma", "expected \"num/den\"");
      try {
        r.gamma[s] = val.is_string() ? parse_rational(val.get<std::string>())
                                     : Rational(rd.integer(val, "gamma"));
      } catch (const std::invalid_argument& e) {
        rd.fail("gamma", std::string("bad rational: ") + e.what());
      }
    }
  }

  if (const json* fs = rd.get("friends")) {
    for (const auto& f : rd.array(*fs, "friends")) {
      if (!f.is_object()) rd.fail("friends", "expected objects {k, friend_name, friend_s}");
      FieldReader fr(f, r.name);
      FriendshipRecord rec;
      const json* k = fr.get("k");
      const json* n = fr.get("friend_name");
      const json* s = fr.get("friend_s");
      if (!k || !n || !s) rd.fail("friends", "friendship requires k, friend_name and friend_s");
      rec.k = rd.integer(*k, "friends");
      rec.friend_name = rd.string(*n, "friends");
      rec.friend_s = rd.integer(*s, "friends");
      r.friends.push_back(std::move(rec));
    }
  }

  if (const json* ws = rd.get("upper_witnesses")) {
    for (const auto& w : rd.array(*ws, "upper_witnesses")) {
      UpperWitness uw;
      if (w.is_object()) {
        FieldReader wr(w, r.name);
        const json* k = wr.get("k");
        if (!k) rd.fail("upper_witnesses", "witness requires k");
        uw.k = rd.integer(*k, "upper_witnesses");
        if (const json* d = wr.get("description")) uw.description = rd.string(*d, "upper_witnesses");
      } else if (w.is_array() && w.size() == 2) {
        uw.k = rd.integer(w[0], "upper_witnesses");
        uw.description = rd.string(w[1], "upper_witnesses");
      } else {
        rd.fail("upper_witnesses", "expected {k, description} or [k, description]");
      }
      r.upper_witnesses.push_back(std::move(uw));
    }
  }

  if (const json* c = rd.get("concordant_to")) r.concordant_to = rd.string(*c, "concordant_to");
  if (const json* cs = rd.get("connected_sum_of")) {
    std::vector<std::string> names;
    for (const auto& n : rd.array(*cs, "connected_sum_of")) names.push_back(rd.string(n, "connected_sum_of"));
    r.connected_sum_of = std::move(names);
  }

  for (const auto& d : validate_record(r)) {
    if (d.severity == Severity::kError) rd.fail(d.field, d.message);
    warnings.push_back("record '" + r.name + "' field '" + d.field + "': " + d.message);
  }
  return r;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

ParseResult parse_knot_db(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                     ": " + e.what());
  }
  if (!doc.is_array()) throw ParseError("top-level value must be an array of knot records");

  ParseResult out;
  UnknownFields unknown;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    out.db.add(parse_record(doc[i], i, out.warnings, unknown));
  }
  for (const auto& [field, names] : unknown) {
    std::string msg = "ignoring unknown field '" + field + "' in ";
    msg += names.size() == 1 ? "record '" + names.front() + "'" : std::to_string(names.size()) + " records";
    out.warnings.push_back(std::move(msg));
  }
  for (const auto& d : out.db.unresolved_references()) out.warnings.push_back(d.message);
  return out;
}

ParseResult load_knot_db(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open knot database '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_knot_db(ss.str());
}

std::string serialize_knot_db(const KnotDatabase& db) {
  json doc = json::array();
  for (const auto& [name, r] : db.records()) {
    json o;
    o["name"] = r.name;
    o["signature"] = r.signature;
    if (!r.s_invariants.empty()) {
      json s = json::object();
      for (const auto& [p, v] : r.s_invariants) s[std::to_string(p)] = v;
      o["s_invariants"] = s;
    }
    if (r.tau) o["tau"] = *r.tau;
    json spec;
    spec["type"] = std::string(vs_spec_tag(r.vs_spec));
    if (const auto* ex = std::get_if<vs::Explicit>(&r.vs_spec)) spec["values"] = ex->values;
    o["vs_spec"] = spec;
    if (r.alexander) o["alexander"] = r.alexander->coeffs;
    if (r.clasp_plus) o["clasp_plus"] = *r.clasp_plus;
    if (r.slicing_number) o["slicing_number"] = *r.slicing_number;
    if (!r.gamma.empty()) {
      json g = json::object();
      for (const auto& [s, v] : r.gamma) g[std::to_string(s)] = to_string(v);
      o["gamma"] = g;
    }
    if (!r.friends.empty()) {
      json fs = json::array();
      for (const auto& f : r.friends) {
        fs.push_back({{"k", f.k}, {"friend_name", f.friend_name}, {"friend_s", f.friend_s}});
      }
      o["friends"] = fs;
    }
    if (!r.upper_witnesses.empty()) {
      json ws = json::array();
      for (const auto& w : r.upper_witnesses) ws.push_back({{"k", w.k}, {"description", w.description}});
      o["upper_witnesses"] = ws;
    }
    if (r.concordant_to) o["concordant_to"] = *r.concordant_to;
    if (r.connected_sum_of) o["connected_sum_of"] = *r.connected_sum_of;
    doc.push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

}  // namespace slicedeg
