#include "slicedeg/report.hpp"

#include <sstream>

#include "json.hpp"
#include "slicedeg/errors.hpp"

namespace slicedeg {

using json = nlohmann::ordered_json;

namespace {

json witness_json(const Witness& w) {
  struct Visitor {
    json operator()(const std::monostate&) const { return nullptr; }
    json operator()(const BetaWitness& b) const {
      return {{"type", "beta"}, {"source", b.source}, {"beta", b.beta}, {"rhs", b.rhs}};
    }
    json operator()(const VsWitness& v) const {
      return {{"type", "vs"}, {"lambda", v.lambda}, {"j", v.j}, {"lhs", v.lhs}, {"rhs", v.rhs}};
    }
    json operator()(const GammaWitness& g) const {
      return {{"type", "gamma"},   {"c", g.c},     {"kappa_min", to_string(g.kappa)}, {"index", g.index},
              {"eta", g.eta},      {"gamma", to_string(g.gamma)}};
    }
    json operator()(const NullClassWitness& n) const { return {{"type", "null_class"}, {"reason", n.reason}}; }
    json operator()(const FriendWitness& f) const {
      return {{"type", "friend"}, {"k", f.k}, {"friend_name", f.friend_name}, {"friend_s", f.friend_s}};
    }
  };
  return std::visit(Visitor{}, w);
}

Witness witness_from_json(const json& j) {
  if (j.is_null()) return std::monostate{};
  const auto type = j.at("type").get<std::string>();
  if (type == "beta") {
    return BetaWitness{j.at("source").get<std::string>(), j.at("beta").get<std::int64_t>(),
                       j.at("rhs").get<std::int64_t>()};
  }
  if (type == "vs") {
    return VsWitness{j.at("lambda").get<std::vector<std::int64_t>>(), j.at("j").get<std::int64_t>(),
                     j.at("lhs").get<std::int64_t>(), j.at("rhs").get<std::int64_t>()};
  }
  if (type == "gamma") {
    return GammaWitness{j.at("c").get<std::vector<std::int64_t>>(),
                        parse_rational(j.at("kappa_min").get<std::string>()), j.at("index").get<std::int64_t>(),
                        j.at("eta").get<std::string>(), parse_rational(j.at("gamma").get<std::string>())};
  }
  if (type == "null_class") return NullClassWitness{j.at("reason").get<std::string>()};
  if (type == "friend") {
    return FriendWitness{j.at("k").get<std::int64_t>(), j.at("friend_name").get<std::string>(),
                         j.at("friend_s").get<std::int64_t>()};
  }
  throw DataError("unknown witness type '" + type + "'");
}

json class_json(const HomologyClass& c) { return c.coords(); }

json report_json(const BoundReport& r, bool with_certificates) {
  json o;
  o["name"] = r.knot;
  o["lower"] = r.lower;
  o["upper"] = r.upper ? json(*r.upper) : json(nullptr);
  o["lower_exhausted"] = r.lower_exhausted;
  o["interval"] = render_interval(r);
  o["upper_witness"] = r.upper_witness;
  o["surviving_class"] = r.surviving_class ? class_json(*r.surviving_class) : json(nullptr);
  if (!r.error.empty()) o["error"] = r.error;
  json certs = json::array();
  if (with_certificates) {
    for (const auto& lvl : r.certificates) {
      json l;
      l["k"] = lvl.k;
      l["level"] = lvl.level_verdict ? witness_json(lvl.level_verdict->witness) : json(nullptr);
      json classes = json::array();
      for (const auto& c : lvl.classes) {
        classes.push_back(
            {{"class", class_json(c.cls)}, {"obstruction", c.obstruction}, {"witness", witness_json(c.verdict.witness)}});
      }
      l["classes"] = std::move(classes);
      certs.push_back(std::move(l));
    }
  }
  o["certificates"] = std::move(certs);
  return o;
}

}  // namespace

std::string verdict_to_json(const Verdict& v, int indent) {
  json o;
  o["obstructed"] = v.obstructed;
  o["witness"] = witness_json(v.witness);
  if (!v.note.empty()) o["note"] = v.note;
  o["summary"] = describe(v);
  return o.dump(indent);
}

std::string report_to_json(const BoundReport& r, bool with_certificates, int indent) {
  return report_json(r, with_certificates).dump(indent);
}

BoundReport report_from_json(std::string_view text) {
  json o;
  try {
    o = json::parse(text.begin(), text.end());
    BoundReport r;
    r.knot = o.at("name").get<std::string>();
    r.lower = o.at("lower").get<std::int64_t>();
    if (!o.at("upper").is_null()) r.upper = o.at("upper").get<std::int64_t>();
    r.lower_exhausted = o.at("lower_exhausted").get<bool>();
    r.upper_witness = o.value("upper_witness", std::string{});
    if (o.contains("surviving_class") && !o["surviving_class"].is_null()) {
      r.surviving_class = HomologyClass(o["surviving_class"].get<std::vector<std::int64_t>>());
    }
    r.error = o.value("error", std::string{});
    for (const auto& l : o.at("certificates")) {
      LevelCertificate lvl;
      lvl.k = l.at("k").get<std::int64_t>();
      if (!l.at("level").is_null()) lvl.level_verdict = Verdict::kill(witness_from_json(l["level"]));
      for (const auto& c : l.at("classes")) {
        auto w = witness_from_json(c.at("witness"));
        Verdict v = std::holds_alternative<std::monostate>(w) ? Verdict::pass() : Verdict::kill(std::move(w));
        lvl.classes.push_back({HomologyClass(c.at("class").get<std::vector<std::int64_t>>()),
                               c.at("obstruction").get<std::string>(), std::move(v)});
      }
      r.certificates.push_back(std::move(lvl));
    }
    return r;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed bound report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("malformed bound report: ") + e.what());
  }
}

std::string report_to_text(const BoundReport& r, bool with_certificates) {
  std::ostringstream out;
  out << r.knot << ": sd+ in " << render_interval(r) << "\n";
  if (!r.error.empty()) {
    out << "  error: " << r.error << "\n";
    return out.str();
  }
  out << "  lower: " << r.lower << (r.lower_exhausted ? " (search cap reached)" : "") << "\n";
  out << "  upper: " << (r.upper ? std::to_string(*r.upper) : "unknown");
  if (r.upper) out << " (" << r.upper_witness << ")";
  out << "\n";
  if (r.surviving_class) out << "  first surviving class at k = " << r.lower << ": " << to_string(*r.surviving_class) << "\n";
  if (with_certificates) {
    for (const auto& lvl : r.certificates) {
      out << "  k = " << lvl.k << ":";
      if (lvl.level_verdict) {
        out << " " << describe(*lvl.level_verdict) << "\n";
        continue;
      }
      out << "\n";
      for (const auto& c : lvl.classes) out << "    " << to_string(c.cls) << "  " << describe(c.verdict) << "\n";
    }
  }
  return out.str();
}

std::string render_table(const std::vector<BoundReport>& rows, std::string_view format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(report_json(r, false));
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == "md") {
    out << "| K | sd+(K) |\n|---|---|\n";
    for (const auto& r : rows) out << "| " << r.knot << " | " << render_interval(r) << " |\n";
  } else {
    for (const auto& r : rows) {
      out << r.knot << "\t" << render_interval(r);
      if (!r.error.empty()) out << "\t" << r.error;
      out << "\n";
    }
  }
  return out.str();
}

std::string render_beta_table(const std::vector<BetaRow>& rows, std::string_view format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back({{"beta", r.beta}, {"min_k", r.min_k}, {"class", class_json(r.witness)}});
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "| beta | sd+ >= | class |\n|---|---|---|\n";
  for (const auto& r : rows) out << "| " << r.beta << " | " << r.min_k << " | " << to_string(r.witness) << " |\n";
  return out.str();
}

}  // namespace slicedeg
