#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "slicedeg/bounds_engine.hpp"
#include "slicedeg/errors.hpp"
#include "slicedeg/knot_model.hpp"
#include "slicedeg/lattice.hpp"
#include "slicedeg/obstructions.hpp"
#include "slicedeg/report.hpp"
#include "slicedeg/staircase.hpp"

namespace slicedeg::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_class(const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  std::vector<std::int64_t> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("malformed class '" + text + "': expected comma-separated integers");
    }
    if (pos != item.size()) throw UsageError("malformed class '" + text + "': expected comma-separated integers");
    out.push_back(v);
  }
  if (!body.empty() && body.back() == ',') throw UsageError("malformed class '" + text + "'");
  return out;
}

std::set<Obstruction> parse_obstructions(const std::string& text) {
  std::set<Obstruction> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto o = parse_obstruction(item);
    if (!o) throw UsageError("unknown obstruction '" + item + "' (expected s, vs, gamma, friend)");
    out.insert(*o);
  }
  return out;
}

std::string render_vs(const VsSequence& v, std::int64_t max_s) {
  std::string out = "[";
  for (std::int64_t s = 0; s <= max_s; ++s) out += (s ? "," : "") + std::to_string(v(s));
  return out + "]";
}

std::string verdict_line(const Verdict& v) { return v.obstructed ? "obstructed; " + describe(v) : describe(v); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified bounds for the slicing degree of knots", "slicedeg"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  std::string db_path;
  bool quiet = false;
  app.add_option("--db", db_path, "Knot database (JSON)")->required();
  app.add_flag("--quiet", quiet, "Suppress diagnostics on stderr");

  // bound
  auto* bound = app.add_subcommand("bound", "Lower and upper bound for one knot");
  std::string bound_name;
  std::optional<std::int64_t> max_k;
  std::string obstructions = "s,vs,gamma,friend";
  bool as_json = false, certificates = false, c_sweep = false;
  unsigned threads = 1;
  bound->add_option("name", bound_name, "Knot name")->required();
  bound->add_option("--max-k", max_k, "Search cap")->check(CLI::NonNegativeNumber);
  bound->add_option("--obstructions", obstructions, "Comma-separated subset of s,vs,gamma,friend");
  bound->add_flag("--json", as_json, "JSON output");
  bound->add_flag("--certificates", certificates, "Include per-class certificates in text output");
  bound->add_flag("--gamma-c-sweep", c_sweep, "Also try c vectors with entries in {0,1}");
  bound->add_option("--threads", threads, "Worker threads per level")->check(CLI::PositiveNumber);

  // vs
  auto* vs_cmd = app.add_subcommand("vs", "V_s sequence of one knot");
  std::string vs_name;
  std::optional<std::int64_t> max_s;
  std::string oracle = "formula";
  vs_cmd->add_option("name", vs_name, "Knot name")->required();
  vs_cmd->add_option("--max-s", max_s, "Largest s to print")->check(CLI::NonNegativeNumber);
  vs_cmd->add_option("--oracle", oracle, "formula|staircase|torsion|all")
      ->check(CLI::IsMember({"formula", "staircase", "torsion", "all"}));

  // classes
  auto* classes_cmd = app.add_subcommand("classes", "Enumerate homology classes of norm k");
  std::int64_t classes_k = 0;
  classes_cmd->add_option("k", classes_k, "Norm")->required()->check(CLI::NonNegativeNumber);

  // check-class
  auto* check_cmd = app.add_subcommand("check-class", "Run every obstruction on one class");
  std::string check_name, check_class_text;
  check_cmd->add_option("name", check_name, "Knot name")->required();
  check_cmd->add_option("class", check_class_text, "a1,a2,...")->required();

  // beta-table
  auto* beta_cmd = app.add_subcommand("beta-table", "Adjunction lower bounds for small beta");
  std::int64_t beta_max = 16;
  std::string beta_format = "md";
  beta_cmd->add_option("--max", beta_max, "Largest beta")->check(CLI::NonNegativeNumber);
  beta_cmd->add_option("--format", beta_format, "md|json")->check(CLI::IsMember({"md", "json"}));

  // table
  auto* table_cmd = app.add_subcommand("table", "Bounds for every knot in the database");
  std::string table_format = "md";
  unsigned table_threads = 1;
  table_cmd->add_option("--format", table_format, "md|json|text")->check(CLI::IsMember({"md", "json", "text"}));
  table_cmd->add_option("--threads", table_threads, "Worker threads per level")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  auto diag = [&](const std::string& msg) {
    if (!quiet) err << msg << "\n";
  };

  try {
    auto loaded = load_knot_db(db_path);
    for (const auto& w : loaded.warnings) diag("warning: " + w);
    const KnotDatabase& db = loaded.db;

    if (*bound) {
      EngineConfig cfg;
      cfg.max_k = max_k;
      cfg.enabled = parse_obstructions(obstructions);
      cfg.gamma_c_sweep = c_sweep;
      cfg.parallelism = threads;
      const auto& r = db.at(bound_name);
      auto uppers = upper_bounds(db);
      for (const auto& w : uppers.warnings) diag("warning: " + w);
      auto rep = bound_report(r, uppers.bounds.at(r.name), cfg);
      if (as_json) {
        out << report_to_json(rep) << "\n";
      } else {
        out << report_to_text(rep, certificates);
      }
      return kExitOk;
    }

    if (*vs_cmd) {
      const auto& r = db.at(vs_name);
      VsSequence primary = vs_of(r);
      std::optional<Staircase> st;
      if (std::holds_alternative<vs::LSpace>(r.vs_spec)) st = staircase_from_alexander(*r.alexander);
      std::int64_t last = max_s.value_or(std::max<std::int64_t>(st ? st->top() : 0,
                                                                 static_cast<std::int64_t>(primary.support())));
      std::vector<std::pair<std::string, VsSequence>> shown;
      auto want = [&](std::string_view o) { return oracle == "all" || oracle == o; };
      if (want("formula")) {
        shown.emplace_back("formula", st ? vs_lspace_formula(*st) : primary);
      }
      if (want("staircase")) {
        if (st) {
          shown.emplace_back("staircase", vs_staircase_oracle(*st, last));
        } else {
          diag("note: staircase oracle needs an L-space record; '" + r.name + "' is " +
               std::string(vs_spec_tag(r.vs_spec)));
        }
      }
      if (want("torsion")) {
        if (st) {
          shown.emplace_back("torsion", vs_torsion(*r.alexander));
        } else {
          diag("note: torsion oracle needs an L-space record; '" + r.name + "' is " +
               std::string(vs_spec_tag(r.vs_spec)));
        }
      }
      bool agree = true;
      for (const auto& [label, v] : shown) {
        out << label << ": " << render_vs(v, last) << "\n";
        for (std::int64_t s = 0; s <= last; ++s) agree = agree && v(s) == shown.front().second(s);
      }
      out << "nu+: " << nu_plus(primary) << "\n";
      if (shown.size() > 1) out << "agreement: " << (agree ? "yes" : "NO") << "\n";
      return agree ? kExitOk : kExitDataError;
    }

    if (*classes_cmd) {
      for_each_class(classes_k, [&](const HomologyClass& c) {
        out << to_string(c) << "\n";
        return true;
      });
      return kExitOk;
    }

    if (*check_cmd) {
      const auto raw = parse_class(check_class_text);
      const HomologyClass cls(raw);
      if (cls.coords() != raw) diag("note: class normalized to " + to_string(cls));
      const auto& r = db.at(check_name);
      const auto facts = gather_facts(r);
      const std::int64_t k = cls.norm();
      out << r.name << " class " << to_string(cls) << " (k = " << k << ")\n";
      if (cls.empty()) {
        out << "  null class: " << verdict_line(null_class_check(facts)) << "\n";
      }
      for (const auto& b : facts.betas) {
        out << "  s [" << b.label << "]: " << verdict_line(beta_adjunction(cls, b.value, b.label)) << "\n";
      }
      if (facts.gamma.empty()) {
        out << "  gamma: pass (no Gamma data)\n";
      } else {
        out << "  gamma: " << verdict_line(gamma_general(cls, facts.signature, facts.gamma)) << "\n";
      }
      if (facts.vs) {
        out << "  vs: " << verdict_line(vs_obstruction(cls, *facts.vs)) << "\n";
      } else {
        out << "  vs: pass (V_s unavailable)\n";
      }
      for (const auto& f : facts.friends) {
        auto v = friend_rule(f.k, f.friend_s);
        out << "  friend " << f.friend_name << " (k = " << f.k << "): "
            << (v.obstructed && k <= f.k ? "obstructed (sd+ > " + std::to_string(f.k) + ")" : "pass") << "\n";
      }
      return kExitOk;
    }

    if (*beta_cmd) {
      std::vector<std::int64_t> betas;
      for (std::int64_t b = 2; b <= beta_max; b += 2) betas.push_back(b);
      out << render_beta_table(beta_table(betas), beta_format);
      return kExitOk;
    }

    if (*table_cmd) {
      EngineConfig cfg;
      cfg.parallelism = table_threads;
      auto rows = report_table(db, cfg);
      for (const auto& r : rows) {
        if (!r.error.empty()) diag("error: " + r.knot + ": " + r.error);
      }
      out << render_table(rows, table_format);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace slicedeg::cli
