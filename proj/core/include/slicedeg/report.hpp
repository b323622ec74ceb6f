#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slicedeg/bounds_engine.hpp"

namespace slicedeg {

// JSON schema of a bound report:
//   {"name", "lower", "upper" (int|null), "lower_exhausted", "upper_witness",
//    "surviving_class" ([a_i]|null), "error" (optional),
//    "certificates": [{"k", "level": witness|null,
//                      "classes": [{"class": [a_i], "obstruction", "witness"}]}]}
// with witness objects tagged by "type": beta | vs | gamma | null_class | friend.
std::string report_to_json(const BoundReport& r, bool with_certificates = true, int indent = 2);
BoundReport report_from_json(std::string_view text);

std::string report_to_text(const BoundReport& r, bool with_certificates = false);

// Table rendering: "md" (two-column Markdown), "text" or "json".
std::string render_table(const std::vector<BoundReport>& rows, std::string_view format);

std::string render_beta_table(const std::vector<BetaRow>& rows, std::string_view format);

std::string verdict_to_json(const Verdict& v, int indent = -1);

}  // namespace slicedeg
