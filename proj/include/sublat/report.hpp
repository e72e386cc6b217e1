#pragma once

// JSON serialization of verdict reports:
//   [{"checker", "group", "instances", "outcome",
//     "witnesses": [{"orders": [...], "generators": [[...], ...]}]}]
// Field and array order is stable so reports are byte-comparable.

#include <string>
#include <vector>

#include "sublat/verify.hpp"

namespace sublat {

std::string reports_to_json(const std::vector<VerdictReport>& reports);
void save_report(const std::vector<VerdictReport>& reports, const std::string& path);

}  // namespace sublat
