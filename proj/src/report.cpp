#include "sublat/report.hpp"

#include <fstream>

#include <json.hpp>

#include "sublat/error.hpp"

namespace sublat {

std::string reports_to_json(const std::vector<VerdictReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerdictReport& r : reports) {
    nlohmann::ordered_json j;
    j["checker"] = r.checker;
    j["group"] = r.group;
    j["instances"] = r.instances;
    j["outcome"] = outcome_name(r.outcome);
    nlohmann::ordered_json ws = nlohmann::ordered_json::array();
    for (const Witness& w : r.witnesses) {
      nlohmann::ordered_json jw;
      jw["orders"] = w.orders;
      jw["generators"] = w.generators;
      ws.push_back(std::move(jw));
    }
    j["witnesses"] = std::move(ws);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

void save_report(const std::vector<VerdictReport>& reports, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write report file: " + path);
  out << reports_to_json(reports);
}

}  // namespace sublat
