#include <json.hpp>

#include "oseq/search.hpp"

namespace oseq {

std::string to_json(const SearchOutcome& outcome) {
  nlohmann::ordered_json doc;
  doc["status"] = status_name(outcome.status);
  if (outcome.ideal) {
    nlohmann::ordered_json ideal;
    ideal["vars"] = outcome.ideal->num_vars();
    ideal["generators"] = nlohmann::json::array();
    for (const auto& g : outcome.ideal->generators()) {
      ideal["generators"].push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
    }
    doc["order_ideal"] = std::move(ideal);
  }
  doc["examined"] = outcome.stats.examined;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [deg, n] : outcome.stats.prune_histogram) hist[std::to_string(deg)] = n;
  doc["prune_histogram"] = std::move(hist);
  return doc.dump();
}

}  // namespace oseq
