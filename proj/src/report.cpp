#include "simploid/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace simploid {

const std::string& lemma_tag(const std::string& name) {
  auto& tags = lemma_tags();
  auto it = std::find(tags.begin(), tags.end(), name);
  if (it == tags.end()) throw std::logic_error("unknown lemma tag " + name);
  return *it;
}

bool Report::verdict() const {
  for (auto& c : cases)
    if (!c.verdict) return false;
  return true;
}

void Report::add(std::string name, bool v, nlohmann::json detail) {
  cases.push_back({std::move(name), v, std::move(detail)});
}

nlohmann::json Report::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (auto& c : cases) cs.push_back({{"name", c.name}, {"verdict", c.verdict}, {"detail", c.detail}});
  nlohmann::json j{{"command", command}, {"lemma", lemma_tag(lemma)}, {"verdict", verdict()}, {"config", config}, {"cases", cs}};
  if (!output.is_null()) j["output"] = output;
  if (!timings.is_null()) j["timings"] = timings;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << " [" << lemma_tag(lemma) << "]: " << (verdict() ? "true" : "false") << "\n";
  os << "config: " << config.dump() << "\n";
  size_t width = 0;
  for (auto& c : cases) width = std::max(width, c.name.size());
  for (auto& c : cases) {
    os << "  " << (c.verdict ? "ok   " : "FAIL ") << c.name << std::string(width - c.name.size(), ' ');
    if (!c.detail.empty()) os << "  " << c.detail.dump();
    os << "\n";
  }
  size_t pass = std::count_if(cases.begin(), cases.end(), [](const ReportCase& c) { return c.verdict; });
  os << pass << "/" << cases.size() << " cases hold\n";
  if (!output.is_null()) os << "output: " << output.dump(2) << "\n";
  if (!timings.is_null()) os << "timings: " << timings.dump() << "\n";
  return os.str();
}

}  // namespace simploid
