#include "sternpoly/report.hpp"

#include <algorithm>

namespace sternpoly {

void CheckReport::add(std::string name, Json params, bool pass, std::string detail) {
  if (!pass && detail.empty()) detail = "failed";
  checks_.push_back({std::move(name), std::move(params), pass, std::move(detail)});
}

void CheckReport::append(const CheckReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool CheckReport::pass() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::size_t CheckReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

Json CheckReport::to_json() const {
  Json checks = Json::array();
  for (const auto& c : checks_) {
    Json entry;
    entry["name"] = c.name;
    entry["params"] = c.params;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  Json out;
  out["suite"] = suite_;
  out["params"] = params_;
  out["checks"] = std::move(checks);
  out["pass"] = pass();
  return out;
}

CheckReport CheckReport::from_json(const Json& j) {
  CheckReport report(j.at("suite").get<std::string>(), j.at("params"));
  for (const auto& c : j.at("checks"))
    report.checks_.push_back(
        {c.at("name").get<std::string>(), c.at("params"), c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
  return report;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.name;
    out += " ";
    out += c.params.dump();
    if (!c.detail.empty()) out += "  " + c.detail;
    out += "\n";
  }
  out += suite_ + ": " + std::to_string(checks_.size() - failures()) + "/" + std::to_string(checks_.size()) +
         " checks passed\n";
  return out;
}

}  // namespace sternpoly
