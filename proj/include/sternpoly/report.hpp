#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace sternpoly {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  Json params = Json::object();
  bool pass = false;
  std::string detail;
};

/// Outcome of a verification suite. `pass()` is the conjunction of every
/// check flag; a failing check always carries a nonempty detail.
class CheckReport {
 public:
  CheckReport() = default;
  CheckReport(std::string suite, Json params) : suite_(std::move(suite)), params_(std::move(params)) {}

  void add(std::string name, Json params, bool pass, std::string detail = {});
  void append(const CheckReport& other);

  const std::string& suite() const noexcept { return suite_; }
  const Json& params() const noexcept { return params_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  bool pass() const noexcept;
  std::size_t failures() const noexcept;

  Json to_json() const;
  static CheckReport from_json(const Json& j);
  std::string to_text() const;

 private:
  std::string suite_;
  Json params_ = Json::object();
  std::vector<Check> checks_;
};

}  // namespace sternpoly
