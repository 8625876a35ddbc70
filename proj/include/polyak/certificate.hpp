#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace polyak {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Inconclusive };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

// Record of one verification run. The Json members hold claim-specific data.
struct Certificate {
  std::string claim;
  Json params = Json::object();
  Status status = Status::Fail;
  Json dims = Json::object();
  Json basis = Json::array();
  Json witnesses = Json::array();
  Json checks = Json::array();  // {name, ok, detail}
  std::int64_t diagrams = 0;
  std::int64_t relations = 0;
  std::int64_t runtime_ms = 0;
  std::string version;
  Json fingerprints = Json::object();

  void check(const std::string& name, bool ok, Json detail = nullptr);
  bool all_checks_ok() const;
};

}  // namespace polyak
