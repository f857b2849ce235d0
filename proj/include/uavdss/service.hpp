#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uavdss/dataset.hpp"
#include "uavdss/evaluation.hpp"

namespace httplib {
class Server;
}

namespace uavdss {

struct ServiceConfig {
  std::filesystem::path missions_dir = "data/missions";
  std::filesystem::path decisions_log = "decisions.jsonl";
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::filesystem::path> static_dir;  ///< UI assets served at /
};

/// Reads {"missions_dir", "decisions_log", "host", "port", "static_dir"}; relative
/// paths resolve against the config file's directory. PORT in the environment
/// overrides the port.
ServiceConfig load_service_config(const std::filesystem::path& path);

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

/// JSON API under /api/v1. Missions are loaded once and never mutated; the
/// decision log is the only mutable state.
class DssService {
 public:
  explicit DssService(const ServiceConfig& cfg);
  DssService(std::vector<MissionDataset> missions, std::filesystem::path decisions_log);

  /// Transport-independent dispatch, used by the HTTP binding and by tests.
  ApiResponse handle(std::string_view method, std::string_view path,
                     const std::map<std::string, std::string>& query, std::string_view body) const;

  /// Routes every /api/v1 request on `server` through handle().
  void mount(httplib::Server& server) const;

  const std::vector<MissionDataset>& missions() const { return missions_; }
  DecisionLog& decisions() const { return log_; }

 private:
  ApiResponse profiles() const;
  ApiResponse criteria() const;
  ApiResponse mission_list() const;
  ApiResponse solutions(const std::string& mission, const std::map<std::string, std::string>& query) const;
  ApiResponse post_decision(std::string_view body) const;
  ApiResponse scores(const std::map<std::string, std::string>& query) const;
  ApiResponse comparison(const std::map<std::string, std::string>& query) const;

  const MissionDataset& mission(const std::string& id) const;

  std::vector<MissionDataset> missions_;
  mutable DecisionLog log_;
};

/// Structured error body {code, message, detail}.
nlohmann::json error_body(std::string_view code, std::string_view message,
                          nlohmann::json detail = nlohmann::json::object());

/// Relative quality of each value within its column: the best value maps to
/// 1, the worst to 0, linear in between. A constant column maps to 1.
std::vector<double> relative_quality(std::span<const double> column, Direction direction);

/// Blocks serving the API until the process is stopped.
void serve(const ServiceConfig& cfg);

}  // namespace uavdss
