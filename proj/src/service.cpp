#include "uavdss/service.hpp"

#include <algorithm>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <httplib.h>

#include "uavdss/error.hpp"
#include "uavdss/methods.hpp"
#include "uavdss/pipeline.hpp"

namespace uavdss {

using nlohmann::json;

namespace {

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find(sep, start), s.size());
    if (end > start) out.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::string query_or(const std::map<std::string, std::string>& q, const std::string& key, std::string fallback) {
  auto it = q.find(key);
  return it == q.end() || it->second.empty() ? std::move(fallback) : it->second;
}

bool query_flag(const std::map<std::string, std::string>& q, const std::string& key) {
  const std::string v = query_or(q, key, "false");
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ValidationError("expected a boolean", "/query/" + key);
}

double query_number(const std::map<std::string, std::string>& q, const std::string& key, double fallback) {
  auto it = q.find(key);
  if (it == q.end() || it->second.empty()) return fallback;
  try {
    std::size_t used = 0;
    const double x = std::stod(it->second, &used);
    if (used == it->second.size()) return x;
  } catch (const std::exception&) {
  }
  throw ValidationError("expected a number", "/query/" + key);
}

json summary(const MissionPlan& p) {
  json assignments = json::array();
  for (const auto& [task, uavs] : p.task_uavs) {
    for (const auto& uav : uavs) {
      const TaskUav key{task, uav};
      json a = {{"task", task}, {"uav", uav}};
      if (auto it = p.orders.find(key); it != p.orders.end()) a["order"] = it->second;
      if (auto it = p.sensors.find(key); it != p.sensors.end()) a["sensor"] = it->second;
      if (auto it = p.path_profiles.find(key); it != p.path_profiles.end()) a["path"] = it->second;
      assignments.push_back(std::move(a));
    }
  }
  json uavs = json::object();
  for (const auto& [uav, gcs] : p.gcs_assign) uavs[uav]["gcs"] = gcs;
  for (const auto& [uav, ret] : p.return_profiles) uavs[uav]["return"] = ret;
  return {{"assignments", std::move(assignments)}, {"uavs", std::move(uavs)}};
}

}  // namespace

json error_body(std::string_view code, std::string_view message, json detail) {
  return {{"code", code}, {"message", message}, {"detail", std::move(detail)}};
}

std::vector<double> relative_quality(std::span<const double> column, Direction direction) {
  std::vector<double> out(column.size(), 1.0);
  if (column.empty()) return out;
  const auto [lo, hi] = std::minmax_element(column.begin(), column.end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) return out;
  for (std::size_t i = 0; i < column.size(); ++i) {
    const double f = direction == Direction::Minimize ? (*hi - column[i]) / range : (column[i] - *lo) / range;
    out[i] = std::clamp(f, 0.0, 1.0);
  }
  return out;
}

ServiceConfig load_service_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw ValidationError("config must be an object", "/");
  const auto base = path.parent_path();
  const auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };
  ServiceConfig cfg;
  const auto str = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_string()) throw ValidationError("expected a string", std::string("/") + key);
    return j[key].get<std::string>();
  };
  if (auto v = str("missions_dir")) cfg.missions_dir = resolve(*v);
  if (auto v = str("decisions_log")) cfg.decisions_log = resolve(*v);
  if (auto v = str("static_dir")) cfg.static_dir = resolve(*v);
  if (auto v = str("host")) cfg.host = *v;
  if (j.contains("port")) {
    if (!j["port"].is_number_integer()) throw ValidationError("expected an integer", "/port");
    cfg.port = j["port"].get<int>();
  }
  if (const char* env = std::getenv("PORT")) cfg.port = std::atoi(env);
  return cfg;
}

DssService::DssService(const ServiceConfig& cfg) : DssService(load_missions(cfg.missions_dir), cfg.decisions_log) {}

DssService::DssService(std::vector<MissionDataset> missions, std::filesystem::path decisions_log)
    : missions_(std::move(missions)), log_(std::move(decisions_log)) {}

const MissionDataset& DssService::mission(const std::string& id) const {
  for (const auto& m : missions_) {
    if (m.id == id) return m;
  }
  throw NotFoundError("unknown mission '" + id + "'");
}

ApiResponse DssService::handle(std::string_view method, std::string_view path,
                               const std::map<std::string, std::string>& query, std::string_view body) const {
  try {
    constexpr std::string_view prefix = "/api/v1";
    if (path.substr(0, prefix.size()) != prefix) {
      return {404, error_body("not_found", "no such endpoint", {{"path", path}})};
    }
    const auto parts = split(path.substr(prefix.size()), '/');
    if (method == "GET") {
      if (parts.size() == 1 && parts[0] == "profiles") return profiles();
      if (parts.size() == 1 && parts[0] == "criteria") return criteria();
      if (parts.size() == 1 && parts[0] == "missions") return mission_list();
      if (parts.size() == 3 && parts[0] == "missions" && parts[2] == "solutions") return solutions(parts[1], query);
      if (parts.size() == 1 && parts[0] == "scores") return scores(query);
      if (parts.size() == 1 && parts[0] == "comparison") return comparison(query);
    } else if (method == "POST") {
      if (parts.size() == 1 && parts[0] == "decisions") return post_decision(body);
    } else {
      return {405, error_body("method_not_allowed", "only GET and POST are supported")};
    }
    return {404, error_body("not_found", "no such endpoint", {{"path", path}})};
  } catch (const NotFoundError& e) {
    return {404, error_body("not_found", e.what())};
  } catch (const ValidationError& e) {
    return {422, error_body("validation_error", e.what(), {{"pointer", e.pointer()}})};
  } catch (const DomainError& e) {
    return {422, error_body("domain_error", e.what())};
  } catch (const std::exception& e) {
    return {500, error_body("internal_error", e.what())};
  }
}

ApiResponse DssService::profiles() const {
  json out = json::array();
  for (const auto& p : builtin_profiles()) {
    json degrees = json::object();
    json weights = json::object();
    for (const auto& [id, d] : p.degrees) degrees[id] = degree_name(d);
    for (const auto& [id, w] : crisp_weights(p, mission_criteria()).weights) weights[id] = w;
    out.push_back({{"name", p.name}, {"degrees", std::move(degrees)}, {"weights", std::move(weights)}});
  }
  return {200, out};
}

ApiResponse DssService::criteria() const {
  json out = json::array();
  for (const auto& c : mission_criteria()) {
    out.push_back({{"id", c.id},
                   {"label", c.label},
                   {"direction", c.direction == Direction::Minimize ? "minimize" : "maximize"},
                   {"unit", c.unit}});
  }
  return {200, out};
}

ApiResponse DssService::mission_list() const {
  json out = json::array();
  for (const auto& m : missions_) {
    out.push_back({{"id", m.id},
                   {"plans", m.plans.size()},
                   {"meta",
                    {{"tasks", m.meta.tasks},
                     {"multi_uav_tasks", m.meta.multi_uav_tasks},
                     {"uavs", m.meta.uavs},
                     {"gcss", m.meta.gcss}}}});
  }
  return {200, out};
}

ApiResponse DssService::solutions(const std::string& id, const std::map<std::string, std::string>& query) const {
  const MissionDataset& ds = mission(id);
  const OperatorProfile& profile = builtin_profile(query_or(query, "profile", "Balanced"));
  const bool filtered = query_flag(query, "filtered");
  std::string method = query_or(query, "method", "");
  if (method.empty() && filtered) method = kDefaultMethod;
  if (!method.empty() && !is_method(method)) throw NotFoundError("unknown method '" + method + "'");

  std::vector<MissionPlan> served = ds.plans;
  std::optional<Ranking> ranking;
  double threshold = 0.0;
  if (!method.empty()) {
    PipelineConfig cfg;
    cfg.method = method;
    cfg.profile = profile.name;
    cfg.threshold = threshold = query_number(query, "threshold", kDefaultThreshold);
    auto result = run_pipeline(ds, cfg);
    served = filtered ? std::move(result.filtered) : std::move(result.ranked_plans);
    ranking = std::move(result.ranking);
  }

  const auto& criteria = mission_criteria();
  std::vector<std::vector<double>> quality;
  for (const auto& c : criteria) {
    std::vector<double> column;
    for (const auto& p : served) column.push_back(p.criteria.at(c.id));
    quality.push_back(relative_quality(column, c.direction));
  }

  json rows = json::array();
  for (std::size_t i = 0; i < served.size(); ++i) {
    const auto& p = served[i];
    json values = json::object();
    json fractions = json::object();
    for (std::size_t c = 0; c < criteria.size(); ++c) {
      values[criteria[c].id] = p.criteria.at(criteria[c].id);
      fractions[criteria[c].id] = quality[c][i];
    }
    json row = {{"plan", p.id}, {"values", std::move(values)}, {"quality", std::move(fractions)},
                {"summary", summary(p)}};
    if (ranking) {
      for (const auto& r : ranking->ordered) {
        if (r.id != p.id) continue;
        row["rank"] = r.rank;
        row["score"] = r.score ? json(*r.score) : json(nullptr);
      }
    }
    rows.push_back(std::move(row));
  }
  json out = {{"mission", ds.id}, {"profile", profile.name}, {"filtered", filtered}, {"total", ds.plans.size()},
              {"solutions", std::move(rows)}};
  out["method"] = method.empty() ? json(nullptr) : json(method);
  if (filtered) out["threshold"] = threshold;
  return {200, out};
}

ApiResponse DssService::post_decision(std::string_view body) const {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error& e) {
    return {422, error_body("malformed_json", e.what())};
  }
  Decision d = decision_from_json(j);
  const MissionDataset& ds = mission(d.mission);
  builtin_profile(d.profile);
  if (!ds.has_plan(d.plan)) {
    throw ValidationError("mission '" + ds.id + "' has no plan '" + d.plan + "'", "/plan");
  }
  if (d.timestamp.empty()) d.timestamp = utc_now();
  log_.append(d);
  return {201, to_json(d)};
}

ApiResponse DssService::scores(const std::map<std::string, std::string>& query) const {
  std::vector<GroupKey> keys;
  std::vector<std::string> key_names;
  for (const auto& name : split(query_or(query, "group_by", "method"), ',')) {
    keys.push_back(parse_group_key(name));
    key_names.push_back(name);
  }
  std::vector<std::string> methods = method_names();
  if (auto it = query.find("method"); it != query.end() && !it->second.empty()) methods = split(it->second, ',');

  const auto decisions = log_.load();
  const auto report = score_decisions(decisions, missions_, methods);
  json rows = json::array();
  if (!report.records.empty()) {
    for (const auto& r : aggregate_scores(report.records, keys)) {
      json key = json::object();
      for (std::size_t i = 0; i < keys.size(); ++i) key[key_names[i]] = r.key[i];
      rows.push_back({{"key", std::move(key)}, {"count", r.count}, {"mean", r.mean}, {"median", r.median}, {"sd", r.sd}});
    }
  }
  return {200,
          {{"group_by", key_names},
           {"decisions", latest_decisions(decisions).size()},
           {"records", report.records.size()},
           {"degenerate_missions", report.degenerate},
           {"rows", std::move(rows)}}};
}

ApiResponse DssService::comparison(const std::map<std::string, std::string>& query) const {
  const double alpha = query_number(query, "alpha", 0.05);
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("alpha outside (0, 1)", "/query/alpha");
  const auto decisions = log_.load();
  const auto report = score_decisions(decisions, missions_, method_names());
  if (report.records.empty()) {
    return {409, error_body("insufficient_data", "no decisions recorded yet")};
  }
  return {200, to_json(comparison_matrix(report.records, fuzzy_method_names(), crisp_method_names(), alpha))};
}

void DssService::mount(httplib::Server& server) const {
  const auto route = [this](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query[k] = v;
    const ApiResponse r = handle(req.method, req.path, query, req.body);
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Get(R"(/api/v1/.*)", route);
  server.Post(R"(/api/v1/.*)", route);
}

void serve(const ServiceConfig& cfg) {
  DssService service(cfg);
  httplib::Server server;
  service.mount(server);
  if (cfg.static_dir && !server.set_mount_point("/", cfg.static_dir->string())) {
    throw NotFoundError("static directory " + cfg.static_dir->string() + " not found");
  }
  std::cerr << "uavdss: serving " << service.missions().size() << " missions on http://" << cfg.host << ':'
            << cfg.port << "/api/v1\n";
  if (!server.listen(cfg.host, cfg.port)) throw Error("cannot listen on " + cfg.host + ":" + std::to_string(cfg.port));
}

}  // namespace uavdss
