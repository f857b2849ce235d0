#include "uavdss/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "uavdss/error.hpp"

namespace uavdss {

namespace {

using nlohmann::json;

std::string escape_token(std::string_view token) {
  std::string out;
  for (char c : token) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string at(const std::string& base, std::string_view key) { return base + "/" + escape_token(key); }
std::string at(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

const json& member(const json& obj, const char* key, const std::string& ptr) {
  if (!obj.is_object()) throw ValidationError("expected an object", ptr.empty() ? "/" : ptr);
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError("missing field", at(ptr, key));
  return *it;
}

std::string string_member(const json& obj, const char* key, const std::string& ptr) {
  const json& v = member(obj, key, ptr);
  if (!v.is_string() || v.get_ref<const std::string&>().empty()) {
    throw ValidationError("expected a non-empty string", at(ptr, key));
  }
  return v.get<std::string>();
}

int int_member(const json& obj, const char* key, const std::string& ptr, int min_value) {
  const json& v = member(obj, key, ptr);
  if (!v.is_number_integer()) throw ValidationError("expected an integer", at(ptr, key));
  const auto x = v.get<long long>();
  if (x < min_value) throw ValidationError("must be >= " + std::to_string(min_value), at(ptr, key));
  return static_cast<int>(x);
}

const json& array_member(const json& obj, const char* key, const std::string& ptr) {
  const json& v = member(obj, key, ptr);
  if (!v.is_array()) throw ValidationError("expected an array", at(ptr, key));
  return v;
}

}  // namespace

const MissionPlan& MissionDataset::plan(std::string_view plan_id) const {
  for (const auto& p : plans) {
    if (p.id == plan_id) return p;
  }
  throw NotFoundError("mission '" + id + "' has no plan '" + std::string(plan_id) + "'");
}

bool MissionDataset::has_plan(std::string_view plan_id) const {
  return std::any_of(plans.begin(), plans.end(), [&](const MissionPlan& p) { return p.id == plan_id; });
}

MissionPlan plan_from_json(const json& j, const std::string& ptr) {
  MissionPlan plan;
  plan.id = string_member(j, "id", ptr);

  const json& assignments = array_member(j, "assignments", ptr);
  if (assignments.empty()) throw ValidationError("plan assigns no tasks", at(ptr, "assignments"));
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    const std::string p = at(at(ptr, "assignments"), i);
    const json& a = assignments[i];
    TaskUav key{string_member(a, "task", p), string_member(a, "uav", p)};
    if (!plan.task_uavs[key.task].insert(key.uav).second) {
      throw ValidationError("duplicate assignment of " + key.task + " to " + key.uav, p);
    }
    if (a.contains("order")) plan.orders[key] = int_member(a, "order", p, 0);
    if (a.contains("path")) plan.path_profiles[key] = string_member(a, "path", p);
    if (a.contains("sensor")) plan.sensors[key] = string_member(a, "sensor", p);
  }

  if (j.contains("uavs")) {
    const json& uavs = array_member(j, "uavs", ptr);
    for (std::size_t i = 0; i < uavs.size(); ++i) {
      const std::string p = at(at(ptr, "uavs"), i);
      const std::string uav = string_member(uavs[i], "uav", p);
      if (plan.gcs_assign.count(uav) || plan.return_profiles.count(uav)) {
        throw ValidationError("UAV '" + uav + "' listed twice", p);
      }
      if (uavs[i].contains("gcs")) plan.gcs_assign[uav] = string_member(uavs[i], "gcs", p);
      if (uavs[i].contains("return")) plan.return_profiles[uav] = string_member(uavs[i], "return", p);
    }
  }

  const json& criteria = member(j, "criteria", ptr);
  if (!criteria.is_object()) throw ValidationError("expected an object", at(ptr, "criteria"));
  for (const auto& [name, value] : criteria.items()) {
    if (!value.is_number() || !std::isfinite(value.get<double>())) {
      throw ValidationError("expected a finite number", at(at(ptr, "criteria"), name));
    }
    plan.criteria[name] = value.get<double>();
  }
  for (const auto& c : mission_criteria()) {
    if (!plan.criteria.count(c.id)) throw ValidationError("missing criterion", at(at(ptr, "criteria"), c.id));
  }
  return plan;
}

json to_json(const MissionPlan& plan) {
  json assignments = json::array();
  for (const auto& [task, uavs] : plan.task_uavs) {
    for (const auto& uav : uavs) {
      const TaskUav key{task, uav};
      json a = {{"task", task}, {"uav", uav}};
      if (auto it = plan.orders.find(key); it != plan.orders.end()) a["order"] = it->second;
      if (auto it = plan.path_profiles.find(key); it != plan.path_profiles.end()) a["path"] = it->second;
      if (auto it = plan.sensors.find(key); it != plan.sensors.end()) a["sensor"] = it->second;
      assignments.push_back(std::move(a));
    }
  }
  std::set<std::string> uav_ids;
  for (const auto& [uav, gcs] : plan.gcs_assign) uav_ids.insert(uav);
  for (const auto& [uav, ret] : plan.return_profiles) uav_ids.insert(uav);
  json uavs = json::array();
  for (const auto& uav : uav_ids) {
    json u = {{"uav", uav}};
    if (auto it = plan.gcs_assign.find(uav); it != plan.gcs_assign.end()) u["gcs"] = it->second;
    if (auto it = plan.return_profiles.find(uav); it != plan.return_profiles.end()) u["return"] = it->second;
    uavs.push_back(std::move(u));
  }
  // criteria keep the canonical order, then any extras
  json criteria = json::object();
  for (const auto& c : mission_criteria()) {
    if (auto it = plan.criteria.find(c.id); it != plan.criteria.end()) criteria[c.id] = it->second;
  }
  for (const auto& [name, value] : plan.criteria) {
    if (!criteria.contains(name)) criteria[name] = value;
  }
  return {{"id", plan.id}, {"assignments", std::move(assignments)}, {"uavs", std::move(uavs)},
          {"criteria", std::move(criteria)}};
}

MissionDataset dataset_from_json(const json& j) {
  MissionDataset ds;
  ds.id = string_member(j, "id", "");
  const json& meta = member(j, "meta", "");
  ds.meta.tasks = int_member(meta, "tasks", "/meta", 1);
  ds.meta.multi_uav_tasks = meta.contains("multi_uav_tasks") ? int_member(meta, "multi_uav_tasks", "/meta", 0) : 0;
  ds.meta.uavs = int_member(meta, "uavs", "/meta", 1);
  ds.meta.gcss = int_member(meta, "gcss", "/meta", 1);
  if (ds.meta.multi_uav_tasks > ds.meta.tasks) {
    throw ValidationError("more multi-UAV tasks than tasks", "/meta/multi_uav_tasks");
  }

  const json& plans = array_member(j, "plans", "");
  if (plans.empty()) throw ValidationError("dataset has no plans", "/plans");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const std::string p = at("/plans", i);
    MissionPlan plan = plan_from_json(plans[i], p);
    if (!seen.insert(plan.id).second) throw ValidationError("duplicate plan id '" + plan.id + "'", at(p, "id"));
    try {
      plan.validate();
    } catch (const ValidationError& e) {
      throw ValidationError(e.what(), p);
    }
    ds.plans.push_back(std::move(plan));
  }
  return ds;
}

json to_json(const MissionDataset& ds) {
  json plans = json::array();
  for (const auto& p : ds.plans) plans.push_back(to_json(p));
  return {{"id", ds.id},
          {"meta",
           {{"tasks", ds.meta.tasks},
            {"multi_uav_tasks", ds.meta.multi_uav_tasks},
            {"uavs", ds.meta.uavs},
            {"gcss", ds.meta.gcss}}},
          {"plans", std::move(plans)}};
}

MissionDataset ingest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open dataset " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  try {
    return dataset_from_json(j);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what(), e.pointer());
  }
}

void save_dataset(const MissionDataset& ds, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << to_json(ds).dump(2) << '\n';
}

std::vector<MissionDataset> load_missions(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw NotFoundError("missions directory " + dir.string() + " not found");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<MissionDataset> out;
  for (const auto& f : files) out.push_back(ingest(f));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].id == out[i - 1].id) throw ValidationError("duplicate mission id '" + out[i].id + "' in " + dir.string());
  }
  return out;
}

DecisionMatrix to_decision_matrix(const MissionDataset& ds, const std::vector<Criterion>& criteria) {
  std::vector<std::string> ids;
  std::vector<double> values;
  values.reserve(ds.plans.size() * criteria.size());
  for (const auto& p : ds.plans) {
    ids.push_back(p.id);
    for (const auto& c : criteria) {
      auto it = p.criteria.find(c.id);
      if (it == p.criteria.end()) {
        throw ValidationError("plan '" + p.id + "' lacks criterion '" + c.id + "'");
      }
      values.push_back(it->second);
    }
  }
  return DecisionMatrix(criteria, std::move(ids), std::move(values));
}

}  // namespace uavdss
