#include "uavdss/pipeline.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <tuple>

#include "uavdss/error.hpp"

namespace uavdss {

void PipelineConfig::validate() const {
  if (!is_method(method)) throw NotFoundError("unknown method '" + method + "'");
  builtin_profile(profile);
  weights.validate();
  if (!(threshold >= 0.0) || !std::isfinite(threshold)) {
    throw ValidationError("threshold must be finite and nonnegative", "/threshold");
  }
}

PipelineConfig pipeline_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("pipeline config must be an object", "/");
  PipelineConfig cfg;
  if (j.contains("params") || j.contains("method")) {
    nlohmann::json block = j.value("params", nlohmann::json::object());
    if (!block.is_object()) throw ValidationError("expected an object", "/params");
    if (j.contains("method")) block["method"] = j["method"];
    auto [name, params] = parse_method_block(block);
    cfg.method = std::move(name);
    cfg.params = std::move(params);
  }
  if (j.contains("profile")) {
    if (!j["profile"].is_string()) throw ValidationError("expected a string", "/profile");
    cfg.profile = j["profile"].get<std::string>();
  }
  if (j.contains("threshold")) {
    if (!j["threshold"].is_number()) throw ValidationError("expected a number", "/threshold");
    cfg.threshold = j["threshold"].get<double>();
  }
  if (j.contains("filter_rule")) {
    if (!j["filter_rule"].is_string()) throw ValidationError("expected a string", "/filter_rule");
    try {
      cfg.rule = parse_filter_rule(j["filter_rule"].get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(e.what(), "/filter_rule");
    }
  }
  if (j.contains("weights")) {
    const auto& w = j["weights"];
    if (!w.is_object()) throw ValidationError("expected an object", "/weights");
    const std::pair<const char*, double*> fields[] = {
        {"uav", &cfg.weights.uav},   {"order", &cfg.weights.order}, {"gcs", &cfg.weights.gcs},
        {"path", &cfg.weights.path}, {"return", &cfg.weights.ret},  {"sensor", &cfg.weights.sensor}};
    for (const auto& [key, value] : w.items()) {
      bool known = false;
      for (const auto& [name, slot] : fields) {
        if (key != name) continue;
        if (!value.is_number()) throw ValidationError("expected a number", "/weights/" + key);
        *slot = value.get<double>();
        known = true;
      }
      if (!known) throw ValidationError("unknown filter weight", "/weights/" + key);
    }
  }
  if (j.contains("ranking_csv")) cfg.ranking_csv = j["ranking_csv"].get<std::string>();
  if (j.contains("filtered_json")) cfg.filtered_json = j["filtered_json"].get<std::string>();
  cfg.validate();
  return cfg;
}

std::vector<MissionPlan> ranked_plans(const MissionDataset& ds, const Ranking& ranking) {
  std::vector<MissionPlan> out;
  out.reserve(ranking.ordered.size());
  for (const auto& r : ranking.ordered) out.push_back(ds.plans.at(r.index));
  return out;
}

std::string format_number(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw Error("cannot format number");
  return std::string(buf, end);
}

void write_ranking_csv(std::ostream& out, const Ranking& ranking) {
  out << "rank,plan_id,score,method\n";
  for (const auto& r : ranking.ordered) {
    out << r.rank << ',' << r.id << ',' << (r.score ? format_number(*r.score) : "") << ',' << ranking.method << '\n';
  }
}

nlohmann::json filtered_report(const MissionDataset& ds, const PipelineConfig& cfg, const PipelineResult& result) {
  nlohmann::json kept = nlohmann::json::array();
  for (const auto& p : result.filtered) {
    kept.push_back({{"plan", p.id}, {"rank", result.ranking.rank_of(p.id)}});
  }
  return {{"mission", ds.id},
          {"method", cfg.method},
          {"profile", cfg.profile},
          {"threshold", cfg.threshold},
          {"filter_rule", filter_rule_name(cfg.rule)},
          {"weights",
           {{"uav", cfg.weights.uav},
            {"order", cfg.weights.order},
            {"gcs", cfg.weights.gcs},
            {"path", cfg.weights.path},
            {"return", cfg.weights.ret},
            {"sensor", cfg.weights.sensor}}},
          {"ranked", result.ranked_plans.size()},
          {"kept", std::move(kept)}};
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

}  // namespace

PipelineResult run_pipeline(const MissionDataset& ds, const PipelineConfig& cfg) {
  cfg.validate();
  const DecisionMatrix m = to_decision_matrix(ds);
  PipelineResult result;
  try {
    result.ranking = rank_alternatives(m, builtin_profile(cfg.profile), cfg.method, cfg.params);
  } catch (const ValidationError& e) {
    throw ValidationError("mission '" + ds.id + "', method " + cfg.method + ": " + e.what(), e.pointer());
  } catch (const DomainError& e) {
    throw DomainError("mission '" + ds.id + "', method " + cfg.method + ": " + e.what());
  }
  result.ranked_plans = ranked_plans(ds, result.ranking);
  result.filtered = filter_plans(result.ranked_plans, cfg.weights, cfg.threshold, cfg.rule);

  if (cfg.ranking_csv) {
    auto out = open_output(*cfg.ranking_csv);
    write_ranking_csv(out, result.ranking);
  }
  if (cfg.filtered_json) {
    auto out = open_output(*cfg.filtered_json);
    out << filtered_report(ds, cfg, result).dump(2) << '\n';
  }
  return result;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "threshold,kept,hypervolume\n";
  for (const auto& r : rows) out << format_number(r.threshold) << ',' << r.kept << ',' << format_number(r.hypervolume) << '\n';
}

nlohmann::json sweep_plot_json(const std::string& mission, const std::string& method, const std::string& profile,
                               std::span<const SweepRow> rows) {
  nlohmann::json x = nlohmann::json::array(), kept = nlohmann::json::array(), hv = nlohmann::json::array();
  for (const auto& r : rows) {
    x.push_back(r.threshold);
    kept.push_back(r.kept);
    hv.push_back(r.hypervolume);
  }
  return {{"mission", mission},
          {"method", method},
          {"profile", profile},
          {"normalization", "per-criterion min-max over the unfiltered set; reference point all ones"},
          {"threshold", std::move(x)},
          {"kept", std::move(kept)},
          {"hypervolume", std::move(hv)}};
}

ScoringReport score_decisions(std::span<const Decision> decisions, std::span<const MissionDataset> missions,
                              std::span<const std::string> methods, const MethodParams& params) {
  std::map<std::string, const MissionDataset*> by_id;
  for (const auto& ds : missions) by_id[ds.id] = &ds;
  for (const auto& method : methods) {
    if (!is_method(method)) throw NotFoundError("unknown method '" + method + "'");
  }

  ScoringReport report;
  std::map<std::tuple<std::string, std::string, std::string>, Ranking> cache;
  for (const auto& d : latest_decisions(decisions)) {
    auto it = by_id.find(d.mission);
    if (it == by_id.end()) throw NotFoundError("unknown mission '" + d.mission + "'");
    const MissionDataset& ds = *it->second;
    const OperatorProfile& profile = builtin_profile(d.profile);
    if (!ds.has_plan(d.plan)) throw NotFoundError("mission '" + ds.id + "' has no plan '" + d.plan + "'");
    bool degenerate = false;
    for (const auto& method : methods) {
      auto key = std::make_tuple(ds.id, profile.name, method);
      auto cached = cache.find(key);
      if (cached == cache.end()) {
        cached = cache.emplace(key, rank_alternatives(to_decision_matrix(ds), profile, method, params)).first;
      }
      const auto outcome = score_ranking(cached->second, d.plan, ds.plans.size());
      degenerate = outcome.degenerate_mission;
      report.records.push_back({d.operator_id, d.mission, profile.name, method, outcome.value});
    }
    if (degenerate) ++report.degenerate;
  }
  return report;
}

void write_score_csv(std::ostream& out, std::span<const ScoreRecord> records) {
  out << "operator,mission,profile,method,score\n";
  for (const auto& r : records) {
    out << r.operator_id << ',' << r.mission << ',' << r.profile << ',' << r.method << ',' << format_number(r.score)
        << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, std::span<const GroupKey> keys, std::span<const AggregateRow> rows) {
  for (auto k : keys) out << group_key_name(k) << ',';
  out << "count,mean,median,sd\n";
  for (const auto& r : rows) {
    for (const auto& v : r.key) out << v << ',';
    out << r.count << ',' << format_number(r.mean) << ',' << format_number(r.median) << ',' << format_number(r.sd)
        << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const ComparisonMatrix& m) {
  out << "crisp";
  for (const auto& f : m.fuzzy) out << ',' << f;
  out << '\n';
  for (std::size_t i = 0; i < m.crisp.size(); ++i) {
    out << m.crisp[i];
    for (const auto& cell : m.cells[i]) out << ',' << format_number(cell.diff) << (cell.significant ? "*" : "");
    out << '\n';
  }
}

nlohmann::json to_json(const ComparisonMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.crisp.size(); ++i) {
    nlohmann::json cells = nlohmann::json::array();
    for (std::size_t j = 0; j < m.fuzzy.size(); ++j) {
      const auto& c = m.cells[i][j];
      cells.push_back({{"fuzzy", m.fuzzy[j]}, {"diff", c.diff}, {"p_value", c.p_value}, {"significant", c.significant}});
    }
    rows.push_back({{"crisp", m.crisp[i]}, {"cells", std::move(cells)}});
  }
  return {{"alpha", m.alpha}, {"rows", m.crisp}, {"columns", m.fuzzy}, {"matrix", std::move(rows)}};
}

}  // namespace uavdss
