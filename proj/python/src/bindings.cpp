// Python bindings. Structured values cross the boundary as JSON text; the
// uavdss package wraps them into dicts and lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "uavdss/dataset.hpp"
#include "uavdss/error.hpp"
#include "uavdss/evaluation.hpp"
#include "uavdss/hypervolume.hpp"
#include "uavdss/methods.hpp"
#include "uavdss/pipeline.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace uavdss;

namespace {

json ranking_json(const Ranking& r) {
  json rows = json::array();
  for (const auto& a : r.ordered) {
    rows.push_back({{"id", a.id}, {"rank", a.rank}, {"score", a.score ? json(*a.score) : json(nullptr)}});
  }
  return {{"method", r.method}, {"ordered", std::move(rows)}, {"metadata", r.metadata}};
}

OperatorProfile profile_from(const std::string& name_or_json) {
  if (name_or_json.empty() || name_or_json.front() != '{') return builtin_profile(name_or_json);
  const auto j = json::parse(name_or_json);
  OperatorProfile p;
  p.name = j.value("name", "custom");
  for (const auto& [id, degree] : j.at("degrees").items()) p.degrees[id] = parse_degree(degree.get<std::string>());
  return p;
}

FilterWeights weights_from(const std::string& text) {
  if (text.empty()) return {};
  json j = {{"weights", json::parse(text)}};
  return pipeline_config_from_json(j).weights;
}

PipelineConfig config_from(const std::string& method, const std::string& profile, const std::string& params,
                           const std::string& weights, double threshold, const std::string& rule) {
  json j = {{"profile", profile}, {"threshold", threshold}, {"filter_rule", rule}};
  if (!weights.empty()) j["weights"] = json::parse(weights);
  auto cfg = pipeline_config_from_json(j);
  std::tie(cfg.method, cfg.params) = resolve_method(method, params.empty() ? json::object() : json::parse(params));
  cfg.validate();
  return cfg;
}

std::string rank_matrix(const std::vector<std::vector<double>>& rows, const std::vector<std::string>& directions,
                        const std::vector<std::string>& ids, const std::string& profile, const std::string& method,
                        const std::string& params) {
  // Criteria are named c0, c1, ... so custom profiles address them by position.
  std::vector<Criterion> criteria;
  for (std::size_t f = 0; f < directions.size(); ++f) {
    const auto& d = directions[f];
    if (d != "min" && d != "max") throw ValidationError("direction must be 'min' or 'max'");
    criteria.push_back({"c" + std::to_string(f), "", d == "min" ? Direction::Minimize : Direction::Maximize, ""});
  }
  std::vector<double> values;
  for (const auto& r : rows) values.insert(values.end(), r.begin(), r.end());
  std::vector<std::string> names = ids;
  if (names.empty()) {
    for (std::size_t i = 0; i < rows.size(); ++i) names.push_back("a" + std::to_string(i));
  }
  const DecisionMatrix m(std::move(criteria), std::move(names), std::move(values));
  const auto [name, mp] = resolve_method(method, params.empty() ? json::object() : json::parse(params));
  return ranking_json(rank_alternatives(m, profile_from(profile), name, mp)).dump();
}

std::string rank_dataset(const std::string& dataset, const std::string& method, const std::string& profile,
                         const std::string& params) {
  const auto ds = dataset_from_json(json::parse(dataset));
  const auto cfg = config_from(method, profile, params, "", kDefaultThreshold, "pairwise");
  return ranking_json(rank_alternatives(to_decision_matrix(ds), builtin_profile(cfg.profile), cfg.method, cfg.params))
      .dump();
}

std::string filter_dataset(const std::string& dataset, const std::string& method, const std::string& profile,
                           double threshold, const std::string& rule, const std::string& weights,
                           const std::string& params) {
  const auto ds = dataset_from_json(json::parse(dataset));
  const auto cfg = config_from(method, profile, params, weights, threshold, rule);
  const auto result = run_pipeline(ds, cfg);
  return filtered_report(ds, cfg, result).dump();
}

std::string sweep(const std::string& dataset, const std::string& method, const std::string& profile,
                  const std::string& grid, const std::string& rule, const std::string& weights) {
  const auto ds = dataset_from_json(json::parse(dataset));
  const auto cfg = config_from(method, profile, "", weights, kDefaultThreshold, rule);
  const auto ranking = rank_alternatives(to_decision_matrix(ds), builtin_profile(cfg.profile), cfg.method, cfg.params);
  const auto rows = threshold_sweep(ranked_plans(ds, ranking), cfg.weights, parse_threshold_grid(grid),
                                    mission_criteria(), cfg.rule);
  json out = json::array();
  for (const auto& r : rows) out.push_back({{"threshold", r.threshold}, {"kept", r.kept}, {"hypervolume", r.hypervolume}});
  return out.dump();
}

double distance(const std::string& a, const std::string& b, const std::string& weights) {
  return plan_distance(plan_from_json(json::parse(a)), plan_from_json(json::parse(b)), weights_from(weights));
}

std::string wilcoxon(const std::vector<double>& differences) {
  const auto w = wilcoxon_signed_rank(differences);
  return json{{"n", w.n}, {"w_plus", w.w_plus}, {"w_minus", w.w_minus}, {"p_value", w.p_value}, {"exact", w.exact}}
      .dump();
}

std::vector<ScoreRecord> records_from(const std::string& text) {
  std::vector<ScoreRecord> out;
  for (const auto& r : json::parse(text)) {
    out.push_back({r.at("operator"), r.at("mission"), r.at("profile"), r.at("method"), r.at("score")});
  }
  return out;
}

std::string compare(const std::string& records, const std::string& a, const std::string& b) {
  const auto c = compare_methods(records_from(records), a, b);
  return json{{"mean_diff", c.mean_diff}, {"p_value", c.p_value}, {"pairs", c.pairs}, {"exact", c.test.exact}}.dump();
}

std::string score_decisions_json(const std::string& decisions, const std::string& missions,
                                 const std::vector<std::string>& methods) {
  std::vector<Decision> ds;
  for (const auto& d : json::parse(decisions)) ds.push_back(decision_from_json(d));
  std::vector<MissionDataset> ms;
  for (const auto& m : json::parse(missions)) ms.push_back(dataset_from_json(m));
  const auto report = score_decisions(ds, ms, methods.empty() ? method_names() : methods);
  json out = json::array();
  for (const auto& r : report.records) {
    out.push_back({{"operator", r.operator_id}, {"mission", r.mission}, {"profile", r.profile}, {"method", r.method},
                   {"score", r.score}});
  }
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_uavdss, m) {
  m.doc() = "Native core of the uavdss package";

  // Translators run newest first, so the base class goes in before its subclasses.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<NotFoundError>(m, "NotFoundError", PyExc_LookupError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.def("method_names", [] { return method_names(); });
  m.def("profile_names", [] {
    std::vector<std::string> out;
    for (const auto& p : builtin_profiles()) out.push_back(p.name);
    return out;
  });
  m.def("criterion_ids", [] {
    std::vector<std::string> out;
    for (const auto& c : mission_criteria()) out.push_back(c.id);
    return out;
  });
  m.def("load_dataset", [](const std::string& path) { return to_json(ingest(path)).dump(); }, py::arg("path"));
  m.def("rank_matrix", &rank_matrix, py::arg("rows"), py::arg("directions"), py::arg("ids"), py::arg("profile"),
        py::arg("method"), py::arg("params"));
  m.def("rank_dataset", &rank_dataset, py::arg("dataset"), py::arg("method"), py::arg("profile"), py::arg("params"));
  m.def("filter_dataset", &filter_dataset, py::arg("dataset"), py::arg("method"), py::arg("profile"),
        py::arg("threshold"), py::arg("rule"), py::arg("weights"), py::arg("params"));
  m.def("threshold_sweep", &sweep, py::arg("dataset"), py::arg("method"), py::arg("profile"), py::arg("grid"),
        py::arg("rule"), py::arg("weights"));
  m.def("plan_distance", &distance, py::arg("a"), py::arg("b"), py::arg("weights"));
  m.def("hypervolume",
        [](const std::vector<std::vector<double>>& points, const std::vector<double>& ref) {
          return hypervolume(points, ref);
        },
        py::arg("points"), py::arg("ref"));
  m.def("score_from_rank", [](int rank, std::size_t n) { return score_from_rank(rank, n).value; }, py::arg("rank"),
        py::arg("num_solutions"));
  m.def("wilcoxon", &wilcoxon, py::arg("differences"));
  m.def("compare_methods", &compare, py::arg("records"), py::arg("a"), py::arg("b"));
  m.def("score_decisions", &score_decisions_json, py::arg("decisions"), py::arg("missions"), py::arg("methods"));
}
