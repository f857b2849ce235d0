#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "uavdss/error.hpp"
#include "uavdss/hypervolume.hpp"
#include "uavdss/pipeline.hpp"
#include "uavdss/service.hpp"
#include "uavdss/synthetic.hpp"

namespace {

using namespace uavdss;

// Writes to the file if a path is given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    const std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    file_ = std::make_unique<std::ofstream>(p, std::ios::binary);
    if (!*file_) throw Error("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFoundError("cannot open " + path);
  return nlohmann::json::parse(in);
}

struct RankOptions {
  std::string dataset;
  std::string profile = "Balanced";
  std::string method = kDefaultMethod;
  std::string params;
  double threshold = kDefaultThreshold;
  std::string config;
  std::string rule;
  std::string output;

  void add_common(CLI::App* cmd) {
    cmd->add_option("-d,--dataset", dataset, "Mission dataset JSON")->required()->check(CLI::ExistingFile);
    cmd->add_option("-p,--profile", profile, "Operator profile")->capture_default_str();
    cmd->add_option("-m,--method", method, "Ranking method")->capture_default_str();
    cmd->add_option("--params", params, "JSON file with a method parameter block")->check(CLI::ExistingFile);
    cmd->add_option("-o,--output", output, "Output file (stdout if omitted)");
    cmd->add_option("--filter-rule", rule, "pairwise (default) or greedy");
  }

  PipelineConfig config_from_flags() const {
    PipelineConfig cfg;
    if (!config.empty()) cfg = pipeline_config_from_json(read_json(config));
    cfg.profile = profile;
    cfg.threshold = threshold;
    if (!rule.empty()) cfg.rule = parse_filter_rule(rule);
    auto [name, p] = resolve_method(method, params.empty() ? nlohmann::json::object() : read_json(params));
    cfg.method = name;
    cfg.params = p;
    cfg.validate();
    return cfg;
  }
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision support for multi-UAV mission plans: rank, filter and evaluate plan sets."};
  app.require_subcommand(1);

  RankOptions rank_opts;
  auto* rank = app.add_subcommand("rank", "Rank the plans of a mission and write a CSV ranking");
  rank_opts.add_common(rank);

  RankOptions filter_opts;
  std::string filter_ranking;
  auto* filter = app.add_subcommand("filter", "Rank, then drop plans too similar to a better one");
  filter_opts.add_common(filter);
  filter->add_option("-t,--threshold", filter_opts.threshold, "Similarity threshold")->capture_default_str();
  filter->add_option("--config", filter_opts.config, "Pipeline config JSON (weights etc.)")->check(CLI::ExistingFile);
  filter->add_option("--ranking", filter_ranking, "Also write the full ranking CSV here");

  RankOptions sweep_opts;
  std::string grid = "0:5:0.1";
  std::string plot;
  auto* sweep = app.add_subcommand("sweep-threshold", "Kept plans and hypervolume over a threshold grid");
  sweep_opts.add_common(sweep);
  sweep->add_option("--grid", grid, "start:stop:step")->capture_default_str();
  sweep->add_option("--plot", plot, "Also write plot data JSON here");

  std::string decisions_path;
  std::string missions_dir = "data/missions";
  std::string score_methods;
  std::string group_by;
  std::string score_output;
  auto* score = app.add_subcommand("score", "Score every method against recorded decisions");
  score->add_option("--decisions", decisions_path, "Decision log (JSON lines)")->required()->check(CLI::ExistingFile);
  score->add_option("--missions", missions_dir, "Directory of mission datasets")->capture_default_str();
  score->add_option("-m,--method", score_methods, "Comma-separated methods (default: all)");
  score->add_option("--group-by", group_by, "Aggregate by operator,mission,profile,method");
  score->add_option("-o,--output", score_output, "Output CSV (stdout if omitted)");

  std::string cmp_a, cmp_b, cmp_output;
  bool cmp_matrix = false;
  double alpha = 0.05;
  auto* compare = app.add_subcommand("compare", "Paired Wilcoxon comparison of methods over decisions");
  compare->add_option("--decisions", decisions_path, "Decision log (JSON lines)")->required()->check(CLI::ExistingFile);
  compare->add_option("--missions", missions_dir, "Directory of mission datasets")->capture_default_str();
  compare->add_option("--a", cmp_a, "First method");
  compare->add_option("--b", cmp_b, "Second method");
  compare->add_flag("--matrix", cmp_matrix, "Crisp-by-fuzzy comparison table instead of one pair");
  compare->add_option("--alpha", alpha, "Significance level")->capture_default_str();
  compare->add_option("-o,--output", cmp_output, "Output file (stdout if omitted)");

  std::string serve_config;
  ServiceConfig service_cfg;
  std::string serve_missions, serve_decisions, serve_static;
  int serve_port = 0;
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--config", serve_config, "Service config JSON")->check(CLI::ExistingFile);
  serve->add_option("--missions", serve_missions, "Directory of mission datasets");
  serve->add_option("--decisions", serve_decisions, "Decision log path");
  serve->add_option("--static", serve_static, "Directory of UI assets served at /");
  serve->add_option("--host", service_cfg.host, "Bind address")->capture_default_str();
  serve->add_option("--port", serve_port, "Port (default: PORT env or 8080)");

  std::uint64_t seed = 1;
  std::string gen_output = "data/missions";
  std::string gen_decisions;
  int operators = 3;
  MissionShape shape;
  std::string gen_id;
  auto* gen = app.add_subcommand("gen-synthetic", "Generate random missions with the reference shapes");
  gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen->add_option("-o,--output", gen_output, "Output directory")->capture_default_str();
  gen->add_option("--id", gen_id, "Generate a single mission with this id instead of the reference set");
  gen->add_option("--tasks", shape.tasks)->capture_default_str();
  gen->add_option("--multi-uav-tasks", shape.multi_uav_tasks)->capture_default_str();
  gen->add_option("--uavs", shape.uavs)->capture_default_str();
  gen->add_option("--gcss", shape.gcss)->capture_default_str();
  gen->add_option("--solutions", shape.solutions)->capture_default_str();
  gen->add_option("--decisions", gen_decisions, "Also simulate operator decisions into this JSON-lines file");
  gen->add_option("--operators", operators, "Simulated operators")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*rank) {
      const auto ds = ingest(rank_opts.dataset);
      const auto result = run_pipeline(ds, rank_opts.config_from_flags());
      Output out(rank_opts.output);
      write_ranking_csv(out.stream(), result.ranking);
    } else if (*filter) {
      const auto ds = ingest(filter_opts.dataset);
      auto cfg = filter_opts.config_from_flags();
      if (!filter_ranking.empty()) cfg.ranking_csv = filter_ranking;
      const auto result = run_pipeline(ds, cfg);
      Output out(filter_opts.output);
      out.stream() << filtered_report(ds, cfg, result).dump(2) << '\n';
    } else if (*sweep) {
      const auto ds = ingest(sweep_opts.dataset);
      const auto cfg = sweep_opts.config_from_flags();
      const auto result = run_pipeline(ds, cfg);
      const auto thresholds = parse_threshold_grid(grid);
      const auto rows = threshold_sweep(result.ranked_plans, cfg.weights, thresholds, mission_criteria(), cfg.rule);
      Output out(sweep_opts.output);
      write_sweep_csv(out.stream(), rows);
      if (!plot.empty()) {
        Output p(plot);
        p.stream() << sweep_plot_json(ds.id, cfg.method, cfg.profile, rows).dump(2) << '\n';
      }
    } else if (*score) {
      const auto missions = load_missions(missions_dir);
      const auto decisions = DecisionLog(decisions_path).load();
      const auto methods = score_methods.empty() ? method_names() : split_list(score_methods);
      const auto report = score_decisions(decisions, missions, methods);
      Output out(score_output);
      if (group_by.empty()) {
        write_score_csv(out.stream(), report.records);
      } else {
        std::vector<GroupKey> keys;
        for (const auto& k : split_list(group_by)) keys.push_back(parse_group_key(k));
        write_aggregate_csv(out.stream(), keys, aggregate_scores(report.records, keys));
      }
      if (report.degenerate > 0) {
        std::cerr << "uavdss: " << report.degenerate << " decision(s) on single-plan missions scored 1.0\n";
      }
    } else if (*compare) {
      const auto missions = load_missions(missions_dir);
      const auto decisions = DecisionLog(decisions_path).load();
      Output out(cmp_output);
      if (cmp_matrix) {
        const auto report = score_decisions(decisions, missions, method_names());
        write_comparison_csv(out.stream(),
                             comparison_matrix(report.records, fuzzy_method_names(), crisp_method_names(), alpha));
      } else {
        if (cmp_a.empty() || cmp_b.empty()) throw ValidationError("compare needs --a and --b, or --matrix");
        const std::vector<std::string> pair = {cmp_a, cmp_b};
        const auto report = score_decisions(decisions, missions, pair);
        const auto c = compare_methods(report.records, cmp_a, cmp_b);
        out.stream() << cmp_a << " vs " << cmp_b << ": mean_diff=" << format_number(c.mean_diff)
                     << " p_value=" << format_number(c.p_value) << " pairs=" << c.pairs
                     << " nonzero=" << c.test.n << (c.test.exact ? " exact" : " normal")
                     << (c.p_value < alpha ? " significant" : "") << '\n';
      }
    } else if (*serve) {
      if (!serve_config.empty()) service_cfg = load_service_config(serve_config);
      else if (const char* env = std::getenv("PORT")) service_cfg.port = std::atoi(env);
      if (!serve_missions.empty()) service_cfg.missions_dir = serve_missions;
      if (!serve_decisions.empty()) service_cfg.decisions_log = serve_decisions;
      if (!serve_static.empty()) service_cfg.static_dir = serve_static;
      if (serve_port > 0) service_cfg.port = serve_port;
      uavdss::serve(service_cfg);
    } else if (*gen) {
      std::vector<MissionDataset> missions;
      if (gen_id.empty()) {
        missions = generate_reference_missions(seed);
      } else {
        missions.push_back(generate_mission(gen_id, shape, seed));
      }
      for (const auto& ds : missions) {
        const auto path = std::filesystem::path(gen_output) / (ds.id + ".json");
        save_dataset(ds, path);
        std::cout << path.string() << ": " << ds.plans.size() << " plans\n";
      }
      if (!gen_decisions.empty()) {
        Output out(gen_decisions);
        for (const auto& d : simulate_decisions(missions, operators, seed)) out.stream() << to_json(d).dump() << '\n';
      }
    }
  } catch (const ValidationError& e) {
    std::cerr << "uavdss: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const NotFoundError& e) {
    std::cerr << "uavdss: not found: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "uavdss: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
