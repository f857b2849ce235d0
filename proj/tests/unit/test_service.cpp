#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <unistd.h>

#include "support.hpp"
#include "uavdss/dataset.hpp"
#include "uavdss/error.hpp"
#include "uavdss/pipeline.hpp"
#include "uavdss/service.hpp"
#include "uavdss/synthetic.hpp"

using namespace uavdss;
using nlohmann::json;

namespace {

const std::filesystem::path kMissions = std::filesystem::path(UAVDSS_DATA_DIR) / "missions";

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("uavdss-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json dataset01() { return json::parse(slurp(kMissions / "dataset-01.json")); }

std::string expect_validation(const json& j) {
  try {
    dataset_from_json(j);
  } catch (const ValidationError& e) {
    return e.pointer() + " | " + e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("ingest") {
  const auto ds = ingest(kMissions / "dataset-01.json");
  CHECK(ds.id == "dataset-01");
  CHECK(ds.plans.size() == 17);
  CHECK(ds.meta.tasks == 6);
  CHECK(ds.meta.uavs == 3);
  CHECK(ds.meta.gcss == 1);
  for (const auto& p : ds.plans) CHECK(p.criteria.size() == 11);

  auto j = dataset01();
  j["plans"] = json::array();
  CHECK(expect_validation(j).starts_with("/plans |"));

  j = dataset01();
  j["plans"][3]["id"] = j["plans"][0]["id"];
  const auto dup = expect_validation(j);
  CHECK(dup.starts_with("/plans/3/id"));
  CHECK(dup.find("'p01'") != std::string::npos);

  j = dataset01();
  j["plans"][2]["criteria"].erase("fuel");
  CHECK(expect_validation(j).starts_with("/plans/2/criteria/fuel"));

  j = dataset01();
  j["plans"][0]["assignments"][0]["order"] = "first";
  CHECK(expect_validation(j).starts_with("/plans/0/assignments/0/order"));

  CHECK_THROWS_AS(ingest(kMissions / "missing.json"), NotFoundError);

  SUBCASE("round trip through save") {
    const auto dir = scratch_dir("ingest");
    save_dataset(ds, dir / "copy.json");
    const auto back = ingest(dir / "copy.json");
    CHECK(to_json(back) == to_json(ds));
    std::filesystem::remove_all(dir);
  }
}

TEST_CASE("bundled missions follow the reference shapes") {
  const auto missions = load_missions(kMissions);
  const auto& shapes = reference_shapes();
  REQUIRE(missions.size() == shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    CHECK(missions[i].meta.tasks == shapes[i].tasks);
    CHECK(missions[i].meta.uavs == shapes[i].uavs);
    CHECK(missions[i].meta.gcss == shapes[i].gcss);
    CHECK(missions[i].plans.size() == static_cast<std::size_t>(shapes[i].solutions));
  }
}

TEST_CASE("synthetic generation is seeded") {
  const auto a = generate_mission("x", reference_shapes()[2], 42);
  const auto b = generate_mission("x", reference_shapes()[2], 42);
  const auto c = generate_mission("x", reference_shapes()[2], 43);
  CHECK(to_json(a) == to_json(b));
  CHECK(to_json(a) != to_json(c));
  CHECK(a.plans.size() == 38);
  for (std::size_t i = 0; i < a.plans.size(); ++i) {
    for (std::size_t j = i + 1; j < a.plans.size(); ++j) CHECK(plan_distance(a.plans[i], a.plans[j]) > 0.0);
  }
}

TEST_CASE("pipeline") {
  const auto missions = load_missions(kMissions);
  const auto dir = scratch_dir("pipeline");

  SUBCASE("defaults are deterministic to the byte") {
    for (const auto& ds : missions) {
      std::string first[2];
      for (int run = 0; run < 2; ++run) {
        PipelineConfig cfg;
        cfg.ranking_csv = dir / ("r" + std::to_string(run) + ".csv");
        cfg.filtered_json = dir / ("f" + std::to_string(run) + ".json");
        run_pipeline(ds, cfg);
        first[run] = slurp(*cfg.ranking_csv) + slurp(*cfg.filtered_json);
      }
      CHECK(first[0] == first[1]);
      CHECK(!first[0].empty());
    }
    const auto csv = slurp(dir / "r0.csv");
    CHECK(csv.starts_with("rank,plan_id,score,method\n"));
  }

  SUBCASE("threshold zero keeps every distinct plan") {
    PipelineConfig cfg;
    cfg.threshold = 0.0;
    for (const auto& ds : missions) CHECK(run_pipeline(ds, cfg).filtered.size() == ds.plans.size());
  }

  SUBCASE("filtered plans are a subsequence of the ranking") {
    std::mt19937_64 rng(8);
    const auto& names = method_names();
    for (int trial = 0; trial < 60; ++trial) {
      const auto& ds = missions[rng() % missions.size()];
      PipelineConfig cfg;
      cfg.method = names[rng() % names.size()];
      cfg.profile = builtin_profiles()[rng() % builtin_profiles().size()].name;
      cfg.threshold = uavdss::testing::uniform(rng, 0.0, 3.0);
      cfg.rule = rng() % 2 ? FilterRule::Greedy : FilterRule::Pairwise;
      const auto r = run_pipeline(ds, cfg);
      REQUIRE(r.ranked_plans.size() == ds.plans.size());
      REQUIRE(!r.filtered.empty());
      CHECK(r.filtered.front().id == r.ranked_plans.front().id);
      std::size_t pos = 0;
      for (const auto& f : r.filtered) {
        while (pos < r.ranked_plans.size() && r.ranked_plans[pos].id != f.id) ++pos;
        CHECK(pos < r.ranked_plans.size());
        ++pos;
      }
    }
  }

  SUBCASE("configuration errors") {
    PipelineConfig cfg;
    cfg.method = "nope";
    CHECK_THROWS_AS(run_pipeline(missions[0], cfg), NotFoundError);
    cfg = {};
    cfg.threshold = -1.0;
    CHECK_THROWS_AS(run_pipeline(missions[0], cfg), ValidationError);
    cfg = {};
    cfg.profile = "Nobody";
    CHECK_THROWS_AS(run_pipeline(missions[0], cfg), NotFoundError);
    const auto parsed = pipeline_config_from_json(
        json{{"method", "topsis_linear"}, {"threshold", 0.5}, {"filter_rule", "greedy"}, {"weights", {{"gcs", 0.3}}}});
    CHECK(parsed.method == "topsis_linear");
    CHECK(parsed.threshold == 0.5);
    CHECK(parsed.rule == FilterRule::Greedy);
    CHECK(parsed.weights.gcs == 0.3);
    CHECK(parsed.weights.uav == 1.0);
  }

  SUBCASE("methods chosen by name") {
    // a name inside a config block is malformed input; a name given directly is a lookup
    CHECK_THROWS_AS(pipeline_config_from_json(json{{"method", "nope"}}), ValidationError);
    CHECK_THROWS_AS(resolve_method("nope", json::object()), NotFoundError);
    CHECK_THROWS_AS(resolve_method("wsm", json{{"v", 2.0}}), ValidationError);
    CHECK_THROWS_AS(resolve_method("wsm", json::array()), ValidationError);
    const auto [name, params] = resolve_method("topsis", json{{"norm", "linear"}, {"fuzzy", true}, {"method", "x"}});
    CHECK(name == "fuzzy_topsis_linear");
    CHECK(resolve_method("vikor", json{{"v", 0.25}}).second.v == 0.25);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("relative quality") {
  const std::vector<double> col = {3, 1, 2};
  CHECK(relative_quality(col, Direction::Minimize) == std::vector<double>{0.0, 1.0, 0.5});
  CHECK(relative_quality(col, Direction::Maximize) == std::vector<double>{1.0, 0.0, 0.5});
  const std::vector<double> flat = {2, 2};
  CHECK(relative_quality(flat, Direction::Minimize) == std::vector<double>{1.0, 1.0});
}

TEST_CASE("service endpoints") {
  const auto dir = scratch_dir("service");
  DssService svc(load_missions(kMissions), dir / "decisions.jsonl");
  const std::map<std::string, std::string> none;

  auto r = svc.handle("GET", "/api/v1/profiles", none, "");
  CHECK(r.status == 200);
  CHECK(r.body.size() == 6);
  CHECK(svc.handle("GET", "/api/v1/criteria", none, "").body.size() == 11);
  r = svc.handle("GET", "/api/v1/missions", none, "");
  CHECK(r.body.size() == 12);
  CHECK(r.body[0]["plans"] == 17);

  r = svc.handle("GET", "/api/v1/missions/dataset-99/solutions", none, "");
  CHECK(r.status == 404);
  CHECK(r.body["code"] == "not_found");
  CHECK(svc.handle("GET", "/api/v1/missions/dataset-01/solutions", {{"profile", "Nobody"}}, "").status == 404);
  CHECK(svc.handle("GET", "/api/v1/nothing", none, "").status == 404);
  CHECK(svc.handle("DELETE", "/api/v1/profiles", none, "").status == 405);

  SUBCASE("solutions carry relative quality") {
    r = svc.handle("GET", "/api/v1/missions/dataset-01/solutions", none, "");
    REQUIRE(r.status == 200);
    const auto& rows = r.body["solutions"];
    REQUIRE(rows.size() == 17);
    double best = 1e300;
    for (const auto& row : rows) best = std::min(best, row["values"]["makespan"].get<double>());
    for (const auto& row : rows) {
      for (const auto& [k, q] : row["quality"].items()) {
        CHECK(q.get<double>() >= 0.0);
        CHECK(q.get<double>() <= 1.0);
      }
      if (row["values"]["makespan"].get<double>() == best) CHECK(row["quality"]["makespan"] == 1.0);
    }

    r = svc.handle("GET", "/api/v1/missions/dataset-01/solutions", {{"method", "vikor"}, {"filtered", "true"}}, "");
    REQUIRE(r.status == 200);
    CHECK(r.body["solutions"].size() < 17);
    CHECK(r.body["solutions"][0]["rank"] == 1);
    CHECK(svc.handle("GET", "/api/v1/missions/dataset-01/solutions", {{"method", "bogus"}}, "").status == 404);
  }

  SUBCASE("decisions round trip into scores") {
    CHECK(svc.handle("GET", "/api/v1/comparison", none, "").status == 409);
    r = svc.handle("GET", "/api/v1/missions/dataset-01/solutions", {{"method", "wsm"}}, "");
    std::string top;
    for (const auto& row : r.body["solutions"]) {
      if (row["rank"] == 1) top = row["plan"];
    }
    const json d = {{"operator", "op9"}, {"profile", "Balanced"}, {"mission", "dataset-01"}, {"plan", top}};
    r = svc.handle("POST", "/api/v1/decisions", none, d.dump());
    CHECK(r.status == 201);
    CHECK(!r.body["ts"].get<std::string>().empty());

    r = svc.handle("GET", "/api/v1/scores", {{"method", "wsm"}}, "");
    REQUIRE(r.status == 200);
    REQUIRE(r.body["rows"].size() == 1);
    CHECK(r.body["rows"][0]["key"]["method"] == "wsm");
    CHECK(r.body["rows"][0]["mean"] == 1.0);
    CHECK(svc.handle("GET", "/api/v1/comparison", none, "").status == 200);

    auto bad = d;
    bad["plan"] = "p999";
    r = svc.handle("POST", "/api/v1/decisions", none, bad.dump());
    CHECK(r.status == 422);
    CHECK(r.body["detail"]["pointer"] == "/plan");
    bad = d;
    bad["mission"] = "dataset-77";
    CHECK(svc.handle("POST", "/api/v1/decisions", none, bad.dump()).status == 404);
    bad = d;
    bad.erase("operator");
    r = svc.handle("POST", "/api/v1/decisions", none, bad.dump());
    CHECK(r.status == 422);
    CHECK(r.body["detail"]["pointer"] == "/operator");
    CHECK(svc.handle("POST", "/api/v1/decisions", none, "{not json").body["code"] == "malformed_json");
    CHECK(svc.decisions().load().size() == 1);
    CHECK(svc.handle("GET", "/api/v1/scores", {{"group_by", "shoe"}}, "").status == 422);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("service over HTTP") {
  const auto dir = scratch_dir("http");
  DssService svc(load_missions(kMissions), dir / "decisions.jsonl");
  httplib::Server server;
  svc.mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/api/v1/missions");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(json::parse(res->body).size() == 12);

  const json d = {{"operator", "op1"}, {"profile", "Risk"}, {"mission", "dataset-07"}, {"plan", "p02"}};
  res = client.Post("/api/v1/decisions", d.dump(), "application/json");
  REQUIRE(res);
  CHECK(res->status == 201);
  res = client.Get("/api/v1/missions/unknown/solutions");
  REQUIRE(res);
  CHECK(res->status == 404);
  CHECK(json::parse(res->body)["code"] == "not_found");

  server.stop();
  t.join();
  std::filesystem::remove_all(dir);
}

TEST_CASE("service configuration") {
  const auto dir = scratch_dir("config");
  std::ofstream(dir / "svc.json") << R"({"missions_dir": "m", "decisions_log": "d/log.jsonl", "port": 9000})";
  ::unsetenv("PORT");
  auto cfg = load_service_config(dir / "svc.json");
  CHECK(cfg.missions_dir == dir / "m");
  CHECK(cfg.decisions_log == dir / "d/log.jsonl");
  CHECK(cfg.port == 9000);
  ::setenv("PORT", "9100", 1);
  CHECK(load_service_config(dir / "svc.json").port == 9100);
  ::unsetenv("PORT");
  std::ofstream(dir / "bad.json") << R"({"port": "x"})";
  CHECK_THROWS_AS(load_service_config(dir / "bad.json"), ValidationError);
  std::filesystem::remove_all(dir);
}
