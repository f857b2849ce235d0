#include "uavdss/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <tuple>

#include "uavdss/error.hpp"

namespace uavdss {

nlohmann::json to_json(const Decision& d) {
  return {{"operator", d.operator_id}, {"profile", d.profile}, {"mission", d.mission}, {"plan", d.plan},
          {"ts", d.timestamp}};
}

Decision decision_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("decision must be an object", "/");
  const auto field = [&](const char* name, bool required) -> std::string {
    if (!j.contains(name)) {
      if (required) throw ValidationError("missing field", std::string("/") + name);
      return {};
    }
    if (!j[name].is_string() || (required && j[name].get<std::string>().empty())) {
      throw ValidationError("expected a non-empty string", std::string("/") + name);
    }
    return j[name].get<std::string>();
  };
  return {field("operator", true), field("profile", true), field("mission", true), field("plan", true),
          field("ts", false)};
}

ScoreOutcome score_from_rank(int rank, std::size_t num_solutions) {
  if (num_solutions == 0) throw DomainError("score: mission without solutions");
  if (rank < 1 || static_cast<std::size_t>(rank) > num_solutions) {
    throw DomainError("score: rank " + std::to_string(rank) + " outside 1.." + std::to_string(num_solutions));
  }
  if (num_solutions == 1) return {1.0, true};
  const double n = static_cast<double>(num_solutions);
  return {(n - rank) / (n - 1.0), false};
}

ScoreOutcome score_ranking(const Ranking& ranking, std::string_view chosen_plan, std::size_t num_solutions) {
  return score_from_rank(ranking.rank_of(chosen_plan), num_solutions);
}

GroupKey parse_group_key(std::string_view name) {
  if (name == "operator") return GroupKey::Operator;
  if (name == "mission") return GroupKey::Mission;
  if (name == "profile") return GroupKey::Profile;
  if (name == "method") return GroupKey::Method;
  throw ValidationError("unknown group key '" + std::string(name) + "'");
}

std::string_view group_key_name(GroupKey key) {
  switch (key) {
    case GroupKey::Operator: return "operator";
    case GroupKey::Mission: return "mission";
    case GroupKey::Profile: return "profile";
    case GroupKey::Method: return "method";
  }
  return "?";
}

namespace {

const std::string& key_value(const ScoreRecord& r, GroupKey key) {
  switch (key) {
    case GroupKey::Operator: return r.operator_id;
    case GroupKey::Mission: return r.mission;
    case GroupKey::Profile: return r.profile;
    case GroupKey::Method: return r.method;
  }
  return r.method;
}

double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace

std::vector<AggregateRow> aggregate_scores(std::span<const ScoreRecord> records, std::span<const GroupKey> group_by) {
  if (records.empty()) throw ValidationError("aggregate_scores: no records");
  std::map<std::vector<std::string>, std::vector<double>> groups;
  for (const auto& r : records) {
    std::vector<std::string> key;
    for (auto g : group_by) key.push_back(key_value(r, g));
    groups[key].push_back(r.score);
  }
  std::vector<AggregateRow> rows;
  for (const auto& [key, scores] : groups) {
    AggregateRow row{key, scores.size(), 0.0, 0.0, 0.0};
    row.mean = std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(scores.size());
    row.median = median_of(scores);
    if (scores.size() > 1) {
      double ss = 0.0;
      for (double s : scores) ss += (s - row.mean) * (s - row.mean);
      row.sd = std::sqrt(ss / static_cast<double>(scores.size() - 1));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

WilcoxonResult wilcoxon_signed_rank(std::span<const double> differences) {
  std::vector<double> nonzero;
  for (double d : differences) {
    if (!std::isfinite(d)) throw DomainError("wilcoxon: non-finite difference");
    if (std::abs(d) > kWilcoxonZeroTol) nonzero.push_back(d);
  }
  WilcoxonResult out;
  out.n = nonzero.size();
  if (out.n == 0) return out;

  std::vector<std::size_t> order(out.n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return std::abs(nonzero[a]) < std::abs(nonzero[b]); });

  // Average ranks, doubled so that they stay integral.
  std::vector<long> doubled_rank(out.n);
  std::vector<std::size_t> tie_sizes;
  for (std::size_t i = 0; i < out.n;) {
    std::size_t j = i + 1;
    while (j < out.n && std::abs(nonzero[order[j]]) - std::abs(nonzero[order[i]]) <= kWilcoxonZeroTol) ++j;
    const long doubled = static_cast<long>(i + 1 + j);  // 2 * mean of ranks i+1..j
    for (std::size_t k = i; k < j; ++k) doubled_rank[order[k]] = doubled;
    tie_sizes.push_back(j - i);
    i = j;
  }

  long w_plus2 = 0;
  long total2 = 0;
  for (std::size_t i = 0; i < out.n; ++i) {
    total2 += doubled_rank[i];
    if (nonzero[i] > 0.0) w_plus2 += doubled_rank[i];
  }
  out.w_plus = 0.5 * static_cast<double>(w_plus2);
  out.w_minus = 0.5 * static_cast<double>(total2 - w_plus2);

  if (out.n <= kWilcoxonExactLimit) {
    out.exact = true;
    // counts[s] = number of sign patterns whose doubled positive rank sum is s
    std::vector<double> counts(static_cast<std::size_t>(total2) + 1, 0.0);
    counts[0] = 1.0;
    long reach = 0;
    for (std::size_t i = 0; i < out.n; ++i) {
      const long r = doubled_rank[i];
      for (long s = reach; s >= 0; --s) counts[static_cast<std::size_t>(s + r)] += counts[static_cast<std::size_t>(s)];
      reach += r;
    }
    const double patterns = std::ldexp(1.0, static_cast<int>(out.n));
    double lower = 0.0;
    double upper = 0.0;
    for (long s = 0; s <= total2; ++s) {
      if (s <= w_plus2) lower += counts[static_cast<std::size_t>(s)];
      if (s >= w_plus2) upper += counts[static_cast<std::size_t>(s)];
    }
    out.p_value = std::min(1.0, 2.0 * std::min(lower, upper) / patterns);
  } else {
    out.exact = false;
    const double n = static_cast<double>(out.n);
    const double mean = n * (n + 1.0) / 4.0;
    double tie_term = 0.0;
    for (auto t : tie_sizes) {
      const double td = static_cast<double>(t);
      tie_term += td * td * td - td;
    }
    const double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term / 48.0;
    if (!(variance > 0.0)) {
      out.p_value = 1.0;
    } else {
      const double z = std::max(0.0, std::abs(out.w_plus - mean) - 0.5) / std::sqrt(variance);
      out.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    }
  }
  return out;
}

MethodComparison compare_methods(std::span<const ScoreRecord> records, std::string_view a, std::string_view b) {
  using Key = std::tuple<std::string, std::string, std::string>;
  std::map<Key, double> score_a;
  std::map<Key, double> score_b;
  for (const auto& r : records) {
    const Key key{r.operator_id, r.mission, r.profile};
    if (r.method == a) score_a[key] = r.score;
    if (r.method == b) score_b[key] = r.score;
  }
  std::vector<double> diffs;
  for (const auto& [key, sa] : score_a) {
    auto it = score_b.find(key);
    if (it != score_b.end()) diffs.push_back(sa - it->second);
  }
  if (diffs.empty()) {
    throw ValidationError("compare_methods: no paired records for '" + std::string(a) + "' and '" + std::string(b) +
                          "'");
  }
  MethodComparison out;
  out.pairs = diffs.size();
  out.mean_diff = std::accumulate(diffs.begin(), diffs.end(), 0.0) / static_cast<double>(diffs.size());
  out.test = wilcoxon_signed_rank(diffs);
  out.p_value = out.test.p_value;
  return out;
}

ComparisonMatrix comparison_matrix(std::span<const ScoreRecord> records, std::span<const std::string> fuzzy_methods,
                                   std::span<const std::string> crisp_methods, double alpha) {
  ComparisonMatrix out;
  out.crisp.assign(crisp_methods.begin(), crisp_methods.end());
  out.fuzzy.assign(fuzzy_methods.begin(), fuzzy_methods.end());
  out.alpha = alpha;
  for (const auto& c : crisp_methods) {
    std::vector<ComparisonCell> row;
    for (const auto& f : fuzzy_methods) {
      const auto cmp = compare_methods(records, f, c);
      row.push_back({cmp.mean_diff, cmp.p_value, cmp.p_value < alpha});
    }
    out.cells.push_back(std::move(row));
  }
  return out;
}

DecisionLog::DecisionLog(std::filesystem::path path) : path_(std::move(path)) {}

std::vector<Decision> DecisionLog::load() const {
  std::lock_guard lock(mutex_);
  std::vector<Decision> out;
  std::ifstream in(path_);
  if (!in) return out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(decision_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(path_.string() + ":" + std::to_string(line_no) + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(path_.string() + ":" + std::to_string(line_no) + ": " + e.what(), e.pointer());
    }
  }
  return out;
}

void DecisionLog::append(const Decision& d) {
  const std::string line = to_json(d).dump() + "\n";
  std::lock_guard lock(mutex_);
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app | std::ios::binary);
  if (!out) throw Error("cannot open decision log " + path_.string());
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
  if (!out) throw Error("failed to append to decision log " + path_.string());
}

std::vector<Decision> latest_decisions(std::span<const Decision> log) {
  using Key = std::tuple<std::string, std::string, std::string>;
  std::map<Key, std::size_t> slot;
  std::vector<Decision> out;
  for (const auto& d : log) {
    const Key key{d.operator_id, d.profile, d.mission};
    auto it = slot.find(key);
    if (it == slot.end()) {
      slot.emplace(key, out.size());
      out.push_back(d);
    } else {
      out[it->second] = d;
    }
  }
  return out;
}

}  // namespace uavdss
