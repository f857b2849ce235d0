#include <doctest.h>

#include <random>

#include "support.hpp"
#include "uavdss/crisp_methods.hpp"
#include "uavdss/error.hpp"
#include "uavdss/fuzzy_methods.hpp"
#include "uavdss/methods.hpp"
#include "uavdss/normalize.hpp"

using namespace uavdss;
using uavdss::testing::crisp_fuzzy;
using uavdss::testing::matrix;
using uavdss::testing::weights_of;

namespace {

constexpr auto Min = Direction::Minimize;
constexpr auto Max = Direction::Maximize;
constexpr Tfn kHigh{0.55, 0.70, 0.85};
constexpr Tfn kLow{0.15, 0.30, 0.45};

std::vector<double> scores_by_index(const Ranking& r) {
  std::vector<double> out(r.ordered.size());
  for (const auto& a : r.ordered) out[a.index] = *a.score;
  return out;
}

FuzzyWeightVector fuzzy_of(const DecisionMatrix& m, std::vector<Tfn> w) {
  FuzzyWeightVector out;
  for (std::size_t f = 0; f < w.size(); ++f) out.weights[m.criteria()[f].id] = w[f];
  return out;
}

double vertex_distance(const Tfn& x, const Tfn& y) {
  return std::sqrt((std::pow(x.a1 - y.a1, 2) + std::pow(x.a2 - y.a2, 2) + std::pow(x.a3 - y.a3, 2)) / 3.0);
}

// Draws instances until the crisp scores are tie-free.
template <class Crisp>
std::vector<std::pair<DecisionMatrix, WeightVector>> tie_free_instances(std::uint64_t seed, Crisp crisp,
                                                                        int count = 20) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<DecisionMatrix, WeightVector>> out;
  while (static_cast<int>(out.size()) < count) {
    auto m = uavdss::testing::random_matrix(rng, 4 + rng() % 6, 3 + rng() % 3);
    auto w = uavdss::testing::random_weights(rng, m.criteria());
    if (!uavdss::testing::well_separated(crisp(m, w))) continue;
    out.emplace_back(std::move(m), std::move(w));
  }
  return out;
}

}  // namespace

TEST_CASE("degeneracy: fuzzy vikor reproduces vikor") {
  for (const auto& [m, w] : tie_free_instances(1, [](auto& m, auto& w) { return scores_by_index(vikor(m, w)); })) {
    CHECK(fuzzy_vikor(m, crisp_fuzzy(w)).order() == vikor(m, w).order());
  }
}

TEST_CASE("degeneracy: fuzzy waspas reproduces waspas") {
  for (const auto& [m, w] : tie_free_instances(2, [](auto& m, auto& w) { return scores_by_index(waspas(m, w)); })) {
    CHECK(fuzzy_waspas(m, crisp_fuzzy(w)).order() == waspas(m, w).order());
    CHECK(fuzzy_waspas(m, crisp_fuzzy(w), 1.0).order() == wsm(m, w).order());
  }
}

TEST_CASE("degeneracy: fuzzy multimoora reproduces multimoora") {
  // tie-free in every sub-system so the dominance step sees the same ranks
  const auto subs = [](const DecisionMatrix& m, const WeightVector& w) {
    const auto r = multimoora(m, w);
    for (const char* key : {"ratio_system", "reference_point", "multiplicative"}) {
      if (!uavdss::testing::well_separated(r.metadata[key]["scores"].get<std::vector<double>>())) return std::vector<double>{0, 0};
    }
    return std::vector<double>{0, 1};
  };
  for (const auto& [m, w] : tie_free_instances(3, subs)) {
    const auto crisp = multimoora(m, w);
    const auto fuzzy = fuzzy_multimoora(m, crisp_fuzzy(w));
    for (const char* key : {"ratio_system", "reference_point", "multiplicative"}) {
      CHECK(fuzzy.metadata[key]["ranks"] == crisp.metadata[key]["ranks"]);
    }
    CHECK(fuzzy.order() == crisp.order());
  }
}

TEST_CASE("degeneracy: fuzzy topsis at the normalized and weighted stage") {
  for (auto norm : {Normalization::Vector, Normalization::Linear}) {
    const auto crisp_closeness = [norm](const DecisionMatrix& m, const WeightVector& w) {
      // crisp oracle on the crisp normalized-and-weighted matrix with ideal 1 and anti-ideal 0
      const auto r = norm == Normalization::Vector ? vector_normalize(m) : linear_normalize(m);
      const auto wv = w.aligned(m.criteria());
      std::vector<double> c;
      for (std::size_t s = 0; s < r.rows; ++s) {
        double dp = 0.0, dm = 0.0;
        for (std::size_t f = 0; f < r.cols; ++f) {
          const double x = norm == Normalization::Vector && !m.maximized(f) ? 1.0 - r(s, f) : r(s, f);
          dp += std::abs(wv[f] * x - 1.0);
          dm += std::abs(wv[f] * x);
        }
        c.push_back(dm / (dp + dm));
      }
      return c;
    };
    for (const auto& [m, w] : tie_free_instances(4, crisp_closeness)) {
      const auto weighted = fuzzy_topsis_weighted(m, crisp_fuzzy(w), norm);
      const auto r = norm == Normalization::Vector ? vector_normalize(m) : linear_normalize(m);
      const auto wv = w.aligned(m.criteria());
      for (std::size_t s = 0; s < r.rows; ++s) {
        for (std::size_t f = 0; f < r.cols; ++f) {
          const auto& t = weighted[s * r.cols + f];
          const double x = norm == Normalization::Vector && !m.maximized(f) ? 1.0 - r(s, f) : r(s, f);
          CHECK(t.a1 == t.a3);
          CHECK(std::abs(t.a2 - wv[f] * x) < 1e-12);
        }
      }
      const auto expected = crisp_closeness(m, w);
      CHECK(fuzzy_topsis(m, crisp_fuzzy(w), norm).order() == uavdss::testing::argsort(expected, true));
    }
  }
}

TEST_CASE("degeneracy: fuzzy ahp on consistent crisp matrices") {
  std::mt19937_64 rng(5);
  int instances = 0;
  while (instances < 20) {
    const std::size_t n = 3 + rng() % 5, k = 2 + rng() % 3;
    const auto positive = [&](std::size_t len) {
      std::vector<double> v(len);
      for (auto& x : v) x = uavdss::testing::uniform(rng, 0.5, 5.0);
      return v;
    };
    const auto consistent = [](const std::vector<double>& v) {
      SquareMatrix<double> a(v.size());
      SquareMatrix<Tfn> f(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
          a(i, j) = v[i] / v[j];
          f(i, j) = Tfn::crisp(v[i] / v[j]);
        }
      }
      return std::pair(a, f);
    };
    const auto [crit, fcrit] = consistent(positive(k));
    std::vector<SquareMatrix<double>> alts;
    std::vector<SquareMatrix<Tfn>> falts;
    for (std::size_t f = 0; f < k; ++f) {
      auto [a, fa] = consistent(positive(n));
      alts.push_back(a);
      falts.push_back(fa);
    }
    const auto crisp = ahp_priorities(crit, alts);
    if (!uavdss::testing::well_separated(crisp.global)) continue;
    ++instances;
    const auto fuzzy = fuzzy_ahp_priorities(fcrit, falts);
    for (std::size_t s = 0; s < n; ++s) {
      CHECK(fuzzy.global[s].a1 == doctest::Approx(fuzzy.global[s].a3).epsilon(1e-12));
      CHECK(std::abs(fuzzy.global[s].a2 - crisp.global[s]) < 1e-9);
    }
    const auto ids = uavdss::testing::make_ids(n);
    CHECK(rank_fuzzy_priorities("fuzzy_ahp", ids, fuzzy.global).order() ==
          rank_by_score("ahp", ids, crisp.global, Sense::HigherIsBetter).order());
  }
}

TEST_CASE("fuzzy ahp") {
  SUBCASE("geometric weights of a 2x2 matrix") {
    SquareMatrix<Tfn> a(2, Tfn::crisp(1.0));
    a(0, 1) = {2, 3, 4};
    a(1, 0) = {0.25, 1.0 / 3.0, 0.5};
    const auto w = fuzzy_geometric_weights(a);
    const double g1[] = {std::sqrt(2.0), std::sqrt(0.25)};
    const double g2[] = {std::sqrt(3.0), std::sqrt(1.0 / 3.0)};
    const double g3[] = {2.0, std::sqrt(0.5)};
    for (int i = 0; i < 2; ++i) {
      CHECK(std::abs(w[i].a1 - g1[i] / (g3[0] + g3[1])) < 1e-12);
      CHECK(std::abs(w[i].a2 - g2[i] / (g2[0] + g2[1])) < 1e-12);
      CHECK(std::abs(w[i].a3 - g3[i] / (g1[0] + g1[1])) < 1e-12);
    }
  }
  SUBCASE("equal degrees and identical alternatives tie") {
    const auto m = matrix({Min, Min, Max}, {{2, 3, 4}, {2, 3, 4}, {2, 3, 4}});
    const OperatorProfile p{"p", {{"c0", ImportanceDegree::High}, {"c1", ImportanceDegree::High},
                                  {"c2", ImportanceDegree::High}}};
    for (const auto& x : fuzzy_ahp(m, p).ordered) CHECK(x.rank == 1);
  }
  SUBCASE("criteria matrix uses the membership table") {
    const std::vector<ImportanceDegree> d = {ImportanceDegree::High, ImportanceDegree::Low, ImportanceDegree::High};
    const auto a = fuzzy_ahp_criteria_matrix(d);
    CHECK(a(0, 2) == Tfn::crisp(1.0));
    CHECK(a(0, 1) == fuzzy::div(kHigh, kLow));
    CHECK(lift_saaty(1) == Tfn::crisp(1.0));
    CHECK(lift_saaty(9) == Tfn(8, 9, 9));
  }
  SUBCASE("a VeryLow degree cannot be a divisor") {
    const auto m = matrix({Min, Min}, {{1, 2}, {2, 1}});
    const OperatorProfile p{"p", {{"c0", ImportanceDegree::VeryLow}, {"c1", ImportanceDegree::High}}};
    CHECK_THROWS_AS(fuzzy_ahp(m, p), DomainError);
  }
}

TEST_CASE("fuzzy vikor hand instance") {
  const auto m = matrix({Min, Min}, {{1, 4}, {2, 2}, {3, 1}});
  const auto r = fuzzy_vikor(m, fuzzy_of(m, {kHigh, kLow}));
  // S* = (0.15, 0.3, 0.45), R* = (0.15, 0.3, 0.425) componentwise, both spans 0.7
  const double c = 5.0 / 7.0;
  const Tfn q[] = {{-0.575 * c, 0, 0.6 * c}, {-0.275 * c, 0.2 * c, 0.7 * c}, {0.225 * c, 0.8 * c, 1.4 * c}};
  const auto got = scores_by_index(r);
  for (int s = 0; s < 3; ++s) {
    const auto tq = r.metadata["Q"][s].get<std::vector<double>>();
    CHECK(std::abs(tq[0] - q[s].a1) < 1e-9);
    CHECK(std::abs(tq[1] - q[s].a2) < 1e-9);
    CHECK(std::abs(tq[2] - q[s].a3) < 1e-9);
    CHECK(std::abs(got[s] - (q[s].a1 + 2 * q[s].a2 + q[s].a3) / 4) < 1e-9);
  }
  CHECK(r.order() == std::vector<std::size_t>{0, 1, 2});

  const auto d = matrix({Min, Max}, {{5, 1}, {1, 5}, {3, 3}});
  CHECK(fuzzy_vikor(d, fuzzy_of(d, {kLow, kLow})).ordered.size() == 3);
  const auto dom = matrix({Min, Max}, {{5, 1}, {1, 5}});
  CHECK(fuzzy_vikor(dom, fuzzy_of(dom, {kHigh, kLow})).ordered[0].index == 1);
}

TEST_CASE("fuzzy topsis hand instance") {
  const auto m = matrix({Max, Max}, {{2, 4}, {4, 2}, {1, 1}});
  const auto r = fuzzy_topsis(m, fuzzy_of(m, {kHigh, kHigh}), Normalization::Linear);
  const double norm[3][2] = {{0.5, 1}, {1, 0.5}, {0.25, 0.25}};
  const auto got = scores_by_index(r);
  for (int s = 0; s < 3; ++s) {
    double dp = 0.0, dm = 0.0;
    for (int f = 0; f < 2; ++f) {
      const Tfn x{kHigh.a1 * norm[s][f], kHigh.a2 * norm[s][f], kHigh.a3 * norm[s][f]};
      dp += vertex_distance(x, Tfn::crisp(1));
      dm += vertex_distance(x, Tfn::crisp(0));
    }
    CHECK(std::abs(got[s] - dm / (dp + dm)) < 1e-9);
  }
  CHECK(got[0] == doctest::Approx(got[1]));
  CHECK(r.ordered.back().index == 2);

  const auto z = matrix({Max, Max}, {{0, 0}, {1, 2}});
  const auto rz = fuzzy_topsis(z, fuzzy_of(z, {kHigh, kLow}), Normalization::Linear);
  CHECK(scores_by_index(rz)[0] == 0.0);
  CHECK(rz.ordered.back().index == 0);
}

TEST_CASE("fuzzy waspas hand instance") {
  const auto m = matrix({Min, Max}, {{3, 4}, {5, 9}, {4, 6}});
  const Tfn w[] = {kHigh, kLow};
  const auto r = fuzzy_waspas(m, fuzzy_of(m, {kHigh, kLow}), 0.5);
  const auto got = scores_by_index(r);
  for (std::size_t s = 0; s < 3; ++s) {
    const double x[] = {3.0 / m(s, 0), m(s, 1) / 9.0};
    const double additive = (x[0] * (w[0].a1 + w[0].a2 + w[0].a3) + x[1] * (w[1].a1 + w[1].a2 + w[1].a3)) / 3.0;
    const double multiplicative = (std::pow(x[0], w[0].a1) * std::pow(x[1], w[1].a1) +
                                   std::pow(x[0], w[0].a2) * std::pow(x[1], w[1].a2) +
                                   std::pow(x[0], w[0].a3) * std::pow(x[1], w[1].a3)) /
                                  3.0;
    CHECK(std::abs(got[s] - 0.5 * (additive + multiplicative)) < 1e-9);
  }
  const auto same = matrix({Min, Max}, {{3, 4}, {3, 4}});
  CHECK(fuzzy_waspas(same, fuzzy_of(same, {kHigh, kLow})).ordered[1].rank == 1);
}

TEST_CASE("fuzzy multimoora matches the dominance oracle on three alternatives") {
  std::mt19937_64 rng(17);
  int conflicting = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = uavdss::testing::random_matrix(rng, 3, 3);
    const auto w = fuzzy_of(m, {kHigh, kLow, Tfn{0.35, 0.5, 0.65}});
    const auto r = fuzzy_multimoora(m, w);
    std::array<std::vector<int>, 3> sub;
    int k = 0;
    for (const char* key : {"ratio_system", "reference_point", "multiplicative"}) {
      sub[k++] = r.metadata[key]["ranks"].get<std::vector<int>>();
    }
    if (sub[0] != sub[1] || sub[1] != sub[2]) ++conflicting;
    std::vector<std::size_t> perm = {0, 1, 2}, best;
    std::vector<int> count(3, 0);
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        const bool le = sub[0][a] <= sub[0][b] && sub[1][a] <= sub[1][b] && sub[2][a] <= sub[2][b];
        const bool lt = sub[0][a] < sub[0][b] || sub[1][a] < sub[1][b] || sub[2][a] < sub[2][b];
        if (a != b && le && lt) ++count[a];
      }
    }
    do {
      bool valid = true;
      for (std::size_t i = 0; i + 1 < 3; ++i) {
        const auto a = perm[i], b = perm[i + 1];
        valid = valid && std::make_tuple(-count[a], sub[0][a] + sub[1][a] + sub[2][a], sub[0][a], a) <
                             std::make_tuple(-count[b], sub[0][b] + sub[1][b] + sub[2][b], sub[0][b], b);
      }
      if (valid) best = perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(r.order() == best);
  }
  CHECK(conflicting > 10);

  const auto clear = matrix({Max, Min}, {{9, 1}, {5, 5}, {2, 8}});
  CHECK(fuzzy_multimoora(clear, fuzzy_of(clear, {kHigh, kLow})).ordered[0].index == 0);
}

TEST_CASE("fuzzy weights outside the unit interval are rejected") {
  const auto m = matrix({Min, Min}, {{1, 2}, {2, 1}});
  CHECK_THROWS_AS(fuzzy_vikor(m, fuzzy_of(m, {Tfn{0.5, 0.7, 1.2}, kLow})), ValidationError);
  CHECK_THROWS_AS(fuzzy_waspas(m, fuzzy_of(m, {Tfn{-0.1, 0.2, 0.3}, kLow})), ValidationError);
}

TEST_CASE("every fuzzy method ranks under every builtin profile") {
  std::mt19937_64 rng(8);
  const auto& criteria = mission_criteria();
  std::vector<double> v;
  for (std::size_t i = 0; i < 7 * criteria.size(); ++i) v.push_back(uavdss::testing::uniform(rng, 0.5, 30.0));
  const DecisionMatrix m(criteria, uavdss::testing::make_ids(7), v);
  for (const auto& profile : builtin_profiles()) {
    for (const auto& name : fuzzy_method_names()) {
      INFO(name << " / " << profile.name);
      const auto r = rank_alternatives(m, profile, name);
      CHECK(r.method == name);
      CHECK(uavdss::testing::is_competition_ranking(r, 7));
    }
  }
}
