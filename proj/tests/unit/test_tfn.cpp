#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "uavdss/error.hpp"
#include "uavdss/tfn.hpp"

using namespace uavdss;
using uavdss::testing::uniform;
namespace fz = uavdss::fuzzy;

namespace {

void check_tfn(const Tfn& got, double a1, double a2, double a3, double tol = 1e-12) {
  CHECK(got.a1 == doctest::Approx(a1).epsilon(tol));
  CHECK(got.a2 == doctest::Approx(a2).epsilon(tol));
  CHECK(got.a3 == doctest::Approx(a3).epsilon(tol));
}

Tfn random_tfn(std::mt19937_64& rng, double lo, double hi) {
  double x[3] = {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
  std::sort(x, x + 3);
  return {x[0], x[1], x[2]};
}

}  // namespace

TEST_CASE("tfn arithmetic fixed cases") {
  CHECK(fz::add({1, 2, 3}, {0, 1, 2}) == Tfn(1, 3, 5));
  CHECK(fz::mul({1, 2, 3}, {2, 2, 2}) == Tfn(2, 4, 6));
  CHECK(fz::scale(0, {1, 2, 3}) == Tfn(0, 0, 0));

  CHECK(fz::sub({1, 2, 3}, {0, 1, 2}) == Tfn(-1, 1, 3));
  CHECK(fz::sub({1, 2, 3}, {1, 2, 3}) == Tfn(-2, 0, 2));
  CHECK(fz::sub({5, 5, 5}, {2, 2, 2}) == Tfn(3, 3, 3));

  CHECK(fz::div({1, 2, 3}, {1, 1, 1}) == Tfn(1, 2, 3));
  CHECK(fz::div({2, 4, 8}, {2, 2, 2}) == Tfn(1, 2, 4));
  CHECK(fz::div({1, 2, 3}, {1, 2, 4}) == Tfn(0.25, 1, 3));

  CHECK(fz::distance({0, 0, 0}, {1, 1, 1}) == 1.0);
  CHECK(fz::distance({1, 2, 3}, {1, 2, 3}) == 0.0);
  CHECK(fz::distance({0, 1, 2}, {1, 2, 3}) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK(fz::pow({0.5, 0.5, 0.5}, {1, 1, 1}) == Tfn(0.5, 0.5, 0.5));
  CHECK(fz::pow({0.25, 0.5, 1}, {0, 0, 0}) == Tfn(1, 1, 1));
  check_tfn(fz::pow({0.25, 0.5, 0.75}, {0.35, 0.5, 0.65}), std::pow(0.25, 0.65), std::sqrt(0.5),
            std::pow(0.75, 0.35));
}

TEST_CASE("tfn domain errors") {
  CHECK_THROWS_AS(fz::mul({-1, 0, 1}, {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(fz::scale(-1.0, {1, 2, 3}), DomainError);
  CHECK_THROWS_AS(fz::div({1, 2, 3}, {0, 1, 2}), DomainError);
  CHECK_THROWS_AS(fz::div({1, 2, 3}, {-1, 1, 2}), DomainError);
  CHECK_THROWS_AS(fz::pow({0, 0.5, 1}, {0.1, 0.2, 0.3}), DomainError);
  CHECK_THROWS_AS(fz::pow({0.2, 0.5, 1}, {0.1, 0.2, 1.3}), DomainError);
}

TEST_CASE("defuzzifiers") {
  CHECK(fz::defuzz_weighted_mean2({1, 2, 3}) == 2.0);
  CHECK(fz::defuzz_weighted_mean2({0, 0, 4}) == 1.0);
  CHECK(fz::defuzz_weighted_mean2(Tfn::crisp(0.37)) == doctest::Approx(0.37).epsilon(1e-15));
  CHECK(fz::defuzz_bnp({1, 2, 3}) == 2.0);
  CHECK(fz::defuzz_bnp(Tfn::crisp(0.37)) == doctest::Approx(0.37).epsilon(1e-15));
  CHECK(fz::defuzz_bnp({0, 0, 3}) == 1.0);
  CHECK(fz::defuzz_centroid({0, 1, 2}) == 1.0);
  CHECK(fz::defuzz_centroid(Tfn::crisp(0.37)) == doctest::Approx(0.37).epsilon(1e-15));
  CHECK(fz::defuzz_centroid({0, 0, 3}) == 1.0);
}

TEST_CASE("maximizing/minimizing set comparator") {
  {
    const std::vector<Tfn> xs = {Tfn::crisp(0.0), Tfn::crisp(1.0)};
    CHECK(fz::chen_compare(xs) == std::vector<std::size_t>{1, 0});
  }
  {
    const std::vector<Tfn> xs = {{0.2, 0.4, 0.6}, {0.2, 0.4, 0.6}};
    CHECK(fz::chen_compare(xs) == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("symmetric pair ties") {
    // xmin = 0.1, xmax = 0.5; both sides give U_R = U_L so the total is 0.5.
    const std::vector<Tfn> xs = {{0.1, 0.3, 0.5}, {0.2, 0.3, 0.4}};
    const auto u = fz::chen_utilities(xs);
    CHECK(u[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(u[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fz::chen_compare(xs) == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("hand computed utilities") {
    // xmin = 0.1, xmax = 0.6.
    // (0.1,0.2,0.3): U_R = 0.2/0.6, U_L = 0.5/0.6 -> 0.5/3 + 0.5/6 = 0.25
    // (0.2,0.5,0.6): U_R = 0.5/0.6, U_L = 0.4/0.8 -> 5/12 + 1/4 = 2/3
    const std::vector<Tfn> xs = {{0.1, 0.2, 0.3}, {0.2, 0.5, 0.6}};
    const auto u = fz::chen_utilities(xs);
    CHECK(u[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(u[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(fz::chen_compare(xs) == std::vector<std::size_t>{1, 0});
  }
}

TEST_CASE("tfn randomized properties") {
  std::mt19937_64 rng(7);
  constexpr int kCases = 10000;
  for (int i = 0; i < kCases; ++i) {
    const Tfn x = random_tfn(rng, 0.0, 5.0);
    const Tfn y = random_tfn(rng, 0.0, 5.0);
    const Tfn z = random_tfn(rng, 0.0, 5.0);
    const Tfn pos = random_tfn(rng, 0.1, 5.0);
    const Tfn unit = random_tfn(rng, 0.01, 1.0);
    const Tfn expo = random_tfn(rng, 0.0, 1.0);
    const double c = uniform(rng, 0.0, 3.0);

    // closure
    REQUIRE(fz::add(x, y).is_valid());
    REQUIRE(fz::mul(x, y).is_valid());
    REQUIRE(fz::scale(c, x).is_valid());
    REQUIRE(fz::sub(x, y).is_valid());
    REQUIRE(fz::div(x, pos).is_valid());
    REQUIRE(fz::pow(unit, expo).is_valid());
    REQUIRE(fz::min(x, y).is_valid());
    REQUIRE(fz::max(x, y).is_valid());

    // sub widens: the support of x - y contains x's support shifted by -y2
    const Tfn d = fz::sub(x, y);
    REQUIRE(d.a1 <= x.a1 - y.a2 + 1e-12);
    REQUIRE(d.a3 >= x.a3 - y.a2 - 1e-12);

    // vertex distance is a metric
    const double dxy = fz::distance(x, y);
    REQUIRE(dxy >= 0.0);
    REQUIRE(dxy == fz::distance(y, x));
    REQUIRE(fz::distance(x, x) == 0.0);
    REQUIRE(fz::distance(x, z) <= dxy + fz::distance(y, z) + 1e-12);
    if (!(x == y)) REQUIRE(dxy > 0.0);

    // degeneracy homomorphism
    const double a = uniform(rng, 0.0, 5.0);
    const double b = uniform(rng, 0.1, 5.0);
    const double p = uniform(rng, 0.01, 1.0);
    const double e = uniform(rng, 0.0, 1.0);
    const Tfn A = Tfn::crisp(a), B = Tfn::crisp(b);
    REQUIRE(std::abs(fz::add(A, B).a2 - (a + b)) < 1e-12);
    REQUIRE(fz::add(A, B).is_crisp());
    REQUIRE(std::abs(fz::sub(A, B).a1 - (a - b)) < 1e-12);
    REQUIRE(fz::sub(A, B).is_crisp());
    REQUIRE(std::abs(fz::mul(A, B).a3 - a * b) < 1e-12);
    REQUIRE(fz::mul(A, B).is_crisp());
    REQUIRE(std::abs(fz::div(A, B).a2 - a / b) < 1e-12);
    REQUIRE(fz::div(A, B).is_crisp());
    const Tfn pw = fz::pow(Tfn::crisp(p), Tfn::crisp(e));
    REQUIRE(pw.is_crisp());
    REQUIRE(std::abs(pw.a1 - std::pow(p, e)) < 1e-12);
    REQUIRE(std::abs(fz::defuzz_weighted_mean2(A) - a) < 1e-12);
    REQUIRE(std::abs(fz::defuzz_bnp(A) - a) < 1e-12);
    REQUIRE(std::abs(fz::defuzz_centroid(A) - a) < 1e-12);
  }
}

TEST_CASE("add and sub are not inverse") {
  const Tfn x{1, 2, 3}, y{0, 1, 2};
  CHECK_FALSE(fz::add(fz::sub(x, y), y) == x);
}
