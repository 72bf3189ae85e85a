#include <algorithm>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qm/cover.hpp"
#include "qm/verify.hpp"

using namespace qm;
using qmtest::cube;
using qmtest::random_spec;
using qmtest::thrown_errc;

namespace {

const FunctionSpec example1 = make_spec(4, {0, 5, 6, 7, 9, 10, 13, 14, 15});
const FunctionSpec cyclic3 = make_spec(3, {0, 1, 2, 5, 6, 7});

std::vector<Cube> chosen_cubes(const MinimizationResult& result) {
  std::vector<Cube> out;
  for (std::size_t r : result.chosen.chosen) {
    out.push_back(result.pis[r].cube);
  }
  return out;
}

}  // namespace

TEST_CASE("build_chart checks prime implicants against on-set columns") {
  const auto pis = prime_implicants_binary(example1);
  const Chart chart = build_chart(pis, example1);
  REQUIRE(chart.rows.size() == 5);
  REQUIRE(chart.cols == example1.on_set);

  // row -1-1 checks exactly columns 5, 7, 13, 15
  std::vector<std::uint32_t> checked;
  for (std::size_t c = 0; c < chart.cols.size(); ++c) {
    if (chart.incidence[0][c]) {
      checked.push_back(chart.cols[c]);
    }
  }
  CHECK(chart.rows[0].cube == cube("-1-1"));
  CHECK(checked == std::vector<std::uint32_t>{5, 7, 13, 15});
}

TEST_CASE("build_chart excludes don't-cares from the columns") {
  const FunctionSpec spec = make_spec(3, {0, 1}, {2, 3});
  const Chart chart = build_chart(prime_implicants_binary(spec), spec);
  CHECK(chart.cols == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("a single all-covering prime implicant yields an all-true row") {
  const FunctionSpec spec = make_spec(2, {0, 1, 2, 3});
  const Chart chart = build_chart(prime_implicants_binary(spec), spec);
  REQUIRE(chart.rows.size() == 1);
  for (std::size_t c = 0; c < chart.cols.size(); ++c) {
    CHECK(chart.incidence[0][c]);
  }
}

TEST_CASE("the cyclic chart has exactly two checks per column") {
  const Chart chart = build_chart(prime_implicants_binary(cyclic3), cyclic3);
  REQUIRE(chart.rows.size() == 6);
  for (std::size_t c = 0; c < chart.cols.size(); ++c) {
    int hits = 0;
    for (std::size_t r = 0; r < chart.rows.size(); ++r) {
      hits += chart.incidence[r][c] ? 1 : 0;
    }
    CHECK(hits == 2);
  }
}

TEST_CASE("build_chart rejects an uncovered on-set minterm") {
  auto pis = prime_implicants_binary(example1);
  pis.pop_back();  // drop the cube covering minterm 0
  CHECK(thrown_errc([&] { build_chart(pis, example1); }) == errc::internal_consistency);
}

TEST_CASE("essential detection") {
  const Chart full = build_chart(prime_implicants_binary(example1), example1);
  CHECK(essential_prime_implicants(full) == std::vector<std::size_t>{0, 1, 2, 3, 4});

  const Chart cyclic = build_chart(prime_implicants_binary(cyclic3), cyclic3);
  CHECK(essential_prime_implicants(cyclic).empty());

  const FunctionSpec tiny = make_spec(2, {0, 1, 2, 3});
  const Chart one_row = build_chart(prime_implicants_binary(tiny), tiny);
  CHECK(essential_prime_implicants(one_row) == std::vector<std::size_t>{0});
}

TEST_CASE("reduce_chart removes essentials and what they cover") {
  const Chart full = build_chart(prime_implicants_binary(example1), example1);
  const Chart residual = reduce_chart(full, essential_prime_implicants(full));
  CHECK(residual.rows.empty());
  CHECK(residual.cols.empty());

  const Chart cyclic = build_chart(prime_implicants_binary(cyclic3), cyclic3);
  const Chart untouched = reduce_chart(cyclic, {});
  CHECK(untouched.rows.size() == 6);
  CHECK(untouched.cols.size() == 6);
  CHECK(untouched.row_ids == std::vector<std::size_t>{0, 1, 2, 3, 4, 5});

  const FunctionSpec tiny = make_spec(2, {0, 1, 2, 3});
  const Chart one_row = build_chart(prime_implicants_binary(tiny), tiny);
  const Chart empty = reduce_chart(one_row, {0});
  CHECK(empty.rows.empty());
  CHECK(empty.cols.empty());
}

TEST_CASE("Petrick on an empty residual yields the single empty solution") {
  const auto sols = petrick_minimal_covers(Chart{});
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].chosen.empty());
  CHECK(sols[0].term_count == 0);
  CHECK(sols[0].literal_count == 0);
}

TEST_CASE("Petrick resolves the cyclic chart into two three-term covers") {
  const Chart chart = build_chart(prime_implicants_binary(cyclic3), cyclic3);
  const auto sols = petrick_minimal_covers(reduce_chart(chart, {}));
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].chosen == std::vector<std::size_t>{0, 3, 4});
  CHECK(sols[1].chosen == std::vector<std::size_t>{1, 2, 5});
  for (const auto& sol : sols) {
    CHECK(sol.term_count == 3);
    CHECK(sol.literal_count == 6);
  }
}

TEST_CASE("Petrick reports both single-row covers of a symmetric tie") {
  // one column covered by two rows of equal literal count
  const FunctionSpec spec = make_spec(2, {0, 1, 2}, {});
  const Chart chart = build_chart(prime_implicants_binary(spec), spec);
  // columns 0 and 2 are each covered once, column 1 twice: residual is empty
  // after essentials, so craft the one-column chart directly
  Chart residual;
  residual.rows = {chart.rows[0], chart.rows[1]};
  residual.row_ids = {0, 1};
  residual.cols = {1};
  residual.incidence = {{true}, {true}};
  const auto sols = petrick_minimal_covers(residual);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0].chosen == std::vector<std::size_t>{0});
  CHECK(sols[1].chosen == std::vector<std::size_t>{1});
}

TEST_CASE("Petrick reports a budget overflow instead of expanding") {
  const Chart chart = build_chart(prime_implicants_binary(cyclic3), cyclic3);
  CHECK(thrown_errc([&] { petrick_minimal_covers(reduce_chart(chart, {}), 3); }) ==
        errc::budget_exceeded);
}

TEST_CASE("exhaustive search agrees with Petrick on the cyclic chart") {
  const Chart chart = build_chart(prime_implicants_binary(cyclic3), cyclic3);
  const Chart residual = reduce_chart(chart, {});
  CHECK(exhaustive_min_cover(residual) == petrick_minimal_covers(residual));
}

TEST_CASE("exhaustive search handles the empty residual and the row limit") {
  const auto sols = exhaustive_min_cover(Chart{});
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].chosen.empty());

  Chart too_wide;
  too_wide.rows.resize(33);
  too_wide.row_ids.resize(33);
  CHECK(thrown_errc([&] { exhaustive_min_cover(too_wide); }) == errc::row_limit);
}

TEST_CASE("Petrick and the power set agree on random residual charts") {
  std::mt19937 rng(606);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  int compared = 0;
  while (compared < 150) {
    const int n = 3 + static_cast<int>(rng() % 2);
    const auto spec = random_spec(rng, n, density(rng), 0.1);
    if (spec.on_set.empty()) {
      continue;
    }
    const Chart chart = build_chart(prime_implicants_binary(spec), spec);
    const Chart residual = reduce_chart(chart, essential_prime_implicants(chart));
    if (residual.rows.size() > 12) {
      continue;
    }
    ++compared;
    CHECK(petrick_minimal_covers(residual) == exhaustive_min_cover(residual));
  }
}

TEST_CASE("minimize solves the worked example uniquely") {
  const auto result = minimize(example1);
  CHECK_FALSE(result.constant.has_value());
  CHECK(result.unique);
  REQUIRE(result.solutions.size() == 1);
  CHECK(result.essentials == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(result.chosen.chosen == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(result.chosen.term_count == 5);
  CHECK(result.chosen.literal_count == 14);
  CHECK(check_equivalence(chosen_cubes(result), example1).ok());
}

TEST_CASE("minimize handles the degenerate constants") {
  const auto zero = minimize(make_spec(3, {}));
  REQUIRE(zero.constant.has_value());
  CHECK(*zero.constant == 0);
  CHECK(zero.pis.empty());
  CHECK(zero.unique);
  CHECK(zero.chosen.chosen.empty());
  CHECK(zero.chosen.term_count == 0);

  const auto one = minimize(make_spec(2, {0, 3}, {1, 2}));
  REQUIRE(one.constant.has_value());
  CHECK(*one.constant == 1);
  REQUIRE(one.pis.size() == 1);
  CHECK(one.pis[0].cube == cube("--"));
  CHECK(one.chosen.chosen == std::vector<std::size_t>{0});
  CHECK(one.chosen.term_count == 1);
  CHECK(one.chosen.literal_count == 0);

  // an all-don't-care function is vacuous and reports constant 0
  const auto vacuous = minimize(make_spec(2, {}, {0, 1, 2, 3}));
  REQUIRE(vacuous.constant.has_value());
  CHECK(*vacuous.constant == 0);
}

TEST_CASE("minimize reports both cyclic covers and breaks the tie by index") {
  const auto result = minimize(cyclic3);
  CHECK_FALSE(result.unique);
  REQUIRE(result.solutions.size() == 2);
  CHECK(result.chosen.chosen == std::vector<std::size_t>{0, 3, 4});
  CHECK(chosen_cubes(result) == std::vector<Cube>{cube("00-"), cube("-10"), cube("1-1")});
  CHECK(result.solutions[1].chosen == std::vector<std::size_t>{1, 2, 5});
}

TEST_CASE("every minimize solution contains every essential") {
  std::mt19937 rng(707);
  std::uniform_real_distribution<double> density(0.2, 0.7);
  for (int i = 0; i < 120; ++i) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const auto spec = random_spec(rng, n, density(rng), 0.1);
    const auto result = minimize(spec);
    if (result.constant) {
      continue;
    }
    for (const auto& sol : result.solutions) {
      for (std::size_t e : result.essentials) {
        CHECK(std::find(sol.chosen.begin(), sol.chosen.end(), e) != sol.chosen.end());
      }
    }
  }
}

TEST_CASE("minimize output is equivalent to the input function") {
  std::mt19937 rng(808);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < 40; ++i) {
      const auto spec = random_spec(rng, n, density(rng), 0.15);
      const auto result = minimize(spec);
      if (result.constant) {
        continue;
      }
      CHECK(check_equivalence(chosen_cubes(result), spec).ok());
    }
  }
}

TEST_CASE("minimize cost matches the all-implicant brute-force minimum") {
  std::mt19937 rng(909);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < 80; ++i) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto spec = random_spec(rng, n, density(rng), 0.2);
    const auto result = minimize(spec);
    const auto cost = std::pair<int, int>{result.chosen.term_count, result.chosen.literal_count};
    CHECK(cost == brute_force_min_cost(spec));
  }
}

TEST_CASE("adding a don't-care never increases the minimum cost") {
  std::mt19937 rng(1010);
  std::uniform_real_distribution<double> density(0.2, 0.7);
  for (int i = 0; i < 60; ++i) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const auto spec = random_spec(rng, n, density(rng), 0.0);
    std::vector<std::uint32_t> off;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (!std::binary_search(spec.on_set.begin(), spec.on_set.end(), m)) {
        off.push_back(m);
      }
    }
    if (off.empty() || spec.on_set.empty()) {
      continue;
    }
    const auto base = minimize(spec);
    auto dc = spec.dc_set;
    dc.push_back(off[rng() % off.size()]);
    const auto relaxed = minimize(make_spec(n, spec.on_set, dc));
    const auto base_cost = std::pair<int, int>{base.chosen.term_count, base.chosen.literal_count};
    const auto relaxed_cost =
        std::pair<int, int>{relaxed.chosen.term_count, relaxed.chosen.literal_count};
    CHECK(relaxed_cost <= base_cost);
  }
}

TEST_CASE("engine cross-check accepts agreeing engines") {
  MinimizeOptions options;
  options.cross_check_engines = true;
  const auto result = minimize(example1, options);
  CHECK(result.chosen.term_count == 5);

  options.engine = Engine::decimal;
  CHECK(minimize(example1, options).chosen.term_count == 5);
}
