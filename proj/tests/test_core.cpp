#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "qm/core.hpp"

using namespace qm;
using qmtest::cube;
using qmtest::thrown_errc;

TEST_CASE("popcount counts set bits") {
  CHECK(popcount(0) == 0);
  CHECK(popcount(0b0101) == 2);
  CHECK(popcount(0b1111) == 4);
}

TEST_CASE("minterm_to_cube encodes the index with no dashes") {
  CHECK(minterm_to_cube(9, 4) == cube("1001"));
  CHECK(minterm_to_cube(0, 4) == cube("0000"));
  CHECK(minterm_to_cube(0, 1) == cube("0"));
  CHECK(thrown_errc([] { minterm_to_cube(16, 4); }) == errc::invalid_minterm);
}

TEST_CASE("combine merges adjacent cubes") {
  CHECK(combine(cube("0101"), cube("0111")) == cube("01-1"));
  CHECK_FALSE(combine(cube("01-1"), cube("-1-1")).has_value());
  CHECK(combine(cube("01-1"), cube("11-1")) == cube("-1-1"));
  CHECK(thrown_errc([] { combine(cube("01"), cube("011")); }) == errc::incompatible_cube);
}

TEST_CASE("combine is symmetric") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> value(0, 15);
  std::uniform_int_distribution<std::uint32_t> mask(0, 15);
  for (int i = 0; i < 500; ++i) {
    const std::uint32_t ma = mask(rng);
    const std::uint32_t mb = mask(rng);
    const Cube a{4, value(rng) & ~ma, ma};
    const Cube b{4, value(rng) & ~mb, mb};
    CHECK(combine(a, b) == combine(b, a));
  }
}

TEST_CASE("cube_contains tests membership") {
  CHECK(cube_contains(cube("-1-1"), 13));
  CHECK_FALSE(cube_contains(cube("-1-1"), 9));
  CHECK(cube_contains(cube("----"), 11));
  CHECK(thrown_errc([] { cube_contains(cube("-1-1"), 16); }) == errc::invalid_minterm);
}

TEST_CASE("render_product writes literals most significant first") {
  CHECK(render_product(cube("-1-1"), "ABCD") == "BD");
  CHECK(render_product(cube("1-01"), "ABCD") == "AC'D");
  CHECK(render_product(cube("---"), "ABC") == "1");
  CHECK(thrown_errc([] { render_product(cube("-1-1"), "ABC"); }) == errc::render_mismatch);
}

TEST_CASE("rendered product AC'D matches cube membership on every assignment") {
  const Cube c = cube("1-01");
  for (std::uint32_t m = 0; m < 16; ++m) {
    const bool a = (m & 8) != 0;
    const bool cc = (m & 2) != 0;
    const bool d = (m & 1) != 0;
    CHECK(cube_contains(c, m) == (a && !cc && d));
  }
}

TEST_CASE("evaluate_cover is an OR over cube membership") {
  CHECK_FALSE(evaluate_cover({}, 3));
  CHECK(evaluate_cover({cube("-1-1"), cube("-11-")}, 7));
  CHECK_FALSE(evaluate_cover({cube("1-01")}, 5));
  CHECK(thrown_errc([] { evaluate_cover({cube("01"), cube("011")}, 0); }) ==
        errc::incompatible_cube);
}

TEST_CASE("evaluate_cover finds every minterm in its own cube") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      CHECK(evaluate_cover({minterm_to_cube(m, n)}, m));
    }
  }
}

TEST_CASE("combine result covers exactly the union of its parents") {
  std::mt19937 rng(11);
  for (int n = 2; n <= 6; ++n) {
    std::uniform_int_distribution<std::uint32_t> bits(0, (1u << n) - 1);
    int merged_seen = 0;
    while (merged_seen < 200) {
      const std::uint32_t mask = bits(rng);
      const std::uint32_t va = bits(rng) & ~mask;
      const std::uint32_t vb = bits(rng) & ~mask;
      const Cube a{n, va, mask};
      const Cube b{n, vb, mask};
      const auto merged = combine(a, b);
      if (!merged) {
        continue;
      }
      ++merged_seen;
      CHECK((merged->value & merged->mask) == 0u);
      for (std::uint32_t m = 0; m < (1u << n); ++m) {
        CHECK(cube_contains(*merged, m) == (cube_contains(a, m) || cube_contains(b, m)));
      }
    }
  }
}

TEST_CASE("make_spec sorts, deduplicates and validates") {
  const FunctionSpec spec = make_spec(3, {5, 1, 1, 2});
  CHECK(spec.on_set == std::vector<std::uint32_t>{1, 2, 5});
  CHECK(spec.var_names == "ABC");
  CHECK(thrown_errc([] { make_spec(3, {8}); }) == errc::invalid_minterm);
  CHECK(thrown_errc([] { make_spec(3, {1}, {1}); }) == errc::invalid_spec);
  CHECK(thrown_errc([] { make_spec(0, {}); }) == errc::invalid_spec);
  CHECK(thrown_errc([] { make_spec(25, {}); }) == errc::invalid_spec);
  CHECK(thrown_errc([] { make_spec(2, {1}, {}, "AA"); }) == errc::invalid_spec);
}

TEST_CASE("literal_count is width minus dash count") {
  CHECK(literal_count(cube("0000")) == 4);
  CHECK(literal_count(cube("-1-1")) == 2);
  CHECK(literal_count(cube("---")) == 0);
}

TEST_CASE("cube_minterms enumerates ascending") {
  CHECK(cube_minterms(cube("-1-1")) == std::vector<std::uint32_t>{5, 7, 13, 15});
  CHECK(cube_minterms(cube("1001")) == std::vector<std::uint32_t>{9});
}
