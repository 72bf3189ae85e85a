#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qm/core.hpp"
#include "qm/tabulate.hpp"

namespace qm {

// Prime-implicant chart: rows are PIs, columns the on-set minterms
// (don't-cares never appear as columns). row_ids maps each row back to its
// index in the originating PI sequence so residual charts stay traceable.
struct Chart {
  std::vector<PrimeImplicant> rows;
  std::vector<std::size_t> row_ids;
  std::vector<std::uint32_t> cols;
  std::vector<std::vector<bool>> incidence;  // incidence[r][c]
};

struct CoverSolution {
  std::vector<std::size_t> chosen;  // ascending row indices
  int term_count = 0;
  int literal_count = 0;

  friend bool operator==(const CoverSolution&, const CoverSolution&) = default;
};

struct MinimizationResult {
  std::vector<PrimeImplicant> pis;
  std::vector<std::size_t> essentials;   // ascending
  std::vector<CoverSolution> solutions;  // all minimum covers, ordered by chosen sequence
  CoverSolution chosen;
  bool unique = false;
  std::optional<int> constant;  // 0 or 1 for degenerate functions
};

struct MinimizeOptions {
  Engine engine = Engine::binary;
  bool cross_check_engines = false;  // run both engines, fail loudly on mismatch
  std::size_t petrick_node_budget = 1'000'000;
};

Chart build_chart(const std::vector<PrimeImplicant>& pis, const FunctionSpec& spec);

// Rows that are the sole cover of some column, ascending.
std::vector<std::size_t> essential_prime_implicants(const Chart& chart);

// Drops essential rows and every column they cover; remaining rows that
// cover no remaining column are dropped too.
Chart reduce_chart(const Chart& chart, const std::vector<std::size_t>& essentials);

// Petrick's method: expands the product over columns of (sum of covering
// rows) into row subsets, absorbing supersets after every multiply, and
// returns every subset of lexicographically minimum (terms, literals) cost.
// Solution indices refer to the residual chart's rows. An empty residual
// yields the single empty solution.
std::vector<CoverSolution> petrick_minimal_covers(const Chart& residual,
                                                  std::size_t node_budget = 1'000'000);

// Same contract as petrick_minimal_covers, computed by enumerating all row
// subsets in increasing popcount order. Limited to 32 rows.
std::vector<CoverSolution> exhaustive_min_cover(const Chart& residual);

// Full pipeline: degenerate checks, prime implicants, chart, essentials,
// Petrick over the residual. Solutions are reported over the PI sequence;
// `chosen` is the minimum-cost solution with the lexicographically smallest
// row-index sequence.
MinimizationResult minimize(const FunctionSpec& spec, const MinimizeOptions& options = {});

}  // namespace qm
