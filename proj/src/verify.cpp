#include "qm/verify.hpp"

#include <algorithm>
#include <climits>

namespace qm {

namespace {

constexpr int kPrimeOracleMaxVars = 10;
constexpr int kEquivalenceMaxVars = 20;
constexpr int kMinCostMaxVars = 4;

// Walks every minterm of (value, mask) without materializing the list.
template <typename Pred>
bool all_minterms(std::uint32_t value, std::uint32_t mask, Pred pred) {
  std::uint32_t s = mask;
  while (true) {
    if (!pred(value | s)) {
      return false;
    }
    if (s == 0) {
      return true;
    }
    s = (s - 1) & mask;
  }
}

bool engine_order(const Cube& a, const Cube& b) {
  const int da = popcount(a.mask);
  const int db = popcount(b.mask);
  if (da != db) {
    return da > db;
  }
  if (a.value != b.value) {
    return a.value < b.value;
  }
  return a.mask < b.mask;
}

}  // namespace

std::vector<PrimeImplicant> brute_force_prime_implicants(const FunctionSpec& spec) {
  validate_spec(spec);
  if (spec.num_vars > kPrimeOracleMaxVars) {
    throw error(errc::oracle_limit, "prime implicant oracle limited to " +
                                        std::to_string(kPrimeOracleMaxVars) + " variables");
  }
  const int n = spec.num_vars;
  const std::uint32_t domain = 1u << n;
  std::vector<bool> care(domain, false);
  for (std::uint32_t m : spec.on_set) {
    care[m] = true;
  }
  for (std::uint32_t m : spec.dc_set) {
    care[m] = true;
  }
  const auto in_care = [&care](std::uint32_t value, std::uint32_t mask) {
    return all_minterms(value, mask, [&care](std::uint32_t m) { return care[m]; });
  };

  // all 3^n cubes contained in on u dc
  std::vector<Cube> contained;
  for (std::uint32_t mask = 0; mask < domain; ++mask) {
    const std::uint32_t free_bits = (domain - 1u) & ~mask;
    std::uint32_t value = free_bits;
    while (true) {
      if (in_care(value, mask)) {
        contained.push_back(Cube{n, value, mask});
      }
      if (value == 0) {
        break;
      }
      value = (value - 1) & free_bits;
    }
  }

  // prime iff no single-dash expansion stays inside on u dc
  std::vector<Cube> primes;
  for (const Cube& c : contained) {
    bool maximal = true;
    for (int bit = 0; bit < n && maximal; ++bit) {
      const std::uint32_t b = 1u << bit;
      if (c.mask & b) {
        continue;
      }
      if (in_care(c.value & ~b, c.mask | b)) {
        maximal = false;
      }
    }
    if (maximal) {
      primes.push_back(c);
    }
  }

  std::sort(primes.begin(), primes.end(), engine_order);
  std::vector<PrimeImplicant> pis;
  pis.reserve(primes.size());
  for (const Cube& c : primes) {
    pis.push_back(PrimeImplicant{c, cube_minterms(c)});
  }
  return pis;
}

OracleReport check_equivalence(const std::vector<Cube>& cubes, const FunctionSpec& spec) {
  validate_spec(spec);
  if (spec.num_vars > kEquivalenceMaxVars) {
    throw error(errc::oracle_limit, "equivalence oracle limited to " +
                                        std::to_string(kEquivalenceMaxVars) + " variables");
  }
  for (const Cube& c : cubes) {
    if (c.width != spec.num_vars) {
      throw error(errc::incompatible_cube, "cover cube width does not match the function");
    }
  }

  const std::uint32_t domain = 1u << spec.num_vars;
  std::vector<bool> on(domain, false);
  std::vector<bool> dc(domain, false);
  for (std::uint32_t m : spec.on_set) {
    on[m] = true;
  }
  for (std::uint32_t m : spec.dc_set) {
    dc[m] = true;
  }

  OracleReport report;
  report.subject = "check_equivalence";
  for (std::uint32_t m = 0; m < domain; ++m) {
    if (dc[m]) {
      continue;
    }
    ++report.instances_checked;
    bool actual = false;
    for (const Cube& c : cubes) {
      if ((m & ~c.mask) == c.value) {
        actual = true;
        break;
      }
    }
    const bool expected = on[m];
    if (actual != expected) {
      report.mismatches.push_back({m, expected ? 1u : 0u, actual ? 1u : 0u});
    }
  }
  return report;
}

std::pair<int, int> brute_force_min_cost(const FunctionSpec& spec) {
  validate_spec(spec);
  if (spec.num_vars > kMinCostMaxVars) {
    throw error(errc::oracle_limit,
                "min-cost oracle limited to " + std::to_string(kMinCostMaxVars) + " variables");
  }
  if (spec.on_set.empty()) {
    return {0, 0};
  }

  const int n = spec.num_vars;
  const std::uint32_t domain = 1u << n;
  std::vector<bool> care(domain, false);
  for (std::uint32_t m : spec.on_set) {
    care[m] = true;
  }
  for (std::uint32_t m : spec.dc_set) {
    care[m] = true;
  }
  const auto in_care = [&care](std::uint32_t value, std::uint32_t mask) {
    return all_minterms(value, mask, [&care](std::uint32_t m) { return care[m]; });
  };
  std::vector<int> on_index(domain, -1);
  for (std::size_t i = 0; i < spec.on_set.size(); ++i) {
    on_index[spec.on_set[i]] = static_cast<int>(i);
  }

  // every implicant inside on u dc, reduced to (literals, covered-on-bits)
  struct Candidate {
    int literals;
    std::uint32_t on_cover;
  };
  std::vector<Candidate> candidates;
  for (std::uint32_t mask = 0; mask < domain; ++mask) {
    const std::uint32_t free_bits = (domain - 1u) & ~mask;
    std::uint32_t value = free_bits;
    while (true) {
      if (in_care(value, mask)) {
        std::uint32_t on_cover = 0;
        all_minterms(value, mask, [&](std::uint32_t m) {
          if (on_index[m] >= 0) {
            on_cover |= 1u << on_index[m];
          }
          return true;
        });
        if (on_cover != 0) {
          candidates.push_back({n - popcount(mask), on_cover});
        }
      }
      if (value == 0) {
        break;
      }
      value = (value - 1) & free_bits;
    }
  }

  // set-cover DP over on-set subsets; pair costs add componentwise and
  // compare lexicographically
  const std::uint32_t full = (1u << spec.on_set.size()) - 1u;
  const std::pair<int, int> inf{INT_MAX, INT_MAX};
  std::vector<std::pair<int, int>> dp(std::size_t{full} + 1, inf);
  dp[0] = {0, 0};
  for (std::uint32_t covered = 0; covered < full; ++covered) {
    if (dp[covered] == inf) {
      continue;
    }
    for (const Candidate& cand : candidates) {
      const std::uint32_t next = covered | cand.on_cover;
      if (next == covered) {
        continue;
      }
      const std::pair<int, int> cost{dp[covered].first + 1, dp[covered].second + cand.literals};
      if (cost < dp[next]) {
        dp[next] = cost;
      }
    }
  }
  return dp[full];
}

}  // namespace qm
