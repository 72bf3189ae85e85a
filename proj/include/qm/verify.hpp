#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qm/core.hpp"

namespace qm {

// Brute-force oracles for the tabulation engines and the cover search. They
// share only the core cube primitives with the engines they check, never the
// pairing or covering machinery.

struct OracleMismatch {
  std::uint64_t input = 0;
  std::uint64_t expected = 0;
  std::uint64_t actual = 0;
};

struct OracleReport {
  std::string subject;
  std::uint64_t instances_checked = 0;
  std::vector<OracleMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Enumerates all 3^n cubes, keeps those whose minterms lie inside on u dc,
// and filters to the maximal ones by the definition: a cube is prime iff
// every single-dash expansion covers an off-set minterm. n <= 10.
std::vector<PrimeImplicant> brute_force_prime_implicants(const FunctionSpec& spec);

// Verifies the cover evaluates to 1 on the on-set and 0 off on u dc;
// don't-cares are unconstrained. n <= 20.
OracleReport check_equivalence(const std::vector<Cube>& cubes, const FunctionSpec& spec);

// Minimum (term_count, literal_count) over subsets of ALL implicants
// contained in on u dc, not just prime ones. n <= 4.
std::pair<int, int> brute_force_min_cost(const FunctionSpec& spec);

}  // namespace qm
