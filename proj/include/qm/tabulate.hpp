#pragma once

#include <string>
#include <vector>

#include "qm/core.hpp"

namespace qm {

enum class Engine { binary, decimal };

// Buckets cubes by popcount(value); group g holds exactly the cubes with g
// ones, in input order. The result has max-ones + 1 groups (possibly empty
// in between); an empty input yields an empty grouping.
std::vector<std::vector<Cube>> group_by_ones(const std::vector<Cube>& cubes);

// Complete prime implicant set of the function, dashes grown by pairing
// adjacent ones-count groups round by round. Don't-care minterms take part
// in the pairing. Output order: popcount(mask) descending, then value
// ascending, then mask ascending.
std::vector<PrimeImplicant> prime_implicants_binary(const FunctionSpec& spec);

// Same contract and output as prime_implicants_binary, computed over
// minterm groups in decimal notation instead of bit patterns.
std::vector<PrimeImplicant> prime_implicants_decimal(const FunctionSpec& spec);

// One row of a decimal-notation table: the minterms merged so far plus the
// power-of-two differences eliminated along the way (the bracketed numbers).
// `label` is the display form, e.g. "5,7-13,15".
struct DecimalGroupEntry {
  std::vector<std::uint32_t> minterms;  // ascending; size == 2^|diffs|
  std::vector<std::uint32_t> diffs;     // ascending powers of two
  bool checked = false;
  std::string label;
};

// Cube equivalent of an entry: value = smallest minterm, mask = OR of diffs.
Cube decimal_entry_cube(const DecimalGroupEntry& entry, int width);

// Round-by-round decimal tabulation record; rounds[k] holds the entries
// with k eliminated differences, in group-major order.
std::vector<std::vector<DecimalGroupEntry>> decimal_tabulation_rounds(const FunctionSpec& spec);

struct TraceRow {
  Cube cube;
  bool checked = false;
  std::string label;  // merged minterms, e.g. "5,7" then "5,7-13,15"
};

struct TraceGroup {
  int ones = 0;
  std::vector<TraceRow> rows;
};

struct TraceRound {
  std::vector<TraceGroup> groups;
};

// Full pairing record: rounds[k] holds the round-k tables (all cubes there
// have popcount(mask) == k); a row is checked iff it combined with at least
// one partner in that round.
struct TabulationTrace {
  Engine engine = Engine::binary;
  std::vector<TraceRound> rounds;
};

TabulationTrace tabulation_trace(const FunctionSpec& spec, Engine engine);

}  // namespace qm
