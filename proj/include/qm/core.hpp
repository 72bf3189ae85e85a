#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qm {

enum class errc {
  invalid_minterm,
  incompatible_cube,
  render_mismatch,
  invalid_spec,
  empty_function,
  parse,
  internal_consistency,
  budget_exceeded,
  row_limit,
  oracle_limit,
};

// Library errors carry a machine-checkable code next to the message so
// callers (and the CLI exit-status mapping) can branch without string
// matching.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& message) : std::runtime_error(message), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

inline constexpr int kMaxVars = 24;

// A product term over `width` variables, stored as two bit codes. Bit i
// carries the literal of the variable with weight 2^i; a set bit in `mask`
// marks that position as a dash. Dashed positions are normalized to 0 in
// `value`, so cubes compare and deduplicate by plain (value, mask) equality.
struct Cube {
  int width = 0;
  std::uint32_t value = 0;
  std::uint32_t mask = 0;

  friend bool operator==(const Cube&, const Cube&) = default;
};

// The problem instance: on-set and don't-care set over `num_vars` variables.
// Minterm lists are strictly increasing and disjoint; var_names[0] names the
// most significant variable (weight 2^(n-1)).
struct FunctionSpec {
  int num_vars = 0;
  std::vector<std::uint32_t> on_set;
  std::vector<std::uint32_t> dc_set;
  std::string var_names;

  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;
};

// A maximal cube together with the on/dc minterms it covers (ascending).
struct PrimeImplicant {
  Cube cube;
  std::vector<std::uint32_t> covered;

  friend bool operator==(const PrimeImplicant&, const PrimeImplicant&) = default;
};

int popcount(std::uint32_t code);

// Non-dash position count: width - popcount(mask).
int literal_count(const Cube& c);

Cube minterm_to_cube(std::uint32_t m, int width);

// Merges two cubes that carry identical dash sets and differ in exactly one
// literal; returns the cube with that position dashed, or nothing.
std::optional<Cube> combine(const Cube& a, const Cube& b);

bool cube_contains(const Cube& c, std::uint32_t m);

// All minterms matched by the cube, ascending; 2^popcount(mask) entries.
std::vector<std::uint32_t> cube_minterms(const Cube& c);

// "BD", "AC'D", ...; a 0 literal is written as the variable name followed
// by '. The all-dash cube renders as "1".
std::string render_product(const Cube& c, const std::string& names);

// "01-1" pattern, most significant variable first.
std::string cube_bits(const Cube& c);

// True iff any cube contains m. The empty cover is constant 0.
bool evaluate_cover(const std::vector<Cube>& cubes, std::uint32_t m);

std::string default_var_names(int num_vars);

// Sorts and deduplicates the minterm lists, applies default names when none
// are given, and validates the result.
FunctionSpec make_spec(int num_vars, std::vector<std::uint32_t> on_set,
                       std::vector<std::uint32_t> dc_set = {}, std::string var_names = {});

void validate_spec(const FunctionSpec& spec);

}  // namespace qm
