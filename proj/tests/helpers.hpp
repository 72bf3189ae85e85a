#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qm/core.hpp"

namespace qmtest {

// Builds a cube from its pattern string, MSB first; '-', 'x' and 'X' all
// mean dash.
inline qm::Cube cube(const std::string& pattern) {
  qm::Cube c{static_cast<int>(pattern.size()), 0u, 0u};
  for (std::size_t j = 0; j < pattern.size(); ++j) {
    const std::uint32_t bit = 1u << (pattern.size() - 1 - j);
    if (pattern[j] == '1') {
      c.value |= bit;
    } else if (pattern[j] == '-' || pattern[j] == 'x' || pattern[j] == 'X') {
      c.mask |= bit;
    }
  }
  return c;
}

inline std::vector<qm::Cube> cubes_of(const std::vector<qm::PrimeImplicant>& pis) {
  std::vector<qm::Cube> out;
  out.reserve(pis.size());
  for (const auto& pi : pis) {
    out.push_back(pi.cube);
  }
  return out;
}

// Random function over n variables; each minterm lands in the on-set with
// probability p_on and in the dc-set with probability p_dc.
inline qm::FunctionSpec random_spec(std::mt19937& rng, int n, double p_on, double p_dc = 0.0) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<std::uint32_t> on;
  std::vector<std::uint32_t> dc;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    const double r = dist(rng);
    if (r < p_on) {
      on.push_back(m);
    } else if (r < p_on + p_dc) {
      dc.push_back(m);
    }
  }
  return qm::make_spec(n, std::move(on), std::move(dc));
}

// Runs f and reports the qm error code it threw, if any.
template <typename F>
std::optional<qm::errc> thrown_errc(F&& f) {
  try {
    f();
  } catch (const qm::error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace qmtest
