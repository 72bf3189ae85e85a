#include "qm/core.hpp"

#include <algorithm>
#include <bit>

namespace qm {

namespace {

std::uint32_t domain_size(int width) { return 1u << width; }

void check_width(int width) {
  if (width < 1 || width > kMaxVars) {
    throw error(errc::invalid_spec, "variable count must be between 1 and " +
                                        std::to_string(kMaxVars) + ", got " +
                                        std::to_string(width));
  }
}

void check_minterm(std::uint32_t m, int width) {
  if (m >= domain_size(width)) {
    throw error(errc::invalid_minterm, "minterm " + std::to_string(m) + " out of range for " +
                                           std::to_string(width) + " variables");
  }
}

}  // namespace

int popcount(std::uint32_t code) { return std::popcount(code); }

int literal_count(const Cube& c) { return c.width - std::popcount(c.mask); }

Cube minterm_to_cube(std::uint32_t m, int width) {
  check_width(width);
  check_minterm(m, width);
  return Cube{width, m, 0u};
}

std::optional<Cube> combine(const Cube& a, const Cube& b) {
  if (a.width != b.width) {
    throw error(errc::incompatible_cube, "cannot combine cubes of widths " +
                                             std::to_string(a.width) + " and " +
                                             std::to_string(b.width));
  }
  if (a.mask != b.mask) {
    return std::nullopt;
  }
  const std::uint32_t diff = a.value ^ b.value;
  if (std::popcount(diff) != 1) {
    return std::nullopt;
  }
  return Cube{a.width, a.value & b.value, a.mask | diff};
}

bool cube_contains(const Cube& c, std::uint32_t m) {
  check_minterm(m, c.width);
  return (m & ~c.mask) == c.value;
}

std::vector<std::uint32_t> cube_minterms(const Cube& c) {
  std::vector<std::uint32_t> out;
  out.reserve(1u << std::popcount(c.mask));
  // walk submasks of the dash set from full to empty, then flip to ascending
  std::uint32_t s = c.mask;
  while (true) {
    out.push_back(c.value | s);
    if (s == 0) {
      break;
    }
    s = (s - 1) & c.mask;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string render_product(const Cube& c, const std::string& names) {
  if (static_cast<int>(names.size()) != c.width) {
    throw error(errc::render_mismatch, "expected " + std::to_string(c.width) +
                                           " variable names, got " + std::to_string(names.size()));
  }
  if (std::popcount(c.mask) == c.width) {
    return "1";
  }
  std::string out;
  for (int j = 0; j < c.width; ++j) {
    const int bit = c.width - 1 - j;
    if ((c.mask >> bit) & 1u) {
      continue;
    }
    out += names[j];
    if (((c.value >> bit) & 1u) == 0u) {
      out += '\'';
    }
  }
  return out;
}

std::string cube_bits(const Cube& c) {
  std::string out(static_cast<std::size_t>(c.width), '0');
  for (int j = 0; j < c.width; ++j) {
    const int bit = c.width - 1 - j;
    if ((c.mask >> bit) & 1u) {
      out[j] = '-';
    } else if ((c.value >> bit) & 1u) {
      out[j] = '1';
    }
  }
  return out;
}

bool evaluate_cover(const std::vector<Cube>& cubes, std::uint32_t m) {
  if (cubes.empty()) {
    return false;
  }
  const int width = cubes.front().width;
  for (const Cube& c : cubes) {
    if (c.width != width) {
      throw error(errc::incompatible_cube, "mixed cube widths in cover");
    }
  }
  check_minterm(m, width);
  return std::any_of(cubes.begin(), cubes.end(),
                     [m](const Cube& c) { return (m & ~c.mask) == c.value; });
}

std::string default_var_names(int num_vars) {
  check_width(num_vars);
  std::string names;
  for (int i = 0; i < num_vars; ++i) {
    names += static_cast<char>('A' + i);
  }
  return names;
}

FunctionSpec make_spec(int num_vars, std::vector<std::uint32_t> on_set,
                       std::vector<std::uint32_t> dc_set, std::string var_names) {
  check_width(num_vars);
  auto normalize = [](std::vector<std::uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  normalize(on_set);
  normalize(dc_set);
  FunctionSpec spec{num_vars, std::move(on_set), std::move(dc_set),
                    var_names.empty() ? default_var_names(num_vars) : std::move(var_names)};
  validate_spec(spec);
  return spec;
}

void validate_spec(const FunctionSpec& spec) {
  check_width(spec.num_vars);
  const std::uint32_t domain = domain_size(spec.num_vars);
  auto check_sorted = [&](const std::vector<std::uint32_t>& v, const char* which) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] >= domain) {
        throw error(errc::invalid_minterm, std::string(which) + " minterm " +
                                               std::to_string(v[i]) + " out of range");
      }
      if (i > 0 && v[i - 1] >= v[i]) {
        throw error(errc::invalid_spec,
                    std::string(which) + " set must be strictly increasing");
      }
    }
  };
  check_sorted(spec.on_set, "on");
  check_sorted(spec.dc_set, "dc");
  std::vector<std::uint32_t> both;
  std::set_intersection(spec.on_set.begin(), spec.on_set.end(), spec.dc_set.begin(),
                        spec.dc_set.end(), std::back_inserter(both));
  if (!both.empty()) {
    throw error(errc::invalid_spec,
                "minterm " + std::to_string(both.front()) + " is in both on-set and dc-set");
  }
  if (static_cast<int>(spec.var_names.size()) != spec.num_vars) {
    throw error(errc::invalid_spec, "expected " + std::to_string(spec.num_vars) +
                                        " variable names, got " +
                                        std::to_string(spec.var_names.size()));
  }
  std::string sorted_names = spec.var_names;
  std::sort(sorted_names.begin(), sorted_names.end());
  if (std::adjacent_find(sorted_names.begin(), sorted_names.end()) != sorted_names.end()) {
    throw error(errc::invalid_spec, "variable names must be distinct");
  }
}

}  // namespace qm
