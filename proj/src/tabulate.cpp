#include "qm/tabulate.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <utility>

namespace qm {

namespace {

std::vector<std::uint32_t> care_set(const FunctionSpec& spec) {
  std::vector<std::uint32_t> care;
  care.reserve(spec.on_set.size() + spec.dc_set.size());
  std::merge(spec.on_set.begin(), spec.on_set.end(), spec.dc_set.begin(), spec.dc_set.end(),
             std::back_inserter(care));
  return care;
}

// Deterministic engine output order: most-dashed cubes first, then value,
// then mask as the final tie-break.
bool cube_order(const Cube& a, const Cube& b) {
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

std::vector<PrimeImplicant> finalize_pis(std::vector<Cube> cubes) {
  std::sort(cubes.begin(), cubes.end(), cube_order);
  std::vector<PrimeImplicant> pis;
  pis.reserve(cubes.size());
  for (const Cube& c : cubes) {
    pis.push_back(PrimeImplicant{c, cube_minterms(c)});
  }
  return pis;
}

struct BinaryRun {
  std::vector<PrimeImplicant> pis;
  TabulationTrace trace;
};

BinaryRun run_binary(const FunctionSpec& spec) {
  validate_spec(spec);
  const auto care = care_set(spec);
  if (care.empty()) {
    throw error(errc::empty_function, "on-set and dc-set are both empty");
  }

  struct Row {
    Cube cube;
    std::string label;
    bool checked = false;
  };
  std::vector<Row> items;
  items.reserve(care.size());
  for (std::uint32_t m : care) {
    items.push_back({minterm_to_cube(m, spec.num_vars), std::to_string(m)});
  }

  BinaryRun run;
  run.trace.engine = Engine::binary;
  std::set<std::pair<std::uint32_t, std::uint32_t>> pi_seen;
  std::vector<Cube> pi_cubes;

  while (!items.empty()) {
    std::vector<std::vector<std::size_t>> groups(spec.num_vars + 1);
    for (std::size_t i = 0; i < items.size(); ++i) {
      groups[popcount(items[i].cube.value)].push_back(i);
    }

    std::vector<Row> next;
    std::set<std::pair<std::uint32_t, std::uint32_t>> next_seen;
    for (int g = 0; g < spec.num_vars; ++g) {
      for (std::size_t i : groups[g]) {
        for (std::size_t j : groups[g + 1]) {
          const auto merged = combine(items[i].cube, items[j].cube);
          if (!merged) {
            continue;
          }
          items[i].checked = true;
          items[j].checked = true;
          if (next_seen.insert({merged->value, merged->mask}).second) {
            const char* sep = items[i].cube.mask == 0 ? "," : "-";
            next.push_back({*merged, items[i].label + sep + items[j].label});
          }
        }
      }
    }

    TraceRound round;
    for (int g = 0; g <= spec.num_vars; ++g) {
      if (groups[g].empty()) {
        continue;
      }
      TraceGroup group{g, {}};
      for (std::size_t i : groups[g]) {
        group.rows.push_back({items[i].cube, items[i].checked, items[i].label});
      }
      round.groups.push_back(std::move(group));
    }
    run.trace.rounds.push_back(std::move(round));

    for (const Row& row : items) {
      if (!row.checked && pi_seen.insert({row.cube.value, row.cube.mask}).second) {
        pi_cubes.push_back(row.cube);
      }
    }
    items = std::move(next);
  }

  run.pis = finalize_pis(std::move(pi_cubes));
  return run;
}

struct DecimalRun {
  std::vector<PrimeImplicant> pis;
  std::vector<std::vector<DecimalGroupEntry>> rounds;
};

DecimalRun run_decimal(const FunctionSpec& spec) {
  validate_spec(spec);
  const auto care = care_set(spec);
  if (care.empty()) {
    throw error(errc::empty_function, "on-set and dc-set are both empty");
  }

  std::vector<DecimalGroupEntry> items;
  items.reserve(care.size());
  for (std::uint32_t m : care) {
    items.push_back({{m}, {}, false, std::to_string(m)});
  }

  DecimalRun run;
  std::set<std::pair<std::uint32_t, std::uint32_t>> pi_seen;
  std::vector<Cube> pi_cubes;

  while (!items.empty()) {
    std::vector<std::vector<std::size_t>> groups(spec.num_vars + 1);
    for (std::size_t i = 0; i < items.size(); ++i) {
      groups[popcount(items[i].minterms.front())].push_back(i);
    }

    std::vector<DecimalGroupEntry> next;
    std::set<std::pair<std::uint32_t, std::uint32_t>> next_seen;
    for (int g = 0; g < spec.num_vars; ++g) {
      for (std::size_t i : groups[g]) {
        for (std::size_t j : groups[g + 1]) {
          DecimalGroupEntry& lo = items[i];
          DecimalGroupEntry& hi = items[j];
          if (lo.diffs != hi.diffs) {
            continue;
          }
          const std::uint32_t base_lo = lo.minterms.front();
          const std::uint32_t base_hi = hi.minterms.front();
          if (base_hi <= base_lo) {
            continue;
          }
          const std::uint32_t p = base_hi - base_lo;
          if (!std::has_single_bit(p)) {
            continue;
          }
          if (std::binary_search(lo.diffs.begin(), lo.diffs.end(), p)) {
            continue;
          }
          if ((base_lo & p) != 0u) {
            continue;
          }
          // the merged minterm set must be exactly the union: every upper
          // minterm sits p above its lower counterpart
          bool aligned = lo.minterms.size() == hi.minterms.size();
          for (std::size_t k = 0; aligned && k < lo.minterms.size(); ++k) {
            aligned = hi.minterms[k] == lo.minterms[k] + p;
          }
          if (!aligned) {
            continue;
          }

          lo.checked = true;
          hi.checked = true;
          std::uint32_t merged_mask = p;
          for (std::uint32_t d : lo.diffs) {
            merged_mask |= d;
          }
          if (!next_seen.insert({base_lo, merged_mask}).second) {
            continue;
          }
          DecimalGroupEntry merged;
          merged.minterms.reserve(lo.minterms.size() * 2);
          std::merge(lo.minterms.begin(), lo.minterms.end(), hi.minterms.begin(),
                     hi.minterms.end(), std::back_inserter(merged.minterms));
          merged.diffs = lo.diffs;
          merged.diffs.insert(std::upper_bound(merged.diffs.begin(), merged.diffs.end(), p), p);
          const char* sep = lo.minterms.size() == 1 ? "," : "-";
          merged.label = lo.label + sep + hi.label;
          next.push_back(std::move(merged));
        }
      }
    }

    std::vector<DecimalGroupEntry> round;
    for (int g = 0; g <= spec.num_vars; ++g) {
      for (std::size_t i : groups[g]) {
        round.push_back(items[i]);
      }
    }
    run.rounds.push_back(std::move(round));

    for (const DecimalGroupEntry& entry : items) {
      if (!entry.checked) {
        const Cube c = decimal_entry_cube(entry, spec.num_vars);
        if (pi_seen.insert({c.value, c.mask}).second) {
          pi_cubes.push_back(c);
        }
      }
    }
    items = std::move(next);
  }

  run.pis = finalize_pis(std::move(pi_cubes));
  return run;
}

}  // namespace

std::vector<std::vector<Cube>> group_by_ones(const std::vector<Cube>& cubes) {
  if (cubes.empty()) {
    return {};
  }
  const int width = cubes.front().width;
  int max_ones = 0;
  for (const Cube& c : cubes) {
    if (c.width != width) {
      throw error(errc::incompatible_cube, "mixed cube widths in grouping");
    }
    max_ones = std::max(max_ones, popcount(c.value));
  }
  std::vector<std::vector<Cube>> groups(max_ones + 1);
  for (const Cube& c : cubes) {
    groups[popcount(c.value)].push_back(c);
  }
  return groups;
}

std::vector<PrimeImplicant> prime_implicants_binary(const FunctionSpec& spec) {
  return run_binary(spec).pis;
}

std::vector<PrimeImplicant> prime_implicants_decimal(const FunctionSpec& spec) {
  return run_decimal(spec).pis;
}

Cube decimal_entry_cube(const DecimalGroupEntry& entry, int width) {
  if (entry.minterms.empty()) {
    throw error(errc::invalid_spec, "decimal group entry has no minterms");
  }
  std::uint32_t mask = 0;
  for (std::uint32_t d : entry.diffs) {
    mask |= d;
  }
  return Cube{width, entry.minterms.front(), mask};
}

std::vector<std::vector<DecimalGroupEntry>> decimal_tabulation_rounds(const FunctionSpec& spec) {
  return run_decimal(spec).rounds;
}

TabulationTrace tabulation_trace(const FunctionSpec& spec, Engine engine) {
  if (engine == Engine::binary) {
    return run_binary(spec).trace;
  }
  TabulationTrace trace;
  trace.engine = Engine::decimal;
  for (const auto& round : run_decimal(spec).rounds) {
    TraceRound tr;
    for (const DecimalGroupEntry& entry : round) {
      const Cube c = decimal_entry_cube(entry, spec.num_vars);
      const int ones = popcount(c.value);
      if (tr.groups.empty() || tr.groups.back().ones != ones) {
        tr.groups.push_back({ones, {}});
      }
      tr.groups.back().rows.push_back({c, entry.checked, entry.label});
    }
    trace.rounds.push_back(std::move(tr));
  }
  return trace;
}

}  // namespace qm
