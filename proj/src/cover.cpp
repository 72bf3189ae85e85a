#include "qm/cover.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace qm {

namespace {

// Minimal dynamic bitset for row subsets and column coverage; charts can be
// wider than one machine word.
class BitVec {
public:
  explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void merge(const BitVec& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] |= other.words_[w];
    }
  }

  std::size_t lowest_set() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) {
        return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
      }
    }
    return bits_;
  }

  // true iff other is a subset of *this
  bool contains(const BitVec& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (other.words_[w] & ~words_[w]) {
        return false;
      }
    }
    return true;
  }

  int count() const {
    int total = 0;
    for (std::uint64_t w : words_) {
      total += std::popcount(w);
    }
    return total;
  }

  bool all() const { return static_cast<std::size_t>(count()) == bits_; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_; ++i) {
      if (test(i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec& a, const BitVec& b) { return a.words_ <=> b.words_; }

private:
  std::size_t bits_;
  std::vector<std::uint64_t> words_;
};

int rows_literal_count(const Chart& chart, const std::vector<std::size_t>& rows) {
  int lits = 0;
  for (std::size_t r : rows) {
    lits += literal_count(chart.rows[r].cube);
  }
  return lits;
}

std::vector<CoverSolution> collect_minimum(const Chart& chart, std::vector<BitVec> covers) {
  std::vector<CoverSolution> solutions;
  std::pair<int, int> best{-1, -1};
  for (const BitVec& cover : covers) {
    CoverSolution sol;
    sol.chosen = cover.indices();
    sol.term_count = static_cast<int>(sol.chosen.size());
    sol.literal_count = rows_literal_count(chart, sol.chosen);
    const std::pair<int, int> cost{sol.term_count, sol.literal_count};
    if (best.first < 0 || cost < best) {
      best = cost;
      solutions.clear();
    }
    if (cost == best) {
      solutions.push_back(std::move(sol));
    }
  }
  std::sort(solutions.begin(), solutions.end(),
            [](const CoverSolution& a, const CoverSolution& b) { return a.chosen < b.chosen; });
  return solutions;
}

}  // namespace

Chart build_chart(const std::vector<PrimeImplicant>& pis, const FunctionSpec& spec) {
  validate_spec(spec);
  Chart chart;
  chart.rows = pis;
  chart.row_ids.resize(pis.size());
  std::iota(chart.row_ids.begin(), chart.row_ids.end(), std::size_t{0});
  chart.cols = spec.on_set;
  chart.incidence.reserve(pis.size());
  for (const PrimeImplicant& pi : pis) {
    std::vector<bool> row(chart.cols.size(), false);
    for (std::size_t c = 0; c < chart.cols.size(); ++c) {
      row[c] = cube_contains(pi.cube, chart.cols[c]);
    }
    chart.incidence.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < chart.cols.size(); ++c) {
    bool covered = false;
    for (std::size_t r = 0; r < chart.rows.size() && !covered; ++r) {
      covered = chart.incidence[r][c];
    }
    if (!covered) {
      throw error(errc::internal_consistency,
                  "on-set minterm " + std::to_string(chart.cols[c]) +
                      " is covered by no prime implicant");
    }
  }
  return chart;
}

std::vector<std::size_t> essential_prime_implicants(const Chart& chart) {
  std::vector<std::size_t> essentials;
  for (std::size_t c = 0; c < chart.cols.size(); ++c) {
    std::size_t hits = 0;
    std::size_t last = 0;
    for (std::size_t r = 0; r < chart.rows.size(); ++r) {
      if (chart.incidence[r][c]) {
        ++hits;
        last = r;
      }
    }
    if (hits == 1) {
      essentials.push_back(last);
    }
  }
  std::sort(essentials.begin(), essentials.end());
  essentials.erase(std::unique(essentials.begin(), essentials.end()), essentials.end());
  return essentials;
}

Chart reduce_chart(const Chart& chart, const std::vector<std::size_t>& essentials) {
  std::vector<bool> essential_row(chart.rows.size(), false);
  for (std::size_t r : essentials) {
    essential_row[r] = true;
  }

  std::vector<std::size_t> kept_cols;
  for (std::size_t c = 0; c < chart.cols.size(); ++c) {
    bool covered = false;
    for (std::size_t r : essentials) {
      if (chart.incidence[r][c]) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      kept_cols.push_back(c);
    }
  }

  Chart residual;
  for (std::size_t c : kept_cols) {
    residual.cols.push_back(chart.cols[c]);
  }
  for (std::size_t r = 0; r < chart.rows.size(); ++r) {
    if (essential_row[r]) {
      continue;
    }
    std::vector<bool> row(kept_cols.size(), false);
    bool useful = false;
    for (std::size_t k = 0; k < kept_cols.size(); ++k) {
      row[k] = chart.incidence[r][kept_cols[k]];
      useful = useful || row[k];
    }
    if (useful) {
      residual.rows.push_back(chart.rows[r]);
      residual.row_ids.push_back(chart.row_ids[r]);
      residual.incidence.push_back(std::move(row));
    }
  }
  return residual;
}

std::vector<CoverSolution> petrick_minimal_covers(const Chart& residual,
                                                  std::size_t node_budget) {
  const std::size_t num_rows = residual.rows.size();
  if (residual.cols.empty()) {
    return {CoverSolution{}};
  }

  std::vector<std::vector<std::size_t>> covering(residual.cols.size());
  for (std::size_t c = 0; c < residual.cols.size(); ++c) {
    for (std::size_t r = 0; r < num_rows; ++r) {
      if (residual.incidence[r][c]) {
        covering[c].push_back(r);
      }
    }
    if (covering[c].empty()) {
      throw error(errc::internal_consistency,
                  "chart column " + std::to_string(residual.cols[c]) + " has no covering row");
    }
  }

  // multiply scarce columns first to keep the intermediate products small
  std::vector<std::size_t> col_order(residual.cols.size());
  std::iota(col_order.begin(), col_order.end(), std::size_t{0});
  std::sort(col_order.begin(), col_order.end(), [&covering](std::size_t a, std::size_t b) {
    return covering[a].size() != covering[b].size() ? covering[a].size() < covering[b].size()
                                                    : a < b;
  });

  // pairwise row-disjoint columns each need their own row
  std::size_t lower_bound = 0;
  {
    std::vector<bool> used(num_rows, false);
    for (std::size_t c : col_order) {
      if (std::none_of(covering[c].begin(), covering[c].end(),
                       [&used](std::size_t r) { return used[r]; })) {
        for (std::size_t r : covering[c]) {
          used[r] = true;
        }
        ++lower_bound;
      }
    }
  }

  // Deepening on the term count: a run pruned to <= bound keeps every
  // minimal cover of that size or less, so the first bound that yields any
  // cover yields all minimum ones.
  std::size_t nodes_expanded = 0;
  for (std::size_t bound = std::max<std::size_t>(lower_bound, 1); bound <= num_rows; ++bound) {
    std::vector<BitVec> terms{BitVec(num_rows)};
    for (std::size_t c : col_order) {
      // a term already covering this column absorbs its products (x + xy = x)
      std::size_t expanding = 0;
      for (const BitVec& term : terms) {
        if (std::none_of(covering[c].begin(), covering[c].end(),
                         [&term](std::size_t r) { return term.test(r); })) {
          ++expanding;
        }
      }
      const std::size_t candidates =
          (terms.size() - expanding) + expanding * covering[c].size();
      nodes_expanded += candidates;
#ifdef QM_PETRICK_DEBUG
      std::fprintf(stderr, "bound=%zu col=%u terms=%zu cand=%zu nodes=%zu\n", bound,
                   residual.cols[c], terms.size(), candidates, nodes_expanded);
#endif
      if (nodes_expanded > node_budget) {
        throw error(errc::budget_exceeded,
                    "Petrick expansion reached " + std::to_string(nodes_expanded) +
                        " product terms, above the budget of " + std::to_string(node_budget) +
                        "; use exhaustive_min_cover instead");
      }

      struct FreshTerm {
        BitVec bits;
        std::size_t via_row;
      };
      std::vector<BitVec> unchanged;
      std::vector<FreshTerm> fresh;
      for (const BitVec& term : terms) {
        if (std::any_of(covering[c].begin(), covering[c].end(),
                        [&term](std::size_t r) { return term.test(r); })) {
          unchanged.push_back(term);
          continue;
        }
        if (static_cast<std::size_t>(term.count()) == bound) {
          continue;  // cannot grow any further at this bound
        }
        for (std::size_t r : covering[c]) {
          BitVec grown = term;
          grown.set(r);
          fresh.push_back({std::move(grown), r});
        }
      }
      std::sort(fresh.begin(), fresh.end(), [](const FreshTerm& a, const FreshTerm& b) {
        const int ca = a.bits.count();
        const int cb = b.bits.count();
        return ca != cb ? ca < cb : a.bits < b.bits;
      });
      fresh.erase(std::unique(fresh.begin(), fresh.end(),
                              [](const FreshTerm& a, const FreshTerm& b) { return a.bits == b.bits; }),
                  fresh.end());

      // Absorption (a term containing a smaller one is redundant). The
      // unchanged terms are mutually minimal already, and any absorber of a
      // fresh term T u {r} must contain r itself (it cannot sit inside T:
      // the previous terms form an antichain), so the subset tests run over
      // per-covering-row buckets.
      const std::size_t num_covering = covering[c].size();
      std::vector<std::size_t> covering_slot(num_rows, num_covering);
      for (std::size_t k = 0; k < num_covering; ++k) {
        covering_slot[covering[c][k]] = k;
      }
      std::vector<std::vector<const BitVec*>> unchanged_with_row(num_covering);
      for (const BitVec& term : unchanged) {
        for (std::size_t k = 0; k < num_covering; ++k) {
          if (term.test(covering[c][k])) {
            unchanged_with_row[k].push_back(&term);
          }
        }
      }
      std::vector<BitVec> kept_fresh;
      kept_fresh.reserve(fresh.size());
      std::vector<std::vector<std::size_t>> fresh_with_row(num_covering);
      for (FreshTerm& candidate : fresh) {
        const std::size_t slot = covering_slot[candidate.via_row];
        bool absorbed = false;
        for (const BitVec* a : unchanged_with_row[slot]) {
          if (candidate.bits.contains(*a)) {
            absorbed = true;
            break;
          }
        }
        for (std::size_t i = 0; !absorbed && i < fresh_with_row[slot].size(); ++i) {
          if (candidate.bits.contains(kept_fresh[fresh_with_row[slot][i]])) {
            absorbed = true;
          }
        }
        if (!absorbed) {
          for (std::size_t k = 0; k < num_covering; ++k) {
            if (candidate.bits.test(covering[c][k])) {
              fresh_with_row[k].push_back(kept_fresh.size());
            }
          }
          kept_fresh.push_back(std::move(candidate.bits));
        }
      }

      std::vector<BitVec> next;
      next.reserve(unchanged.size() + kept_fresh.size());
      for (BitVec& term : unchanged) {
        // a fresh absorber of an unchanged term contains its own via-row,
        // which the unchanged term must share, so one shared slot suffices
        bool absorbed = false;
        for (std::size_t k = 0; k < num_covering && !absorbed; ++k) {
          if (!term.test(covering[c][k])) {
            continue;
          }
          for (std::size_t idx : fresh_with_row[k]) {
            if (term.contains(kept_fresh[idx])) {
              absorbed = true;
              break;
            }
          }
        }
        if (!absorbed) {
          next.push_back(std::move(term));
        }
      }
      for (BitVec& term : kept_fresh) {
        next.push_back(std::move(term));
      }
      terms = std::move(next);
      if (terms.empty()) {
        break;  // no partial cover of size <= bound survives
      }
    }
    if (!terms.empty()) {
      return collect_minimum(residual, std::move(terms));
    }
  }
  throw error(errc::internal_consistency, "Petrick expansion lost every cover candidate");
}

std::vector<CoverSolution> exhaustive_min_cover(const Chart& residual) {
  const std::size_t num_rows = residual.rows.size();
  if (num_rows > 32) {
    throw error(errc::row_limit, "power-set cover search limited to 32 rows, chart has " +
                                     std::to_string(num_rows));
  }
  if (residual.cols.empty()) {
    return {CoverSolution{}};
  }

  const std::size_t num_cols = residual.cols.size();
  std::vector<BitVec> row_cols(num_rows, BitVec(num_cols));
  for (std::size_t r = 0; r < num_rows; ++r) {
    for (std::size_t c = 0; c < num_cols; ++c) {
      if (residual.incidence[r][c]) {
        row_cols[r].set(c);
      }
    }
  }

  const std::uint64_t limit = std::uint64_t{1} << num_rows;
  for (std::size_t k = 1; k <= num_rows; ++k) {
    std::vector<BitVec> covers;
    std::uint64_t subset = (std::uint64_t{1} << k) - 1;
    while (subset < limit) {
      BitVec covered(num_cols);
      for (std::size_t r = 0; r < num_rows; ++r) {
        if ((subset >> r) & 1u) {
          covered.merge(row_cols[r]);
        }
      }
      if (covered.all()) {
        BitVec rows(num_rows);
        for (std::size_t r = 0; r < num_rows; ++r) {
          if ((subset >> r) & 1u) {
            rows.set(r);
          }
        }
        covers.push_back(std::move(rows));
      }
      // Gosper's hack: next subset of the same size
      const std::uint64_t low = subset & (~subset + 1);
      const std::uint64_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
    if (!covers.empty()) {
      return collect_minimum(residual, std::move(covers));
    }
  }
  throw error(errc::internal_consistency, "no row subset covers the chart");
}

MinimizationResult minimize(const FunctionSpec& spec, const MinimizeOptions& options) {
  validate_spec(spec);
  MinimizationResult result;

  if (spec.on_set.empty()) {
    result.constant = 0;
    result.solutions = {CoverSolution{}};
    result.chosen = result.solutions.front();
    result.unique = true;
    return result;
  }

  const std::uint64_t domain = std::uint64_t{1} << spec.num_vars;
  if (spec.on_set.size() + spec.dc_set.size() == domain) {
    result.constant = 1;
    const Cube all_dash{spec.num_vars, 0u, (1u << spec.num_vars) - 1u};
    result.pis = {PrimeImplicant{all_dash, cube_minterms(all_dash)}};
    result.essentials = {0};
    result.solutions = {CoverSolution{{0}, 1, 0}};
    result.chosen = result.solutions.front();
    result.unique = true;
    return result;
  }

  result.pis = options.engine == Engine::decimal ? prime_implicants_decimal(spec)
                                                 : prime_implicants_binary(spec);
  if (options.cross_check_engines) {
    const auto other = options.engine == Engine::decimal ? prime_implicants_binary(spec)
                                                         : prime_implicants_decimal(spec);
    if (other != result.pis) {
      throw error(errc::internal_consistency,
                  "binary and decimal tabulation engines disagree on the prime implicant set");
    }
  }

  const Chart chart = build_chart(result.pis, spec);
  result.essentials = essential_prime_implicants(chart);
  const Chart residual = reduce_chart(chart, result.essentials);
  const auto residual_solutions = petrick_minimal_covers(residual, options.petrick_node_budget);

  result.solutions.reserve(residual_solutions.size());
  for (const CoverSolution& rsol : residual_solutions) {
    CoverSolution full;
    full.chosen = result.essentials;
    for (std::size_t r : rsol.chosen) {
      full.chosen.push_back(residual.row_ids[r]);
    }
    std::sort(full.chosen.begin(), full.chosen.end());
    full.term_count = static_cast<int>(full.chosen.size());
    for (std::size_t r : full.chosen) {
      full.literal_count += literal_count(result.pis[r].cube);
    }
    result.solutions.push_back(std::move(full));
  }
  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const CoverSolution& a, const CoverSolution& b) { return a.chosen < b.chosen; });
  result.chosen = result.solutions.front();
  result.unique = result.solutions.size() == 1;
  return result;
}

}  // namespace qm
