#include "qm/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace qm {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) {
    lines.push_back(current);
  }
  for (std::string& line : lines) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
  }
  return lines;
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    tokens.push_back(tok);
  }
  return tokens;
}

std::uint32_t parse_number(const std::string& token, std::uint64_t limit, const char* what) {
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](unsigned char ch) { return std::isdigit(ch); })) {
    throw error(errc::parse, std::string(what) + " '" + token + "' is not a decimal number");
  }
  std::uint64_t value = 0;
  for (char ch : token) {
    value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    if (value >= limit) {
      throw error(errc::parse, std::string(what) + " " + token + " out of range (< " +
                                   std::to_string(limit) + ")");
    }
  }
  return static_cast<std::uint32_t>(value);
}

std::vector<std::uint32_t> parse_minterm_tokens(const std::string& text, std::uint64_t limit) {
  std::vector<std::uint32_t> out;
  for (const std::string& tok : split_tokens(text)) {
    out.push_back(parse_number(tok, limit, "minterm"));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_num_vars(int num_vars) {
  if (num_vars < 1 || num_vars > kMaxVars) {
    throw error(errc::parse, "variable count must be between 1 and " + std::to_string(kMaxVars) +
                                 ", got " + std::to_string(num_vars));
  }
}

// Chosen cubes in display order: most specific terms first, as in the worked
// tabulation tables (fewest dashes, then value, then mask).
std::vector<Cube> display_cubes(const MinimizationResult& result) {
  std::vector<Cube> cubes;
  cubes.reserve(result.chosen.chosen.size());
  for (std::size_t r : result.chosen.chosen) {
    cubes.push_back(result.pis[r].cube);
  }
  std::sort(cubes.begin(), cubes.end(), [](const Cube& a, const Cube& b) {
    const int da = popcount(a.mask);
    const int db = popcount(b.mask);
    if (da != db) {
      return da < db;
    }
    if (a.value != b.value) {
      return a.value < b.value;
    }
    return a.mask < b.mask;
  });
  return cubes;
}

std::string expression_of(const std::vector<std::size_t>& rows,
                          const std::vector<PrimeImplicant>& pis, const FunctionSpec& spec) {
  std::vector<Cube> cubes;
  cubes.reserve(rows.size());
  for (std::size_t r : rows) {
    cubes.push_back(pis[r].cube);
  }
  std::sort(cubes.begin(), cubes.end(), [](const Cube& a, const Cube& b) {
    const int da = popcount(a.mask);
    const int db = popcount(b.mask);
    if (da != db) {
      return da < db;
    }
    if (a.value != b.value) {
      return a.value < b.value;
    }
    return a.mask < b.mask;
  });
  std::string out;
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    if (i > 0) {
      out += " + ";
    }
    out += render_product(cubes[i], spec.var_names);
  }
  return out;
}

std::string join_minterms(const std::vector<std::uint32_t>& minterms) {
  std::string out;
  for (std::size_t i = 0; i < minterms.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(minterms[i]);
  }
  return out;
}

std::string pad_right(std::string s, std::size_t width) {
  while (s.size() < width) {
    s += ' ';
  }
  return s;
}

std::string pad_left(std::string s, std::size_t width) {
  while (s.size() < width) {
    s.insert(s.begin(), ' ');
  }
  return s;
}

std::string chart_section(const MinimizationResult& result, const FunctionSpec& spec) {
  const Chart chart = build_chart(result.pis, spec);
  std::set<std::size_t> essential(result.essentials.begin(), result.essentials.end());

  std::size_t label_width = 0;
  std::size_t product_width = 0;
  for (const PrimeImplicant& pi : chart.rows) {
    label_width = std::max(label_width, join_minterms(pi.covered).size());
    product_width = std::max(product_width, render_product(pi.cube, spec.var_names).size());
  }

  std::vector<std::size_t> col_widths;
  for (std::uint32_t m : chart.cols) {
    col_widths.push_back(std::to_string(m).size());
  }

  std::ostringstream out;
  out << "Prime implicant chart (* = essential):\n";
  out << "  " << pad_right("", 2 + label_width + 2 + spec.var_names.size() + 2 + product_width);
  for (std::size_t c = 0; c < chart.cols.size(); ++c) {
    out << "  " << std::to_string(chart.cols[c]);
  }
  out << "\n";
  for (std::size_t r = 0; r < chart.rows.size(); ++r) {
    const PrimeImplicant& pi = chart.rows[r];
    out << "  " << (essential.count(r) ? "* " : "  ")
        << pad_right(join_minterms(pi.covered), label_width) << "  " << cube_bits(pi.cube) << "  "
        << pad_right(render_product(pi.cube, spec.var_names), product_width);
    for (std::size_t c = 0; c < chart.cols.size(); ++c) {
      out << "  " << pad_left(chart.incidence[r][c] ? "X" : ".", col_widths[c]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

ParsedInput parse_minterm_list(int num_vars, const std::string& on_text,
                               const std::string& dc_text) {
  check_num_vars(num_vars);
  const std::uint64_t limit = std::uint64_t{1} << num_vars;
  auto on = parse_minterm_tokens(on_text, limit);
  auto dc = parse_minterm_tokens(dc_text, limit);
  std::vector<std::uint32_t> both;
  std::set_intersection(on.begin(), on.end(), dc.begin(), dc.end(), std::back_inserter(both));
  if (!both.empty()) {
    throw error(errc::parse, "minterm " + std::to_string(both.front()) +
                                 " listed as both on and don't-care");
  }
  ParsedInput parsed;
  parsed.spec = FunctionSpec{num_vars, std::move(on), std::move(dc), default_var_names(num_vars)};
  validate_spec(parsed.spec);
  parsed.source_format = SourceFormat::minterm_list;
  return parsed;
}

ParsedInput parse_truth_table(const std::vector<std::string>& rows) {
  std::vector<std::string> symbol_rows;
  for (const std::string& row : rows) {
    std::string symbols;
    for (char ch : row) {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        continue;
      }
      if (ch == '0' || ch == '1' || ch == 'X' || ch == 'x') {
        symbols += ch;
      } else {
        throw error(errc::parse, std::string("invalid truth table symbol '") + ch + "'");
      }
    }
    if (!symbols.empty()) {
      symbol_rows.push_back(std::move(symbols));
    }
  }
  if (symbol_rows.empty()) {
    throw error(errc::parse, "truth table has no rows");
  }
  const int num_vars = static_cast<int>(symbol_rows.front().size()) - 1;
  if (num_vars < 1) {
    throw error(errc::parse, "truth table rows need at least one input column");
  }
  check_num_vars(num_vars);

  // -1 unset (don't-care), otherwise the assigned output
  std::vector<signed char> state(std::size_t{1} << num_vars, -1);
  for (const std::string& row : symbol_rows) {
    if (static_cast<int>(row.size()) != num_vars + 1) {
      throw error(errc::parse, "ragged truth table row '" + row + "'");
    }
    const char out_symbol = row.back();
    if (out_symbol != '0' && out_symbol != '1') {
      throw error(errc::parse, "truth table output must be 0 or 1, got '" +
                                   std::string(1, out_symbol) + "'");
    }
    Cube pattern{num_vars, 0u, 0u};
    for (int j = 0; j < num_vars; ++j) {
      const std::uint32_t bit = 1u << (num_vars - 1 - j);
      if (row[j] == '1') {
        pattern.value |= bit;
      } else if (row[j] == 'X' || row[j] == 'x') {
        pattern.mask |= bit;
      }
    }
    const signed char out_value = out_symbol == '1' ? 1 : 0;
    for (std::uint32_t m : cube_minterms(pattern)) {
      if (state[m] >= 0 && state[m] != out_value) {
        throw error(errc::parse,
                    "conflicting outputs for minterm " + std::to_string(m));
      }
      state[m] = out_value;
    }
  }

  ParsedInput parsed;
  parsed.spec.num_vars = num_vars;
  parsed.spec.var_names = default_var_names(num_vars);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << num_vars); ++m) {
    if (state[m] == 1) {
      parsed.spec.on_set.push_back(m);
    } else if (state[m] < 0) {
      parsed.spec.dc_set.push_back(m);
    }
  }
  validate_spec(parsed.spec);
  parsed.source_format = SourceFormat::truth_table;
  return parsed;
}

ParsedInput parse_sop_expression(const std::string& text) {
  // anything in front of an optional equal sign is ignored
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '=') {
      start = i + 1;
    }
  }

  struct Literal {
    std::size_t var;
    bool complemented;
  };
  std::vector<std::vector<Literal>> products(1);
  std::string names;
  bool last_was_var = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      continue;
    }
    if (ch == '+') {
      if (products.back().empty()) {
        throw error(errc::parse, "empty product term in expression");
      }
      products.emplace_back();
      last_was_var = false;
    } else if (ch == '\'') {
      if (!last_was_var) {
        throw error(errc::parse, "complement mark ' must follow a variable");
      }
      products.back().back().complemented = true;
      last_was_var = false;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t idx = names.find(ch);
      if (idx == std::string::npos) {
        idx = names.size();
        names += ch;
      }
      products.back().push_back({idx, false});
      last_was_var = true;
    } else {
      throw error(errc::parse, std::string("illegal character '") + ch + "' in expression");
    }
  }
  if (names.empty()) {
    throw error(errc::parse, "empty expression");
  }
  if (products.back().empty()) {
    throw error(errc::parse, "empty product term in expression");
  }
  const int num_vars = static_cast<int>(names.size());
  check_num_vars(num_vars);

  std::set<std::uint32_t> on;
  for (const auto& product : products) {
    std::uint32_t value = 0;
    std::uint32_t cared = 0;
    bool contradiction = false;
    for (const Literal& lit : product) {
      const std::uint32_t bit = 1u << (num_vars - 1 - static_cast<int>(lit.var));
      const std::uint32_t desired = lit.complemented ? 0u : bit;
      if (cared & bit) {
        if ((value & bit) != desired) {
          contradiction = true;
          break;
        }
      } else {
        cared |= bit;
        value |= desired;
      }
    }
    if (contradiction) {
      continue;  // X and X' in one product match nothing
    }
    const std::uint32_t free_bits = ((1u << num_vars) - 1u) & ~cared;
    for (std::uint32_t m : cube_minterms(Cube{num_vars, value, free_bits})) {
      on.insert(m);
    }
  }

  ParsedInput parsed;
  parsed.spec.num_vars = num_vars;
  parsed.spec.on_set.assign(on.begin(), on.end());
  parsed.spec.var_names = names;
  validate_spec(parsed.spec);
  parsed.source_format = SourceFormat::expression;
  return parsed;
}

ParsedInput parse_pla(const std::string& text) {
  int num_vars = -1;
  bool saw_outputs = false;
  bool saw_end = false;
  std::vector<std::pair<Cube, char>> cubes;

  for (const std::string& line : split_lines(text)) {
    const auto tokens = split_tokens(line);
    if (tokens.empty()) {
      continue;
    }
    if (tokens.front().front() == '.') {
      const std::string& directive = tokens.front();
      if (directive == ".i") {
        if (num_vars >= 0) {
          throw error(errc::parse, "duplicate .i header");
        }
        if (tokens.size() != 2) {
          throw error(errc::parse, ".i expects one argument");
        }
        num_vars = static_cast<int>(parse_number(tokens[1], kMaxVars + 1, ".i value"));
        check_num_vars(num_vars);
      } else if (directive == ".o") {
        if (tokens.size() != 2 || tokens[1] != "1") {
          throw error(errc::parse, ".o must be 1 (single-output PLA)");
        }
        saw_outputs = true;
      } else if (directive == ".type") {
        if (tokens.size() != 2 || tokens[1] != "fr") {
          throw error(errc::parse, "only .type fr is supported");
        }
      } else if (directive == ".p") {
        if (tokens.size() != 2) {
          throw error(errc::parse, ".p expects one argument");
        }
        parse_number(tokens[1], std::uint64_t{1} << 32, ".p value");
      } else if (directive == ".e") {
        saw_end = true;
        break;
      } else {
        throw error(errc::parse, "unknown PLA directive '" + directive + "'");
      }
      continue;
    }
    if (num_vars < 0) {
      throw error(errc::parse, "cube line before .i header");
    }
    if (tokens.size() != 2 || static_cast<int>(tokens[0].size()) != num_vars ||
        tokens[1].size() != 1) {
      throw error(errc::parse, "malformed PLA cube line '" + line + "'");
    }
    Cube pattern{num_vars, 0u, 0u};
    for (int j = 0; j < num_vars; ++j) {
      const std::uint32_t bit = 1u << (num_vars - 1 - j);
      const char symbol = tokens[0][static_cast<std::size_t>(j)];
      if (symbol == '1') {
        pattern.value |= bit;
      } else if (symbol == '-') {
        pattern.mask |= bit;
      } else if (symbol != '0') {
        throw error(errc::parse, std::string("bad PLA input symbol '") + symbol + "'");
      }
    }
    const char out_symbol = tokens[1][0];
    if (out_symbol != '1' && out_symbol != '-') {
      throw error(errc::parse, std::string("bad PLA output symbol '") + out_symbol + "'");
    }
    cubes.emplace_back(pattern, out_symbol);
  }

  if (num_vars < 0) {
    throw error(errc::parse, "missing .i header");
  }
  if (!saw_outputs) {
    throw error(errc::parse, "missing .o header");
  }
  if (!saw_end) {
    throw error(errc::parse, "missing .e terminator");
  }

  // 0 = off, 1 = on, 2 = dc; the on-set wins over dc on overlap
  std::vector<signed char> state(std::size_t{1} << num_vars, 0);
  for (const auto& [pattern, out_symbol] : cubes) {
    for (std::uint32_t m : cube_minterms(pattern)) {
      if (out_symbol == '1') {
        state[m] = 1;
      } else if (state[m] == 0) {
        state[m] = 2;
      }
    }
  }

  ParsedInput parsed;
  parsed.spec.num_vars = num_vars;
  parsed.spec.var_names = default_var_names(num_vars);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << num_vars); ++m) {
    if (state[m] == 1) {
      parsed.spec.on_set.push_back(m);
    } else if (state[m] == 2) {
      parsed.spec.dc_set.push_back(m);
    }
  }
  validate_spec(parsed.spec);
  parsed.source_format = SourceFormat::pla;
  return parsed;
}

std::string write_pla(const MinimizationResult& result, const FunctionSpec& spec) {
  std::string out = ".i " + std::to_string(spec.num_vars) + "\n.o 1\n";
  for (const Cube& cube : display_cubes(result)) {
    out += cube_bits(cube) + " 1\n";
  }
  out += ".e\n";
  return out;
}

std::string format_result(const MinimizationResult& result, const FunctionSpec& spec,
                          OutputStyle style, Engine trace_engine, int min_bits) {
  if (style == OutputStyle::pla) {
    return write_pla(result, spec);
  }
  if (result.constant) {
    return "f = " + std::to_string(*result.constant) + "\n";
  }

  std::string expression = "f(";
  for (std::size_t i = 0; i < spec.var_names.size(); ++i) {
    if (i > 0) {
      expression += ",";
    }
    expression += spec.var_names[i];
  }
  expression += ") = " + expression_of(result.chosen.chosen, result.pis, spec) + "\n";

  if (style == OutputStyle::expression) {
    return expression;
  }

  std::string out = format_trace(tabulation_trace(spec, trace_engine), spec, min_bits);
  out += chart_section(result, spec);
  out += "Minimum covers: " + std::to_string(result.solutions.size()) +
         (result.unique ? " (unique)" : "") + ", terms " + std::to_string(result.chosen.term_count) +
         ", literals " + std::to_string(result.chosen.literal_count) + "\n";
  out += expression;
  return out;
}

std::string format_all_solutions(const MinimizationResult& result, const FunctionSpec& spec) {
  std::string out;
  for (const CoverSolution& solution : result.solutions) {
    out += "F = " + expression_of(solution.chosen, result.pis, spec) + "\n";
  }
  out += "-----\n";
  out += "F = " + expression_of(result.chosen.chosen, result.pis, spec) + "\n";
  return out;
}

std::string format_trace(const TabulationTrace& trace, const FunctionSpec& spec, int min_bits) {
  const std::size_t bits_width =
      std::max<std::size_t>(static_cast<std::size_t>(spec.num_vars),
                            min_bits > 0 ? static_cast<std::size_t>(min_bits) : 0);
  auto shown_label = [&trace](const TraceRow& row) {
    std::string label = row.label;
    if (trace.engine == Engine::decimal && row.cube.mask != 0) {
      std::string diffs;
      for (std::uint32_t bit = 1; bit != 0 && bit <= row.cube.mask; bit <<= 1) {
        if (row.cube.mask & bit) {
          if (!diffs.empty()) {
            diffs += ",";
          }
          diffs += std::to_string(bit);
        }
      }
      label += " (" + diffs + ")";
    }
    return label;
  };

  std::size_t label_width = 1;
  for (const TraceRound& round : trace.rounds) {
    for (const TraceGroup& group : round.groups) {
      for (const TraceRow& row : group.rows) {
        label_width = std::max(label_width, shown_label(row).size());
      }
    }
  }

  std::ostringstream out;
  out << "Tabulation (" << (trace.engine == Engine::binary ? "binary" : "decimal")
      << " engine):\n";
  for (std::size_t k = 0; k < trace.rounds.size(); ++k) {
    out << "Round " << k << "\n";
    for (const TraceGroup& group : trace.rounds[k].groups) {
      out << "  [" << group.ones << " ones]\n";
      for (const TraceRow& row : group.rows) {
        out << "  " << pad_right(shown_label(row), label_width + 2)
            << pad_left(cube_bits(row.cube), bits_width) << (row.checked ? "  v" : "") << "\n";
      }
    }
    out << "-----\n";
  }
  return out.str();
}

}  // namespace qm
