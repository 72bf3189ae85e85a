#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qm/cover.hpp"
#include "qm/io.hpp"
#include "qm/tabulate.hpp"

namespace {

int exit_code_for(qm::errc code) {
  switch (code) {
    case qm::errc::internal_consistency:
    case qm::errc::budget_exceeded:
    case qm::errc::row_limit:
    case qm::errc::oracle_limit:
      return 3;
    default:
      return 2;
  }
}

enum class EngineChoice { binary, decimal, both };

struct Config {
  std::string format;  // minterms | table | expr | pla, empty = sniff
  int num_vars = -1;
  std::string on_text;
  std::string dc_text;
  bool on_given = false;
  bool dc_given = false;
  std::string inline_text;
  std::string file_path;
  bool show_mid = false;
  int min_bits = 0;
  bool all_solutions = false;
  EngineChoice engine = EngineChoice::binary;
  std::string output_style = "expression";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw qm::error(qm::errc::parse, "cannot open file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return buffer.str();
}

std::string input_text(const Config& cfg) {
  if (!cfg.inline_text.empty()) {
    return cfg.inline_text;
  }
  if (!cfg.file_path.empty()) {
    return read_file(cfg.file_path);
  }
  return read_stdin();
}

std::vector<std::string> text_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

qm::ParsedInput parse_input(Config& cfg) {
  if (cfg.format.empty()) {
    if (cfg.on_given) {
      cfg.format = "minterms";
    } else {
      // sniff: PLA if the text starts with a dot directive
      const std::string text = input_text(cfg);
      std::size_t first = text.find_first_not_of(" \t\r\n");
      cfg.format = (first != std::string::npos && text[first] == '.') ? "pla" : "minterms";
      cfg.inline_text = text;  // don't read stdin twice
      if (cfg.inline_text.empty()) {
        throw qm::error(qm::errc::parse, "no input given");
      }
    }
  }

  if (cfg.format != "minterms" && (cfg.on_given || cfg.dc_given)) {
    throw qm::error(qm::errc::parse, "--on/--dc are only valid with --format minterms");
  }
  if ((cfg.format == "table" || cfg.format == "expr") && cfg.num_vars >= 0) {
    throw qm::error(qm::errc::parse,
                    "-n/--vars is inferred for --format " + cfg.format + "; do not pass it");
  }

  if (cfg.format == "minterms") {
    if (cfg.num_vars < 0) {
      throw qm::error(qm::errc::parse, "--format minterms requires -n/--vars");
    }
    if (cfg.on_given || cfg.dc_given) {
      return qm::parse_minterm_list(cfg.num_vars, cfg.on_text, cfg.dc_text);
    }
    // first line = on-set, optional second line = dc-set
    const auto lines = text_lines(input_text(cfg));
    const std::string on_line = lines.empty() ? "" : lines[0];
    const std::string dc_line = lines.size() > 1 ? lines[1] : "";
    return qm::parse_minterm_list(cfg.num_vars, on_line, dc_line);
  }
  if (cfg.format == "table") {
    return qm::parse_truth_table(text_lines(input_text(cfg)));
  }
  if (cfg.format == "expr") {
    return qm::parse_sop_expression(input_text(cfg));
  }
  if (cfg.format == "pla") {
    auto parsed = qm::parse_pla(input_text(cfg));
    if (cfg.num_vars >= 0 && cfg.num_vars != parsed.spec.num_vars) {
      throw qm::error(qm::errc::parse,
                      "-n/--vars " + std::to_string(cfg.num_vars) + " does not match .i " +
                          std::to_string(parsed.spec.num_vars));
    }
    return parsed;
  }
  throw qm::error(qm::errc::parse, "unknown format '" + cfg.format + "'");
}

int run(Config& cfg) {
  qm::ParsedInput parsed = parse_input(cfg);

  qm::MinimizeOptions options;
  options.engine = cfg.engine == EngineChoice::decimal ? qm::Engine::decimal : qm::Engine::binary;
  options.cross_check_engines = cfg.engine == EngineChoice::both;
  const qm::MinimizationResult result = qm::minimize(parsed.spec, options);

  qm::OutputStyle style = qm::OutputStyle::expression;
  if (cfg.output_style == "pla") {
    style = qm::OutputStyle::pla;
  } else if (cfg.output_style == "table") {
    style = qm::OutputStyle::table;
  }

  std::string out;
  if (cfg.show_mid && !result.constant && style != qm::OutputStyle::table) {
    if (cfg.engine == EngineChoice::both) {
      out += qm::format_trace(qm::tabulation_trace(parsed.spec, qm::Engine::binary), parsed.spec,
                              cfg.min_bits);
      out += qm::format_trace(qm::tabulation_trace(parsed.spec, qm::Engine::decimal), parsed.spec,
                              cfg.min_bits);
    } else {
      out += qm::format_trace(qm::tabulation_trace(parsed.spec, options.engine), parsed.spec,
                              cfg.min_bits);
    }
  }
  if (cfg.all_solutions && !result.constant) {
    out += qm::format_all_solutions(result, parsed.spec);
  }
  out += qm::format_result(result, parsed.spec, style, options.engine, cfg.min_bits);
  std::cout << out;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qm - exact two-level logic minimizer (Quine-McCluskey with Petrick covering)"};
  Config cfg;

  app.add_option("--format", cfg.format, "input format")
      ->check(CLI::IsMember({"minterms", "table", "expr", "pla"}));
  app.add_option("-n,--vars", cfg.num_vars, "number of variables (minterms format)");
  auto* on_opt = app.add_option("--on", cfg.on_text, "on-set minterms, whitespace separated");
  auto* dc_opt = app.add_option("--dc", cfg.dc_text, "don't-care minterms, whitespace separated");
  app.add_option("--in", cfg.inline_text, "inline input text");
  app.add_option("--file", cfg.file_path, "read input from a file");
  app.add_flag("-m,--show-mid", cfg.show_mid, "print the tabulation tables");
  app.add_option("-b,--bits", cfg.min_bits, "minimum bit-pattern display width")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--all-solutions", cfg.all_solutions, "print every minimum cover");
  std::map<std::string, EngineChoice> engine_map{{"binary", EngineChoice::binary},
                                                 {"decimal", EngineChoice::decimal},
                                                 {"both", EngineChoice::both}};
  app.add_option("--engine", cfg.engine, "tabulation engine")
      ->transform(CLI::CheckedTransformer(engine_map, CLI::ignore_case));
  app.add_option("--output", cfg.output_style, "output style")
      ->check(CLI::IsMember({"expression", "pla", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.on_given = on_opt->count() > 0;
  cfg.dc_given = dc_opt->count() > 0;

  try {
    return run(cfg);
  } catch (const qm::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
