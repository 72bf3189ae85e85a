#pragma once

#include <string>
#include <vector>

#include "qm/core.hpp"
#include "qm/cover.hpp"
#include "qm/tabulate.hpp"

namespace qm {

enum class SourceFormat { minterm_list, truth_table, expression, pla };

struct ParsedInput {
  FunctionSpec spec;
  SourceFormat source_format = SourceFormat::minterm_list;
};

// Whitespace-separated decimal minterm indices, one line for the on-set and
// an optional one for the don't-care set. Duplicates collapse; an index in
// both lists is an error.
ParsedInput parse_minterm_list(int num_vars, const std::string& on_text,
                               const std::string& dc_text = "");

// Rows of n input symbols from {0,1,X,x} plus one output symbol from {0,1};
// n is inferred from the first row and delimiters between symbols are
// optional. Assignments not covered by any row default to don't-care.
ParsedInput parse_truth_table(const std::vector<std::string>& rows);

// Sum of products over single-letter variables with ' marking a complement,
// e.g. "f = AB' + C". Anything up to an optional '=' is ignored. Variables
// are ordered by first appearance, first seen = most significant.
ParsedInput parse_sop_expression(const std::string& text);

// Single-output PLA: ".i n", ".o 1", optional ".type fr", cube lines of n
// input symbols from {0,1,-} plus an output symbol from {1,-} (1 -> on-set,
// - -> dc-set), terminated by ".e".
ParsedInput parse_pla(const std::string& text);

std::string write_pla(const MinimizationResult& result, const FunctionSpec& spec);

enum class OutputStyle { expression, pla, table };

// Renders the minimization result. Expression style: "f(A,B) = A'B + ...";
// constants print as "f = 0" / "f = 1". Table style prints the tabulation
// tables and the prime-implicant chart. min_bits only pads bit patterns in
// table output, never changes content.
std::string format_result(const MinimizationResult& result, const FunctionSpec& spec,
                          OutputStyle style, Engine trace_engine = Engine::binary,
                          int min_bits = 0);

// One "F = ..." line per minimum cover, a separator, then the chosen one.
std::string format_all_solutions(const MinimizationResult& result, const FunctionSpec& spec);

std::string format_trace(const TabulationTrace& trace, const FunctionSpec& spec,
                         int min_bits = 0);

}  // namespace qm
