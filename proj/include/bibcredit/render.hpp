#pragma once

#include "bibcredit/indicators.hpp"

#include <iosfwd>
#include <string_view>

namespace bibcredit {

enum class OutputFormat { Table, Csv, JsonLines };

/// Accepts "table", "csv", or "jsonl". Throws std::invalid_argument.
OutputFormat parse_output_format(std::string_view name);

/// Renders the per-subfield report. Table mode prints aligned columns named
/// after the mode (AP/WAP or CP/WCP); csv and jsonl additionally carry the
/// exact values as "p/q" strings. Undefined ratios render as "n/a" in
/// tables, empty in csv, null in jsonl.
void render_report(std::ostream& output, const IndicatorReport& report, OutputFormat format,
                   int decimals);

/// One line per check: name, expected, observed, residual, PASS/FAIL.
void render_check_result(std::ostream& output, const CheckResult& result, OutputFormat format,
                         int decimals);

} // namespace bibcredit
