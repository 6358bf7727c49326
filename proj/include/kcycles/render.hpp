#pragma once

#include <string>
#include <string_view>

#include "kcycles/expectation.hpp"
#include "kcycles/mahonian.hpp"

namespace kcycles {

enum class OutputFormat { plain, markdown, csv, json };

enum class RationalStyle {
  reduced,  // "13/5", integers bare
  figure1,  // "13/5", integers as "2/1"
};

OutputFormat parse_output_format(std::string_view name);
RationalStyle parse_rational_style(std::string_view name);

/// Rows are n, columns m = 0..max; cells without a population are blank.
/// JSON carries numerators and denominators as decimal strings.
std::string render_table(const ExpectationTable& table, OutputFormat format, RationalStyle style);

/// Reads back the markdown, csv or json rendering of a table.
ExpectationTable parse_table(std::string_view text, OutputFormat format);

std::string render_conjectures(const ConjectureReport& report, OutputFormat format);

}  // namespace kcycles
