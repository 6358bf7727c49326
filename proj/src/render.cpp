#include "kcycles/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcycles/error.hpp"

namespace kcycles {

OutputFormat parse_output_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  fail(ErrorCode::malformed_input, "unknown output format '" + std::string(name) + "'");
}

RationalStyle parse_rational_style(std::string_view name) {
  if (name == "reduced") return RationalStyle::reduced;
  if (name == "figure1") return RationalStyle::figure1;
  fail(ErrorCode::malformed_input, "unknown rational style '" + std::string(name) + "'");
}

namespace {

std::int64_t widest_m(const ExpectationTable& table) {
  std::int64_t widest = 0;
  for (const auto& row : table.rows) {
    for (const auto& cell : row.cells) widest = std::max(widest, cell.m);
  }
  return widest;
}

// Grid of rendered cells: grid[r][0] is n, grid[r][m+1] the value or "".
std::vector<std::vector<std::string>> grid(const ExpectationTable& table, RationalStyle style) {
  const auto columns = static_cast<std::size_t>(widest_m(table)) + 2;
  std::vector<std::vector<std::string>> out;
  for (const auto& row : table.rows) {
    std::vector<std::string> line(columns);
    line[0] = std::to_string(row.n);
    for (const auto& cell : row.cells) {
      line[static_cast<std::size_t>(cell.m) + 1] = to_string(cell.value, style == RationalStyle::figure1);
    }
    out.push_back(std::move(line));
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> lines(std::string_view text) {
  std::vector<std::string> out;
  for (auto& line : split(text, '\n')) {
    if (!trim(line).empty()) out.push_back(line);
  }
  return out;
}

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const auto v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::malformed_input, "expected an integer, got '" + s + "'");
  }
}

void add_cell(ExpectationTable& table, std::int64_t n, std::int64_t m, BigRational value) {
  if (table.rows.empty() || table.rows.back().n != n) table.rows.push_back({n, {}});
  table.rows.back().cells.push_back({m, std::move(value)});
}

}  // namespace

std::string render_table(const ExpectationTable& table, OutputFormat format, RationalStyle style) {
  std::ostringstream os;
  const auto columns = widest_m(table) + 1;
  switch (format) {
    case OutputFormat::plain: {
      const auto cells = grid(table, style);
      std::vector<std::size_t> width(static_cast<std::size_t>(columns) + 1, 1);
      width[0] = 2;
      for (std::int64_t m = 0; m < columns; ++m) width[static_cast<std::size_t>(m) + 1] = std::to_string(m).size();
      for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
      }
      auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
      os << "k = " << table.k << '\n';
      std::string header = pad("n", width[0]);
      for (std::int64_t m = 0; m < columns; ++m) header += "  " + pad(std::to_string(m), width[static_cast<std::size_t>(m) + 1]);
      os << trim(header) << '\n';
      for (const auto& line : cells) {
        std::string text = pad(line[0], width[0]);
        for (std::size_t c = 1; c < line.size(); ++c) text += "  " + pad(line[c], width[c]);
        os << trim(text) << '\n';
      }
      break;
    }
    case OutputFormat::markdown: {
      os << "k = " << table.k << "\n\n| n |";
      for (std::int64_t m = 0; m < columns; ++m) os << " m=" << m << " |";
      os << "\n|---|";
      for (std::int64_t m = 0; m < columns; ++m) os << "---|";
      os << '\n';
      for (const auto& line : grid(table, style)) {
        os << '|';
        for (const auto& cell : line) os << ' ' << cell << (cell.empty() ? "|" : " |");
        os << '\n';
      }
      break;
    }
    case OutputFormat::csv: {
      os << "k,n,m,value\n";
      for (const auto& row : table.rows) {
        for (const auto& cell : row.cells) {
          os << table.k << ',' << row.n << ',' << cell.m << ','
             << to_string(cell.value, style == RationalStyle::figure1) << '\n';
        }
      }
      break;
    }
    case OutputFormat::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : table.rows) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& cell : row.cells) {
          cells.push_back({{"m", cell.m},
                           {"numerator", cell.value.get_num().get_str()},
                           {"denominator", cell.value.get_den().get_str()}});
        }
        rows.push_back({{"n", row.n}, {"cells", std::move(cells)}});
      }
      os << nlohmann::json{{"k", table.k}, {"rows", std::move(rows)}}.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

ExpectationTable parse_table(std::string_view text, OutputFormat format) {
  ExpectationTable table;
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
        table.k = doc.at("k").get<std::int64_t>();
        for (const auto& row : doc.at("rows")) {
          ExpectationRow r{row.at("n").get<std::int64_t>(), {}};
          for (const auto& cell : row.at("cells")) {
            r.cells.push_back({cell.at("m").get<std::int64_t>(),
                               make_rational(BigInt(cell.at("numerator").get<std::string>()),
                                             BigInt(cell.at("denominator").get<std::string>()))});
          }
          table.rows.push_back(std::move(r));
        }
      } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::malformed_input, std::string("bad table json: ") + e.what());
      } catch (const std::invalid_argument& e) {
        fail(ErrorCode::malformed_input, std::string("bad table json number: ") + e.what());
      }
      return table;
    }
    case OutputFormat::csv: {
      const auto rows = lines(text);
      for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto fields = split(rows[i], ',');
        if (fields.size() != 4) fail(ErrorCode::malformed_input, "bad csv row '" + rows[i] + "'");
        table.k = parse_int(trim(fields[0]));
        add_cell(table, parse_int(trim(fields[1])), parse_int(trim(fields[2])), parse_rational(trim(fields[3])));
      }
      return table;
    }
    case OutputFormat::markdown:
    case OutputFormat::plain: {
      bool header_seen = false;
      for (const auto& line : lines(text)) {
        const auto t = trim(line);
        if (t.rfind("k = ", 0) == 0) {
          table.k = parse_int(t.substr(4));
          continue;
        }
        std::vector<std::string> fields;
        if (format == OutputFormat::markdown) {
          if (t.front() != '|') continue;
          auto parts = split(t, '|');
          // Leading and trailing '|' produce empty outer fields.
          fields.assign(parts.begin() + 1, parts.end() - 1);
          for (auto& f : fields) f = trim(f);
        } else {
          fail(ErrorCode::unsupported, "plain tables are not machine-readable; use markdown, csv or json");
        }
        if (!header_seen) {
          header_seen = true;
          continue;
        }
        if (!fields.empty() && fields[0].find('-') != std::string::npos) continue;
        const auto n = parse_int(fields.at(0));
        ExpectationRow row{n, {}};
        for (std::size_t c = 1; c < fields.size(); ++c) {
          if (fields[c].empty()) continue;
          row.cells.push_back({static_cast<std::int64_t>(c - 1), parse_rational(fields[c])});
        }
        table.rows.push_back(std::move(row));
      }
      return table;
    }
  }
  return table;
}

std::string render_conjectures(const ConjectureReport& report, OutputFormat format) {
  std::ostringstream os;
  const auto summary = [&] {
    std::ostringstream s;
    s << report.matches(true) << " of " << report.matches(true) + report.mismatches(true)
      << " cells in the stated range match";
    const auto outside = report.matches(false) + report.mismatches(false) -
                         report.matches(true) - report.mismatches(true);
    if (outside > 0) {
      s << "; outside the stated range " << report.mismatches(false) - report.mismatches(true)
        << " of " << outside << " differ";
    }
    if (auto c = report.first_counterexample()) {
      s << "; first counterexample " << to_string(c->id) << " n=" << c->n << " value=" << c->value
        << ": conjectured " << to_string(c->conjectured) << ", enumerated " << to_string(c->brute);
    }
    return s.str();
  };
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json cells = nlohmann::json::array();
      for (const auto& c : report.cells) {
        cells.push_back({{"conjecture", to_string(c.id)},
                         {"n", c.n},
                         {"value", c.value},
                         {"conjectured", to_string(c.conjectured)},
                         {"enumerated", to_string(c.brute)},
                         {"equal", c.equal},
                         {"in_stated_range", c.in_stated_range}});
      }
      os << nlohmann::json{{"cells", std::move(cells)},
                           {"matches", report.matches(true)},
                           {"mismatches", report.mismatches(true)},
                           {"summary", summary()}}
                .dump(2)
         << '\n';
      return os.str();
    }
    case OutputFormat::csv:
      os << "conjecture,n,value,conjectured,enumerated,equal,in_stated_range\n";
      for (const auto& c : report.cells) {
        os << to_string(c.id) << ',' << c.n << ',' << c.value << ',' << to_string(c.conjectured) << ','
           << to_string(c.brute) << ',' << (c.equal ? "true" : "false") << ','
           << (c.in_stated_range ? "true" : "false") << '\n';
      }
      return os.str();
    case OutputFormat::markdown:
      os << "| conjecture | n | value | conjectured | enumerated | equal |\n|---|---|---|---|---|---|\n";
      for (const auto& c : report.cells) {
        os << "| " << to_string(c.id) << " | " << c.n << " | " << c.value << " | " << to_string(c.conjectured)
           << " | " << to_string(c.brute) << " | " << (c.equal ? "yes" : "no")
           << (c.in_stated_range ? "" : " (outside range)") << " |\n";
      }
      os << '\n' << summary() << '\n';
      return os.str();
    case OutputFormat::plain:
      for (const auto& c : report.cells) {
        os << to_string(c.id) << " n=" << c.n << " value=" << c.value << "  conjectured "
           << to_string(c.conjectured) << "  enumerated " << to_string(c.brute) << "  "
           << (c.equal ? "match" : "MISMATCH") << (c.in_stated_range ? "" : " (outside stated range)") << '\n';
      }
      os << summary() << '\n';
      return os.str();
  }
  return os.str();
}

}  // namespace kcycles
