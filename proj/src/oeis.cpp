#include "kcycles/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "kcycles/error.hpp"
#include "kcycles/expectation.hpp"

namespace kcycles {

std::string normalize_oeis_id(std::string_view id) {
  std::string out(id);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  const bool ok = out.size() == 7 && out[0] == 'A' &&
                  std::all_of(out.begin() + 1, out.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!ok) fail(ErrorCode::malformed_input, "not an OEIS id: '" + std::string(id) + "'");
  return out;
}

std::vector<OeisTerm> parse_bfile(std::string_view text) {
  std::vector<OeisTerm> terms;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string index_text;
    std::string value_text;
    std::string extra;
    fields >> index_text >> value_text;
    if (value_text.empty() || (fields >> extra)) {
      fail(ErrorCode::malformed_input, "b-file line " + std::to_string(line_number) + " is not 'index value'");
    }
    try {
      std::size_t used = 0;
      const auto index = std::stoll(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument(index_text);
      BigInt value;
      if (value.set_str(value_text, 10) != 0) throw std::invalid_argument(value_text);
      if (!terms.empty() && index != terms.back().index + 1) {
        fail(ErrorCode::malformed_input, "b-file indices are not consecutive at line " + std::to_string(line_number));
      }
      terms.push_back({index, std::move(value)});
    } catch (const std::logic_error&) {
      fail(ErrorCode::malformed_input, "b-file line " + std::to_string(line_number) + " has a bad number");
    }
  }
  if (terms.empty()) fail(ErrorCode::malformed_input, "b-file has no terms");
  return terms;
}

std::filesystem::path resolve_oeis_cache_dir(const std::optional<std::filesystem::path>& explicit_dir) {
  if (explicit_dir) return *explicit_dir;
  if (const char* env = std::getenv("KCYCLES_OEIS_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "kcycles" / "oeis";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "kcycles" / "oeis";
  }
  return std::filesystem::path(".kcycles-cache") / "oeis";
}

std::filesystem::path bfile_path(const std::filesystem::path& cache_dir, std::string_view id) {
  const auto normalized = normalize_oeis_id(id);
  return cache_dir / ("b" + normalized.substr(1) + ".txt");
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string fetch_bfile(const std::string& id) {
  httplib::Client client("https://oeis.org");
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  const std::string target = "/" + id + "/b" + id.substr(1) + ".txt";
  auto response = client.Get(target);
  if (!response) {
    fail(ErrorCode::network, "GET https://oeis.org" + target + " failed: " + httplib::to_string(response.error()));
  }
  if (response->status != 200) {
    fail(ErrorCode::network, "GET https://oeis.org" + target + " returned HTTP " + std::to_string(response->status));
  }
  return response->body;
}

}  // namespace

OeisSequence load_oeis_sequence(std::string_view id, const std::filesystem::path& cache_dir, bool offline) {
  OeisSequence out;
  out.id = normalize_oeis_id(id);
  out.path = bfile_path(cache_dir, out.id);
  if (std::filesystem::exists(out.path)) {
    out.terms = parse_bfile(read_file(out.path));
    out.source = OeisSource::cache;
    return out;
  }
  if (offline) {
    fail(ErrorCode::network, "no cached b-file at " + out.path.string() +
                                 " and network access is disabled; place the file there or drop --offline");
  }
  std::string body;
  try {
    body = fetch_bfile(out.id);
  } catch (const Error& e) {
    fail(ErrorCode::network, std::string(e.what()) + "; to work offline, place the b-file at " + out.path.string());
  }
  out.terms = parse_bfile(body);
  std::filesystem::create_directories(cache_dir);
  std::ofstream(out.path, std::ios::binary) << body;
  out.source = OeisSource::remote;
  return out;
}

Alignment align_prefix(const std::vector<BigInt>& query, const std::vector<OeisTerm>& terms,
                       std::size_t min_terms) {
  Alignment best;
  best.query = query;
  for (std::size_t start = 0; start < terms.size(); ++start) {
    std::size_t matched = 0;
    while (matched < query.size() && start + matched < terms.size() &&
           terms[start + matched].value == query[matched]) {
      ++matched;
    }
    if (matched > best.matched) {
      best.matched = matched;
      best.offset = terms[start].index;
    }
  }
  best.aligned = !query.empty() && best.matched >= std::min(query.size(), min_terms);
  return best;
}

std::vector<BigInt> table_denominators(std::int64_t k, std::int64_t n_max) {
  std::vector<BigInt> out;
  for (std::int64_t n = k; n <= n_max; n += k) out.push_back(expected_first_letter(n, 0, k).get_den());
  return out;
}

}  // namespace kcycles
