#pragma once

// Minimal OEIS b-file client with an on-disk cache. Cached files are the
// downloaded bytes, unmodified.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kcycles/bignum.hpp"

namespace kcycles {

struct OeisTerm {
  std::int64_t index;
  BigInt value;
};

enum class OeisSource { remote, cache };

struct OeisSequence {
  std::string id;  // "A000354"
  std::vector<OeisTerm> terms;
  OeisSource source = OeisSource::cache;
  std::filesystem::path path;
};

/// Throws malformed input unless id is 'A' followed by six digits.
std::string normalize_oeis_id(std::string_view id);

/// Parses "index value" lines; '#' lines and blank lines are skipped.
std::vector<OeisTerm> parse_bfile(std::string_view text);

/// Explicit directory if given, else $KCYCLES_OEIS_CACHE, else
/// $XDG_CACHE_HOME/kcycles/oeis, else ~/.cache/kcycles/oeis.
std::filesystem::path resolve_oeis_cache_dir(const std::optional<std::filesystem::path>& explicit_dir);

std::filesystem::path bfile_path(const std::filesystem::path& cache_dir, std::string_view id);

/// Reads the cached b-file when present. Otherwise, unless offline, fetches
/// https://oeis.org/<id>/b<digits>.txt and stores it in the cache. Throws a
/// network error naming the cache path when neither works.
OeisSequence load_oeis_sequence(std::string_view id, const std::filesystem::path& cache_dir, bool offline);

struct Alignment {
  std::vector<BigInt> query;
  std::int64_t offset = 0;      // b-file index of the first matched term
  std::size_t matched = 0;      // length of the matched prefix of query
  bool aligned = false;         // matched >= min(query size, min_terms)
};

/// Finds the b-file position where the longest prefix of `query` matches;
/// ties go to the smallest index.
Alignment align_prefix(const std::vector<BigInt>& query, const std::vector<OeisTerm>& terms,
                       std::size_t min_terms = 3);

/// Denominators of the m = 0 column of the expectation table for k, taken
/// over the rows n <= n_max with k | n (every other row is (n+1)/2).
std::vector<BigInt> table_denominators(std::int64_t k, std::int64_t n_max);

}  // namespace kcycles
