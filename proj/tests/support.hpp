#pragma once

#include <optional>
#include <string>

#include "kcycles/error.hpp"
#include "kcycles/permutation.hpp"

namespace kcycles::test {

template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline Permutation b36(const std::string& text) { return parse_cycles(text, Alphabet::base36); }
inline std::string b36(const Permutation& p) { return format_cycles(p, Alphabet::base36); }

inline Permutation dec(const std::string& text) { return parse_cycles(text, Alphabet::decimal); }
inline std::string dec(const Permutation& p) { return format_cycles(p, Alphabet::decimal); }

}  // namespace kcycles::test
