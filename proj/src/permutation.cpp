#include "kcycles/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

#include "kcycles/error.hpp"

namespace kcycles {

Permutation::Permutation(std::vector<Cycle> cycles) : cycles_(std::move(cycles)) {
  std::unordered_set<Letter> seen;
  for (const auto& c : cycles_) {
    if (c.empty()) fail(ErrorCode::malformed_input, "empty cycle");
    for (Letter x : c) {
      if (x == 0) fail(ErrorCode::malformed_input, "letters must be positive");
      if (!seen.insert(x).second) {
        fail(ErrorCode::malformed_input,
             "letter " + std::to_string(x) + " appears twice");
      }
    }
    size_ += c.size();
  }
}

Permutation Permutation::from_one_line(std::span<const Letter> values) {
  const std::size_t n = values.size();
  std::vector<bool> used(n + 1, false);
  for (Letter v : values) {
    if (v == 0 || v > n) {
      fail(ErrorCode::malformed_input,
           "one-line value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (used[v]) {
      fail(ErrorCode::malformed_input, "one-line value " + std::to_string(v) + " repeated");
    }
    used[v] = true;
  }
  std::vector<bool> visited(n + 1, false);
  std::vector<Cycle> cycles;
  for (Letter start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    Cycle c;
    for (Letter x = start; !visited[x]; x = values[x - 1]) {
      visited[x] = true;
      c.push_back(x);
    }
    cycles.push_back(std::move(c));
  }
  return Permutation(std::move(cycles)).canonical();
}

Permutation Permutation::identity(Letter n) {
  std::vector<Cycle> cycles;
  cycles.reserve(n);
  for (Letter x = 1; x <= n; ++x) cycles.push_back({x});
  return Permutation(std::move(cycles));
}

std::vector<Letter> Permutation::support() const {
  std::vector<Letter> out;
  out.reserve(size_);
  for (const auto& c : cycles_) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Permutation::has_letter(Letter x) const {
  for (const auto& c : cycles_) {
    if (std::find(c.begin(), c.end(), x) != c.end()) return true;
  }
  return false;
}

Letter Permutation::max_letter() const {
  Letter m = 0;
  for (const auto& c : cycles_) {
    for (Letter x : c) m = std::max(m, x);
  }
  return m;
}

bool Permutation::contiguous_support() const {
  // Letters are distinct and positive, so the support is {1..n} exactly when
  // the maximum equals the size.
  return max_letter() == size_;
}

bool Permutation::is_canonical() const {
  Letter previous_first = 0;
  for (const auto& c : cycles_) {
    if (c.front() <= previous_first) return false;
    if (*std::max_element(c.begin(), c.end()) != c.front()) return false;
    previous_first = c.front();
  }
  return true;
}

Permutation Permutation::canonical() const {
  Permutation out = *this;
  for (auto& c : out.cycles_) {
    std::rotate(c.begin(), std::max_element(c.begin(), c.end()), c.end());
  }
  std::sort(out.cycles_.begin(), out.cycles_.end(),
            [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
  return out;
}

Letter Permutation::letter_at(Letter i) const {
  for (const auto& c : cycles_) {
    auto it = std::find(c.begin(), c.end(), i);
    if (it == c.end()) continue;
    ++it;
    return it == c.end() ? c.front() : *it;
  }
  fail(ErrorCode::domain, "letter " + std::to_string(i) + " is not in the support");
}

std::vector<Letter> Permutation::one_line() const {
  if (!contiguous_support()) {
    fail(ErrorCode::domain, "one-line form needs support {1..n}");
  }
  std::vector<Letter> out(size_);
  for (const auto& c : cycles_) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      out[c[j] - 1] = c[(j + 1) % c.size()];
    }
  }
  return out;
}

std::size_t Permutation::count_cycles_of_length(std::size_t k) const {
  return static_cast<std::size_t>(std::count_if(
      cycles_.begin(), cycles_.end(), [k](const Cycle& c) { return c.size() == k; }));
}

Permutation canonicalize(const Permutation& p) { return p.canonical(); }

std::size_t count_k_cycles(const Permutation& p, std::size_t k) {
  return p.count_cycles_of_length(k);
}

Letter letter_at(const Permutation& p, Letter i) { return p.letter_at(i); }

std::uint64_t statistic(std::span<const Letter> w, Statistic which) {
  std::uint64_t total = 0;
  switch (which) {
    case Statistic::inv:
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) total += w[i] > w[j];
      }
      break;
    case Statistic::des:
      for (std::size_t i = 0; i + 1 < w.size(); ++i) total += w[i] > w[i + 1];
      break;
    case Statistic::maj:
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] > w[i + 1]) total += i + 1;
      }
      break;
    case Statistic::fixed_points:
      for (std::size_t i = 0; i < w.size(); ++i) total += w[i] == i + 1;
      break;
  }
  return total;
}

std::uint64_t statistic(const Permutation& p, Statistic which) {
  return statistic(std::span<const Letter>(p.one_line()), which);
}

std::string render_letter(Letter x, Alphabet alphabet) {
  if (alphabet == Alphabet::decimal) return std::to_string(x);
  if (x == 0 || x > 35) {
    fail(ErrorCode::render, "letter " + std::to_string(x) + " has no base-36 symbol");
  }
  return std::string(1, x < 10 ? static_cast<char>('0' + x)
                               : static_cast<char>('A' + (x - 10)));
}

Letter parse_letter(std::string_view text, Alphabet alphabet) {
  if (alphabet == Alphabet::base36) {
    if (text.size() != 1) {
      fail(ErrorCode::malformed_input, "bad base-36 letter '" + std::string(text) + "'");
    }
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c >= '1' && c <= '9') return static_cast<Letter>(c - '0');
    if (c >= 'A' && c <= 'Z') return static_cast<Letter>(c - 'A' + 10);
    fail(ErrorCode::malformed_input, "bad base-36 letter '" + std::string(text) + "'");
  }
  Letter value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    fail(ErrorCode::malformed_input, "bad letter '" + std::string(text) + "'");
  }
  return value;
}

namespace {

bool is_separator(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c));
}

std::vector<std::string_view> split_tokens(std::string_view body) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && is_separator(body[i])) ++i;
    std::size_t j = i;
    while (j < body.size() && !is_separator(body[j])) ++j;
    if (j > i) out.push_back(body.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Permutation parse_cycles(std::string_view text, Alphabet alphabet) {
  const bool separated = std::any_of(text.begin(), text.end(), is_separator);
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    if (text[i] != '(') {
      fail(ErrorCode::malformed_input,
           "expected '(' at offset " + std::to_string(i) + " in '" + std::string(text) + "'");
    }
    const auto close = text.find_first_of("()", i + 1);
    if (close == std::string_view::npos || text[close] != ')') {
      fail(ErrorCode::malformed_input, "unbalanced parentheses in '" + std::string(text) + "'");
    }
    const auto body = text.substr(i + 1, close - i - 1);
    Cycle c;
    if (separated) {
      for (auto token : split_tokens(body)) c.push_back(parse_letter(token, alphabet));
    } else {
      for (std::size_t j = 0; j < body.size(); ++j) {
        c.push_back(parse_letter(body.substr(j, 1), alphabet));
      }
    }
    if (c.empty()) fail(ErrorCode::malformed_input, "empty cycle in '" + std::string(text) + "'");
    cycles.push_back(std::move(c));
    i = close + 1;
  }
  return Permutation(std::move(cycles));
}

std::string format_cycles(const Permutation& p, Alphabet alphabet, DisplayOrder order) {
  auto cycles = p.canonical().cycles();
  if (order == DisplayOrder::reversed) std::reverse(cycles.begin(), cycles.end());
  const bool separated = alphabet == Alphabet::decimal && p.max_letter() >= 10;
  std::string out;
  for (const auto& c : cycles) {
    if (separated && !out.empty()) out += ' ';
    out += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (separated && j > 0) out += ' ';
      out += render_letter(c[j], alphabet);
    }
    out += ')';
  }
  return out;
}

Permutation parse_one_line(std::string_view text) {
  std::vector<Letter> values;
  const bool separated = std::any_of(text.begin(), text.end(), is_separator);
  if (separated) {
    for (auto token : split_tokens(text)) values.push_back(parse_letter(token, Alphabet::decimal));
  } else {
    for (std::size_t j = 0; j < text.size(); ++j) {
      values.push_back(parse_letter(text.substr(j, 1), Alphabet::base36));
    }
  }
  return Permutation::from_one_line(values);
}

const char* to_string(Statistic s) noexcept {
  switch (s) {
    case Statistic::inv: return "inv";
    case Statistic::maj: return "maj";
    case Statistic::des: return "des";
    case Statistic::fixed_points: return "fixed_points";
  }
  return "?";
}

Statistic parse_statistic(std::string_view name) {
  if (name == "inv") return Statistic::inv;
  if (name == "maj") return Statistic::maj;
  if (name == "des") return Statistic::des;
  if (name == "fixed_points") return Statistic::fixed_points;
  fail(ErrorCode::malformed_input, "unknown statistic '" + std::string(name) + "'");
}

}  // namespace kcycles
