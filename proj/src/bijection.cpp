#include "kcycles/bijection.hpp"

#include <span>
#include <sstream>

#include "kcycles/error.hpp"

namespace kcycles {

const char* to_string(Rule rule) noexcept {
  switch (rule) {
    case Rule::phi_a: return "phi_a";
    case Rule::phi_b: return "phi_b";
    case Rule::phi_c: return "phi_c";
    case Rule::phi_d: return "phi_d";
    case Rule::psi_a: return "psi_a";
    case Rule::psi_b: return "psi_b";
    case Rule::psi_c: return "psi_c";
    case Rule::psi_d: return "psi_d";
  }
  return "?";
}

bool is_phi(Rule rule) noexcept {
  return rule == Rule::phi_a || rule == Rule::phi_b || rule == Rule::phi_c || rule == Rule::phi_d;
}

namespace {

using Cycles = std::vector<Cycle>;
using CycleSpan = std::span<const Cycle>;

std::size_t letter_count(CycleSpan cycles) {
  std::size_t total = 0;
  for (const auto& c : cycles) total += c.size();
  return total;
}

class Engine {
 public:
  Engine(std::size_t k, InsertionTrace* trace) : k_(k), trace_(trace) {}

  Cycles phi(CycleSpan cycles, Letter x, std::size_t depth) {
    const std::size_t slot = open(depth, cycles, x);
    Rule rule;
    Letter passed = 0;
    Cycles out;
    Cycles produced;

    if (cycles.empty() || x > cycles.back().front()) {
      rule = Rule::phi_a;
      out.assign(cycles.begin(), cycles.end());
      if (!cycles.empty()) produced.push_back(cycles.back());
      produced.push_back({x});
      out.push_back({x});
    } else {
      const Cycle& c = cycles.back();
      const CycleSpan rest = cycles.first(cycles.size() - 1);
      if (c.size() == k_) {
        rule = Rule::phi_b;
        passed = c[1];
        out = phi(rest, passed, depth + 1);
        Cycle kept{c[0]};
        kept.insert(kept.end(), c.begin() + 2, c.end());
        kept.push_back(x);
        produced.push_back(kept);
      } else if (c.size() + 1 == k_ && !rest.empty()) {
        rule = Rule::phi_c;
        auto [inner, moved] = psi(rest, depth + 1);
        passed = moved;
        out = std::move(inner);
        Cycle grown{c[0], moved};
        grown.insert(grown.end(), c.begin() + 1, c.end());
        grown.push_back(x);
        produced.push_back(grown);
      } else {
        rule = Rule::phi_d;
        out.assign(rest.begin(), rest.end());
        Cycle grown = c;
        grown.push_back(x);
        produced.push_back(grown);
      }
      if (rule != Rule::phi_d) {
        out.insert(out.end(), produced.begin(), produced.end());
      } else {
        out.push_back(produced.back());
      }
    }
    close(slot, rule, x, passed, std::move(produced), out);
    return out;
  }

  std::pair<Cycles, Letter> psi(CycleSpan cycles, std::size_t depth) {
    const std::size_t slot = open(depth, cycles, 0);
    const Cycle& c = cycles.back();
    const CycleSpan rest = cycles.first(cycles.size() - 1);
    Rule rule;
    Letter passed = 0;
    Letter returned;
    Cycles out;
    Cycles produced;

    if (c.size() == 1) {
      rule = Rule::psi_a;
      out.assign(rest.begin(), rest.end());
      returned = c[0];
    } else if (c.size() == k_ + 1) {
      rule = Rule::psi_b;
      passed = c[1];
      out = phi(rest, passed, depth + 1);
      Cycle kept{c[0]};
      kept.insert(kept.end(), c.begin() + 2, c.begin() + static_cast<std::ptrdiff_t>(k_));
      produced.push_back(kept);
      returned = c[k_];
    } else if (c.size() == k_ && !rest.empty()) {
      rule = Rule::psi_c;
      auto [inner, moved] = psi(rest, depth + 1);
      passed = moved;
      out = std::move(inner);
      Cycle kept{c[0], moved};
      kept.insert(kept.end(), c.begin() + 1, c.begin() + static_cast<std::ptrdiff_t>(k_ - 1));
      produced.push_back(kept);
      returned = c[k_ - 1];
    } else {
      rule = Rule::psi_d;
      out.assign(rest.begin(), rest.end());
      produced.push_back(Cycle(c.begin(), c.end() - 1));
      returned = c.back();
    }
    out.insert(out.end(), produced.begin(), produced.end());
    close(slot, rule, returned, passed, std::move(produced), out);
    return {std::move(out), returned};
  }

 private:
  std::size_t open(std::size_t depth, CycleSpan cycles, Letter) {
    if (trace_ == nullptr) return 0;
    TraceStep step{};
    step.depth = depth;
    step.input_letters = letter_count(cycles);
    if (!cycles.empty()) step.consumed = cycles.back();
    trace_->steps.push_back(std::move(step));
    return trace_->steps.size() - 1;
  }

  void close(std::size_t slot, Rule rule, Letter letter, Letter passed, Cycles produced,
             const Cycles& out) {
    if (trace_ == nullptr) return;
    auto& step = trace_->steps[slot];
    step.rule = rule;
    step.letter = letter;
    step.passed = passed;
    step.produced = std::move(produced);
    step.result = Permutation(out);
  }

  std::size_t k_;
  InsertionTrace* trace_;
};

void require_core_input(const Permutation& p, std::uint32_t k) {
  if (k < 2) fail(ErrorCode::domain, "the bijection needs k >= 2");
  if (!p.is_canonical()) fail(ErrorCode::domain, "input is not in canonical cycle notation");
}

}  // namespace

Permutation replay(const Permutation& input, const InsertionTrace& trace) {
  std::size_t consumed = 0;
  for (const auto& step : trace.steps) consumed += step.consumed.empty() ? 0 : 1;
  const auto& cycles = input.cycles();
  if (consumed > cycles.size()) fail(ErrorCode::domain, "trace does not belong to this input");
  Cycles out(cycles.begin(), cycles.end() - static_cast<std::ptrdiff_t>(consumed));
  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    out.insert(out.end(), it->produced.begin(), it->produced.end());
  }
  return Permutation(std::move(out));
}

Permutation phi_core(const Permutation& p, Letter x, std::uint32_t k, InsertionTrace* trace) {
  require_core_input(p, k);
  if (x == 0) fail(ErrorCode::domain, "letters must be positive");
  if (p.has_letter(x)) {
    fail(ErrorCode::domain, "letter " + std::to_string(x) + " is already present");
  }
  Engine engine(k, trace);
  return Permutation(engine.phi(p.cycles(), x, 0));
}

Extraction psi_core(const Permutation& p, std::uint32_t k, InsertionTrace* trace) {
  require_core_input(p, k);
  if (p.empty()) fail(ErrorCode::domain, "cannot extract from the empty permutation");
  Engine engine(k, trace);
  auto [cycles, letter] = engine.psi(p.cycles(), 0);
  return {Permutation(std::move(cycles)), letter};
}

InsertResult insert(const Permutation& p, Letter x, std::uint32_t k, InsertionTrace* trace) {
  if (!p.contiguous_support()) fail(ErrorCode::domain, "insert needs a permutation on {1..n-1}");
  const std::size_t n = p.size() + 1;
  if (x < 1 || x > n) {
    fail(ErrorCode::domain, "x = " + std::to_string(x) + " outside 1.." + std::to_string(n));
  }
  const Permutation shifted = relabel(p, [x](Letter y) { return y >= x ? y + 1 : y; }).canonical();
  if (k < 2) fail(ErrorCode::domain, "the bijection needs k >= 2");
  return {phi_core(shifted, x, k, trace), n % k != 0};
}

ExtractResult extract(const Permutation& p, std::uint32_t k, InsertionTrace* trace) {
  if (p.empty() || !p.contiguous_support()) {
    fail(ErrorCode::domain, "extract needs a nonempty permutation on {1..n}");
  }
  const std::size_t n = p.size();
  auto [rest, letter] = psi_core(p.canonical(), k, trace);
  const Letter y = letter;
  Permutation lowered = relabel(rest, [y](Letter z) { return z > y ? z - 1 : z; }).canonical();
  return {std::move(lowered), letter, n % k != 0};
}

TracedInsert trace_insert(const Permutation& p, Letter x, std::uint32_t k) {
  TracedInsert out;
  out.result = insert(p, x, k, &out.trace);
  return out;
}

std::string render_trace(const InsertionTrace& trace, Alphabet alphabet) {
  std::ostringstream os;
  for (const auto& step : trace.steps) {
    os << std::string(2 * step.depth, ' ') << to_string(step.rule) << ": ";
    if (step.consumed.empty()) {
      os << "()";
    } else {
      os << format_cycles(Permutation({step.consumed}), alphabet);
    }
    os << (is_phi(step.rule) ? " <- " : " -> ") << render_letter(step.letter, alphabet);
    if (step.passed != 0) {
      os << (step.rule == Rule::phi_b || step.rule == Rule::psi_b ? ", passes " : ", receives ")
         << render_letter(step.passed, alphabet);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace kcycles
