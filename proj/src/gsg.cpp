#include "kcycles/gsg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "kcycles/error.hpp"

namespace kcycles {

GsgElement::GsgElement(std::uint32_t k, std::vector<Residue> shifts, Permutation perm)
    : k_(k), shifts_(std::move(shifts)), perm_(std::move(perm)) {
  if (k_ == 0) fail(ErrorCode::domain, "modulus must be positive");
  if (shifts_.size() != perm_.size() || !perm_.contiguous_support()) {
    fail(ErrorCode::domain, "shift vector and permutation must both have degree n");
  }
  for (Residue x : shifts_) {
    if (x >= k_) fail(ErrorCode::domain, "shift " + std::to_string(x) + " is not below k");
  }
  images_ = perm_.one_line();
}

GsgElement GsgElement::identity(std::uint32_t k, std::uint32_t n) {
  return GsgElement(k, std::vector<Residue>(n, 0), Permutation::identity(n));
}

std::vector<Residue> act(const GsgElement& g, const std::vector<Residue>& s) {
  if (s.size() != g.degree()) {
    fail(ErrorCode::domain, "sequence length " + std::to_string(s.size()) +
                                " does not match degree " + std::to_string(g.degree()));
  }
  std::vector<Residue> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.k_) fail(ErrorCode::domain, "sequence entry is not below k");
    out[g.images_[i] - 1] = (s[i] + g.shifts_[i]) % g.k_;
  }
  return out;
}

std::vector<std::size_t> fixed_points(const GsgElement& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (g.images_[i] == i + 1 && g.shifts_[i] == 0) out.push_back(i + 1);
  }
  return out;
}

bool is_derangement(const GsgElement& g) { return fixed_points(g).empty(); }

std::uint64_t gsg_order(std::uint32_t k, std::uint32_t n) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint64_t factor : {static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(i)}) {
      if (factor != 0 && total > cap / factor) return cap;
      total *= factor;
    }
  }
  return total;
}

void enumerate_gsg(std::uint32_t k, std::uint32_t n,
                   const std::function<void(const GsgElement&)>& visit, std::uint64_t budget) {
  if (k == 0) fail(ErrorCode::domain, "modulus must be positive");
  if (gsg_order(k, n) > budget) {
    fail(ErrorCode::resource, "S(" + std::to_string(k) + "," + std::to_string(n) +
                                  ") has more than " + std::to_string(budget) + " elements");
  }
  std::vector<Residue> shifts(n, 0);
  while (true) {
    std::vector<Letter> word(n);
    std::iota(word.begin(), word.end(), Letter{1});
    do {
      visit(GsgElement(k, shifts, Permutation::from_one_line(word)));
    } while (std::next_permutation(word.begin(), word.end()));

    // Odometer over shift vectors, last position fastest.
    std::size_t pos = n;
    while (pos > 0 && shifts[pos - 1] + 1 == k) shifts[--pos] = 0;
    if (pos == 0) return;
    ++shifts[pos - 1];
  }
}

}  // namespace kcycles
