#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace arnold {

// A signed permutation in window notation. Unsigned permutations are the
// special case with all entries positive.
class SignedPerm {
 public:
  SignedPerm() = default;

  const std::vector<int>& window() const noexcept { return w_; }
  int n() const noexcept { return static_cast<int>(w_.size()); }
  // 1-based access to the window.
  int operator[](int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  // sigma(x) for x in +-[n], using sigma(-x) = -sigma(x).
  int apply(int x) const { return x > 0 ? (*this)[x] : -(*this)[-x]; }

  std::string to_string() const;

  auto operator<=>(const SignedPerm&) const = default;

 private:
  explicit SignedPerm(std::vector<int> w) : w_(std::move(w)) {}
  friend SignedPerm from_window(std::span<const int> ints);

  std::vector<int> w_;
};

SignedPerm from_window(std::span<const int> ints);
inline SignedPerm from_window(std::initializer_list<int> ints) {
  return from_window(std::span<const int>(ints.begin(), ints.size()));
}
// Parses "[2,-4,3,1]" (brackets optional).
SignedPerm parse_window(std::string_view text);

struct Cycle {
  std::vector<int> entries;
  // True when the orbit contains both a and -a; entries then hold the full orbit.
  bool bracket = false;

  auto operator<=>(const Cycle&) const = default;
};

struct CycleForm {
  std::vector<Cycle> cycles;

  int n() const;
  // "(1,-2,4)(3)(5,-6,7)"; bracket cycles are written with their full orbit.
  std::string to_string() const;

  auto operator<=>(const CycleForm&) const = default;
};

CycleForm cycle_form(const SignedPerm& p);
// Window reconstruction; throws MalformedCycleForm unless the cycles describe
// a signed permutation.
SignedPerm to_perm(const CycleForm& c);
// Parses the to_string format; a cycle holding both a and -a is a bracket cycle.
CycleForm parse_cycle_form(std::string_view text);
bool is_special(const CycleForm& c);

std::vector<int> abs_values(std::span<const int> w);

}  // namespace arnold
