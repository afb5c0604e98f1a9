#include "arnold/stats.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "arnold/error.hpp"

namespace arnold {

std::vector<int> valleys(std::span<const int> a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> out;
  if (n >= 2 && a[0] < a[1]) out.push_back(1);
  for (int i = 1; i + 1 < n; ++i)
    if (a[i - 1] > a[i] && a[i] < a[i + 1]) out.push_back(i + 1);
  return out;
}

std::vector<int> peaks(std::span<const int> a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> out;
  for (int i = 1; i + 1 < n; ++i)
    if (a[i - 1] < a[i] && a[i] > a[i + 1]) out.push_back(i + 1);
  if (n >= 2 && a[n - 1] > a[n - 2]) out.push_back(n);
  return out;
}

int stat_neg(const SignedPerm& p) {
  const auto& w = p.window();
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }));
}

int stat_npk(const CycleForm& c) {
  int r = 0;
  for (std::size_t i = 0; i < c.cycles.size(); ++i) {
    const auto& cyc = c.cycles[i];
    if (cyc.bracket) {
      bool final_pair = i + 1 == c.cycles.size() && cyc.entries.size() == 2;
      if (!final_pair) throw Error(ErrorCode::MalformedCudCycleForm, c.to_string());
      ++r;
      continue;
    }
    const auto& e = cyc.entries;
    for (std::size_t j = 1; j < e.size(); ++j)
      if (e[j] < 0 && std::abs(e[j]) >= std::abs(e[j - 1])) ++r;
  }
  return r;
}

int stat_spk(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  auto at = [&](int i) { return i < 0 || i >= n ? 0 : std::abs(w[i]); };
  int r = 0;
  for (int i = 0; i < n; ++i)
    if (w[i] < 0 && at(i - 1) < at(i) && at(i) > at(i + 1)) ++r;
  return r;
}

namespace {

int min_abs(std::span<const int> w) {
  int m = std::numeric_limits<int>::max();
  for (int x : w) m = std::min(m, std::abs(x));
  return m;
}

}  // namespace

int stat_smax(std::span<const int> w) {
  if (w.empty()) throw Error(ErrorCode::MalformedSequence, "smax of empty word");
  for (;;) {
    std::size_t i = 0;
    for (std::size_t j = 1; j < w.size(); ++j)
      if (std::abs(w[j]) < std::abs(w[i])) i = j;
    const int h = w[i];
    auto left = w.first(i);
    auto right = w.subspan(i + 1);
    if (left.empty() && right.empty()) return h;
    if (left.empty() || right.empty()) {
      if (h > 0) return h;
      w = left.empty() ? right : left;
      continue;
    }
    const bool left_smaller = min_abs(left) < min_abs(right);
    // Positive pivot: continue on the side whose minimum is larger.
    w = (h > 0) != left_smaller ? left : right;
  }
}

std::vector<int> left_to_right_minima(std::span<const int> a) {
  std::vector<int> out;
  for (int x : a)
    if (out.empty() || x < out.back()) out.push_back(x);
  return out;
}

StatReport stat_report(const SignedPerm& p) {
  auto a = abs_values(p.window());
  StatReport r{
      {"neg", stat_neg(p)},
      {"spk", stat_spk(p)},
      {"smax", stat_smax(p)},
      {"valleys", static_cast<int>(valleys(a).size())},
      {"peaks", static_cast<int>(peaks(a).size())},
      {"ltr-min", static_cast<int>(left_to_right_minima(a).size())},
  };
  try {
    r["npk"] = stat_npk(cycle_form(p));
  } catch (const Error&) {
  }
  return r;
}

}  // namespace arnold
