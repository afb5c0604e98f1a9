#include "arnold/bijections.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>

#include "arnold/error.hpp"
#include "arnold/stats.hpp"

namespace arnold {

namespace {

void require_distinct(std::span<const int> a, ErrorCode code) {
  std::vector<int> s(a.begin(), a.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error(code, "repeated entries");
}

std::size_t argmin_abs(std::span<const int> w) {
  std::size_t i = 0;
  for (std::size_t j = 1; j < w.size(); ++j)
    if (std::abs(w[j]) < std::abs(w[i])) i = j;
  return i;
}

NPTree algo1_rec(std::vector<int> a) {
  auto mx = std::max_element(a.begin(), a.end());
  auto mn = std::min_element(a.begin(), a.end());
  if (mx < mn) a = complement(a);
  auto [left, pivot, right] = double_bracket(a);
  NPTree t{pivot, {}};
  for (auto* part : {&left, &right})
    if (!part->empty()) t.children.push_back(algo1_rec(std::move(*part)));
  std::sort(t.children.begin(), t.children.end(),
            [](const NPTree& x, const NPTree& y) { return x.label < y.label; });
  return t;
}

// Orients a non-plane tree by the sign of each label.
BinTree orient(const NPTree& t, const std::vector<int>& sign_of) {
  const bool positive = sign_of[static_cast<std::size_t>(t.label)] > 0;
  switch (t.children.size()) {
    case 0:
      return positive ? BinTree::node(t.label, BinTree::empty(), BinTree::empty()) : BinTree::leaf(t.label);
    case 1: {
      auto c = orient(t.children[0], sign_of);
      return positive ? BinTree::node(t.label, c, BinTree::empty()) : BinTree::node(t.label, BinTree::empty(), c);
    }
    default: {
      auto small = orient(t.children[0], sign_of);
      auto large = orient(t.children[1], sign_of);
      return positive ? BinTree::node(t.label, small, large) : BinTree::node(t.label, large, small);
    }
  }
}

BinTree chain(const std::vector<BinTree>& trees) {
  BinTree t = trees.back();
  for (auto it = trees.rbegin() + 1; it != trees.rend(); ++it) {
    if (!it->right().is_empty()) throw Error(ErrorCode::InvariantViolation, "graft onto a nonempty right child");
    t = it->with_right(t);
  }
  return t;
}

BinTree algo3_leaves(std::span<const int> a, const std::set<int>& to_leaf) {
  if (a.empty()) return BinTree::empty();
  auto i = static_cast<std::size_t>(std::min_element(a.begin(), a.end()) - a.begin());
  auto left = a.first(i);
  auto right = a.subspan(i + 1);
  if (left.empty() && right.empty() && to_leaf.count(a[i])) return BinTree::leaf(a[i]);
  if (to_leaf.count(a[i]))
    throw Error(ErrorCode::InvariantViolation, "node " + std::to_string(a[i]) + " has labelled children");
  return BinTree::node(a[i], algo3_leaves(right, to_leaf), algo3_leaves(left, to_leaf));
}

BinTree phi_vs(const SignedPerm& p, bool type_d) {
  const auto a = abs_values(p.window());
  std::set<int> to_leaf;
  if (type_d) to_leaf.insert(a[0]);
  const auto vs = valleys(a);
  const auto ps = peaks(a);
  for (std::size_t j = 0; j < vs.size(); ++j) {
    const int v = vs[j];
    const int next = j + 1 < vs.size() ? vs[j + 1] : std::numeric_limits<int>::max();
    std::vector<int> between;
    for (int q : ps)
      if (v < q && q < next) between.push_back(q);
    if (between.size() != 1)
      throw Error(ErrorCode::MissingPeak, "valley at position " + std::to_string(v) + " of " + p.to_string());
    if (v < p.n() && p[v + 1] < 0) to_leaf.insert(a[static_cast<std::size_t>(between[0] - 1)]);
  }
  return algo3_leaves(a, to_leaf);
}

}  // namespace

DoubleBracket double_bracket(std::span<const int> a) {
  if (a.empty()) throw Error(ErrorCode::MalformedSequence, "double bracket of an empty word");
  auto i = static_cast<std::size_t>(std::min_element(a.begin(), a.end()) - a.begin());
  return {{a.begin(), a.begin() + static_cast<long>(i)}, a[i], {a.begin() + static_cast<long>(i) + 1, a.end()}};
}

std::vector<int> complement(std::span<const int> a) {
  std::vector<int> s(a.begin(), a.end());
  std::sort(s.begin(), s.end());
  std::vector<int> out;
  out.reserve(a.size());
  for (int x : a) {
    auto r = std::lower_bound(s.begin(), s.end(), x) - s.begin();
    out.push_back(s[s.size() - 1 - static_cast<std::size_t>(r)]);
  }
  return out;
}

bool operator==(const NPTree& a, const NPTree& b) { return a.label == b.label && a.children == b.children; }

bool operator<(const NPTree& a, const NPTree& b) {
  if (a.label != b.label) return a.label < b.label;
  return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(), b.children.end());
}

std::string NPTree::to_string() const {
  std::string s = "(" + std::to_string(label);
  for (const auto& c : children) s += c.to_string();
  return s + ")";
}

NPTree algo1(std::span<const int> a) {
  if (a.empty()) throw Error(ErrorCode::MalformedSequence, "algo1 of an empty word");
  require_distinct(a, ErrorCode::MalformedSequence);
  return algo1_rec({a.begin(), a.end()});
}

BinTree algo2(const Cycle& c) {
  const auto& e = c.entries;
  const auto a = abs_values(e);
  if (c.bracket || e.empty() || e[0] <= 0 || *std::min_element(a.begin(), a.end()) != e[0] || !is_up_down(a))
    throw Error(ErrorCode::MalformedCycle, CycleForm{{c}}.to_string());
  require_distinct(a, ErrorCode::MalformedCycle);
  std::vector<int> sign_of(static_cast<std::size_t>(*std::max_element(a.begin(), a.end())) + 1, 0);
  for (int x : e) sign_of[static_cast<std::size_t>(std::abs(x))] = x > 0 ? 1 : -1;
  return orient(algo1(a), sign_of);
}

BinTree phi_cud_b(const CycleForm& c) {
  if (!is_cud_b(c)) throw Error(ErrorCode::NotInFamily, c.to_string() + " is not in CUD-B");
  std::vector<BinTree> trees;
  for (const auto& cyc : c.cycles) trees.push_back(algo2(cyc));
  return chain(trees);
}

BinTree phi_cud_d(const CycleForm& c) {
  if (!is_cud_d(c)) throw Error(ErrorCode::NotInFamily, c.to_string() + " is not in CUD-D");
  std::vector<BinTree> trees;
  for (std::size_t i = 0; i + 1 < c.cycles.size(); ++i) trees.push_back(algo2(c.cycles[i]));
  trees.push_back(BinTree::leaf(c.cycles.back().entries.front()));
  return chain(trees);
}

BinTree algo3(std::span<const int> a) {
  require_distinct(a, ErrorCode::MalformedSequence);
  return algo3_leaves(a, {});
}

BinTree phi_vs_b(const SignedPerm& p) {
  if (!is_vs_b(p)) throw Error(ErrorCode::NotInFamily, p.to_string() + " is not in VS-B");
  return phi_vs(p, false);
}

BinTree phi_vs_d(const SignedPerm& p) {
  if (!is_vs_d(p)) throw Error(ErrorCode::NotInFamily, p.to_string() + " is not in VS-D");
  return phi_vs(p, true);
}

BinTree tau_flip(std::span<const int> w) {
  if (w.empty()) return BinTree::empty();
  const auto i = argmin_abs(w);
  const int h = w[i];
  const int label = std::abs(h);
  auto left = w.first(i);
  auto right = w.subspan(i + 1);
  if (left.empty() && right.empty())
    return h < 0 ? BinTree::leaf(label) : BinTree::node(label, BinTree::empty(), BinTree::empty());
  constexpr int inf = std::numeric_limits<int>::max();
  const int ml = left.empty() ? inf : std::abs(left[argmin_abs(left)]);
  const int mr = right.empty() ? inf : std::abs(right[argmin_abs(right)]);
  if ((h > 0) == (ml < mr)) return BinTree::node(label, tau_flip(left), tau_flip(right));
  return BinTree::node(label, tau_flip(right), tau_flip(left));
}

BinTree phi_f(const FlipClass& c) {
  BinTree t = tau_flip(c.canon);
  for (const auto& m : c.members)
    if (tau_flip(m) != t)
      throw Error(ErrorCode::InvariantViolation, "members of " + c.canon.to_string() + " map to different trees");
  return t;
}

}  // namespace arnold
