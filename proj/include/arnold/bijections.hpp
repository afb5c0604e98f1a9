#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "arnold/bin_tree.hpp"
#include "arnold/families.hpp"
#include "arnold/signed_perm.hpp"

namespace arnold {

struct DoubleBracket {
  std::vector<int> left;
  int pivot = 0;
  std::vector<int> right;
  auto operator<=>(const DoubleBracket&) const = default;
};

// Split at the minimum entry.
DoubleBracket double_bracket(std::span<const int> a);
// The i-th smallest value becomes the i-th largest; positions stay.
std::vector<int> complement(std::span<const int> a);

// Complete increasing non-plane tree. Only labelled children are stored
// (sorted); the remaining slots up to two are empty leaves.
struct NPTree {
  int label = 0;
  std::vector<NPTree> children;

  // "(1(2(3)))"
  std::string to_string() const;
};

bool operator==(const NPTree& a, const NPTree& b);
bool operator<(const NPTree& a, const NPTree& b);

NPTree algo1(std::span<const int> a);
// One cycle (a_1 > 0 minimal, |cycle| up-down) to a plane tree whose root
// has an empty right child.
BinTree algo2(const Cycle& c);
BinTree phi_cud_b(const CycleForm& c);
BinTree phi_cud_d(const CycleForm& c);

// Min-split where the part left of the minimum becomes the right subtree.
BinTree algo3(std::span<const int> a);
BinTree phi_vs_b(const SignedPerm& p);
BinTree phi_vs_d(const SignedPerm& p);

// Min-|.| split with sign-dependent orientation; min of an empty part is +inf.
BinTree tau_flip(std::span<const int> w);
inline BinTree tau_flip(const SignedPerm& p) { return tau_flip(p.window()); }
// tau_flip of every member; throws InvariantViolation if they disagree.
BinTree phi_f(const FlipClass& c);

}  // namespace arnold
