#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace arnold {

// Increasing 1-2 tree; children kept sorted by label.
struct Tree12 {
  int label = 0;
  std::vector<Tree12> children;

  // "1(2,3(4))"
  std::string to_string() const;
};

bool operator==(const Tree12& a, const Tree12& b);
bool operator<(const Tree12& a, const Tree12& b);

// Min-split: the minimum is the root, the parts to its left and right give
// the children. p must be nonempty with distinct entries.
Tree12 tree12_of(std::span<const int> p);

}  // namespace arnold
