#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace arnold {

// Complete increasing binary plane tree, stored as its preorder code:
// 0 is an empty leaf, -k a labelled leaf k, +k a node k followed by the codes
// of its left and right subtrees. Equal trees have equal codes.
class BinTree {
 public:
  BinTree() : code_{0} {}

  static BinTree empty() { return {}; }
  static BinTree leaf(int label);
  static BinTree node(int label, const BinTree& left, const BinTree& right);
  static BinTree from_code(std::vector<int> code);
  // "1(2(.,3),.)": "." is an empty leaf, "k" a labelled leaf, "k(L,R)" a node.
  static BinTree parse(std::string_view text);

  bool is_empty() const { return code_[0] == 0; }
  bool is_leaf() const { return code_[0] < 0; }
  bool is_node() const { return code_[0] > 0; }
  int label() const;
  BinTree left() const;
  BinTree right() const;
  // Same tree with the right child of the root replaced; the root must be a node.
  BinTree with_right(const BinTree& r) const;

  const std::vector<int>& code() const noexcept { return code_; }
  int size() const;  // number of labels
  int emp() const;   // number of empty leaves
  std::string to_string() const;

  auto operator<=>(const BinTree&) const = default;

 private:
  explicit BinTree(std::vector<int> code) : code_(std::move(code)) {}
  std::vector<int> code_;
};

struct BinTreeHash {
  std::size_t operator()(const BinTree& t) const noexcept;
};

// Returns the end of the subtree whose code starts at pos.
std::size_t subtree_end(const std::vector<int>& code, std::size_t pos);

// Labels of v_1..v_d; a trailing 0 stands for an empty rightmost leaf.
std::vector<int> rightmost_path(const BinTree& t);

enum class TreeKind { Circle, Star };  // rightmost leaf empty / labelled

struct TreeClass {
  TreeKind kind;
  int rightmost_label;  // deepest labelled node on the rightmost path
  int emp;
  friend bool operator==(const TreeClass&, const TreeClass&) = default;
};

TreeClass classify(const BinTree& t);

// Completeness, strictly increasing labels and label set {1..n}.
bool is_valid_tree(const BinTree& t, int n);

std::vector<BinTree> gen_trees(int n);

}  // namespace arnold
