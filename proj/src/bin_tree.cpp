#include "arnold/bin_tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "arnold/config.hpp"
#include "arnold/error.hpp"

namespace arnold {

std::size_t subtree_end(const std::vector<int>& code, std::size_t pos) {
  std::size_t pending = 1;
  while (pending > 0) {
    if (pos >= code.size()) throw Error(ErrorCode::ParseError, "truncated tree code");
    pending += code[pos] > 0 ? 1 : -1;
    ++pos;
  }
  return pos;
}

BinTree BinTree::leaf(int label) {
  if (label <= 0) throw Error(ErrorCode::InvariantViolation, "tree labels are positive");
  return BinTree(std::vector<int>{-label});
}

BinTree BinTree::node(int label, const BinTree& left, const BinTree& right) {
  if (label <= 0) throw Error(ErrorCode::InvariantViolation, "tree labels are positive");
  std::vector<int> c;
  c.reserve(1 + left.code_.size() + right.code_.size());
  c.push_back(label);
  c.insert(c.end(), left.code_.begin(), left.code_.end());
  c.insert(c.end(), right.code_.begin(), right.code_.end());
  return BinTree(std::move(c));
}

BinTree BinTree::from_code(std::vector<int> code) {
  if (code.empty() || subtree_end(code, 0) != code.size())
    throw Error(ErrorCode::ParseError, "malformed tree code");
  return BinTree(std::move(code));
}

int BinTree::label() const {
  if (is_empty()) throw Error(ErrorCode::InvariantViolation, "empty leaf has no label");
  return code_[0] > 0 ? code_[0] : -code_[0];
}

BinTree BinTree::left() const {
  if (!is_node()) throw Error(ErrorCode::InvariantViolation, "left() of a leaf");
  return BinTree(std::vector<int>(code_.begin() + 1, code_.begin() + static_cast<long>(subtree_end(code_, 1))));
}

BinTree BinTree::right() const {
  if (!is_node()) throw Error(ErrorCode::InvariantViolation, "right() of a leaf");
  return BinTree(std::vector<int>(code_.begin() + static_cast<long>(subtree_end(code_, 1)), code_.end()));
}

BinTree BinTree::with_right(const BinTree& r) const {
  if (!is_node()) throw Error(ErrorCode::InvariantViolation, "with_right() of a leaf");
  std::vector<int> c(code_.begin(), code_.begin() + static_cast<long>(subtree_end(code_, 1)));
  c.insert(c.end(), r.code_.begin(), r.code_.end());
  return BinTree(std::move(c));
}

int BinTree::size() const {
  return static_cast<int>(std::count_if(code_.begin(), code_.end(), [](int x) { return x != 0; }));
}

int BinTree::emp() const { return static_cast<int>(std::count(code_.begin(), code_.end(), 0)); }

namespace {

void render(const std::vector<int>& c, std::size_t& pos, std::string& out) {
  int x = c[pos++];
  if (x == 0) {
    out += '.';
  } else if (x < 0) {
    out += std::to_string(-x);
  } else {
    out += std::to_string(x) + "(";
    render(c, pos, out);
    out += ',';
    render(c, pos, out);
    out += ')';
  }
}

struct TreeParser {
  std::string_view s;
  std::size_t i = 0;
  std::vector<int> code;

  [[noreturn]] void fail() const { throw Error(ErrorCode::ParseError, "bad tree '" + std::string(s) + "'"); }

  void tree() {
    if (i < s.size() && s[i] == '.') {
      ++i;
      code.push_back(0);
      return;
    }
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail();
    int label = std::stoi(std::string(s.substr(start, i - start)));
    if (label <= 0) fail();
    if (i < s.size() && s[i] == '(') {
      ++i;
      code.push_back(label);
      tree();
      if (i >= s.size() || s[i] != ',') fail();
      ++i;
      tree();
      if (i >= s.size() || s[i] != ')') fail();
      ++i;
    } else {
      code.push_back(-label);
    }
  }
};

}  // namespace

std::string BinTree::to_string() const {
  std::string out;
  std::size_t pos = 0;
  render(code_, pos, out);
  return out;
}

BinTree BinTree::parse(std::string_view text) {
  TreeParser p{text, 0, {}};
  p.tree();
  if (p.i != text.size()) p.fail();
  return BinTree(std::move(p.code));
}

std::size_t BinTreeHash::operator()(const BinTree& t) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : t.code()) h = (h ^ static_cast<std::size_t>(x + 1024)) * 1099511628211ull;
  return h;
}

std::vector<int> rightmost_path(const BinTree& t) {
  if (t.is_empty()) throw Error(ErrorCode::InvariantViolation, "rightmost_path of an empty tree");
  const auto& c = t.code();
  std::vector<int> path;
  std::size_t pos = 0;
  for (;;) {
    int x = c[pos];
    if (x <= 0) {
      path.push_back(-x);
      return path;
    }
    path.push_back(x);
    pos = subtree_end(c, pos + 1);
  }
}

TreeClass classify(const BinTree& t) {
  auto path = rightmost_path(t);
  if (path.back() == 0) return {TreeKind::Circle, path[path.size() - 2], t.emp()};
  return {TreeKind::Star, path.back(), t.emp()};
}

bool is_valid_tree(const BinTree& t, int n) {
  const auto& c = t.code();
  try {
    if (subtree_end(c, 0) != c.size()) return false;
  } catch (const Error&) {
    return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  // Walk with an explicit stack of parent labels.
  std::vector<std::pair<int, int>> stack;  // (parent label, children still expected)
  for (int x : c) {
    int parent = stack.empty() ? 0 : stack.back().first;
    if (!stack.empty() && --stack.back().second == 0) stack.pop_back();
    if (x == 0) continue;
    int label = x > 0 ? x : -x;
    if (label > n || seen[label] || label <= parent) return false;
    seen[label] = 1;
    if (x > 0) stack.emplace_back(label, 2);
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](char s) { return s != 0; }) && c[0] != 0 &&
         (c[0] == 1 || c[0] == -1);
}

namespace {

using Memo = std::map<unsigned, std::vector<BinTree>>;

const std::vector<BinTree>& gen_set(unsigned set, Memo& memo) {
  if (auto it = memo.find(set); it != memo.end()) return it->second;
  std::vector<BinTree> out;
  if (set == 0) {
    out.push_back(BinTree::empty());
  } else {
    int low = __builtin_ctz(set);
    unsigned rest = set & (set - 1);
    int m = low + 1;
    if (rest == 0) out.push_back(BinTree::leaf(m));
    std::vector<int> bits;
    for (unsigned r = rest; r; r &= r - 1) bits.push_back(__builtin_ctz(r));
    for (unsigned mask = 0; mask < (1u << bits.size()); ++mask) {
      unsigned a = 0;
      for (std::size_t i = 0; i < bits.size(); ++i)
        if (mask >> i & 1u) a |= 1u << bits[i];
      const auto& ls = gen_set(a, memo);
      const auto& rs = gen_set(rest & ~a, memo);
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(BinTree::node(m, l, r));
    }
  }
  return memo.emplace(set, std::move(out)).first->second;
}

}  // namespace

std::vector<BinTree> gen_trees(int n) {
  require_size(n);
  Memo memo;
  return gen_set((1u << n) - 1, memo);
}

}  // namespace arnold
