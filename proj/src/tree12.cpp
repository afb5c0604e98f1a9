#include "arnold/tree12.hpp"

#include <algorithm>

#include "arnold/error.hpp"

namespace arnold {

bool operator==(const Tree12& a, const Tree12& b) { return a.label == b.label && a.children == b.children; }

bool operator<(const Tree12& a, const Tree12& b) {
  if (a.label != b.label) return a.label < b.label;
  return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(), b.children.end());
}

std::string Tree12::to_string() const {
  std::string s = std::to_string(label);
  if (children.empty()) return s;
  s += '(';
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) s += ',';
    s += children[i].to_string();
  }
  return s + ')';
}

Tree12 tree12_of(std::span<const int> p) {
  if (p.empty()) throw Error(ErrorCode::MalformedSequence, "tree12_of an empty word");
  auto it = std::min_element(p.begin(), p.end());
  auto i = static_cast<std::size_t>(it - p.begin());
  Tree12 t{*it, {}};
  if (i > 0) t.children.push_back(tree12_of(p.first(i)));
  if (i + 1 < p.size()) t.children.push_back(tree12_of(p.subspan(i + 1)));
  std::sort(t.children.begin(), t.children.end(),
            [](const Tree12& a, const Tree12& b) { return a.label < b.label; });
  return t;
}

}  // namespace arnold
