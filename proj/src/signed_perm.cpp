#include "arnold/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "arnold/error.hpp"

namespace arnold {

namespace {

std::string join(std::span<const int> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string SignedPerm::to_string() const { return "[" + join(w_) + "]"; }

SignedPerm from_window(std::span<const int> ints) {
  const int n = static_cast<int>(ints.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int x : ints) {
    if (x == 0) throw Error(ErrorCode::ZeroEntry, "window contains 0");
    int a = std::abs(x);
    if (a > n)
      throw Error(ErrorCode::AbsValueOutOfRange,
                  "|" + std::to_string(x) + "| exceeds window length " + std::to_string(n));
    if (seen[a]) throw Error(ErrorCode::RepeatedAbsValue, "|" + std::to_string(x) + "| repeated");
    seen[a] = 1;
  }
  return SignedPerm(std::vector<int>(ints.begin(), ints.end()));
}

SignedPerm parse_window(std::string_view text) {
  std::vector<int> w;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad window '" + std::string(text) + "'");
    }
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == ',' || ch == ' ')
      flush();
    else
      cur += ch;
  }
  flush();
  if (w.empty()) throw Error(ErrorCode::ParseError, "empty window");
  return from_window(w);
}

int CycleForm::n() const {
  int n = 0;
  for (const auto& c : cycles)
    n += static_cast<int>(c.bracket ? c.entries.size() / 2 : c.entries.size());
  return n;
}

std::string CycleForm::to_string() const {
  std::string s;
  for (const auto& c : cycles) s += "(" + join(c.entries) + ")";
  return s;
}

CycleForm cycle_form(const SignedPerm& p) {
  const int n = p.n();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  CycleForm out;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    Cycle c;
    c.entries.push_back(i);
    for (int x = p.apply(i); x != i; x = p.apply(x)) {
      if (x == -i) c.bracket = true;
      c.entries.push_back(x);
    }
    for (int x : c.entries) seen[std::abs(x)] = 1;
    out.cycles.push_back(std::move(c));
  }
  return out;
}

SignedPerm to_perm(const CycleForm& c) {
  const int n = c.n();
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  auto set = [&](int x, int y) {
    int a = std::abs(x);
    if (a < 1 || a > n || y == 0 || std::abs(y) > n)
      throw Error(ErrorCode::MalformedCycleForm, c.to_string());
    int v = x > 0 ? y : -y;
    int& slot = w[static_cast<std::size_t>(a - 1)];
    if (slot != 0 && slot != v) throw Error(ErrorCode::MalformedCycleForm, c.to_string());
    slot = v;
  };
  for (const auto& cyc : c.cycles) {
    const auto& e = cyc.entries;
    if (e.empty()) throw Error(ErrorCode::MalformedCycleForm, "empty cycle");
    for (std::size_t j = 0; j < e.size(); ++j) set(e[j], e[(j + 1) % e.size()]);
  }
  try {
    SignedPerm p = from_window(w);
    if (cycle_form(p).n() != n) throw Error(ErrorCode::MalformedCycleForm, c.to_string());
    return p;
  } catch (const Error&) {
    throw Error(ErrorCode::MalformedCycleForm, c.to_string());
  }
}

CycleForm parse_cycle_form(std::string_view text) {
  CycleForm out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error(ErrorCode::ParseError, std::string(text));
    ++i;
    Cycle c;
    for (;;) {
      skip_ws();
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) throw Error(ErrorCode::ParseError, std::string(text));
      c.entries.push_back(std::stoi(std::string(text.substr(start, i - start))));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw Error(ErrorCode::ParseError, std::string(text));
    }
    for (int x : c.entries)
      if (std::find(c.entries.begin(), c.entries.end(), -x) != c.entries.end()) c.bracket = true;
    out.cycles.push_back(std::move(c));
    skip_ws();
  }
  return out;
}

bool is_special(const CycleForm& c) {
  return std::none_of(c.cycles.begin(), c.cycles.end(), [](const Cycle& x) { return x.bracket; });
}

std::vector<int> abs_values(std::span<const int> w) {
  std::vector<int> a(w.size());
  std::transform(w.begin(), w.end(), a.begin(), [](int x) { return std::abs(x); });
  return a;
}

}  // namespace arnold
