#include "arnold/families.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

#include "arnold/checked.hpp"
#include "arnold/config.hpp"
#include "arnold/error.hpp"
#include "arnold/stats.hpp"

namespace arnold {

namespace {

constexpr std::array<std::pair<FamilyId, std::string_view>, 10> kTags{{
    {FamilyId::Alternating, "alternating"},
    {FamilyId::SnakesB, "snakes-b"},
    {FamilyId::SnakesD, "snakes-d"},
    {FamilyId::CudA, "cud-a"},
    {FamilyId::CudB, "cud-b"},
    {FamilyId::CudD, "cud-d"},
    {FamilyId::VsB, "vs-b"},
    {FamilyId::VsD, "vs-d"},
    {FamilyId::FlB, "fl-b"},
    {FamilyId::FlD, "fl-d"},
}};

// Leaders positive and increasing, each the least |.| of its cycle.
bool canonical_leaders(const CycleForm& c) {
  int prev = 0;
  for (const auto& cyc : c.cycles) {
    if (cyc.entries.empty()) return false;
    int lead = cyc.entries.front();
    if (lead <= prev) return false;
    for (int x : cyc.entries)
      if (std::abs(x) < lead) return false;
    prev = lead;
  }
  return true;
}

bool cycle_up_down(const Cycle& c) { return is_up_down(abs_values(c.entries)); }

bool cud_shape(const CycleForm& c, Side side) {
  const auto& cs = c.cycles;
  if (cs.empty()) return false;
  std::size_t body = cs.size();
  if (side == Side::D) {
    const auto& last = cs.back();
    if (!last.bracket || last.entries.size() != 2) return false;
    --body;
  }
  for (std::size_t i = 0; i < body; ++i)
    if (cs[i].bracket || !cycle_up_down(cs[i])) return false;
  return true;
}

bool is_canonical(const CycleForm& c) {
  if (!canonical_leaders(c)) return false;
  try {
    return cycle_form(to_perm(c)) == c;
  } catch (const Error&) {
    return false;
  }
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Smaller root wins so the root is the least member.
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

std::vector<SignedPerm> all_unsigned(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<SignedPerm> out;
  do out.push_back(from_window(p));
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Filters B_n in rank order, split into contiguous blocks across threads.
template <class Fn>
std::vector<FamilyObject> filter_signed(int n, Fn fn) {
  const std::uint64_t total = signed_count(n);
  const auto threads = static_cast<std::uint64_t>(std::max(1, thread_count()));
  const std::uint64_t blocks = std::min<std::uint64_t>(total, threads * 4);
  std::vector<std::vector<FamilyObject>> parts(blocks);
  auto run_block = [&](std::uint64_t b) {
    const std::uint64_t lo = total * b / blocks, hi = total * (b + 1) / blocks;
    for (std::uint64_t i = lo; i < hi; ++i)
      if (auto obj = fn(unrank(i, n))) parts[b].push_back(std::move(*obj));
  };
  if (threads == 1 || total < 4096) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::jthread> pool;
    std::atomic<std::uint64_t> next{0};
    for (std::uint64_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::uint64_t b; (b = next++) < blocks;) run_block(b);
      });
  }
  std::vector<FamilyObject> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

std::optional<FamilyObject> cud_object(const SignedPerm& p, FamilyId f) {
  CycleForm c = cycle_form(p);
  bool ok = f == FamilyId::CudA ? is_cud_a(c) : cud_shape(c, f == FamilyId::CudB ? Side::B : Side::D);
  if (!ok) return std::nullopt;
  int k = c.cycles.back().entries.front();
  return FamilyObject{p, std::move(c), nullptr, k};
}

}  // namespace

std::string_view to_string(FamilyId f) {
  for (auto [id, tag] : kTags)
    if (id == f) return tag;
  return "?";
}

FamilyId parse_family(std::string_view tag) {
  for (auto [id, t] : kTags)
    if (t == tag) return id;
  throw Error(ErrorCode::UnknownFamily, std::string(tag));
}

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> fs = [] {
    std::vector<FamilyId> v;
    for (auto [id, tag] : kTags) v.push_back(id);
    return v;
  }();
  return fs;
}

bool is_signed_family(FamilyId f) { return f != FamilyId::Alternating && f != FamilyId::CudA; }

std::uint64_t signed_count(int n) {
  std::int64_t c = 1;
  for (int i = 1; i <= n; ++i) c = checked_mul(c, 2 * i);
  return static_cast<std::uint64_t>(c);
}

std::uint64_t rank(const SignedPerm& p) {
  const int n = p.n();
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 1);
  std::uint64_t r = 0;
  for (int j = 0; j < n; ++j) {
    const int m = n - j;
    const int x = p[j + 1];
    auto pos = static_cast<int>(std::find(remaining.begin(), remaining.end(), std::abs(x)) - remaining.begin());
    int digit = x < 0 ? m - 1 - pos : m + pos;
    r = r * static_cast<std::uint64_t>(2 * m) + static_cast<std::uint64_t>(digit);
    remaining.erase(remaining.begin() + pos);
  }
  return r;
}

SignedPerm unrank(std::uint64_t i, int n) {
  if (n < 1) throw Error(ErrorCode::RankOutOfRange, "n must be positive");
  if (i >= signed_count(n))
    throw Error(ErrorCode::RankOutOfRange, std::to_string(i) + " >= " + std::to_string(signed_count(n)));
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int j = n - 1; j >= 0; --j) {
    const auto radix = static_cast<std::uint64_t>(2 * (n - j));
    digits[j] = static_cast<int>(i % radix);
    i /= radix;
  }
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int m = n - j, d = digits[j];
    int pos = d < m ? m - 1 - d : d - m;
    w.push_back(d < m ? -remaining[pos] : remaining[pos]);
    remaining.erase(remaining.begin() + pos);
  }
  return from_window(w);
}

std::uint64_t unsigned_rank(std::span<const int> p) {
  const int n = static_cast<int>(p.size());
  std::uint64_t r = 0;
  for (int j = 0; j < n; ++j) {
    int smaller = 0;
    for (int i = j + 1; i < n; ++i)
      if (p[i] < p[j]) ++smaller;
    r = r * static_cast<std::uint64_t>(n - j) + static_cast<std::uint64_t>(smaller);
  }
  return r;
}

bool is_legal_flip(std::span<const int> w, int k) {
  const int n = static_cast<int>(w.size());
  if (k < 1 || k > n) return false;
  if (k == n) return true;
  const int next = std::abs(w[k]);
  for (int i = 0; i < k; ++i)
    if (std::abs(w[i]) < next) return false;
  return true;
}

SignedPerm flip(const SignedPerm& p, int k) {
  if (!is_legal_flip(p.window(), k))
    throw Error(ErrorCode::IllegalFlip, "k=" + std::to_string(k) + " on " + p.to_string());
  std::vector<int> w = p.window();
  std::reverse(w.begin(), w.begin() + k);
  return from_window(w);
}

bool is_up_down(std::span<const int> a) {
  for (std::size_t j = 0; j + 1 < a.size(); ++j)
    if ((j % 2 == 0) != (a[j] < a[j + 1])) return false;
  return true;
}

bool is_down_up(std::span<const int> a) {
  for (std::size_t j = 0; j + 1 < a.size(); ++j)
    if ((j % 2 == 0) != (a[j] > a[j + 1])) return false;
  return true;
}

bool is_alternating(const SignedPerm& p) {
  const auto& w = p.window();
  return std::all_of(w.begin(), w.end(), [](int x) { return x > 0; }) && is_down_up(w);
}

bool is_snake_b(const SignedPerm& p) { return p[1] > 0 && is_down_up(p.window()); }

bool is_snake_d(const SignedPerm& p) {
  if (p[1] > 0) return false;
  if (p.n() >= 2 && !(p[1] > -p[2])) return false;
  return is_up_down(p.window());
}

bool is_cud_a(const CycleForm& c) {
  for (const auto& cyc : c.cycles)
    for (int x : cyc.entries)
      if (x < 0) return false;
  return is_canonical(c) && cud_shape(c, Side::B);
}

bool is_cud_b(const CycleForm& c) { return is_canonical(c) && cud_shape(c, Side::B); }
bool is_cud_d(const CycleForm& c) { return is_canonical(c) && cud_shape(c, Side::D); }

bool is_vs_b(const SignedPerm& p) {
  const auto v = valleys(abs_values(p.window()));
  for (int i = 1; i <= p.n(); ++i)
    if (p[i] < 0 && (i == 1 || !std::binary_search(v.begin(), v.end(), i - 1))) return false;
  return true;
}

bool is_vs_d(const SignedPerm& p) {
  if (p[1] > 0) return false;
  if (p.n() >= 2 && !(-p[1] > p[2] && p[2] > 0)) return false;
  const auto v = valleys(abs_values(p.window()));
  for (int i = 3; i <= p.n(); ++i)
    if (p[i] < 0 && !std::binary_search(v.begin(), v.end(), i - 1)) return false;
  return true;
}

FlipClass make_flip_class(std::vector<SignedPerm> members) {
  if (members.empty()) throw Error(ErrorCode::InvariantViolation, "empty flip class");
  std::sort(members.begin(), members.end());
  FlipClass c{members.front(), {}, stat_smax(members.front()), stat_spk(members.front())};
  for (const auto& m : members)
    if (stat_smax(m) != c.smax || stat_spk(m) != c.spk)
      throw Error(ErrorCode::InvariantViolation, "smax/spk differ inside class of " + c.canon.to_string());
  c.members = std::move(members);
  return c;
}

std::vector<std::vector<SignedPerm>> flip_partition(int n, bool signed_perms) {
  require_size(n);
  std::vector<SignedPerm> elems;
  if (signed_perms) {
    const auto total = signed_count(n);
    elems.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) elems.push_back(unrank(i, n));
  } else {
    elems = all_unsigned(n);
  }
  // Both listings are in lexicographic order, so position equals rank.
  auto index_of = [&](const SignedPerm& p) {
    return static_cast<std::uint32_t>(signed_perms ? rank(p) : unsigned_rank(p.window()));
  };
  UnionFind uf(elems.size());
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    for (int k = 2; k <= n; ++k)
      if (is_legal_flip(elems[i].window(), k)) uf.unite(i, index_of(flip(elems[i], k)));
  std::vector<std::vector<SignedPerm>> classes;
  std::vector<std::int64_t> slot(elems.size(), -1);
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    auto r = uf.find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(slot[r])].push_back(elems[i]);
  }
  return classes;
}

std::vector<FlipClass> flip_classes(int n) {
  std::vector<FlipClass> out;
  for (auto& members : flip_partition(n, true)) out.push_back(make_flip_class(std::move(members)));
  return out;
}

std::vector<FamilyObject> enumerate(FamilyId f, int n) {
  require_size(n);
  switch (f) {
    case FamilyId::Alternating:
    case FamilyId::CudA: {
      std::vector<FamilyObject> out;
      for (auto& p : all_unsigned(n)) {
        if (f == FamilyId::Alternating) {
          if (is_alternating(p)) out.push_back({p, std::nullopt, nullptr, p[1]});
        } else if (auto obj = cud_object(p, f)) {
          out.push_back(std::move(*obj));
        }
      }
      return out;
    }
    case FamilyId::SnakesB:
      return filter_signed(n, [](const SignedPerm& p) -> std::optional<FamilyObject> {
        if (!is_snake_b(p)) return std::nullopt;
        return FamilyObject{p, std::nullopt, nullptr, p[1]};
      });
    case FamilyId::SnakesD:
      return filter_signed(n, [](const SignedPerm& p) -> std::optional<FamilyObject> {
        if (!is_snake_d(p)) return std::nullopt;
        return FamilyObject{p, std::nullopt, nullptr, -p[1]};
      });
    case FamilyId::CudB:
    case FamilyId::CudD:
      return filter_signed(n, [f](const SignedPerm& p) { return cud_object(p, f); });
    case FamilyId::VsB:
    case FamilyId::VsD:
      return filter_signed(n, [f](const SignedPerm& p) -> std::optional<FamilyObject> {
        if (!(f == FamilyId::VsB ? is_vs_b(p) : is_vs_d(p))) return std::nullopt;
        return FamilyObject{p, std::nullopt, nullptr, std::abs(p[1])};
      });
    case FamilyId::FlB:
    case FamilyId::FlD: {
      std::vector<FamilyObject> out;
      for (auto& c : flip_classes(n)) {
        if ((c.smax > 0) != (f == FamilyId::FlB)) continue;
        auto shared = std::make_shared<const FlipClass>(std::move(c));
        out.push_back({shared->canon, std::nullopt, shared, std::abs(shared->smax)});
      }
      return out;
    }
  }
  throw Error(ErrorCode::UnknownFamily, "unhandled family");
}

std::vector<FamilyObject> enumerate_indexed(FamilyId f, int n, int k) {
  require_size(n);
  if (k < 1 || k > n)
    throw Error(ErrorCode::IndexOutOfRange, "k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
  auto all = enumerate(f, n);
  std::erase_if(all, [k](const FamilyObject& o) { return o.index != k; });
  return all;
}

}  // namespace arnold
