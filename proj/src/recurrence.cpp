#include "arnold/recurrence.hpp"

#include <cstdlib>
#include <set>

#include "arnold/error.hpp"
#include "arnold/stats.hpp"

namespace arnold {

namespace {

// |x| < k unchanged; larger labels close the gap left by removing k.
int close_gap(int x, int k) {
  if (std::abs(x) < k) return x;
  return x > 0 ? x - 1 : x + 1;
}

int swap_labels(int x, int a, int b) {
  if (std::abs(x) == a) return x > 0 ? b : -b;
  if (std::abs(x) == b) return x > 0 ? a : -a;
  return x;
}

template <class Fn>
std::vector<Cycle> map_entries(std::vector<Cycle> cycles, Fn fn) {
  for (auto& c : cycles)
    for (int& x : c.entries) x = fn(x);
  return cycles;
}

PsiImage cud_image(Side side, std::vector<Cycle> cycles, int shift, std::string rule) {
  CycleForm c{std::move(cycles)};
  SignedPerm p = to_perm(c);
  CycleForm canon = cycle_form(p);
  int k = canon.cycles.back().entries.front();
  return {side, p.n(), k, std::move(p), std::move(canon), shift, std::move(rule)};
}

PsiImage vs_image(Side side, std::vector<int> w, int shift, std::string rule) {
  SignedPerm p = from_window(w);
  return {side, p.n(), std::abs(p[1]), std::move(p), std::nullopt, shift, std::move(rule)};
}

void require_index(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::IndexOutOfRange, what);
}

constexpr std::size_t kMaxProblems = 20;

struct Expected {
  Side side;
  int n;
  int k;
};

template <class SrcStat, class ImgStat, class Member, class Map>
PairingReport run_step(Side side, int n, int k, FamilyId fb, FamilyId fd, SrcStat src_stat, ImgStat img_stat,
                       Member member, Map map) {
  if (n < 1 || k < 1 || k > n || (side == Side::D && k == 1))
    throw Error(ErrorCode::IndexOutOfRange, "no recurrence step at n=" + std::to_string(n) + ", k=" + std::to_string(k));
  PairingReport r{side, n, k, 0, 0, 0, {}};
  auto src = enumerate_indexed(side == Side::B ? fb : fd, n, k);
  r.domain_size = src.size();
  std::vector<Expected> targets;
  if (side == Side::D) {
    targets = {{Side::D, n, k - 1}, {Side::B, n - 1, k - 1}};
  } else if (k < n) {
    targets = {{Side::B, n, k + 1}, {Side::D, n - 1, k}};
  } else {
    targets = {{Side::D, n, n}};
  }
  for (const auto& t : targets)
    if (t.n >= 1 && t.k >= 1 && t.k <= t.n)
      r.codomain_size += enumerate_indexed(t.side == Side::B ? fb : fd, t.n, t.k).size();
  std::set<std::pair<Side, SignedPerm>> seen;
  std::size_t dropped = 0;
  auto note = [&](const std::string& s) {
    if (r.problems.size() < kMaxProblems)
      r.problems.push_back(s);
    else
      ++dropped;
  };
  for (const auto& obj : src) {
    PsiImage img = map(obj);
    bool listed = false;
    for (const auto& t : targets) listed |= t.side == img.side && t.n == img.n && t.k == img.k;
    const std::string name = img.cycles ? img.cycles->to_string() : img.perm.to_string();
    const std::string from = obj.cycles ? obj.cycles->to_string() : obj.perm.to_string();
    const std::string what = from + " -> " + name + " (" + img.rule + ")";
    if (!listed || !member(img)) {
      note(what + " lies outside the target families");
      continue;
    }
    if (img_stat(img) - src_stat(obj) != img.shift) note(what + " changes the statistic by the wrong amount");
    if (!seen.emplace(img.side, img.perm).second) note(what + " repeats an earlier image");
  }
  r.distinct_images = seen.size();
  if (r.domain_size != r.codomain_size)
    note("domain has " + std::to_string(r.domain_size) + " objects, codomain " + std::to_string(r.codomain_size));
  if (dropped) r.problems.push_back("... " + std::to_string(dropped) + " more");
  return r;
}

}  // namespace

PsiImage psi_cud(const CycleForm& c, Side side) {
  const int n = c.n();
  if (side == Side::D) {
    if (!is_cud_d(c)) throw Error(ErrorCode::NotInFamily, c.to_string() + " is not in CUD-D");
    const int k = c.cycles.back().entries.front();
    require_index(k > 1, "the D-side step needs k > 1");
    std::vector<Cycle> body(c.cycles.begin(), c.cycles.end() - 1);
    if (!body.empty() && body.back().entries.front() == k - 1)
      return cud_image(Side::B, map_entries(body, [k](int x) { return close_gap(x, k); }), -1, "drop final pair");
    auto out = map_entries(body, [k](int x) { return swap_labels(x, k - 1, k); });
    out.push_back({{k - 1, -(k - 1)}, true});
    return cud_image(Side::D, std::move(out), 0, "swap k-1,k");
  }
  if (!is_cud_b(c)) throw Error(ErrorCode::NotInFamily, c.to_string() + " is not in CUD-B");
  const auto& last = c.cycles.back().entries;
  const int k = last.front();
  std::vector<Cycle> body(c.cycles.begin(), c.cycles.end() - 1);
  if (k == n) {
    body.push_back({{n, -n}, true});
    return cud_image(Side::D, std::move(body), 1, "close final fixed point");
  }
  if (last == std::vector<int>{k, -(k + 1)}) {
    auto out = map_entries(body, [k](int x) { return close_gap(x, k + 1); });
    out.push_back({{k, -k}, true});
    return cud_image(Side::D, std::move(out), 0, "contract final pair");
  }
  for (std::size_t l = 1; l < last.size(); ++l) {
    if (std::abs(last[l]) != k + 1) continue;
    // The sign of k+1 is dropped when it becomes a leader.
    Cycle head{{last.begin(), last.begin() + static_cast<long>(l)}, false};
    Cycle tail{{k + 1}, false};
    tail.entries.insert(tail.entries.end(), last.begin() + static_cast<long>(l) + 1, last.end());
    body.push_back(std::move(head));
    body.push_back(std::move(tail));
    return cud_image(Side::B, std::move(body), 0, "split at k+1");
  }
  return cud_image(Side::B, map_entries(c.cycles, [k](int x) { return swap_labels(x, k, k + 1); }), 0, "swap k,k+1");
}

PsiImage psi_vs(const SignedPerm& p, Side side) {
  const int n = p.n();
  const auto& w = p.window();
  if (side == Side::D) {
    if (!is_vs_d(p)) throw Error(ErrorCode::NotInFamily, p.to_string() + " is not in VS-D");
    const int k = -p[1];
    require_index(k > 1, "the D-side step needs k > 1");
    if (p[2] == k - 1) {
      std::vector<int> out;
      for (int i = 2; i <= n; ++i) out.push_back(close_gap(p[i], k));
      return vs_image(Side::B, std::move(out), -1, "drop first entry");
    }
    std::vector<int> out;
    for (int x : w) out.push_back(swap_labels(x, k - 1, k));
    return vs_image(Side::D, std::move(out), 0, "swap k-1,k");
  }
  if (!is_vs_b(p)) throw Error(ErrorCode::NotInFamily, p.to_string() + " is not in VS-B");
  const int k = p[1];
  if (k == n) {
    std::vector<int> out = w;
    out[0] = -n;
    return vs_image(Side::D, std::move(out), 1, "negate first entry");
  }
  if (p[2] == -(k + 1)) {
    if (n == 2 || p[3] < k) {
      std::vector<int> out;
      for (int i = 2; i <= n; ++i) out.push_back(close_gap(p[i], k));
      return vs_image(Side::D, std::move(out), 0, "drop first entry");
    }
    std::vector<int> out{k + 1, k, -p[3]};
    out.insert(out.end(), w.begin() + 3, w.end());
    return vs_image(Side::B, std::move(out), 0, "rotate and move the sign");
  }
  std::vector<int> out;
  for (int x : w) out.push_back(swap_labels(x, k, k + 1));
  return vs_image(Side::B, std::move(out), 0, "swap k,k+1");
}

PairingReport recurrence_step_cud(Side side, int n, int k) {
  return run_step(
      side, n, k, FamilyId::CudB, FamilyId::CudD, [](const FamilyObject& o) { return stat_npk(*o.cycles); },
      [](const PsiImage& i) { return stat_npk(*i.cycles); },
      [](const PsiImage& i) { return i.side == Side::B ? is_cud_b(*i.cycles) : is_cud_d(*i.cycles); },
      [side](const FamilyObject& o) { return psi_cud(*o.cycles, side); });
}

PairingReport recurrence_step_vs(Side side, int n, int k) {
  return run_step(
      side, n, k, FamilyId::VsB, FamilyId::VsD, [](const FamilyObject& o) { return stat_neg(o.perm); },
      [](const PsiImage& i) { return stat_neg(i.perm); },
      [](const PsiImage& i) { return i.side == Side::B ? is_vs_b(i.perm) : is_vs_d(i.perm); },
      [side](const FamilyObject& o) { return psi_vs(o.perm, side); });
}

}  // namespace arnold
