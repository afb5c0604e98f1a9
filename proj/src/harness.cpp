#include "arnold/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "arnold/bijections.hpp"
#include "arnold/bin_tree.hpp"
#include "arnold/config.hpp"
#include "arnold/error.hpp"
#include "arnold/families.hpp"
#include "arnold/recurrence.hpp"
#include "arnold/stats.hpp"
#include "arnold/tree12.hpp"
#include "arnold/triangles.hpp"

namespace arnold {

namespace {

constexpr std::size_t kMaxDetails = 25;

const std::vector<CheckInfo> kRegistry{
    {"table-arnold", 5, false, "Arnold numbers and Springer row sums match the printed table"},
    {"table-polys", 5, false, "Arnold-Hoffman polynomials match the printed table"},
    {"poly-at-1", 10, false, "V_{n,k}(1) = v_{n,k}"},
    {"row-sums-springer", 7, false, "row sums equal the snake counts K(B_n) and K(D_n)"},
    {"hoffman-q", 10, false, "t Q_n equals the positive half-row sum of V"},
    {"hoffman-p", 10, false, "P_n - t Q_n equals the negative half-row sum of V"},
    {"entringer-alternating", 8, false, "E_{n,k} counts alternating permutations by first entry"},
    {"snakes-arnold", 5, false, "snakes by first entry are counted by v_{n,k}"},
    {"thm-cud", 7, false, "npk on signed cycle-up-down permutations gives V_{n,k}(t)"},
    {"thm-vs", 7, false, "neg on valley signed permutations gives V_{n,k}(t)"},
    {"thm-fl", 6, false, "spk on flip classes split by the sign of smax gives V_{n,k}(t)"},
    {"thm-trees", 7, false, "emp on complete increasing binary trees gives V_{n,k}(t)"},
    {"bij-cud-b", 7, false, "phi_C maps CUD-B_{n,k} bijectively onto the circle trees with label k"},
    {"bij-cud-d", 7, false, "phi_C maps CUD-D_{n,k} bijectively onto the star trees with label k"},
    {"bij-vs-b", 7, false, "phi_V maps VS-B_{n,k} bijectively onto the circle trees with label k"},
    {"bij-vs-d", 7, false, "phi_V maps VS-D_{n,k} bijectively onto the star trees with label k"},
    {"bij-fl", 6, false, "phi_F is well defined on flip classes and bijective onto all trees"},
    {"cor-rightmost-cycle-min", 6, false, "rightmost path of phi_C carries the cycle minima"},
    {"cor-rightmost-ltr-min", 6, false, "rightmost path of phi_V carries the left-to-right minima"},
    {"lemma-emp-spk", 6, false, "emp(phi_F([s])) = n - 2 spk([s]) + 1"},
    {"lemma-peak-leaf", 7, false, "in Algorithm 3 a node at position >= 2 has two empty children iff it is a peak"},
    {"knuth-flip-euler", 7, false, "flip classes of S_n are counted by Euler numbers and are the 1-2 tree fibers"},
    {"recstep-cud", 6, false, "psi maps realize the boustrophedon step on CUD families"},
    {"recstep-vs", 6, false, "psi maps realize the boustrophedon step on VS families"},
    {"smax-well-defined", 6, false, "smax is constant on flip classes"},
    {"spk-well-defined", 6, false, "spk is constant on flip classes"},
    {"report-emp-npk-perobject", 6, true, "per-object emp(phi_C) = n + 1 - 2 npk (measured only)"},
};

struct Ctx {
  CheckResult& r;
  const Golden& g;
  std::size_t dropped = 0;

  void fail(std::string msg) {
    if (r.details.size() < kMaxDetails)
      r.details.push_back(std::move(msg));
    else
      ++dropped;
  }
  void finish() {
    if (dropped) r.details.push_back("... " + std::to_string(dropped) + " more");
  }
};

std::string show(std::int64_t v) { return std::to_string(v); }

std::string nk(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

// Index k -> sum of t^exponent over the objects with that index.
using Dist = std::map<int, LaurentPoly>;

// A family indexed by k realizes V_{n, s(n-k+1)} with s = +1 for B, -1 for D.
void compare_dist(Ctx& c, const std::string& what, int n, Side side, const Dist& got,
                  const ArnoldRow<LaurentPoly>& row) {
  for (int k = 1; k <= n; ++k) {
    const int vk = side == Side::B ? n - k + 1 : -(n - k + 1);
    auto it = got.find(k);
    LaurentPoly have = it == got.end() ? LaurentPoly{} : it->second;
    if (have != row.at(vk))
      c.fail(what + " n=" + std::to_string(n) + " index " + std::to_string(k) + ": got " + have.to_string() +
             ", expected V" + nk(n, vk) + " = " + row.at(vk).to_string());
  }
}

const char* side_name(Side s) { return s == Side::B ? "B" : "D"; }

FamilyId fam(FamilyId b, FamilyId d, Side s) { return s == Side::B ? b : d; }

std::vector<std::string> sorted_strings(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const std::vector<std::string>* listing(const Golden& g, const std::string& tag, int n) {
  auto it = g.listings.find(tag);
  if (it == g.listings.end()) return nullptr;
  auto jt = it->second.find(n);
  return jt == it->second.end() ? nullptr : &jt->second;
}

std::vector<SignedPerm> parse_members(const std::string& line) {
  std::vector<SignedPerm> out;
  std::istringstream in(line);
  for (std::string tok; in >> tok;) out.push_back(parse_window(tok));
  std::sort(out.begin(), out.end());
  return out;
}

// --- tables and identities -------------------------------------------------

void check_table_arnold(Ctx& c, int n_max) {
  const int top = std::min(n_max, 5);
  c.r.n_max = top;
  auto rows = arnold_numbers(top);
  std::size_t seen = 0;
  for (auto [key, want] : c.g.arnold) {
    auto [n, k] = key;
    if (n > top) continue;
    ++seen;
    if (rows[n - 1].at(k) != want)
      c.fail("v" + nk(n, k) + " = " + show(rows[n - 1].at(k)) + ", expected " + show(want));
  }
  for (auto [key, want] : c.g.springer) {
    auto [t, n] = key;
    if (n > top) continue;
    ++seen;
    const auto& row = rows[n - 1];
    std::int64_t got = row_sum(t == 'B' ? row.pos : row.neg);
    if (got != want) c.fail(std::string("K(") + t + "_" + std::to_string(n) + ") = " + show(got) + ", expected " + show(want));
  }
  if (seen == 0) c.fail("no expected values for n <= " + std::to_string(top));
  c.r.summary = std::to_string(seen) + " table entries compared";
}

void check_table_polys(Ctx& c, int n_max) {
  const int top = std::min(n_max, 5);
  c.r.n_max = top;
  auto rows = arnold_hoffman(top);
  std::size_t seen = 0;
  for (const auto& [key, want] : c.g.polys) {
    auto [n, k] = key;
    if (n > top) continue;
    ++seen;
    if (rows[n - 1].at(k) != want)
      c.fail("V" + nk(n, k) + " = " + rows[n - 1].at(k).to_string() + ", expected " + want.to_string());
  }
  if (seen == 0) c.fail("no expected polynomials for n <= " + std::to_string(top));
  c.r.summary = std::to_string(seen) + " polynomials compared";
}

void check_poly_at_1(Ctx& c, int n_max) {
  auto polys = arnold_hoffman(n_max);
  auto nums = arnold_numbers(n_max);
  for (int n = 1; n <= n_max; ++n)
    for (int k = -n; k <= n; ++k) {
      if (k == 0) continue;
      auto at1 = polys[n - 1].at(k).eval_at_one();
      if (at1 != nums[n - 1].at(k))
        c.fail("V" + nk(n, k) + "(1) = " + show(at1) + " but v" + nk(n, k) + " = " + show(nums[n - 1].at(k)));
    }
  c.r.summary = "all entries for n <= " + std::to_string(n_max);
}

void check_row_sums(Ctx& c, int n_max) {
  auto rows = arnold_numbers(n_max);
  for (int n = 1; n <= n_max; ++n) {
    require_size(n);
    std::int64_t s0 = 0, s_all = 0;
    for (std::uint64_t i = 0, total = signed_count(n); i < total; ++i) {
      auto p = unrank(i, n);
      if (!is_down_up(p.window())) continue;
      ++s_all;
      if (p[1] > 0) ++s0;
    }
    const std::int64_t kb = row_sum(rows[n - 1].pos), kd = row_sum(rows[n - 1].neg);
    if (kb != s0) c.fail("n=" + std::to_string(n) + ": K(B_n) = " + show(kb) + " but |S0_n| = " + show(s0));
    if (kd != s_all - s0)
      c.fail("n=" + std::to_string(n) + ": K(D_n) = " + show(kd) + " but |S_n| - |S0_n| = " + show(s_all - s0));
    for (char t : {'B', 'D'}) {
      auto it = c.g.springer.find({t, n});
      if (it != c.g.springer.end() && it->second != (t == 'B' ? kb : kd))
        c.fail(std::string("K(") + t + "_" + std::to_string(n) + ") differs from the table");
    }
  }
  c.r.summary = "K(B_n) = |S0_n|, K(D_n) = |S_n| - |S0_n|";
}

void check_hoffman(Ctx& c, int n_max, bool q_side) {
  for (const auto& row : check_hoffman_identities(n_max)) {
    if (q_side && !row.q_ok) c.fail("n=" + std::to_string(row.n) + ": t Q_n != " + row.pos_sum.to_string());
    if (!q_side && !row.p_ok) c.fail("n=" + std::to_string(row.n) + ": P_n - t Q_n != " + row.neg_sum.to_string());
  }
  c.r.summary = q_side ? "t Q_n = sum_{k>0} V_{n,k}" : "P_n - t Q_n = sum_{k>0} V_{n,-k}";
}

void check_entringer(Ctx& c, int n_max) {
  auto e = entringer(n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::map<int, std::int64_t> by_first;
    for (const auto& o : enumerate(FamilyId::Alternating, n)) ++by_first[o.index];
    for (int k = 1; k <= n; ++k)
      if (by_first[k] != e[n - 1][k - 1])
        c.fail("E" + nk(n, k) + " = " + show(e[n - 1][k - 1]) + " but " + show(by_first[k]) + " alternating permutations");
  }
  c.r.summary = "first-entry counts of alternating permutations";
}

void check_snakes(Ctx& c, int n_max) {
  auto rows = arnold_numbers(n_max);
  for (int n = 1; n <= n_max; ++n)
    for (Side s : {Side::B, Side::D}) {
      std::map<int, std::int64_t> by_k;
      for (const auto& o : enumerate(fam(FamilyId::SnakesB, FamilyId::SnakesD, s), n)) ++by_k[o.index];
      for (int k = 1; k <= n; ++k) {
        const int vk = s == Side::B ? k : -k;
        if (by_k[k] != rows[n - 1].at(vk))
          c.fail(std::string("snakes ") + side_name(s) + " n=" + std::to_string(n) + " first entry " +
                 std::to_string(vk) + ": " + show(by_k[k]) + ", expected v" + nk(n, vk) + " = " + show(rows[n - 1].at(vk)));
      }
    }
  c.r.summary = "snake counts by first entry";
}

// --- refined families ------------------------------------------------------

void compare_listing(Ctx& c, const std::string& tag, int n, std::vector<std::string> got,
                     const std::function<std::string(const std::string&)>& normalize) {
  const auto* want = listing(c.g, tag, n);
  if (!want) return;
  std::vector<std::string> norm;
  for (const auto& w : *want) norm.push_back(normalize(w));
  if (sorted_strings(got) != sorted_strings(norm))
    c.fail(tag + " n=" + std::to_string(n) + ": enumeration differs from the listed " + std::to_string(norm.size()) +
           " objects (got " + std::to_string(got.size()) + ")");
}

void check_thm_cud(Ctx& c, int n_max) {
  auto rows = arnold_hoffman(n_max);
  for (int n = 1; n <= n_max; ++n)
    for (Side s : {Side::B, Side::D}) {
      Dist d;
      std::vector<std::string> names;
      for (const auto& o : enumerate(fam(FamilyId::CudB, FamilyId::CudD, s), n)) {
        d[o.index].add_term(n + 1 - 2 * stat_npk(*o.cycles), 1);
        names.push_back(o.cycles->to_string());
      }
      compare_dist(c, std::string("CUD-") + side_name(s), n, s, d, rows[n - 1]);
      compare_listing(c, s == Side::B ? "cud-b" : "cud-d", n, names,
                      [](const std::string& x) { return parse_cycle_form(x).to_string(); });
    }
  c.r.summary = "generating polynomials of npk by last cycle leader";
}

void check_thm_vs(Ctx& c, int n_max) {
  auto rows = arnold_hoffman(n_max);
  for (int n = 1; n <= n_max; ++n)
    for (Side s : {Side::B, Side::D}) {
      Dist d;
      std::vector<std::string> names;
      for (const auto& o : enumerate(fam(FamilyId::VsB, FamilyId::VsD, s), n)) {
        d[o.index].add_term(n + 1 - 2 * stat_neg(o.perm), 1);
        names.push_back(o.perm.to_string());
      }
      compare_dist(c, std::string("VS-") + side_name(s), n, s, d, rows[n - 1]);
      compare_listing(c, s == Side::B ? "vs-b" : "vs-d", n, names,
                      [](const std::string& x) { return parse_window(x).to_string(); });
    }
  c.r.summary = "generating polynomials of neg by |first entry|";
}

void check_thm_fl(Ctx& c, int n_max) {
  auto rows = arnold_hoffman(n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::vector<FlipClass> classes;
    try {
      classes = flip_classes(n);
    } catch (const Error& e) {
      c.fail("n=" + std::to_string(n) + ": " + e.what());
      continue;
    }
    Dist d[2];
    std::map<SignedPerm, std::size_t> class_of;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& cl = classes[i];
      d[cl.smax > 0 ? 0 : 1][std::abs(cl.smax)].add_term(n + 1 - 2 * cl.spk, 1);
      for (const auto& m : cl.members) class_of[m] = i;
    }
    compare_dist(c, "FL-B", n, Side::B, d[0], rows[n - 1]);
    compare_dist(c, "FL-D", n, Side::D, d[1], rows[n - 1]);
    for (Side s : {Side::B, Side::D}) {
      const std::string tag = s == Side::B ? "fl-b" : "fl-d";
      const auto* reps = listing(c.g, tag, n);
      if (!reps) continue;
      std::set<std::size_t> hit;
      for (const auto& r : *reps) {
        const auto& cl = classes[class_of.at(parse_window(r))];
        if ((cl.smax > 0) != (s == Side::B)) c.fail(tag + " n=" + std::to_string(n) + ": " + r + " has smax " + std::to_string(cl.smax));
        hit.insert(class_of.at(parse_window(r)));
      }
      std::size_t expected = 0;
      for (const auto& cl : classes) expected += (cl.smax > 0) == (s == Side::B);
      if (hit.size() != reps->size() || hit.size() != expected)
        c.fail(tag + " n=" + std::to_string(n) + ": listed classes cover " + std::to_string(hit.size()) + " of " +
               std::to_string(expected));
    }
    if (const auto* full = listing(c.g, "flip-class", n))
      for (const auto& line : *full) {
        auto members = parse_members(line);
        if (classes[class_of.at(members.front())].members != members) c.fail("class of " + members.front().to_string() + " differs from " + line);
      }
  }
  c.r.summary = "generating polynomials of spk by |smax|";
}

// Trees of size n grouped by (kind, rightmost label).
struct TreeIndex {
  std::vector<BinTree> trees;
  std::map<std::pair<TreeKind, int>, std::size_t> counts;
  std::size_t circles = 0, stars = 0;

  explicit TreeIndex(int n) : trees(gen_trees(n)) {
    for (const auto& t : trees) {
      auto cl = classify(t);
      ++counts[{cl.kind, cl.rightmost_label}];
      ++(cl.kind == TreeKind::Circle ? circles : stars);
    }
  }
};

void check_thm_trees(Ctx& c, int n_max) {
  auto rows = arnold_hoffman(n_max);
  for (int n = 1; n <= n_max; ++n) {
    Dist d[2];
    for (const auto& t : gen_trees(n)) {
      if (!is_valid_tree(t, n)) c.fail("invalid generated tree " + t.to_string());
      auto cl = classify(t);
      d[cl.kind == TreeKind::Circle ? 0 : 1][cl.rightmost_label].add_term(cl.emp, 1);
    }
    compare_dist(c, "circle trees", n, Side::B, d[0], rows[n - 1]);
    compare_dist(c, "star trees", n, Side::D, d[1], rows[n - 1]);
  }
  c.r.summary = "generating polynomials of emp by rightmost label";
}

// --- bijections ------------------------------------------------------------

void check_bijection(Ctx& c, int n_max, FamilyId f, TreeKind kind,
                     const std::function<BinTree(const FamilyObject&)>& phi) {
  std::size_t total = 0;
  for (int n = 1; n <= n_max; ++n) {
    TreeIndex idx(n);
    std::unordered_set<BinTree, BinTreeHash> images;
    const auto domain = enumerate(f, n);
    for (const auto& o : domain) {
      const std::string name = o.cycles ? o.cycles->to_string() : o.perm.to_string();
      BinTree t;
      try {
        t = phi(o);
      } catch (const Error& e) {
        c.fail(name + ": " + e.what());
        continue;
      }
      auto cl = classify(t);
      if (!is_valid_tree(t, n)) c.fail(name + " -> " + t.to_string() + " is not a complete increasing tree");
      if (cl.kind != kind || cl.rightmost_label != o.index)
        c.fail(name + " (index " + std::to_string(o.index) + ") -> " + t.to_string() + " has the wrong kind or label");
      if (!images.insert(t).second) c.fail(name + " -> " + t.to_string() + " repeats an image");
    }
    const std::size_t want = kind == TreeKind::Circle ? idx.circles : idx.stars;
    if (domain.size() != want)
      c.fail("n=" + std::to_string(n) + ": domain " + std::to_string(domain.size()) + ", codomain " + std::to_string(want));
    total += domain.size();
  }
  c.r.summary = std::to_string(total) + " objects mapped";
}

void check_bij_fl(Ctx& c, int n_max, bool emp_identity) {
  std::size_t total = 0;
  for (int n = 1; n <= n_max; ++n) {
    std::unordered_set<BinTree, BinTreeHash> images;
    auto classes = flip_classes(n);
    for (const auto& cl : classes) {
      BinTree t;
      try {
        t = phi_f(cl);
      } catch (const Error& e) {
        c.fail(e.what());
        continue;
      }
      auto info = classify(t);
      const std::string name = "[" + cl.canon.to_string() + "] -> " + t.to_string();
      if (emp_identity) {
        if (info.emp != n - 2 * cl.spk + 1)
          c.fail(name + ": emp " + std::to_string(info.emp) + " vs n - 2 spk + 1 = " + std::to_string(n - 2 * cl.spk + 1));
        continue;
      }
      if ((info.kind == TreeKind::Circle) != (cl.smax > 0) || info.rightmost_label != std::abs(cl.smax))
        c.fail(name + " does not match smax " + std::to_string(cl.smax));
      if (!images.insert(t).second) c.fail(name + " repeats an image");
    }
    if (!emp_identity && classes.size() != gen_trees(n).size())
      c.fail("n=" + std::to_string(n) + ": " + std::to_string(classes.size()) + " classes vs " +
             std::to_string(gen_trees(n).size()) + " trees");
    total += classes.size();
  }
  c.r.summary = std::to_string(total) + " classes mapped";
}

std::vector<int> path_labels(const BinTree& t) {
  auto p = rightmost_path(t);
  if (p.back() == 0) p.pop_back();
  std::sort(p.begin(), p.end());
  return p;
}

void check_cor_cycle_min(Ctx& c, int n_max) {
  for (int n = 1; n <= n_max; ++n)
    for (Side s : {Side::B, Side::D})
      for (const auto& o : enumerate(fam(FamilyId::CudB, FamilyId::CudD, s), n)) {
        auto t = s == Side::B ? phi_cud_b(*o.cycles) : phi_cud_d(*o.cycles);
        std::vector<int> minima;
        for (const auto& cyc : o.cycles->cycles) minima.push_back(cyc.entries.front());
        if (path_labels(t) != minima) c.fail(o.cycles->to_string() + " -> " + t.to_string());
      }
  c.r.summary = "rightmost path = cycle minima";
}

void check_cor_ltr_min(Ctx& c, int n_max) {
  for (int n = 1; n <= n_max; ++n)
    for (Side s : {Side::B, Side::D})
      for (const auto& o : enumerate(fam(FamilyId::VsB, FamilyId::VsD, s), n)) {
        auto t = s == Side::B ? phi_vs_b(o.perm) : phi_vs_d(o.perm);
        auto m = left_to_right_minima(abs_values(o.perm.window()));
        std::sort(m.begin(), m.end());
        if (path_labels(t) != m) c.fail(o.perm.to_string() + " -> " + t.to_string());
      }
  c.r.summary = "rightmost path = left-to-right minima of |s|";
}

void check_peak_leaf(Ctx& c, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    do {
      const auto code = algo3(p).code();
      std::map<int, bool> bare;
      for (std::size_t i = 0; i < code.size(); ++i)
        if (code[i] > 0) bare[code[i]] = code[i + 1] == 0 && code[i + 2] == 0;
      const auto pk = peaks(p);
      for (int i = 2; i <= n; ++i) {
        const bool is_peak = std::binary_search(pk.begin(), pk.end(), i);
        if (bare[p[i - 1]] != is_peak)
          c.fail(from_window(p).to_string() + ": position " + std::to_string(i) + (is_peak ? " is" : " is not") +
                 " a peak");
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  c.r.summary = "all of S_n";
}

void check_knuth(Ctx& c, int n_max) {
  auto e = entringer(n_max);
  for (int n = 1; n <= n_max; ++n) {
    auto part = flip_partition(n, false);
    const std::int64_t euler = row_sum(e[n - 1]);
    if (static_cast<std::int64_t>(part.size()) != euler)
      c.fail("n=" + std::to_string(n) + ": " + std::to_string(part.size()) + " classes, Euler number " + show(euler));
    std::map<Tree12, std::size_t> fiber;
    for (std::size_t i = 0; i < part.size(); ++i)
      for (const auto& m : part[i]) {
        auto [it, fresh] = fiber.emplace(tree12_of(m.window()), i);
        if (!fresh && it->second != i) c.fail(m.to_string() + " shares a 1-2 tree with another class");
      }
    if (fiber.size() != part.size())
      c.fail("n=" + std::to_string(n) + ": " + std::to_string(fiber.size()) + " 1-2 trees for " +
             std::to_string(part.size()) + " classes");
    if (const auto* want = listing(c.g, "knuth", n)) {
      std::set<std::vector<SignedPerm>> got(part.begin(), part.end());
      for (const auto& line : *want)
        if (!got.count(parse_members(line))) c.fail("class {" + line + "} not found");
      if (want->size() != part.size()) c.fail("listed " + std::to_string(want->size()) + " classes");
    }
  }
  c.r.summary = "class counts, 1-2 tree fibers";
}

// --- recurrence steps ------------------------------------------------------

void record(Ctx& c, const PairingReport& rep) {
  for (const auto& p : rep.problems)
    c.fail(std::string(side_name(rep.side)) + nk(rep.n, rep.k) + ": " + p);
}

template <class Step>
void sweep_steps(Ctx& c, int n_max, Step step) {
  std::size_t objects = 0;
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 2; k <= n; ++k) {
      auto rep = step(Side::D, n, k);
      objects += rep.domain_size;
      record(c, rep);
    }
    for (int k = 1; k <= n; ++k) {
      auto rep = step(Side::B, n, k);
      objects += rep.domain_size;
      record(c, rep);
    }
  }
  c.r.summary = std::to_string(objects) + " objects stepped";
}

std::pair<std::string, std::string> split_example(const std::string& line) {
  auto at = line.find("=>");
  if (at == std::string::npos) throw Error(ErrorCode::ParseError, "expected 'source => image': " + line);
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(' '));
    s.erase(s.find_last_not_of(' ') + 1);
    return s;
  };
  return {trim(line.substr(0, at)), trim(line.substr(at + 2))};
}

void check_recstep_cud(Ctx& c, int n_max) {
  sweep_steps(c, n_max, recurrence_step_cud);
  std::size_t examples = 0;
  if (auto it = c.g.listings.find("psi-cud"); it != c.g.listings.end())
    for (const auto& [n, lines] : it->second)
      for (const auto& line : lines) {
        auto [src, want] = split_example(line);
        auto cf = parse_cycle_form(src);
        auto img = psi_cud(cf, is_cud_d(cf) ? Side::D : Side::B);
        ++examples;
        if (img.cycles->to_string() != parse_cycle_form(want).to_string())
          c.fail("example " + src + " -> " + img.cycles->to_string() + ", expected " + want);
      }
  c.r.summary += ", " + std::to_string(examples) + " worked examples";
}

void check_recstep_vs(Ctx& c, int n_max) {
  sweep_steps(c, n_max, recurrence_step_vs);
  std::size_t examples = 0;
  if (auto it = c.g.listings.find("psi-vs"); it != c.g.listings.end())
    for (const auto& [n, lines] : it->second)
      for (const auto& line : lines) {
        auto [src, want] = split_example(line);
        auto p = parse_window(src);
        auto img = psi_vs(p, p[1] < 0 ? Side::D : Side::B);
        ++examples;
        if (img.perm != parse_window(want))
          c.fail("example " + src + " -> " + img.perm.to_string() + ", expected " + want);
      }
  c.r.summary += ", " + std::to_string(examples) + " worked examples";
}

// --- class invariants and reports ------------------------------------------

void check_class_constant(Ctx& c, int n_max, int (*stat)(const SignedPerm&), const char* name) {
  std::size_t total = 0;
  for (int n = 1; n <= n_max; ++n)
    for (const auto& members : flip_partition(n, true)) {
      ++total;
      const int v = stat(members.front());
      for (const auto& m : members)
        if (stat(m) != v) {
          c.fail(std::string(name) + " differs on the class of " + members.front().to_string() + " at " + m.to_string());
          break;
        }
    }
  c.r.summary = std::to_string(total) + " classes";
}

int smax_of(const SignedPerm& p) { return stat_smax(p); }
int spk_of(const SignedPerm& p) { return stat_spk(p); }

void report_emp_npk(Ctx& c, int n_max) {
  for (int n = 1; n <= n_max; ++n)
    for (Side s : {Side::B, Side::D}) {
      std::size_t agree = 0, total = 0;
      for (const auto& o : enumerate(fam(FamilyId::CudB, FamilyId::CudD, s), n)) {
        auto t = s == Side::B ? phi_cud_b(*o.cycles) : phi_cud_d(*o.cycles);
        ++total;
        agree += t.emp() == n + 1 - 2 * stat_npk(*o.cycles);
      }
      c.r.details.push_back(std::string("n=") + std::to_string(n) + " " + side_name(s) + ": " + std::to_string(agree) +
                            "/" + std::to_string(total) + " objects have emp(phi_C) = n + 1 - 2 npk");
    }
  c.r.summary = "per-object agreement counts";
}

void run_check(Ctx& c, std::string_view id, int n) {
  if (id == "table-arnold") return check_table_arnold(c, n);
  if (id == "table-polys") return check_table_polys(c, n);
  if (id == "poly-at-1") return check_poly_at_1(c, n);
  if (id == "row-sums-springer") return check_row_sums(c, n);
  if (id == "hoffman-q") return check_hoffman(c, n, true);
  if (id == "hoffman-p") return check_hoffman(c, n, false);
  if (id == "entringer-alternating") return check_entringer(c, n);
  if (id == "snakes-arnold") return check_snakes(c, n);
  if (id == "thm-cud") return check_thm_cud(c, n);
  if (id == "thm-vs") return check_thm_vs(c, n);
  if (id == "thm-fl") return check_thm_fl(c, n);
  if (id == "thm-trees") return check_thm_trees(c, n);
  if (id == "bij-cud-b")
    return check_bijection(c, n, FamilyId::CudB, TreeKind::Circle, [](const FamilyObject& o) { return phi_cud_b(*o.cycles); });
  if (id == "bij-cud-d")
    return check_bijection(c, n, FamilyId::CudD, TreeKind::Star, [](const FamilyObject& o) { return phi_cud_d(*o.cycles); });
  if (id == "bij-vs-b")
    return check_bijection(c, n, FamilyId::VsB, TreeKind::Circle, [](const FamilyObject& o) { return phi_vs_b(o.perm); });
  if (id == "bij-vs-d")
    return check_bijection(c, n, FamilyId::VsD, TreeKind::Star, [](const FamilyObject& o) { return phi_vs_d(o.perm); });
  if (id == "bij-fl") return check_bij_fl(c, n, false);
  if (id == "cor-rightmost-cycle-min") return check_cor_cycle_min(c, n);
  if (id == "cor-rightmost-ltr-min") return check_cor_ltr_min(c, n);
  if (id == "lemma-emp-spk") return check_bij_fl(c, n, true);
  if (id == "lemma-peak-leaf") return check_peak_leaf(c, n);
  if (id == "knuth-flip-euler") return check_knuth(c, n);
  if (id == "recstep-cud") return check_recstep_cud(c, n);
  if (id == "recstep-vs") return check_recstep_vs(c, n);
  if (id == "smax-well-defined") return check_class_constant(c, n, smax_of, "smax");
  if (id == "spk-well-defined") return check_class_constant(c, n, spk_of, "spk");
  if (id == "report-emp-npk-perobject") return report_emp_npk(c, n);
  throw Error(ErrorCode::UnknownCheck, std::string(id));
}

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  return s;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ReportOnly: return "report-only";
  }
  return "?";
}

const std::vector<CheckInfo>& registry() { return kRegistry; }

const CheckInfo& check_info(std::string_view id) {
  for (const auto& c : kRegistry)
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownCheck, std::string(id));
}

std::filesystem::path default_golden_dir() {
  if (const char* env = std::getenv("ARNOLD_GOLDEN_DIR"); env && *env) return env;
  return ARNOLD_GOLDEN_DIR;
}

Golden load_golden(const std::filesystem::path& dir) {
  Golden g;
  auto open = [&](const char* name) {
    std::ifstream in(dir / name);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + (dir / name).string());
    return in;
  };
  auto lines = [](std::ifstream& in, auto&& fn) {
    for (std::string line; std::getline(in, line);) {
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      fn(line);
    }
  };
  auto bad = [](const std::string& line) { return Error(ErrorCode::ParseError, "golden line '" + line + "'"); };

  auto t1 = open("table1.txt");
  lines(t1, [&](const std::string& line) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    if (tag == "v") {
      int n, k;
      std::int64_t v;
      if (!(in >> n >> k >> v)) throw bad(line);
      g.arnold[{n, k}] = v;
    } else if (tag == "springer") {
      char t;
      int n;
      std::int64_t v;
      if (!(in >> t >> n >> v) || (t != 'B' && t != 'D')) throw bad(line);
      g.springer[{t, n}] = v;
    } else {
      throw bad(line);
    }
  });

  auto t2 = open("table2.txt");
  lines(t2, [&](const std::string& line) {
    std::istringstream in(line);
    std::string tag, poly;
    int n, k;
    if (!(in >> tag >> n >> k >> poly) || tag != "V") throw bad(line);
    g.polys[{n, k}] = LaurentPoly::parse(poly);
  });

  auto fams = open("families.txt");
  lines(fams, [&](const std::string& line) {
    std::istringstream in(line);
    std::string tag;
    int n;
    if (!(in >> tag >> n)) throw bad(line);
    std::string rest;
    std::getline(in, rest);
    g.listings[tag][n].push_back(trim(rest));
  });

  auto reg = open("registry.txt");
  lines(reg, [&](const std::string& line) {
    auto bar = line.find('|');
    if (bar == std::string::npos) throw bad(line);
    g.anchors[trim(line.substr(0, bar))] = trim(line.substr(bar + 1));
  });
  return g;
}

CheckResult verify(std::string_view id, int n_max, const Golden& golden) {
  const auto& info = check_info(id);
  if (n_max < 1) throw Error(ErrorCode::SizeCapExceeded, "n_max must be >= 1");
  CheckResult r;
  r.check_id = std::string(info.id);
  r.n_max = n_max;
  const auto start = std::chrono::steady_clock::now();
  Ctx c{r, golden};
  run_check(c, info.id, n_max);
  c.finish();
  r.elapsed = std::chrono::steady_clock::now() - start;
  if (info.report_only)
    r.status = Status::ReportOnly;
  else
    r.status = r.details.empty() ? Status::Pass : Status::Fail;
  return r;
}

CheckResult verify(std::string_view id, int n_max) { return verify(id, n_max, load_golden(default_golden_dir())); }

std::vector<CheckResult> verify_all(int n_max, const Golden& golden) {
  if (n_max < 1) throw Error(ErrorCode::SizeCapExceeded, "n_max must be >= 1");
  const auto& reg = registry();
  std::vector<CheckResult> out(reg.size());
  std::vector<std::exception_ptr> errors(reg.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < reg.size();) {
      try {
        out[i] = verify(reg[i].id, std::min(n_max, reg[i].default_n), golden);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    const int threads = std::min<int>(thread_count(), static_cast<int>(reg.size()));
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<CheckResult> verify_all(int n_max) { return verify_all(n_max, load_golden(default_golden_dir())); }

}  // namespace arnold
