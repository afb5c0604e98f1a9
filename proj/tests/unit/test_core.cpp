#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "arnold/checked.hpp"
#include "arnold/error.hpp"
#include "arnold/families.hpp"
#include "arnold/signed_perm.hpp"
#include "arnold/stats.hpp"

using namespace arnold;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an arnold::Error");
  return ErrorCode::InvariantViolation;
}

std::vector<int> values_at(const std::vector<int>& a, const std::vector<int>& pos) {
  std::vector<int> v;
  for (int p : pos) v.push_back(a[static_cast<std::size_t>(p - 1)]);
  std::sort(v.begin(), v.end());
  return v;
}

// every signed permutation of size n, built by brute force
std::vector<std::vector<int>> all_signed(int n) {
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      auto w = base;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      out.push_back(w);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace

TEST_CASE("window validation") {
  auto p = from_window({2, -4, 3, 1});
  CHECK(p.n() == 4);
  CHECK(p[2] == -4);
  CHECK(p.apply(-2) == 4);
  CHECK(p.to_string() == "[2,-4,3,1]");
  CHECK(parse_window("[2,-4,3,1]") == p);
  CHECK(parse_window("2,-4,3,1") == p);

  CHECK(code_of([] { from_window({1, 1}); }) == ErrorCode::RepeatedAbsValue);
  CHECK(code_of([] { from_window({1, -1}); }) == ErrorCode::RepeatedAbsValue);
  CHECK(code_of([] { from_window({0, 1}); }) == ErrorCode::ZeroEntry);
  CHECK(code_of([] { from_window({1, 3}); }) == ErrorCode::AbsValueOutOfRange);
  CHECK(code_of([] { parse_window("[1,x]"); }) == ErrorCode::ParseError);
}

TEST_CASE("cycle form of the two running examples") {
  auto s1 = from_window({-2, -4, 3, 1, -6, -7, 5});
  auto c1 = cycle_form(s1);
  CHECK(c1.to_string() == "(1,-2,4)(3)(5,-6,7)");
  CHECK(is_special(c1));
  for (const auto& c : c1.cycles) CHECK_FALSE(c.bracket);

  auto s2 = from_window({-2, 4, -5, -1, 9, 6, 3, -8, 7});
  auto c2 = cycle_form(s2);
  CHECK(c2.to_string() == "(1,-2,-4)(3,-5,-9,-7,-3,5,9,7)(6)(8,-8)");
  REQUIRE(c2.cycles.size() == 4);
  CHECK_FALSE(c2.cycles[0].bracket);
  CHECK(c2.cycles[1].bracket);
  CHECK(c2.cycles[3].bracket);
  CHECK_FALSE(is_special(c2));

  auto id = cycle_form(from_window({1, 2, 3}));
  CHECK(id.to_string() == "(1)(2)(3)");
  CHECK(is_special(id));
}

TEST_CASE("cycle form round trip over all signed permutations up to 5") {
  for (int n = 1; n <= 5; ++n) {
    auto all = all_signed(n);
    CHECK(all.size() == signed_count(n));
    for (const auto& w : all) {
      auto p = from_window(std::span<const int>(w));
      auto c = cycle_form(p);
      CHECK(to_perm(c) == p);
      CHECK(parse_cycle_form(c.to_string()) == c);
      // each cycle follows the permutation
      for (const auto& cyc : c.cycles) {
        const auto& e = cyc.entries;
        for (std::size_t i = 0; i < e.size(); ++i) CHECK(p.apply(e[i]) == e[(i + 1) % e.size()]);
      }
    }
  }
}

TEST_CASE("malformed cycle forms are rejected") {
  CHECK(code_of([] { to_perm(parse_cycle_form("(1,2)(2)")); }) == ErrorCode::MalformedCycleForm);
  CHECK(code_of([] { to_perm(parse_cycle_form("(1)(3)")); }) == ErrorCode::MalformedCycleForm);
  CHECK(code_of([] { parse_cycle_form("(1,2"); }) == ErrorCode::ParseError);
}

TEST_CASE("valleys and peaks") {
  std::vector<int> a{5, 1, 3, 2, 4};
  CHECK(values_at(a, valleys(a)) == std::vector<int>{1, 2});
  std::vector<int> b{1, 2, 3};
  CHECK(valleys(b) == std::vector<int>{1});
  CHECK(peaks(b) == std::vector<int>{3});
  std::vector<int> c{7, 5, 1, 3, 4, 2, 6};
  // 5 sits between 7 and 1, so it is not a valley
  CHECK(values_at(c, valleys(c)) == std::vector<int>{1, 2});
  CHECK(values_at(c, peaks(c)) == std::vector<int>{4, 6});
  std::vector<int> one{1};
  CHECK(valleys(one).empty());
  CHECK(peaks(one).empty());
}

TEST_CASE("neg") {
  CHECK(stat_neg(from_window({-7, 4, 2, 8, 1, -5, 3, -9, 10, 6})) == 3);
  CHECK(stat_neg(from_window({1, 2, 3})) == 0);
  CHECK(stat_neg(from_window({-1, -2})) == 2);
}

TEST_CASE("npk") {
  CHECK(stat_npk(parse_cycle_form("(1,-3,-2)(4)(5,-6)(7,9,-8)")) == 2);
  CHECK(stat_npk(parse_cycle_form("(1,-9,-2)(3,4)(5,8,-6)(7,-7)")) == 2);
  CHECK(stat_npk(parse_cycle_form("(1)(2)(3)")) == 0);
  CHECK(code_of([] { stat_npk(parse_cycle_form("(1,-1)(2)")); }) == ErrorCode::MalformedCudCycleForm);
}

TEST_CASE("spk") {
  CHECK(stat_spk(from_window({2, -1, 3, -4})) == 1);
  CHECK(stat_spk(from_window({1, 2, 3})) == 0);
  CHECK(stat_spk(from_window({1, -2, 3})) == 0);
  CHECK(stat_spk(from_window({-1})) == 1);
}

TEST_CASE("smax") {
  std::vector<int> w{2, 7, -8, 1, 6, -9, -3, -4, 5};
  CHECK(stat_smax(w) == 5);
  CHECK(stat_smax(from_window({2, -1, 3, -4})) == 2);
  CHECK(stat_smax(from_window({-1})) == -1);
  CHECK(stat_smax(from_window({1})) == 1);
  std::vector<int> none;
  CHECK(code_of([&] { stat_smax(none); }) == ErrorCode::MalformedSequence);
}

TEST_CASE("smax and spk are constant along legal flips") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_signed(n)) {
      const int s = stat_smax(w), k = stat_spk(w);
      for (int j = 1; j <= n; ++j) {
        if (!is_legal_flip(w, j)) continue;
        auto v = w;
        std::reverse(v.begin(), v.begin() + j);
        CHECK(stat_smax(v) == s);
        CHECK(stat_spk(v) == k);
      }
    }
}

TEST_CASE("left-to-right minima") {
  std::vector<int> a{7, 5, 1, 3, 4, 2, 6};
  CHECK(left_to_right_minima(a) == std::vector<int>{7, 5, 1});
  std::vector<int> b{1, 2, 3}, c{3, 2, 1};
  CHECK(left_to_right_minima(b) == std::vector<int>{1});
  CHECK(left_to_right_minima(c) == std::vector<int>{3, 2, 1});
}

TEST_CASE("stat report") {
  auto r = stat_report(from_window({-2, -4, 3, 1, -6, -7, 5}));
  CHECK(r.at("neg") == 4);
  CHECK(r.count("npk") == 1);
  auto q = stat_report(from_window({-2, 4, -5, -1, 9, 6, 3, -8, 7}));
  CHECK(q.count("npk") == 0);
  CHECK(q.at("ltr-min") == 2);
}

TEST_CASE("checked arithmetic") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(code_of([&] { checked_add(big, 1); }) == ErrorCode::Overflow);
  CHECK(code_of([&] { checked_mul(big, 2); }) == ErrorCode::Overflow);
  CHECK(code_of([&] { checked_sub(-big, 2); }) == ErrorCode::Overflow);
}
