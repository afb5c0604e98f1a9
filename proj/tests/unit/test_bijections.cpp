#include <doctest.h>

#include <algorithm>
#include <set>

#include "arnold/bijections.hpp"
#include "arnold/bin_tree.hpp"
#include "arnold/error.hpp"
#include "arnold/families.hpp"
#include "arnold/laurent_poly.hpp"
#include "arnold/stats.hpp"
#include "arnold/triangles.hpp"

using namespace arnold;

namespace {

std::string np(std::vector<int> a) { return algo1(a).to_string(); }

}  // namespace

TEST_CASE("double bracket and complement") {
  std::vector<int> a{1, 3, 2}, b{9, 8}, c{7, 4, 9, 8}, d{2, 6, 3}, e{5};
  CHECK(double_bracket(a) == DoubleBracket{{}, 1, {3, 2}});
  CHECK(double_bracket(b) == DoubleBracket{{9}, 8, {}});
  CHECK(double_bracket(c) == DoubleBracket{{7}, 4, {9, 8}});
  CHECK(complement(b) == std::vector<int>{8, 9});
  CHECK(complement(d) == std::vector<int>{6, 2, 3});
  CHECK(complement(e) == std::vector<int>{5});
}

TEST_CASE("algorithm 1") {
  CHECK(np({1, 3, 2}) == "(1(2(3)))");
  CHECK(np({5, 6}) == "(5(6))");
  CHECK(np({7, 9, 8}) == "(7(8(9)))");
  CHECK(np({1, 9, 2}) == "(1(2(9)))");
  CHECK(np({5, 8, 6}) == "(5(6(8)))");
  CHECK(np({4}) == "(4)");
}

TEST_CASE("algorithm 2") {
  CHECK(algo2(Cycle{{1, -3, -2}, false}).to_string() == "1(2(.,3),.)");
  CHECK(algo2(Cycle{{4}, false}).to_string() == "4(.,.)");
  CHECK(algo2(Cycle{{5, -6}, false}).to_string() == "5(6,.)");
  CHECK_THROWS_AS(algo2(Cycle{{-1, 2}, false}), Error);
}

TEST_CASE("cycle-up-down maps on the running examples") {
  auto b = phi_cud_b(parse_cycle_form("(1,-3,-2)(4)(5,-6)(7,9,-8)"));
  CHECK(b.to_string() == "1(2(.,3),4(.,5(6,7(8(.,9(.,.)),.))))");
  CHECK(classify(b) == TreeClass{TreeKind::Circle, 7, 6});
  CHECK(is_valid_tree(b, 9));

  auto d = phi_cud_d(parse_cycle_form("(1,-9,-2)(3,4)(5,8,-6)(7,-7)"));
  CHECK(is_valid_tree(d, 9));
  CHECK(classify(d).kind == TreeKind::Star);
  CHECK(classify(d).rightmost_label == 7);

  CHECK(phi_cud_b(parse_cycle_form("(1)")).to_string() == "1(.,.)");
  CHECK_THROWS_AS(phi_cud_b(parse_cycle_form("(1,2,3)")), Error);
  CHECK_THROWS_AS(phi_cud_d(parse_cycle_form("(1)(2)")), Error);
}

TEST_CASE("algorithm 3 and valley maps") {
  std::vector<int> a{7, 5, 1, 3, 4, 2, 6}, m{3};
  CHECK(algo3(a).to_string() == "1(2(6(.,.),3(4(.,.),.)),5(.,7(.,.)))");
  CHECK(algo3(m).to_string() == "3(.,.)");

  auto b = phi_vs_b(from_window({7, 5, -6, 8, 9, 4, 1, -3, 2}));
  CHECK(is_valid_tree(b, 9));
  CHECK(classify(b).kind == TreeKind::Circle);
  CHECK(classify(b).rightmost_label == 7);
  // the empty children of 9 and 3 are removed
  CHECK(b.emp() == 10 - 4);

  auto d = phi_vs_d(from_window({-7, 5, 8, 6, 3, 4, 1, -9, 2}));
  CHECK(is_valid_tree(d, 9));
  CHECK(classify(d).kind == TreeKind::Star);
  CHECK(classify(d).rightmost_label == 7);

  CHECK(phi_vs_b(from_window({1})).to_string() == "1(.,.)");
  CHECK_THROWS_AS(phi_vs_b(from_window({-1})), Error);
}

TEST_CASE("flip map") {
  for (const auto& c : flip_classes(3)) {
    if (std::find(c.members.begin(), c.members.end(), from_window({1, -2, 3})) == c.members.end()) continue;
    CHECK(c.members.size() == 4);
    for (const auto& m : c.members) CHECK(tau_flip(m).to_string() == "1(2(.,3(.,.)),.)");
    CHECK(classify(phi_f(c)) == TreeClass{TreeKind::Circle, 1, 4});
  }
  int seen = 0;
  for (const auto& c : flip_classes(4))
    if (std::find(c.members.begin(), c.members.end(), from_window({-2, -4, 1, -3})) != c.members.end()) {
      ++seen;
      CHECK(c.members.size() == 4);
      CHECK(c.smax == -3);
      auto t = phi_f(c);
      CHECK(classify(t).kind == TreeKind::Star);
      CHECK(classify(t).rightmost_label == 3);
    }
  CHECK(seen == 1);
  CHECK(tau_flip(from_window({-1})).to_string() == "1");
}

TEST_CASE("maps are injective and land in the right class") {
  for (int n = 1; n <= 5; ++n) {
    struct Case {
      FamilyId f;
      TreeKind kind;
    };
    for (auto [f, kind] : {Case{FamilyId::CudB, TreeKind::Circle}, Case{FamilyId::CudD, TreeKind::Star},
                           Case{FamilyId::VsB, TreeKind::Circle}, Case{FamilyId::VsD, TreeKind::Star},
                           Case{FamilyId::FlB, TreeKind::Circle}, Case{FamilyId::FlD, TreeKind::Star}}) {
      std::set<BinTree> images;
      auto objs = enumerate(f, n);
      for (const auto& o : objs) {
        BinTree t;
        switch (f) {
          case FamilyId::CudB: t = phi_cud_b(*o.cycles); break;
          case FamilyId::CudD: t = phi_cud_d(*o.cycles); break;
          case FamilyId::VsB: t = phi_vs_b(o.perm); break;
          case FamilyId::VsD: t = phi_vs_d(o.perm); break;
          default: t = phi_f(*o.cls); break;
        }
        CHECK(is_valid_tree(t, n));
        auto c = classify(t);
        CHECK(c.kind == kind);
        CHECK(c.rightmost_label == o.index);
        images.insert(t);
      }
      CHECK(images.size() == objs.size());
    }
  }
}

TEST_CASE("flip map sends spk to emp") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : flip_classes(n)) CHECK(phi_f(c).emp() == n - 2 * c.spk + 1);
}
