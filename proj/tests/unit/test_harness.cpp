#include <doctest.h>

#include <set>

#include "arnold/error.hpp"
#include "arnold/harness.hpp"
#include "arnold/json_io.hpp"

using namespace arnold;

TEST_CASE("registry and anchors agree") {
  auto g = load_golden(default_golden_dir());
  std::set<std::string> ids;
  for (const auto& c : registry()) {
    ids.insert(std::string(c.id));
    CHECK_MESSAGE(g.anchors.count(std::string(c.id)) == 1, c.id);
    CHECK(c.default_n >= 1);
  }
  for (const auto& [id, claim] : g.anchors) {
    CHECK_MESSAGE(ids.count(id) == 1, id);
    CHECK_FALSE(claim.empty());
  }
  CHECK(ids.size() == registry().size());
}

TEST_CASE("golden data loads") {
  auto g = load_golden(default_golden_dir());
  CHECK(g.arnold.at({5, 1}) == 57);
  CHECK(g.arnold.at({5, -5}) == 0);
  CHECK(g.springer.at({'B', 5}) == 361);
  CHECK(g.polys.at({4, -3}) == LaurentPoly::parse("2t+2t^3"));
  CHECK(g.listings.at("vs-d").at(3).size() == 5);
  CHECK(g.listings.at("cud-b").at(3).size() == 11);
  CHECK_THROWS_AS(load_golden("/nonexistent/golden"), Error);
}

TEST_CASE("unknown check and bad ceiling") {
  CHECK_THROWS_AS(check_info("no-such-check"), Error);
  CHECK_THROWS_AS(verify("no-such-check", 3), Error);
  CHECK_THROWS_AS(verify_all(0), Error);
}

TEST_CASE("everything passes at n=1") {
  auto rs = verify_all(1);
  REQUIRE(rs.size() == registry().size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    CHECK(rs[i].check_id == registry()[i].id);
    CHECK(rs[i].n_max == 1);
    CHECK_MESSAGE(rs[i].status != Status::Fail, rs[i].check_id);
  }
}

TEST_CASE("single checks") {
  auto r = verify("table-arnold", 5);
  CHECK(r.status == Status::Pass);
  CHECK(r.n_min == 1);
  CHECK(r.n_max == 5);
  CHECK(r.details.empty());

  auto cud = verify("thm-cud", 4);
  CHECK(cud.status == Status::Fail);
  CHECK_FALSE(cud.details.empty());
  CHECK(verify("thm-cud", 3).status == Status::Pass);

  auto rep = verify("report-emp-npk-perobject", 4);
  CHECK(rep.status == Status::ReportOnly);

  auto j = to_json(r);
  CHECK(j["status"] == "pass");
  CHECK(j["check_id"] == "table-arnold");
}

TEST_CASE("tampered golden values are caught") {
  auto g = load_golden(default_golden_dir());
  g.arnold[{4, 2}] += 1;
  CHECK(verify("table-arnold", 5, g).status == Status::Fail);
  auto h = load_golden(default_golden_dir());
  h.polys[{3, 1}] = LaurentPoly::parse("5t^2");
  CHECK(verify("table-polys", 5, h).status == Status::Fail);
}
