#include "arnold/json_io.hpp"

#include <string>

#include "arnold/error.hpp"

namespace arnold {

using nlohmann::json;

json to_json(const SignedPerm& p) { return p.window(); }

json to_json(const Cycle& c) { return {{"entries", c.entries}, {"bracket", c.bracket}}; }

json to_json(const CycleForm& c) {
  json cycles = json::array();
  for (const auto& cyc : c.cycles) cycles.push_back(to_json(cyc));
  return {{"cycles", cycles}};
}

namespace {

json tree_at(const std::vector<int>& code, std::size_t& pos) {
  const int x = code[pos++];
  if (x == 0) return nullptr;
  if (x < 0) return {{"label", -x}};
  json left = tree_at(code, pos);
  json right = tree_at(code, pos);
  return {{"label", x}, {"left", std::move(left)}, {"right", std::move(right)}};
}

BinTree tree_of(const json& j) {
  if (j.is_null()) return BinTree::empty();
  if (!j.is_object() || !j.contains("label")) throw Error(ErrorCode::ParseError, "bad tree json " + j.dump());
  const int label = j.at("label").get<int>();
  const bool has_left = j.contains("left"), has_right = j.contains("right");
  if (!has_left && !has_right) return BinTree::leaf(label);
  if (!has_left || !has_right) throw Error(ErrorCode::ParseError, "node needs both children: " + j.dump());
  return BinTree::node(label, tree_of(j.at("left")), tree_of(j.at("right")));
}

}  // namespace

json to_json(const BinTree& t) {
  std::size_t pos = 0;
  return tree_at(t.code(), pos);
}

json to_json(const LaurentPoly& p) {
  json j = json::object();
  for (auto [e, c] : p.coeffs()) j[std::to_string(e)] = c;
  return j;
}

json to_json(const CheckResult& r) {
  return {{"check_id", r.check_id},
          {"n_range", {r.n_min, r.n_max}},
          {"status", std::string(to_string(r.status))},
          {"summary", r.summary},
          {"details", r.details},
          {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()}};
}

SignedPerm perm_from_json(const json& j) {
  try {
    return from_window(j.get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

CycleForm cycle_form_from_json(const json& j) {
  try {
    CycleForm c;
    for (const auto& cyc : j.at("cycles"))
      c.cycles.push_back({cyc.at("entries").get<std::vector<int>>(), cyc.value("bracket", false)});
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

BinTree tree_from_json(const json& j) {
  try {
    return tree_of(j);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

LaurentPoly poly_from_json(const json& j) {
  try {
    LaurentPoly p;
    for (const auto& [e, c] : j.items()) p.add_term(std::stoi(e), c.get<std::int64_t>());
    return p;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace arnold
