#include "arnold/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "arnold/bijections.hpp"
#include "arnold/bin_tree.hpp"
#include "arnold/error.hpp"
#include "arnold/families.hpp"
#include "arnold/harness.hpp"
#include "arnold/json_io.hpp"
#include "arnold/stats.hpp"
#include "arnold/triangles.hpp"

namespace arnold {

namespace {

using nlohmann::json;

struct Options {
  std::string kind = "arnold";
  std::string family;
  std::string bijection;
  std::string format;
  std::string check;
  std::string golden_dir;
  int n = 0;
  int index = 0;
  int max_n = 0;
  bool with_stats = false;
  bool all = false;
};

void emit_triangle(const Options& o, std::ostream& out) {
  const bool jsonl = o.format == "jsonl";
  if (o.kind == "entringer") {
    auto e = entringer(o.n);
    for (int n = 1; n <= o.n; ++n) {
      if (!jsonl) out << "n=" << std::setw(2) << n << ":";
      for (int k = 1; k <= n; ++k) {
        if (jsonl)
          out << json{{"n", n}, {"k", k}, {"value", e[n - 1][k - 1]}}.dump() << '\n';
        else
          out << ' ' << e[n - 1][k - 1];
      }
      if (!jsonl) out << '\n';
    }
    return;
  }
  if (o.kind == "arnold") {
    for (const auto& row : arnold_numbers(o.n)) {
      if (jsonl) {
        for (int k = -row.n; k <= row.n; ++k)
          if (k != 0) out << json{{"n", row.n}, {"k", k}, {"value", row.at(k)}}.dump() << '\n';
        continue;
      }
      out << "n=" << std::setw(2) << row.n << ":";
      for (auto v : row.neg) out << ' ' << v;
      out << " |";
      for (auto v : row.pos) out << ' ' << v;
      out << "   K(D)=" << row_sum(row.neg) << " K(B)=" << row_sum(row.pos) << '\n';
    }
    return;
  }
  if (o.kind == "poly") {
    for (const auto& row : arnold_hoffman(o.n))
      for (int k = -row.n; k <= row.n; ++k) {
        if (k == 0) continue;
        if (jsonl)
          out << json{{"n", row.n}, {"k", k}, {"poly", to_json(row.at(k))}}.dump() << '\n';
        else
          out << "V(" << row.n << "," << k << ") = " << row.at(k).to_string() << '\n';
      }
    return;
  }
  throw Error(ErrorCode::ParseError, "unknown --kind " + o.kind);
}

json stats_json(const SignedPerm& p, const std::optional<CycleForm>& cycles) {
  json s{{"neg", stat_neg(p)}, {"spk", stat_spk(p)}, {"smax", stat_smax(p)}, {"npk", nullptr}};
  try {
    s["npk"] = stat_npk(cycles ? *cycles : cycle_form(p));
  } catch (const Error&) {
  }
  return s;
}

std::string csv_field(const std::string& s) { return "\"" + s + "\""; }

void emit_trees(const Options& o, std::ostream& out) {
  const TreeKind want = o.family == "trees-o" ? TreeKind::Circle : TreeKind::Star;
  if (o.index != 0 && (o.index < 1 || o.index > o.n))
    throw Error(ErrorCode::IndexOutOfRange, "--index " + std::to_string(o.index));
  if (o.format == "csv") out << "index,tree,emp\n";
  for (const auto& t : gen_trees(o.n)) {
    auto cl = classify(t);
    if (cl.kind != want || (o.index != 0 && cl.rightmost_label != o.index)) continue;
    if (o.format == "csv")
      out << cl.rightmost_label << ',' << csv_field(t.to_string()) << ',' << cl.emp << '\n';
    else
      out << json{{"tree", to_json(t)}, {"index", cl.rightmost_label}, {"emp", cl.emp}}.dump() << '\n';
  }
}

void emit_family(const Options& o, std::ostream& out) {
  if (o.family == "trees-o" || o.family == "trees-s") return emit_trees(o, out);
  const FamilyId f = parse_family(o.family);
  auto objs = o.index != 0 ? enumerate_indexed(f, o.n, o.index) : enumerate(f, o.n);
  const bool csv = o.format == "csv";
  if (csv) {
    out << "index,window,cycles";
    if (o.with_stats) out << ",neg,npk,spk,smax";
    out << '\n';
  }
  for (const auto& obj : objs) {
    if (csv) {
      out << obj.index << ',' << csv_field(obj.perm.to_string()) << ','
          << (obj.cycles ? csv_field(obj.cycles->to_string()) : "");
      if (o.with_stats) {
        auto s = stats_json(obj.perm, obj.cycles);
        out << ',' << s["neg"] << ',' << (s["npk"].is_null() ? "" : s["npk"].dump()) << ',' << s["spk"] << ','
            << s["smax"];
      }
      out << '\n';
      continue;
    }
    json j{{"window", to_json(obj.perm)}, {"index", obj.index}};
    if (obj.cycles) j["cycles"] = to_json(*obj.cycles)["cycles"];
    if (obj.cls) {
      json members = json::array();
      for (const auto& m : obj.cls->members) members.push_back(to_json(m));
      j["members"] = members;
    }
    if (o.with_stats) j["stats"] = stats_json(obj.perm, obj.cycles);
    out << j.dump() << '\n';
  }
}

void emit_map(const Options& o, std::ostream& out) {
  const std::string& b = o.bijection;
  FamilyId f;
  if (b == "cud-b")
    f = FamilyId::CudB;
  else if (b == "cud-d")
    f = FamilyId::CudD;
  else if (b == "vs-b")
    f = FamilyId::VsB;
  else if (b == "vs-d")
    f = FamilyId::VsD;
  else if (b == "flip")
    f = FamilyId::FlB;
  else
    throw Error(ErrorCode::UnknownFamily, "unknown --bijection " + b);

  auto write = [&](const json& source, const BinTree& t, int index) {
    out << json{{"source", source}, {"target", to_json(t)}, {"index", index}}.dump() << '\n';
  };
  if (b == "flip") {
    for (const auto& c : flip_classes(o.n)) {
      json members = json::array();
      for (const auto& m : c.members) members.push_back(to_json(m));
      write(json{{"canon", to_json(c.canon)}, {"members", members}, {"smax", c.smax}}, phi_f(c), std::abs(c.smax));
    }
    return;
  }
  for (const auto& obj : enumerate(f, o.n)) {
    switch (f) {
      case FamilyId::CudB: write(to_json(*obj.cycles), phi_cud_b(*obj.cycles), obj.index); break;
      case FamilyId::CudD: write(to_json(*obj.cycles), phi_cud_d(*obj.cycles), obj.index); break;
      case FamilyId::VsB: write(to_json(obj.perm), phi_vs_b(obj.perm), obj.index); break;
      default: write(to_json(obj.perm), phi_vs_d(obj.perm), obj.index); break;
    }
  }
}

std::string format_ms(std::chrono::nanoseconds ns) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << std::chrono::duration<double, std::milli>(ns).count() << " ms";
  return s.str();
}

int emit_verify(const Options& o, std::ostream& out) {
  Golden g = load_golden(o.golden_dir.empty() ? default_golden_dir() : std::filesystem::path(o.golden_dir));
  std::vector<CheckResult> results;
  if (o.all) {
    results = verify_all(o.max_n > 0 ? o.max_n : 100, g);
  } else {
    const auto& info = check_info(o.check);
    results.push_back(verify(info.id, o.max_n > 0 ? o.max_n : info.default_n, g));
  }
  bool failed = false;
  for (const auto& r : results) {
    failed |= r.status == Status::Fail;
    if (o.format == "jsonl") {
      out << to_json(r).dump() << '\n';
      continue;
    }
    out << std::left << std::setw(26) << r.check_id << " n=" << r.n_min << ".." << std::setw(3) << r.n_max
        << std::setw(12) << to_string(r.status) << std::right << std::setw(12) << format_ms(r.elapsed) << "  "
        << r.summary << '\n';
    for (const auto& d : r.details) out << "    " << d << '\n';
  }
  return failed ? 1 : 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arnold families: triangles, enumeration, bijections and verification"};
  app.require_subcommand(1);
  Options o;

  auto* tri = app.add_subcommand("triangle", "Print the Entringer, Arnold or Arnold-Hoffman triangle");
  tri->add_option("--kind", o.kind, "arnold | entringer | poly")->check(CLI::IsMember({"arnold", "entringer", "poly"}));
  tri->add_option("--n", o.n, "Number of rows")->required()->check(CLI::PositiveNumber);
  tri->add_option("--format", o.format, "table | jsonl")->check(CLI::IsMember({"table", "jsonl"}));

  auto* en = app.add_subcommand("enumerate", "List a family");
  std::vector<std::string> tags{"trees-o", "trees-s"};
  for (auto f : all_families()) tags.emplace_back(to_string(f));
  en->add_option("--family", o.family, "Family tag")->required()->check(CLI::IsMember(tags));
  en->add_option("--n", o.n, "Size")->required()->check(CLI::PositiveNumber);
  en->add_option("--index", o.index, "Only objects with this index");
  en->add_flag("--with-stats", o.with_stats, "Attach neg, npk, spk, smax");
  en->add_option("--format", o.format, "jsonl | csv")->check(CLI::IsMember({"jsonl", "csv"}));

  auto* mp = app.add_subcommand("map", "Apply a family-to-tree bijection");
  mp->add_option("--bijection", o.bijection, "cud-b | cud-d | vs-b | vs-d | flip")
      ->required()
      ->check(CLI::IsMember({"cud-b", "cud-d", "vs-b", "vs-d", "flip"}));
  mp->add_option("--n", o.n, "Size")->required()->check(CLI::PositiveNumber);
  mp->add_option("--format", o.format, "jsonl")->check(CLI::IsMember({"jsonl"}));

  auto* ve = app.add_subcommand("verify", "Run verification checks");
  auto* check_opt = ve->add_option("--check", o.check, "Check id");
  auto* all_opt = ve->add_flag("--all", o.all, "Run every registered check");
  check_opt->excludes(all_opt);
  ve->add_option("--max-n", o.max_n, "Largest n")->check(CLI::PositiveNumber);
  ve->add_option("--format", o.format, "table | jsonl")->check(CLI::IsMember({"table", "jsonl"}));
  ve->add_option("--golden-dir", o.golden_dir, "Directory with expected values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (tri->parsed()) {
      if (o.format.empty()) o.format = "table";
      emit_triangle(o, out);
    } else if (en->parsed()) {
      if (o.format.empty()) o.format = "jsonl";
      emit_family(o, out);
    } else if (mp->parsed()) {
      emit_map(o, out);
    } else if (ve->parsed()) {
      if (!o.all && o.check.empty()) {
        err << "verify: give --check <id> or --all\n";
        return 2;
      }
      if (o.format.empty()) o.format = "table";
      return emit_verify(o, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace arnold
