#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "zipdata/report.hpp"
#include "zipdata/witt.hpp"
#include "zipdata/zoo.hpp"

using namespace zipdata;

TEST_CASE("membership digests are FNV-1a over keys") {
  auto s3 = PermutationGroup::symmetric(3);
  CHECK(digest_hex(membership_digest(Subgroup::trivial(s3))) == "09ee0a17f6bfd9f0");
  CHECK(digest_hex(membership_digest(closure(s3, std::vector<Elem>{s3->parse("(1,2)")}))) ==
        "c709e1b1e7a8ad2a");
}

TEST_CASE("reports are deterministic across independent builds") {
  for (auto [p, n] : {std::pair{2, 2}, {2, 3}}) {
    WittZip a = build_witt_zip({p, n});
    WittZip b = build_witt_zip({p, n});
    CHECK(classes_report(zip_classes(a.datum), "w") == classes_report(zip_classes(b.datum), "w"));
    CHECK(forest_report(build_forest(a.datum), "w") == forest_report(build_forest(b.datum), "w"));
    CHECK(forest_dot(build_forest(a.datum)) == forest_dot(build_forest(b.datum)));
    CHECK(trace_report(refine_to_stationary(a.datum), "w") == trace_report(refine_to_stationary(b.datum), "w"));
  }
}

TEST_CASE("classes report content") {
  WittZip w = build_witt_zip({2, 2});
  auto j = nlohmann::json::parse(classes_report(zip_classes(w.datum), "witt"));
  CHECK(j["schema_version"] == report_schema_version);
  CHECK(j["kind"] == "classes");
  CHECK(j["relation"] == "zip-coarse");
  CHECK(j["class_count"] == 2);
  std::size_t total = 0;
  for (const auto& c : j["classes"]) {
    total += c["members"].size();
    CHECK(c["witness"] == c["members"][0]);
  }
  CHECK(total == 6);
  auto fine = nlohmann::json::parse(classes_report(fine_orbits(w.datum), "witt"));
  CHECK(fine["kind"] == "orbits");
}

TEST_CASE("trace and infinity reports") {
  WittZip w = build_witt_zip({2, 3});
  auto trace = refine_to_stationary(w.datum);
  auto t = nlohmann::json::parse(trace_report(trace, "witt"));
  CHECK(t["stationary_index"] == 2);
  CHECK(t["stages"].size() == 4);
  CHECK(t["stages"][0]["E"]["order"] == 512);
  CHECK(t["stages"][2]["G"]["order"] == 16);
  auto inf = nlohmann::json::parse(infinity_report(trace, "witt"));
  CHECK(inf["E_infinity"]["order"] == 128);
  CHECK(inf["E_infinity"]["equals_E"] == false);
  CHECK(inf["G_infinity"]["members"].size() == 16);
  auto surjective = find_zoo_entry("tau-surjective");
  auto s = nlohmann::json::parse(infinity_report(refine_to_stationary(surjective->datum), "s"));
  CHECK(s["E_infinity"]["equals_E"] == true);
}

TEST_CASE("forest DOT output") {
  auto entry = find_zoo_entry("s4-s3-inclusion");
  RepForest f = build_forest(entry->datum);
  const std::string dot = forest_dot(f);
  CHECK(dot.rfind("digraph forest {\n", 0) == 0);
  CHECK(dot.find("rank=source") != std::string::npos);
  std::istringstream in(dot);
  std::string line;
  std::set<std::string> ids;
  std::size_t edges = 0;
  while (std::getline(in, line)) {
    if (line.find(" -> ") != std::string::npos) ++edges;
    else if (line.find("[label=") != std::string::npos) ids.insert(line.substr(0, line.find(" [label=")));
  }
  CHECK(ids.size() == f.nodes().size());
  CHECK(edges == f.nodes().size() - f.roots().size());
  auto j = nlohmann::json::parse(forest_report(f, "s4"));
  CHECK(j["leaf_count"] == f.leaves().size());
  CHECK(j["stable_paths"].size() == f.leaves().size());
}

TEST_CASE("verification report") {
  auto entry = find_zoo_entry("borel-gl2f2");
  auto r = run_verification(entry->datum);
  CHECK(r.all_passed());
  auto j = nlohmann::json::parse(verification_report(r, "borel"));
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == r.checks.size());
  auto z = nlohmann::json::parse(zoo_report({{"borel", r}}));
  CHECK(z["entries"][0]["label"] == "borel");
}
