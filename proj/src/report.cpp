#include "zipdata/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace zipdata {

namespace {

using nlohmann::ordered_json;

ordered_json subgroup_summary(const Subgroup& s) {
  ordered_json j;
  j["order"] = s.order();
  j["digest"] = digest_hex(membership_digest(s));
  return j;
}

ordered_json datum_summary(const ZipDatum& z, std::string_view label) {
  ordered_json j;
  j["label"] = label;
  j["E_backend"] = to_string(z.e_group().backend());
  j["G_backend"] = to_string(z.g_group().backend());
  j["E"] = subgroup_summary(z.e());
  j["G"] = subgroup_summary(z.g());
  j["twist"] = z.g_group().format(z.twist_element());
  return j;
}

ordered_json header(std::string_view kind) {
  ordered_json j;
  j["schema_version"] = report_schema_version;
  j["kind"] = kind;
  return j;
}

std::string finish(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::uint64_t membership_digest(const Subgroup& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Elem m : s.members()) {
    for (unsigned char c : s.ambient().format(m) + "\n") {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

std::string trace_report(const RefinementTrace& trace, std::string_view label) {
  ordered_json j = header("refinement-trace");
  j["datum"] = datum_summary(trace.base(), label);
  j["stationary_index"] = trace.stationary_index();
  ordered_json stages = ordered_json::array();
  for (std::size_t i = 0; i < trace.stages().size(); ++i) {
    ordered_json s;
    s["index"] = i;
    s["E"] = subgroup_summary(trace.stages()[i].e);
    s["G"] = subgroup_summary(trace.stages()[i].g);
    stages.push_back(std::move(s));
  }
  j["stages"] = std::move(stages);
  return finish(j);
}

std::string infinity_report(const RefinementTrace& trace, std::string_view label) {
  ordered_json j = header("infinity");
  const ZipDatum& z = trace.base();
  j["datum"] = datum_summary(z, label);
  j["stationary_index"] = trace.stationary_index();
  auto members = [](const Subgroup& s) {
    ordered_json list = ordered_json::array();
    for (Elem m : s.members()) list.push_back(s.ambient().format(m));
    return list;
  };
  ordered_json e = subgroup_summary(trace.e_infinity());
  e["equals_E"] = trace.e_infinity() == z.e();
  e["members"] = members(trace.e_infinity());
  ordered_json g = subgroup_summary(trace.g_infinity());
  g["equals_G"] = trace.g_infinity() == z.g();
  g["members"] = members(trace.g_infinity());
  j["E_infinity"] = std::move(e);
  j["G_infinity"] = std::move(g);
  return finish(j);
}

std::string classes_report(const ClassReport& report, std::string_view label) {
  const FiniteGroup& G = report.datum().g_group();
  ordered_json j = header(report.relation() == Relation::zip_coarse ? "classes" : "orbits");
  j["relation"] = to_string(report.relation());
  j["datum"] = datum_summary(report.datum(), label);
  j["class_count"] = report.size();
  ordered_json classes = ordered_json::array();
  for (const auto& c : report.classes()) {
    ordered_json k;
    k["witness"] = G.format(c.witness);
    k["size"] = c.members.size();
    if (c.e_infinity) k["E_infinity"] = subgroup_summary(*c.e_infinity);
    if (c.g_infinity) k["G_infinity"] = subgroup_summary(*c.g_infinity);
    ordered_json members = ordered_json::array();
    for (Elem m : c.members) members.push_back(G.format(m));
    k["members"] = std::move(members);
    classes.push_back(std::move(k));
  }
  j["classes"] = std::move(classes);
  return finish(j);
}

std::string forest_report(const RepForest& forest, std::string_view label) {
  const FiniteGroup& G = forest.datum().g_group();
  ordered_json j = header("forest");
  j["datum"] = datum_summary(forest.datum(), label);
  j["stationary_generation"] = forest.stationary_generation();
  j["root_count"] = forest.roots().size();
  j["leaf_count"] = forest.leaves().size();
  j["identity_overrides"] = forest.identity_overrides();
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < forest.nodes().size(); ++i) {
    const auto& n = forest.node(i);
    ordered_json k;
    k["id"] = i;
    k["generation"] = n.generation;
    k["element"] = G.format(n.element);
    k["parent"] = n.parent ? ordered_json(*n.parent) : ordered_json(nullptr);
    k["accumulated"] = G.format(n.accumulated);
    k["stable"] = n.stable;
    k["children"] = n.children;
    nodes.push_back(std::move(k));
  }
  j["nodes"] = std::move(nodes);
  ordered_json paths = ordered_json::array();
  for (std::size_t leaf : forest.leaves()) {
    ordered_json path = ordered_json::array();
    for (Elem r : forest.path_to(leaf).entries) path.push_back(G.format(r));
    paths.push_back(std::move(path));
  }
  j["stable_paths"] = std::move(paths);
  return finish(j);
}

std::string verification_report(const VerificationReport& report, std::string_view label) {
  ordered_json j = header("verify");
  j["label"] = label;
  j["passed"] = report.all_passed();
  j["fine_class_count"] = report.fine_class_count;
  j["coarse_class_count"] = report.coarse_class_count;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json k;
    k["name"] = c.name;
    k["passed"] = c.passed;
    if (!c.detail.empty()) k["detail"] = c.detail;
    checks.push_back(std::move(k));
  }
  j["checks"] = std::move(checks);
  return finish(j);
}

std::string zoo_report(const std::vector<std::pair<std::string, VerificationReport>>& results) {
  ordered_json j = header("zoo");
  bool all = true;
  ordered_json entries = ordered_json::array();
  for (const auto& [name, r] : results) {
    all = all && r.all_passed();
    entries.push_back(ordered_json::parse(verification_report(r, name)));
  }
  j["passed"] = all;
  j["entries"] = std::move(entries);
  return finish(j);
}

std::string forest_dot(const RepForest& forest) {
  const FiniteGroup& G = forest.datum().g_group();
  std::vector<std::string> ids(forest.nodes().size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& n = forest.node(i);
    ids[i] = (n.parent ? ids[*n.parent] + "/" : std::string{}) + G.format(n.element);
  }
  std::string out = "digraph forest {\n  rankdir=TB;\n  { rank=source;";
  for (std::size_t r : forest.roots()) out += " " + dot_quote(ids[r]) + ";";
  out += " }\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& n = forest.node(i);
    out += "  " + dot_quote(ids[i]) + " [label=" + dot_quote(G.format(n.element)) +
           (n.stable ? ", peripheries=2" : "") + "];\n";
  }
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (const auto& n = forest.node(i); n.parent)
      out += "  " + dot_quote(ids[*n.parent]) + " -> " + dot_quote(ids[i]) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace zipdata
