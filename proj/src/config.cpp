#include "zipdata/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zipdata/errors.hpp"
#include "zipdata/witt.hpp"
#include "zipdata/zoo.hpp"

namespace zipdata {

namespace {

using nlohmann::json;

struct Loader {
  LoadOptions options;

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    throw config_error(path, message);
  }

  const json& field(const json& obj, const std::string& path, const char* key) const {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
  }

  template <class T>
  T get(const json& obj, const std::string& path, const char* key) const {
    const json& v = field(obj, path, key);
    try {
      return v.get<T>();
    } catch (const json::exception&) {
      fail(path + "." + key, "has the wrong type");
    }
  }

  // Runs f, prefixing library errors with the JSON path.
  template <class F>
  auto at(const std::string& path, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const config_error&) {
      throw;
    } catch (const invalid_homomorphism& ex) {
      throw invalid_homomorphism(path + ": " + ex.what());
    } catch (const input_error& ex) {
      fail(path, ex.what());
    } catch (const resource_limit& ex) {
      throw resource_limit(path + ": " + ex.what());
    }
  }

  Elem element(const FiniteGroup& g, const json& v, const std::string& path) const {
    if (!v.is_string()) fail(path, "expected an element literal string");
    return at(path, [&] { return g.parse(v.get<std::string>()); });
  }

  GroupPtr group(const json& spec, const std::string& path) const {
    const auto backend = get<std::string>(spec, path, "backend");
    GroupPtr g;
    if (backend == "cayley-table") {
      const auto table = get<std::vector<std::vector<Elem>>>(spec, path, "table");
      if (table.size() > options.max_order)
        throw resource_limit(path + ": Cayley table exceeds --max-order");
      g = at(path + ".table", [&] { return CayleyGroup::create(table); });
    } else if (backend == "permutation") {
      const auto degree = get<std::size_t>(spec, path, "degree");
      std::vector<PermutationGroup::Images> gens;
      if (spec.value("symmetric", false)) {
        gens = {};
        if (degree >= 2) {
          PermutationGroup::Images swap(degree), cycle(degree);
          for (std::size_t i = 0; i < degree; ++i) {
            swap[i] = static_cast<std::uint16_t>(i);
            cycle[i] = static_cast<std::uint16_t>((i + 1) % degree);
          }
          std::swap(swap[0], swap[1]);
          gens = {swap, cycle};
        }
      } else {
        const json& list = field(spec, path, "generators");
        if (!list.is_array()) fail(path + ".generators", "expected an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
          const std::string p = path + ".generators[" + std::to_string(i) + "]";
          if (!list[i].is_string()) fail(p, "expected cycle notation");
          gens.push_back(at(p, [&] { return PermutationGroup::parse_cycles(list[i].get<std::string>(), degree); }));
        }
      }
      g = at(path, [&] { return PermutationGroup::generated(degree, gens, options.max_order); });
    } else if (backend == "matrix-mod-m") {
      const auto dim = get<std::size_t>(spec, path, "dimension");
      const auto modulus = get<std::int64_t>(spec, path, "modulus");
      if (spec.value("general_linear", false)) {
        std::vector<MatrixGroup::Congruence> congruences;
        if (auto it = spec.find("congruences"); it != spec.end()) {
          if (!it->is_array()) fail(path + ".congruences", "expected an array");
          for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string p = path + ".congruences[" + std::to_string(i) + "]";
            congruences.push_back({get<std::size_t>((*it)[i], p, "row"), get<std::size_t>((*it)[i], p, "col"),
                                   get<std::int64_t>((*it)[i], p, "divisor")});
          }
        }
        g = at(path, [&] { return MatrixGroup::general_linear(dim, modulus, congruences, options.max_order); });
      } else {
        const json& list = field(spec, path, "generators");
        if (!list.is_array()) fail(path + ".generators", "expected an array");
        std::vector<MatrixGroup::Entries> gens;
        for (std::size_t i = 0; i < list.size(); ++i) {
          const std::string p = path + ".generators[" + std::to_string(i) + "]";
          if (!list[i].is_string()) fail(p, "expected a matrix literal");
          gens.push_back(at(p, [&] { return MatrixGroup::parse_entries(list[i].get<std::string>(), dim, modulus); }));
        }
        g = at(path, [&] { return MatrixGroup::generated(dim, modulus, gens, options.max_order); });
      }
    } else {
      fail(path + ".backend", "unknown backend \"" + backend + "\"");
    }
    if (g->order() > options.max_order)
      throw resource_limit(path + ": group order " + std::to_string(g->order()) + " exceeds --max-order");
    return g;
  }

  std::vector<std::pair<Elem, Elem>> pairs(const json& list, const GroupPtr& s, const GroupPtr& t,
                                           const std::string& path) const {
    if (!list.is_array()) fail(path, "expected an array of [source, image] pairs");
    std::vector<std::pair<Elem, Elem>> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string p = path + "[" + std::to_string(i) + "]";
      if (!list[i].is_array() || list[i].size() != 2) fail(p, "expected a [source, image] pair");
      out.emplace_back(element(*s, list[i][0], p + "[0]"), element(*t, list[i][1], p + "[1]"));
    }
    return out;
  }

  Homomorphism preset(const std::string& name, const json& spec, const GroupPtr& s, const GroupPtr& t,
                      const std::string& path) const {
    if (name == "identity") {
      if (s != t) fail(path, "identity needs target \"source\"");
      return Homomorphism::identity(s);
    }
    if (name == "trivial") return Homomorphism::trivial(s, t);
    if (name == "inclusion")
      return at(path, [&] {
        return Homomorphism::from_function(s, t, [&](Elem a) { return t->parse(s->format(a)); });
      });
    auto ms = std::dynamic_pointer_cast<const MatrixGroup>(s);
    auto mt = std::dynamic_pointer_cast<const MatrixGroup>(t);
    if (!ms || !mt || ms->dim() != mt->dim()) fail(path, name + " needs matrix groups of equal dimension");
    auto lookup = [&](MatrixGroup::Entries e) {
      auto found = mt->find(e);
      if (!found) throw input_error("image matrix is not in the target group");
      return *found;
    };
    const std::int64_t m = mt->modulus();
    if (ms->modulus() % m != 0) fail(path, "target modulus must divide source modulus");
    if (name == "reduction")
      return at(path, [&] {
        return Homomorphism::from_function(s, t, [&](Elem a) {
          MatrixGroup::Entries e(ms->entries(a).begin(), ms->entries(a).end());
          for (auto& v : e) v %= m;
          return lookup(e);
        });
      });
    if (name == "witt-sigma") {
      const auto p = get<std::int64_t>(spec, path, "p");
      if (ms->dim() != 2 || ms->modulus() != m * p) fail(path, "witt-sigma needs 2x2 matrices mod p^n -> p^(n-1)");
      return at(path, [&] {
        return Homomorphism::from_function(s, t, [&](Elem a) {
          auto e = ms->entries(a);
          if (e[2] % p != 0) throw input_error("lower-left entry not divisible by p");
          return lookup({e[0] % m, (p * e[1]) % m, (e[2] / p) % m, e[3] % m});
        });
      });
    }
    fail(path + ".name", "unknown preset \"" + name + "\"");
  }

  Homomorphism hom(const json& spec, const GroupPtr& s, const GroupPtr& t, const std::string& path) const {
    const auto kind = get<std::string>(spec, path, "kind");
    if (kind == "table") {
      auto images = pairs(field(spec, path, "images"), s, t, path + ".images");
      std::vector<Elem> table(s->order(), no_elem);
      for (auto [a, b] : images) {
        if (table[a] != no_elem && table[a] != b) fail(path + ".images", "element " + s->format(a) + " listed twice");
        table[a] = b;
      }
      for (Elem a = 0; a < table.size(); ++a)
        if (table[a] == no_elem) fail(path + ".images", "missing image of " + s->format(a));
      return at(path, [&] { return Homomorphism::from_table(s, t, table); });
    }
    if (kind == "generator-images") {
      auto images = pairs(field(spec, path, "images"), s, t, path + ".images");
      return at(path, [&] { return Homomorphism::from_generator_images(s, t, images); });
    }
    if (kind == "preset") return preset(get<std::string>(spec, path, "name"), spec, s, t, path);
    fail(path + ".kind", "unknown homomorphism kind \"" + kind + "\"");
  }

  Subgroup subgroup(const json& obj, const char* key, const GroupPtr& g, const std::string& path) const {
    auto it = obj.find(key);
    if (it == obj.end()) return Subgroup::whole(g);
    const std::string p = path + "." + key;
    if (!it->is_array()) fail(p, "expected an array of generators");
    std::vector<Elem> gens;
    for (std::size_t i = 0; i < it->size(); ++i)
      gens.push_back(element(*g, (*it)[i], p + "[" + std::to_string(i) + "]"));
    return closure(g, gens);
  }

  std::pair<ZipDatum, std::string> datum(const json& spec, const std::string& path) const {
    if (!spec.is_object()) fail(path, "expected an object");
    if (spec.contains("preset")) {
      const auto name = get<std::string>(spec, path, "preset");
      if (name != "witt") fail(path + ".preset", "unknown preset \"" + name + "\"");
      WittZipConfig c{get<std::int64_t>(spec, path, "p"), get<int>(spec, path, "n")};
      auto w = at(path, [&] { return build_witt_zip(c, options.max_order); });
      if (w.e_group->order() > options.max_order)
        throw resource_limit(path + ": E exceeds --max-order");
      return {std::move(w.datum), "witt p=" + std::to_string(c.p) + " n=" + std::to_string(c.n)};
    }
    if (spec.contains("zoo")) {
      const auto name = get<std::string>(spec, path, "zoo");
      auto entry = find_zoo_entry(name);
      if (!entry) fail(path + ".zoo", "unknown zoo entry \"" + name + "\"");
      return {std::move(entry->datum), "zoo " + name};
    }
    GroupPtr source = group(field(spec, path, "source"), path + ".source");
    const json& tspec = field(spec, path, "target");
    GroupPtr target = tspec.is_string() && tspec.get<std::string>() == "source"
                          ? source
                          : group(tspec, path + ".target");
    auto tau = std::make_shared<const Homomorphism>(hom(field(spec, path, "tau"), source, target, path + ".tau"));
    auto sigma = std::make_shared<const Homomorphism>(hom(field(spec, path, "sigma"), source, target, path + ".sigma"));
    Subgroup e = subgroup(spec, "E", source, path);
    Subgroup g = subgroup(spec, "G", target, path);
    return {at(path, [&] { return ZipDatum(std::move(e), std::move(g), tau, sigma, target->identity()); }),
            "explicit"};
  }
};

}  // namespace

ZipDatum apply_twist(const ZipDatum& z, std::string_view literal) {
  const Elem x = z.g_group().parse(literal);
  if (!z.g().contains(x)) throw input_error("twist element is not in G");
  return twist(z, x);
}

LoadedConfig load_config_text(std::string_view text, const LoadOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw config_error("$", std::string("malformed JSON: ") + ex.what());
  }
  Loader loader{options};
  if (!doc.is_object()) loader.fail("$", "expected an object");
  const int version = loader.get<int>(doc, "$", "schema_version");
  if (version != config_schema_version)
    loader.fail("$.schema_version", "unsupported version " + std::to_string(version));
  auto [z, label] = loader.datum(loader.field(doc, "$", "datum"), "$.datum");
  std::optional<std::string> twist_literal = options.twist;
  std::string twist_path = "--twist";
  if (!twist_literal && doc.contains("twist")) {
    twist_literal = loader.get<std::string>(doc, "$", "twist");
    twist_path = "$.twist";
  }
  if (twist_literal) z = loader.at(twist_path, [&] { return apply_twist(z, *twist_literal); });
  return {std::move(z), std::move(label), std::move(twist_literal)};
}

LoadedConfig load_config_file(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw config_error(path.string(), "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config_text(buf.str(), options);
}

}  // namespace zipdata
