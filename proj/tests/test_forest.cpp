#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zipdata/equivalence.hpp"
#include "zipdata/forest.hpp"
#include "zipdata/witt.hpp"
#include "zipdata/zoo.hpp"

using namespace zipdata;
using namespace testing_support;

namespace {

ZipDatum zoo_datum(std::string_view name) {
  auto entry = find_zoo_entry(name);
  REQUIRE(entry);
  return entry->datum;
}

ZipDatum refined_times(ZipDatum z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z = refine(z);
  return z;
}

void check_forest(const ZipDatum& z) {
  const FiniteGroup& G = z.g_group();
  RepForest f = build_forest(z);
  auto coarse = zip_classes(z);
  CHECK(parent_product_check(f));
  CHECK(root_class_count_check(f, coarse));
  CHECK(path_roundtrip_check(f));
  CHECK(limit_bijection_check(f, coarse));
  CHECK(f.leaves().size() == coarse.size());

  // Roots represent tau(E)\G/sigma(E).
  std::set<Elem> root_elements;
  for (std::size_t r : f.roots()) root_elements.insert(f.node(r).element);
  const auto roots = twisted_quotient(z).representatives;
  CHECK(root_elements == as_set(roots));

  for (std::size_t i = 0; i < f.nodes().size(); ++i) {
    const auto& n = f.node(i);
    const ZipDatum direct = refined_times(twist(z, n.accumulated), n.generation + 1);
    CHECK(f.node_datum(i) == direct);
    CHECK(n.stable == direct.tau_surjective());
    if (n.generation + 1 == f.generations().size()) {
      CHECK(n.children.empty());
      continue;
    }
    std::set<Elem> children;
    for (std::size_t c : n.children) children.insert(f.node(c).element);
    if (n.stable) {
      CHECK(children == std::set<Elem>{G.identity()});
    } else {
      CHECK(children == as_set(twisted_quotient(direct).representatives));
    }
  }
  for (Elem x : z.g().members()) {
    auto path = classify(f, x);
    CHECK(path.entries.size() == f.generations().size());
    CHECK(coarse.class_index(reconstruct(f, path)) == coarse.class_index(x));
    for (std::size_t k = 1; k < path.nodes.size(); ++k)
      CHECK(f.node(path.nodes[k]).parent == path.nodes[k - 1]);
  }
}

}  // namespace

TEST_CASE("surjective tau gives a single identity chain") {
  ZipDatum z = zoo_datum("tau-surjective");
  RepForest f = build_forest(z);
  REQUIRE(f.roots().size() == 1);
  CHECK(f.node(f.roots()[0]).element == z.g_group().identity());
  CHECK(f.node(f.roots()[0]).stable);
  CHECK(f.stationary_generation() == 0);
  CHECK(f.leaves().size() == 1);
  for (Elem x : z.g().members()) CHECK(classify(f, x).entries == std::vector<Elem>{z.g_group().identity()});
  ClassificationPath identity_path{{z.g_group().identity()}, {f.roots()[0]}};
  CHECK(reconstruct(f, identity_path) == z.g_group().identity());
}

TEST_CASE("trivial E makes every element a stable root") {
  ZipDatum z = zoo_datum("trivial-e");
  RepForest f = build_forest(z);
  CHECK(f.roots().size() == z.g().order());
  CHECK(f.stationary_generation() == 0);
  for (std::size_t r : f.roots()) CHECK(f.node(r).stable);
  for (Elem x : z.g().members()) {
    auto path = classify(f, x);
    CHECK(path.entries == std::vector<Elem>{x});
    CHECK(reconstruct(f, path) == x);
  }
}

TEST_CASE("Witt model p=2 n=2 has two stable roots") {
  WittZip w = build_witt_zip({2, 2});
  RepForest f = build_forest(w.datum);
  CHECK(f.roots().size() == 2);
  CHECK(f.leaves().size() == 2);
  CHECK(f.stationary_generation() == 0);
  const auto& G = w.datum.g_group();
  auto quotient = twisted_quotient(w.datum);
  const Elem antidiagonal = w.twist_element;
  auto path = classify(f, antidiagonal);
  REQUIRE(path.entries.size() == 1);
  CHECK(quotient.index_of(path.entries[0]) == quotient.index_of(antidiagonal));
  auto id_path = classify(f, G.identity());
  CHECK(quotient.index_of(id_path.entries[0]) == quotient.index_of(G.identity()));
  CHECK(id_path.entries != path.entries);
  check_forest(w.datum);
}

TEST_CASE("forest invariants on the zoo") {
  for (const auto& entry : build_small_zoo()) {
    CAPTURE(entry.name);
    check_forest(entry.datum);
  }
}

TEST_CASE("forest invariants on random permutation data") {
  auto s4 = PermutationGroup::symmetric(4);
  const std::vector<Elem> gens{s4->parse("(1,2)"), s4->parse("(1,2,3,4)")};
  std::mt19937_64 rng(41);
  std::size_t deep = 0;
  for (int round = 0; round < 60; ++round) {
    ZipDatum z = random_datum(s4, gens, rng);
    check_forest(z);
    deep += build_forest(z).stationary_generation() > 0;
  }
  // The sample must exercise forests deeper than one generation.
  CHECK(deep > 0);
}

TEST_CASE("a trivial quotient whose smallest key is not the identity") {
  // Z/2 with the identity labelled 1, so label 0 is key-minimal.
  auto c2 = CayleyGroup::create({{1, 0}, {0, 1}});
  REQUIRE(c2->identity() == 1);
  ZipDatum z = ZipDatum::from_homomorphisms(Homomorphism::identity(c2), Homomorphism::identity(c2));
  CHECK(twisted_quotient(z).identity_override);
  RepForest f = build_forest(z);
  CHECK(f.identity_overrides() == 1);
  REQUIRE(f.roots().size() == 1);
  CHECK(f.node(f.roots()[0]).element == 1);
  CHECK(limit_bijection_check(f, zip_classes(z)));
}

TEST_CASE("classify rejects elements outside G") {
  auto s4 = PermutationGroup::symmetric(4);
  auto id = std::make_shared<const Homomorphism>(Homomorphism::identity(s4));
  Subgroup s3 = closure(s4, std::vector<Elem>{s4->parse("(1,2)"), s4->parse("(1,2,3)")});
  ZipDatum z(s3, s3, id, id, s4->identity());
  RepForest f = build_forest(z);
  CHECK_THROWS_AS(classify(f, s4->parse("(1,4)")), input_error);
  CHECK_THROWS_AS(classify(f, 999), input_error);
}

TEST_CASE("forest invariants on random data over S4 x C2") {
  auto g = PermutationGroup::generated(6, {PermutationGroup::parse_cycles("(1,2)", 6),
                                           PermutationGroup::parse_cycles("(1,2,3,4)", 6),
                                           PermutationGroup::parse_cycles("(5,6)", 6)});
  REQUIRE(g->order() == 48);
  const std::vector<Elem> gens{g->parse("(1,2)"), g->parse("(1,2,3,4)"), g->parse("(5,6)")};
  std::mt19937_64 rng(42);
  for (int round = 0; round < 15; ++round) check_forest(random_datum(g, gens, rng));
}
