#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "support.hpp"
#include "zipdata/equivalence.hpp"
#include "zipdata/zoo.hpp"

using namespace zipdata;
using namespace testing_support;

namespace {

struct S4Fixture {
  std::shared_ptr<const PermutationGroup> s4 = PermutationGroup::symmetric(4);
  std::vector<Elem> gens{s4->parse("(1,2)"), s4->parse("(1,2,3,4)")};
  std::vector<Subgroup> subgroups = two_generated_subgroups(s4);
};

// G_inf of z as tau of the largest subgroup H of E with sigma(H) in tau(H).
std::set<Elem> g_infinity_oracle(const ZipDatum& z, const std::vector<Subgroup>& subgroups) {
  std::set<Elem> best_tau;
  std::size_t best = 0;
  for (const auto& h : subgroups) {
    if (!h.is_subset_of(z.e())) continue;
    std::set<Elem> tau_h;
    for (Elem e : h.members()) tau_h.insert(z.tau(e));
    bool ok = true;
    for (Elem e : h.members()) ok = ok && tau_h.count(z.sigma(e));
    if (ok && h.order() > best) {
      best = h.order();
      best_tau = tau_h;
    }
  }
  return best_tau;
}

// Classes straight from the definition, one o(x) per element.
std::set<std::set<Elem>> zip_class_oracle(const ZipDatum& z, const std::vector<Subgroup>& subgroups) {
  const FiniteGroup& G = z.g_group();
  std::set<std::set<Elem>> out;
  for (Elem x : z.g().members()) {
    const auto g_inf = g_infinity_oracle(twist(z, x), subgroups);
    std::set<Elem> cls;
    for (Elem e : z.e().members())
      for (Elem g : g_inf) cls.insert(G.mul(G.mul(G.mul(z.tau(e), g), x), G.inv(z.sigma(e))));
    out.insert(cls);
  }
  return out;
}

std::set<std::set<Elem>> fine_oracle(const ZipDatum& z) {
  const FiniteGroup& G = z.g_group();
  std::vector<std::size_t> parent(G.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Elem g : z.g().members())
    for (Elem e : z.e().members()) parent[find(g)] = find(z.act(e, g));
  std::map<std::size_t, std::set<Elem>> groups;
  for (Elem g : z.g().members()) groups[find(g)].insert(g);
  std::set<std::set<Elem>> out;
  for (auto& [root, members] : groups) out.insert(members);
  return out;
}

std::set<std::set<Elem>> as_partition(const ClassReport& r) {
  std::set<std::set<Elem>> out;
  for (const auto& c : r.classes()) out.insert(as_set(c.members));
  return out;
}

}  // namespace

TEST_CASE("zip classes match the definition on random data") {
  S4Fixture f;
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    ZipDatum z = random_datum(f.s4, f.gens, rng);
    auto coarse = zip_classes(z);
    CHECK(as_partition(coarse) == zip_class_oracle(z, f.subgroups));
    for (const auto& c : coarse.classes()) {
      CHECK(c.witness == c.members.front());
      REQUIRE(c.member_witnesses.size() == c.members.size());
      const Elem x = c.witness;
      const auto g_inf = g_infinity_oracle(twist(z, x), f.subgroups);
      for (std::size_t i = 0; i < c.members.size(); ++i) {
        auto [e, g] = c.member_witnesses[i];
        CHECK(g_inf.count(g));
        CHECK(c.members[i] == f.s4->mul(f.s4->mul(f.s4->mul(z.tau(e), g), x), f.s4->inv(z.sigma(e))));
      }
    }
  }
}

TEST_CASE("fine orbits match union-find and refine the coarse classes") {
  S4Fixture f;
  std::mt19937_64 rng(32);
  for (int round = 0; round < 40; ++round) {
    ZipDatum z = random_datum(f.s4, f.gens, rng);
    auto fine = fine_orbits(z);
    auto coarse = zip_classes(z);
    CHECK(as_partition(fine) == fine_oracle(z));
    CHECK(coarsening_check(fine, coarse));
    CHECK(fine.size() >= coarse.size());
    CHECK(fine.relation() == Relation::fine_orbit);
  }
}

TEST_CASE("trivial E and surjective tau") {
  auto zoo = build_small_zoo();
  auto entry = [&](std::string_view name) {
    for (auto& e : zoo)
      if (e.name == name) return e.datum;
    FAIL("missing zoo entry");
    return zoo.front().datum;
  };
  ZipDatum trivial = entry("trivial-e");
  CHECK(zip_classes(trivial).size() == trivial.g().order());
  CHECK(fine_orbits(trivial).size() == trivial.g().order());
  ZipDatum surjective = entry("tau-surjective");
  CHECK(zip_classes(surjective).size() == 1);
  CHECK(zip_classes(entry("s4-sign-endomorphism")).size() == 1);
  CHECK(zip_classes(entry("c2cubed-endomorphism")).size() == 1);
}

TEST_CASE("fine orbits when tau equals sigma contain the fixed identity") {
  auto gl = MatrixGroup::general_linear(2, 2);
  std::vector<Elem> upper;
  for (Elem a = 0; a < gl->order(); ++a)
    if (gl->entries(a)[2] == 0) upper.push_back(a);
  auto id = std::make_shared<const Homomorphism>(Homomorphism::identity(gl));
  ZipDatum z(Subgroup::trusted(gl, upper), Subgroup::whole(gl), id, id, gl->identity());
  auto fine = fine_orbits(z);
  CHECK(as_partition(fine) == fine_oracle(z));
  CHECK(fine.class_of(gl->identity()).members.size() == 1);
}

TEST_CASE("classes do not depend on the processing order") {
  S4Fixture f;
  std::mt19937_64 rng(33);
  for (int round = 0; round < 20; ++round) {
    ZipDatum z = random_datum(f.s4, f.gens, rng);
    std::vector<Elem> order(z.g().members().begin(), z.g().members().end());
    auto sorted = zip_partition(z, order);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(zip_partition(z, order) == sorted);
    std::reverse(order.begin(), order.end());
    CHECK(zip_partition(z, order) == sorted);
    std::vector<std::vector<Elem>> from_report;
    const auto report = zip_classes(z);
    for (const auto& c : report.classes()) from_report.push_back(c.members);
    CHECK(from_report == sorted);
  }
}

TEST_CASE("structural checks hold on random data") {
  S4Fixture f;
  std::mt19937_64 rng(34);
  for (int round = 0; round < 25; ++round) {
    ZipDatum z = random_datum(f.s4, f.gens, rng);
    auto coarse = zip_classes(z);
    CHECK(class_recomputation_check(coarse));
    CHECK(witness_conjugation_check(coarse, 100));
    for (Elem x : z.g().members()) {
      CHECK(refinement_bijection_check(z, x, coarse));
      CHECK(torsor_check(z, x, coarse));
    }
    const auto em = z.e().members();
    for (int k = 0; k < 4; ++k) {
      const Elem x = random_element(*f.s4, rng);
      const Elem e = em[rng() % em.size()];
      const Elem et = em[rng() % em.size()];
      const Elem y = f.s4->mul(f.s4->mul(z.tau(e), x), z.sigma(et));
      CHECK(groupoid_equivalence_check(z, x, y, e, et));
    }
  }
}

TEST_CASE("torsor fibers have size |E_inf^x|") {
  S4Fixture f;
  std::mt19937_64 rng(35);
  for (int round = 0; round < 10; ++round) {
    ZipDatum z = random_datum(f.s4, f.gens, rng);
    const Elem x = random_element(*f.s4, rng);
    auto trace = refine_to_stationary(twist(z, x));
    std::map<Elem, std::size_t> fibers;
    for (Elem e : z.e().members())
      for (Elem g : trace.g_infinity().members())
        ++fibers[f.s4->mul(f.s4->mul(f.s4->mul(z.tau(e), g), x), f.s4->inv(z.sigma(e)))];
    for (auto [w, n] : fibers) CHECK(n == trace.e_infinity().order());
    CHECK(fibers.size() == zip_classes(z).class_of(x).members.size());
  }
}

TEST_CASE("groupoid check preconditions and identity case") {
  S4Fixture f;
  std::mt19937_64 rng(36);
  ZipDatum z = random_datum(f.s4, f.gens, rng);
  const Elem id = f.s4->identity();
  CHECK(groupoid_equivalence_check(z, id, id, id, id));
  const Elem x = f.s4->parse("(1,2)");
  CHECK_THROWS_AS(groupoid_equivalence_check(z, x, f.s4->mul(x, f.s4->parse("(1,2,3)")), id, id),
                  input_error);
}

TEST_CASE("report validation rejects non-partitions") {
  auto s3 = PermutationGroup::symmetric(3);
  ZipDatum z = ZipDatum::from_homomorphisms(Homomorphism::identity(s3), Homomorphism::identity(s3));
  EquivalenceClass all{s3->identity(), {0, 1, 2, 3, 4}, {}, std::nullopt, std::nullopt};
  for (int i = 0; i < 5; ++i) all.member_witnesses.push_back({0, 0});
  CHECK_THROWS(ClassReport(z, Relation::fine_orbit, {all}));
}
