#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zipdata/subgroup.hpp"

using namespace zipdata;
using namespace testing_support;

TEST_CASE("closure in S3") {
  auto s3 = PermutationGroup::symmetric(3);
  const Elem t = s3->parse("(1,2)");
  const Elem c = s3->parse("(1,2,3)");
  CHECK(closure(s3, std::vector<Elem>{t}).order() == 2);
  CHECK(closure(s3, std::vector<Elem>{c}).order() == 3);
  CHECK(closure(s3, std::vector<Elem>{t, c}).is_whole());
  CHECK(closure(s3, std::vector<Elem>{}).order() == 1);
  CHECK(Subgroup::trivial(s3).members()[0] == s3->identity());
}

TEST_CASE("conjugating <(1,2)> by (1,2,3) gives <(2,3)>") {
  auto s3 = PermutationGroup::symmetric(3);
  Subgroup h = closure(s3, std::vector<Elem>{s3->parse("(1,2)")});
  Subgroup k = conjugate(h, s3->parse("(1,2,3)"));
  CHECK(k == closure(s3, std::vector<Elem>{s3->parse("(2,3)")}));
}

TEST_CASE("conjugate and intersection agree with direct computation") {
  auto s4 = PermutationGroup::symmetric(4);
  std::mt19937_64 rng(7);
  const auto subgroups = two_generated_subgroups(s4);
  CHECK(subgroups.size() == 30);
  for (int round = 0; round < 40; ++round) {
    const Subgroup& a = subgroups[rng() % subgroups.size()];
    const Subgroup& b = subgroups[rng() % subgroups.size()];
    const Elem x = random_element(*s4, rng);
    std::set<Elem> conj, meet;
    for (Elem h : a.members()) conj.insert(s4->mul(s4->mul(x, h), s4->inv(x)));
    for (Elem h : a.members())
      if (b.contains(h)) meet.insert(h);
    CHECK(as_set(conjugate(a, x).members()) == conj);
    CHECK(as_set(intersection(a, b).members()) == meet);
    CHECK(intersection(a, b).is_subset_of(a));
    CHECK(closure(s4, generating_set(a)) == a);
  }
}

TEST_CASE("from_members validates") {
  auto s3 = PermutationGroup::symmetric(3);
  const Elem id = s3->identity();
  const Elem t = s3->parse("(1,2)");
  const Elem u = s3->parse("(2,3)");
  CHECK(Subgroup::from_members(s3, {t, id}).order() == 2);
  CHECK_THROWS_AS(Subgroup::from_members(s3, {id, t, u}), input_error);
  CHECK_THROWS_AS(Subgroup::from_members(s3, {t}), input_error);
  CHECK_THROWS_AS(Subgroup::from_members(s3, {id, 99}), input_error);
  CHECK(is_closed_subgroup(*s3, std::vector<Elem>{id, t}));
  CHECK_FALSE(is_closed_subgroup(*s3, std::vector<Elem>{id, t, u}));
}

TEST_CASE("generating sets are small and deterministic") {
  auto gl = MatrixGroup::general_linear(2, 3);
  Subgroup whole = Subgroup::whole(gl);
  auto gens = generating_set(whole);
  CHECK(gens == generating_set(whole));
  CHECK(gens.size() <= 3);
  CHECK(closure(gl, gens).is_whole());
}
