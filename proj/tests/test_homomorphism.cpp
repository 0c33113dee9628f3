#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zipdata/homomorphism.hpp"

using namespace zipdata;
using namespace testing_support;

namespace {

bool odd(const PermutationGroup& g, Elem a) {
  auto im = g.images(a);
  int inversions = 0;
  for (std::size_t i = 0; i < im.size(); ++i)
    for (std::size_t j = i + 1; j < im.size(); ++j) inversions += im[i] > im[j];
  return inversions % 2;
}

}  // namespace

TEST_CASE("sign homomorphism from generator images") {
  auto s4 = PermutationGroup::symmetric(4);
  auto c2 = CayleyGroup::create({{0, 1}, {1, 0}});
  const std::pair<Elem, Elem> images[] = {{s4->parse("(1,2)"), 1}, {s4->parse("(1,2,3,4)"), 1}};
  auto sign = Homomorphism::from_generator_images(s4, c2, images);
  for (Elem a = 0; a < s4->order(); ++a) CHECK(sign(a) == (odd(*s4, a) ? 1u : 0u));
  Subgroup kernel = preimage(sign, Subgroup::trivial(c2));
  CHECK(kernel.order() == 12);
  CHECK(image(sign, Subgroup::whole(s4)).is_whole());
}

TEST_CASE("inconsistent or incomplete generator images are rejected") {
  auto s3 = PermutationGroup::symmetric(3);
  auto c2 = CayleyGroup::create({{0, 1}, {1, 0}});
  const std::pair<Elem, Elem> bad[] = {{s3->parse("(1,2,3)"), 1}, {s3->parse("(1,2)"), 0}};
  CHECK_THROWS_AS(Homomorphism::from_generator_images(s3, c2, bad), invalid_homomorphism);
  const std::pair<Elem, Elem> partial[] = {{s3->parse("(1,2)"), 1}};
  CHECK_THROWS_AS(Homomorphism::from_generator_images(s3, c2, partial), invalid_homomorphism);
}

TEST_CASE("tables that are not homomorphisms are rejected") {
  auto s3 = PermutationGroup::symmetric(3);
  std::vector<Elem> table(6, s3->identity());
  table[5] = 5;
  CHECK_THROWS_AS(Homomorphism::from_table(s3, s3, table), invalid_homomorphism);
  CHECK_THROWS_AS(Homomorphism::from_table(s3, s3, {0, 1}), invalid_homomorphism);
  CHECK_NOTHROW(Homomorphism::from_table(s3, s3, std::vector<Elem>(6, s3->identity())));
}

TEST_CASE("image and preimage agree with direct computation") {
  auto s4 = PermutationGroup::symmetric(4);
  const std::vector<Elem> gens{s4->parse("(1,2)"), s4->parse("(1,2,3,4)")};
  std::mt19937_64 rng(11);
  const auto subgroups = two_generated_subgroups(s4);
  for (int round = 0; round < 30; ++round) {
    auto h = random_homomorphism(s4, s4, gens, rng);
    const Subgroup& s = subgroups[rng() % subgroups.size()];
    const Subgroup& within = subgroups[rng() % subgroups.size()];
    std::set<Elem> img, pre, pre_within;
    for (Elem a : s.members()) img.insert(h(a));
    for (Elem a = 0; a < s4->order(); ++a)
      if (s.contains(h(a))) {
        pre.insert(a);
        if (within.contains(a)) pre_within.insert(a);
      }
    CHECK(as_set(image(h, s).members()) == img);
    CHECK(as_set(preimage(h, s).members()) == pre);
    CHECK(as_set(preimage(h, s, within).members()) == pre_within);
  }
}

TEST_CASE("sampled checks on large sources") {
  auto big = MatrixGroup::general_linear(2, 16, {{1, 0, 2}});
  auto small = MatrixGroup::general_linear(2, 8);
  auto reduce = Homomorphism::from_function(big, small, [&](Elem a) {
    auto e = big->entries(a);
    return *small->find(std::vector<std::int64_t>{e[0] % 8, e[1] % 8, e[2] % 8, e[3] % 8});
  });
  CHECK(image(reduce, Subgroup::whole(big)).order() == MatrixGroup::general_linear(2, 8, {{1, 0, 2}})->order());
  // Transposition is an anti-homomorphism, which sampling catches.
  auto gl = MatrixGroup::general_linear(2, 16);
  CHECK(gl->order() > 4096);
  CHECK_THROWS_AS(Homomorphism::from_function(gl, gl, [&](Elem a) {
                    auto e = gl->entries(a);
                    return *gl->find(std::vector<std::int64_t>{e[0], e[2], e[1], e[3]});
                  }),
                  invalid_homomorphism);
}
