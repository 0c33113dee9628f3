#include <doctest.h>

#include <random>

#include "support.hpp"
#include "zipdata/cosets.hpp"

using namespace zipdata;
using namespace testing_support;

namespace {

Subgroup upper_triangular(const std::shared_ptr<const MatrixGroup>& gl) {
  std::vector<Elem> m;
  for (Elem a = 0; a < gl->order(); ++a)
    if (gl->entries(a)[2] == 0) m.push_back(a);
  return Subgroup::trusted(gl, m);
}

// H g K by direct enumeration
std::set<Elem> double_coset(const FiniteGroup& g, const Subgroup& h, Elem x, const Subgroup& k) {
  std::set<Elem> out;
  for (Elem a : h.members())
    for (Elem b : k.members()) out.insert(g.mul(g.mul(a, x), b));
  return out;
}

}  // namespace

TEST_CASE("Bruhat decomposition of GL2(F2)") {
  auto gl = MatrixGroup::general_linear(2, 2);
  Subgroup b = upper_triangular(gl);
  CHECK(b.order() == 2);
  auto d = double_cosets(gl, b, b);
  REQUIRE(d.size() == 2);
  std::multiset<std::size_t> sizes;
  for (const auto& c : d.cosets()) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<std::size_t>{2, 4});
  CHECK(d.coset_of(gl->identity()).members.size() == 2);
  CHECK(d.coset_of(gl->parse("[0,1;1,0]")).members.size() == 4);
}

TEST_CASE("double cosets agree with direct enumeration") {
  auto s4 = PermutationGroup::symmetric(4);
  const auto subgroups = two_generated_subgroups(s4);
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    const Subgroup& h = subgroups[rng() % subgroups.size()];
    const Subgroup& k = subgroups[rng() % subgroups.size()];
    auto d = double_cosets(s4, h, k);
    std::size_t total = 0;
    for (const auto& c : d.cosets()) {
      CHECK(as_set(c.members) == double_coset(*s4, h, c.representative, k));
      CHECK(c.representative == c.members.front());
      total += c.members.size();
    }
    CHECK(total == s4->order());
    for (std::size_t i = 1; i < d.size(); ++i)
      CHECK(d.cosets()[i - 1].representative < d.cosets()[i].representative);
  }
}

TEST_CASE("double cosets inside a proper domain") {
  auto s4 = PermutationGroup::symmetric(4);
  Subgroup s3 = closure(s4, std::vector<Elem>{s4->parse("(1,2)"), s4->parse("(1,2,3)")});
  Subgroup c2 = closure(s4, std::vector<Elem>{s4->parse("(1,2)")});
  auto d = double_cosets(s3, c2, c2);
  CHECK(d.size() == 2);
  CHECK_THROWS_AS(d.index_of(s4->parse("(1,4)")), input_error);
  CHECK_THROWS_AS(double_cosets(c2, s3, c2), input_error);
}

TEST_CASE("conjugated double coset map is a bijection") {
  auto s4 = PermutationGroup::symmetric(4);
  const auto subgroups = two_generated_subgroups(s4);
  std::mt19937_64 rng(9);
  for (int round = 0; round < 30; ++round) {
    const Subgroup& h = subgroups[rng() % subgroups.size()];
    const Subgroup& k = subgroups[rng() % subgroups.size()];
    auto d = double_cosets(s4, h, k);
    const Elem x = random_element(*s4, rng);
    const Elem y = random_element(*s4, rng);
    auto map = conjugated_double_coset_map(d, x, y);
    CHECK(map.image.size() == d.size());
    CHECK(map.image.left() == conjugate(h, x));
    CHECK(map.image.right() == conjugate(k, y));
    std::set<std::size_t> hit(map.forward.begin(), map.forward.end());
    CHECK(hit.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      const Elem g = d.cosets()[i].representative;
      CHECK(map.image.index_of(s4->mul(s4->mul(x, g), s4->inv(y))) == map.forward[i]);
    }
  }
}
