#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <set>
#include <vector>

#include "zipdata/errors.hpp"
#include "zipdata/zip_datum.hpp"

namespace testing_support {

using namespace zipdata;

inline Elem random_element(const FiniteGroup& g, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Elem>(0, static_cast<Elem>(g.order() - 1))(rng);
}

// A homomorphism source -> target obtained from random images of the
// given generators, retried until the images are consistent.
inline Homomorphism random_homomorphism(const GroupPtr& source, const GroupPtr& target,
                                        const std::vector<Elem>& gens, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::pair<Elem, Elem>> images;
    for (Elem g : gens) images.emplace_back(g, random_element(*target, rng));
    try {
      return Homomorphism::from_generator_images(source, target, images);
    } catch (const invalid_homomorphism&) {
    }
  }
}

// Random data (E, G, tau, sigma) with E a random subgroup of `group`,
// G = group, tau and sigma random endomorphisms and a random twist.
inline ZipDatum random_datum(const GroupPtr& group, const std::vector<Elem>& gens, std::mt19937_64& rng) {
  const Elem a = random_element(*group, rng);
  const Elem b = random_element(*group, rng);
  std::vector<Elem> e_gens{a};
  if (rng() % 2) e_gens.push_back(b);
  Subgroup e = rng() % 4 == 0 ? Subgroup::whole(group) : closure(group, e_gens);
  auto tau = std::make_shared<const Homomorphism>(
      rng() % 3 == 0 ? Homomorphism::identity(group) : random_homomorphism(group, group, gens, rng));
  auto sigma = std::make_shared<const Homomorphism>(random_homomorphism(group, group, gens, rng));
  const Elem twist = rng() % 2 ? random_element(*group, rng) : group->identity();
  return ZipDatum(std::move(e), Subgroup::whole(group), tau, sigma, twist);
}

// All subgroups of a small group: every subgroup of the groups used here
// is generated by two elements.
inline std::vector<Subgroup> two_generated_subgroups(const GroupPtr& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = a; b < g->order(); ++b) {
      const Elem gens[] = {a, b};
      Subgroup s = closure(g, gens);
      std::vector<Elem> m(s.members().begin(), s.members().end());
      if (seen.insert(m).second) out.push_back(std::move(s));
    }
  return out;
}

inline std::set<Elem> as_set(std::span<const Elem> s) { return {s.begin(), s.end()}; }

}  // namespace testing_support
