#include "zipdata/homomorphism.hpp"

#include <algorithm>
#include <random>

#include "zipdata/errors.hpp"

namespace zipdata {

Homomorphism::Homomorphism(GroupPtr source, GroupPtr target, std::vector<Elem> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {}

void Homomorphism::check(const CheckPolicy& policy) const {
  const FiniteGroup& s = *source_;
  const FiniteGroup& t = *target_;
  if (table_.size() != s.order()) throw invalid_homomorphism("homomorphism table has wrong size");
  for (Elem v : table_)
    if (!t.contains(v)) throw invalid_homomorphism("homomorphism image outside the target");
  if (table_[s.identity()] != t.identity())
    throw invalid_homomorphism("homomorphism does not preserve the identity");
  auto pair_ok = [&](Elem a, Elem b) {
    if (table_[s.mul(a, b)] != t.mul(table_[a], table_[b]))
      throw invalid_homomorphism("h(a*b) != h(a)*h(b) for a=" + s.format(a) +
                                 ", b=" + s.format(b));
  };
  const std::size_t n = s.order();
  if (n <= policy.exhaustive_pairs_up_to) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) pair_ok(a, b);
  } else {
    std::mt19937_64 rng(policy.seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t i = 0; i < policy.samples; ++i) pair_ok(pick(rng), pick(rng));
  }
}

Homomorphism Homomorphism::from_table(GroupPtr source, GroupPtr target, std::vector<Elem> table,
                                      const CheckPolicy& policy) {
  Homomorphism h(std::move(source), std::move(target), std::move(table));
  h.check(policy);
  return h;
}

Homomorphism Homomorphism::from_function(GroupPtr source, GroupPtr target,
                                         const std::function<Elem(Elem)>& f,
                                         const CheckPolicy& policy) {
  std::vector<Elem> table(source->order());
  for (Elem a = 0; a < table.size(); ++a) table[a] = f(a);
  return from_table(std::move(source), std::move(target), std::move(table), policy);
}

Homomorphism Homomorphism::from_generator_images(GroupPtr source, GroupPtr target,
                                                 std::span<const std::pair<Elem, Elem>> images,
                                                 const CheckPolicy& policy) {
  for (auto [g, img] : images) {
    source->require_member(g, "generator");
    target->require_member(img, "generator image");
  }
  std::vector<Elem> table(source->order(), no_elem);
  table[source->identity()] = target->identity();
  std::vector<Elem> queue{source->identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem a = queue[i];
    for (auto [g, img] : images) {
      const Elem next = source->mul(a, g);
      const Elem value = target->mul(table[a], img);
      if (table[next] == no_elem) {
        table[next] = value;
        queue.push_back(next);
      } else if (table[next] != value) {
        throw invalid_homomorphism("generator images are inconsistent at " +
                                   source->format(next));
      }
    }
  }
  if (queue.size() != source->order())
    throw invalid_homomorphism("generators do not generate the source group");
  return from_table(std::move(source), std::move(target), std::move(table), policy);
}

Homomorphism Homomorphism::identity(GroupPtr group) {
  std::vector<Elem> table(group->order());
  for (Elem a = 0; a < table.size(); ++a) table[a] = a;
  return Homomorphism(group, group, std::move(table));
}

Homomorphism Homomorphism::trivial(GroupPtr source, GroupPtr target) {
  std::vector<Elem> table(source->order(), target->identity());
  return Homomorphism(std::move(source), std::move(target), std::move(table));
}

Subgroup image(const Homomorphism& h, const Subgroup& s) {
  if (s.ambient_ptr() != h.source_ptr()) throw input_error("image: subgroup not in the source");
  std::vector<bool> seen(h.target().order(), false);
  std::vector<Elem> out;
  for (Elem m : s.members()) {
    const Elem v = h(m);
    if (!seen[v]) {
      seen[v] = true;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return Subgroup::trusted(h.target_ptr(), std::move(out));
}

Subgroup preimage(const Homomorphism& h, const Subgroup& t) {
  return preimage(h, t, Subgroup::whole(h.source_ptr()));
}

Subgroup preimage(const Homomorphism& h, const Subgroup& t, const Subgroup& within) {
  if (t.ambient_ptr() != h.target_ptr()) throw input_error("preimage: subgroup not in the target");
  if (within.ambient_ptr() != h.source_ptr())
    throw input_error("preimage: domain not in the source");
  std::vector<Elem> out;
  for (Elem m : within.members())
    if (t.contains(h(m))) out.push_back(m);
  return Subgroup::trusted(h.source_ptr(), std::move(out));
}

}  // namespace zipdata
