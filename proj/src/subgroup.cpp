#include "zipdata/subgroup.hpp"

#include <algorithm>
#include <random>

#include "zipdata/errors.hpp"

namespace zipdata {

Subgroup::Subgroup(GroupPtr ambient, std::vector<Elem> members)
    : ambient_(std::move(ambient)), members_(std::move(members)), mask_(ambient_->order(), false) {
  for (Elem m : members_) mask_[m] = true;
}

Subgroup Subgroup::whole(GroupPtr ambient) {
  std::vector<Elem> all(ambient->order());
  for (Elem i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup(std::move(ambient), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr ambient) {
  const Elem id = ambient->identity();
  return Subgroup(std::move(ambient), {id});
}

Subgroup Subgroup::trusted(GroupPtr ambient, std::vector<Elem> sorted_members) {
  return Subgroup(std::move(ambient), std::move(sorted_members));
}

Subgroup Subgroup::from_members(GroupPtr ambient, std::vector<Elem> members,
                                const CheckPolicy& policy) {
  for (Elem m : members) ambient->require_member(m, "subgroup member");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_closed_subgroup(*ambient, members, policy))
    throw input_error("element set is not a subgroup");
  return Subgroup(std::move(ambient), std::move(members));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (ambient_ != other.ambient_) return false;
  return std::all_of(members_.begin(), members_.end(), [&](Elem m) { return other.contains(m); });
}

bool is_closed_subgroup(const FiniteGroup& g, std::span<const Elem> sorted_members,
                        const CheckPolicy& policy) {
  auto in = [&](Elem a) { return std::binary_search(sorted_members.begin(), sorted_members.end(), a); };
  if (!in(g.identity())) return false;
  for (Elem a : sorted_members)
    if (!in(g.inv(a))) return false;
  const std::size_t n = sorted_members.size();
  if (n <= policy.exhaustive_pairs_up_to) {
    for (Elem a : sorted_members)
      for (Elem b : sorted_members)
        if (!in(g.mul(a, b))) return false;
    return true;
  }
  std::mt19937_64 rng(policy.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t i = 0; i < policy.samples; ++i)
    if (!in(g.mul(sorted_members[pick(rng)], sorted_members[pick(rng)]))) return false;
  return true;
}

Subgroup closure(GroupPtr ambient, std::span<const Elem> generators) {
  for (Elem g : generators) ambient->require_member(g, "closure generator");
  std::vector<bool> seen(ambient->order(), false);
  std::vector<Elem> elems{ambient->identity()};
  seen[ambient->identity()] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Elem g : generators) {
      Elem next = ambient->mul(elems[i], g);
      if (!seen[next]) {
        seen[next] = true;
        elems.push_back(next);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup::trusted(std::move(ambient), std::move(elems));
}

Subgroup conjugate(const Subgroup& s, Elem x) {
  const FiniteGroup& g = s.ambient();
  g.require_member(x, "conjugating element");
  std::vector<Elem> out;
  out.reserve(s.order());
  for (Elem h : s.members()) out.push_back(g.conj(x, h));
  std::sort(out.begin(), out.end());
  return Subgroup::trusted(s.ambient_ptr(), std::move(out));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  if (a.ambient_ptr() != b.ambient_ptr())
    throw input_error("intersection of subgroups of different groups");
  std::vector<Elem> out;
  for (Elem m : a.members())
    if (b.contains(m)) out.push_back(m);
  return Subgroup::trusted(a.ambient_ptr(), std::move(out));
}

std::vector<Elem> generating_set(const Subgroup& s) {
  const FiniteGroup& g = s.ambient();
  std::vector<Elem> gens;
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> elems{g.identity()};
  in[g.identity()] = true;
  for (Elem candidate : s.members()) {
    if (in[candidate]) continue;
    gens.push_back(candidate);
    // <H, candidate>: old elements only need the new generator.
    const std::size_t old = elems.size();
    for (std::size_t i = 0; i < old; ++i) {
      Elem next = g.mul(elems[i], candidate);
      if (!in[next]) {
        in[next] = true;
        elems.push_back(next);
      }
    }
    for (std::size_t i = old; i < elems.size(); ++i) {
      for (Elem gen : gens) {
        Elem next = g.mul(elems[i], gen);
        if (!in[next]) {
          in[next] = true;
          elems.push_back(next);
        }
      }
    }
    if (elems.size() == s.order()) break;
  }
  return gens;
}

}  // namespace zipdata
