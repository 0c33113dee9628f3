#pragma once

#include <span>
#include <vector>

#include "zipdata/group.hpp"

namespace zipdata {

// A subgroup of a FiniteGroup, stored as its sorted member list plus a
// membership mask over the ambient carrier.
class Subgroup {
 public:
  static Subgroup whole(GroupPtr ambient);
  static Subgroup trivial(GroupPtr ambient);
  // Validates that the members form a subgroup; throws input_error otherwise.
  static Subgroup from_members(GroupPtr ambient, std::vector<Elem> members,
                               const CheckPolicy& policy = {});
  // For callers that already know the set is a subgroup (images, preimages,
  // closures). Members must be sorted and unique.
  static Subgroup trusted(GroupPtr ambient, std::vector<Elem> sorted_members);

  const FiniteGroup& ambient() const noexcept { return *ambient_; }
  const GroupPtr& ambient_ptr() const noexcept { return ambient_; }
  std::span<const Elem> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem a) const noexcept { return a < mask_.size() && mask_[a]; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_whole() const noexcept { return members_.size() == ambient_->order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_ == b.ambient_ && a.members_ == b.members_;
  }

 private:
  Subgroup(GroupPtr ambient, std::vector<Elem> members);

  GroupPtr ambient_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

// Smallest subgroup containing the generators.
Subgroup closure(GroupPtr ambient, std::span<const Elem> generators);

// { x h x^-1 : h in s }
Subgroup conjugate(const Subgroup& s, Elem x);

Subgroup intersection(const Subgroup& a, const Subgroup& b);

// A small generating set, chosen greedily in key order. Deterministic.
std::vector<Elem> generating_set(const Subgroup& s);

// Identity, products and inverses stay inside the set. Products are checked on
// all pairs up to the policy threshold and sampled above it.
bool is_closed_subgroup(const FiniteGroup& g, std::span<const Elem> sorted_members,
                        const CheckPolicy& policy = {});

}  // namespace zipdata
