#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "zipdata/group.hpp"
#include "zipdata/subgroup.hpp"

namespace zipdata {

// A homomorphism materialized as a full element table over its source.
// Every factory checks h(a*b) = h(a)*h(b), exhaustively up to the policy
// threshold and on random pairs above it, and throws invalid_homomorphism on
// failure.
class Homomorphism {
 public:
  static Homomorphism from_table(GroupPtr source, GroupPtr target, std::vector<Elem> table,
                                 const CheckPolicy& policy = {});
  static Homomorphism from_function(GroupPtr source, GroupPtr target,
                                    const std::function<Elem(Elem)>& f,
                                    const CheckPolicy& policy = {});
  // Extends generator images along words; inconsistent images or generators
  // that do not generate the source are rejected.
  static Homomorphism from_generator_images(GroupPtr source, GroupPtr target,
                                            std::span<const std::pair<Elem, Elem>> images,
                                            const CheckPolicy& policy = {});
  static Homomorphism identity(GroupPtr group);
  static Homomorphism trivial(GroupPtr source, GroupPtr target);

  Elem operator()(Elem a) const { return table_[a]; }

  const FiniteGroup& source() const noexcept { return *source_; }
  const FiniteGroup& target() const noexcept { return *target_; }
  const GroupPtr& source_ptr() const noexcept { return source_; }
  const GroupPtr& target_ptr() const noexcept { return target_; }
  std::span<const Elem> table() const noexcept { return table_; }

  void check(const CheckPolicy& policy = {}) const;

 private:
  Homomorphism(GroupPtr source, GroupPtr target, std::vector<Elem> table);

  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> table_;
};

// { h(x) : x in s }
Subgroup image(const Homomorphism& h, const Subgroup& s);
// { x in source : h(x) in t }
Subgroup preimage(const Homomorphism& h, const Subgroup& t);
// { x in within : h(x) in t }
Subgroup preimage(const Homomorphism& h, const Subgroup& t, const Subgroup& within);

}  // namespace zipdata
