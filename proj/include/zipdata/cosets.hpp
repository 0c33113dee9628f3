#pragma once

#include <cstdint>
#include <vector>

#include "zipdata/subgroup.hpp"

namespace zipdata {

struct DoubleCoset {
  Elem representative;        // key-minimal member
  std::vector<Elem> members;  // sorted
};

// left \ domain / right, with left and right subgroups of domain. Cosets are
// ordered by representative key.
class DoubleCosetDecomposition {
 public:
  DoubleCosetDecomposition(Subgroup domain, Subgroup left, Subgroup right,
                           std::vector<DoubleCoset> cosets);

  const Subgroup& domain() const noexcept { return domain_; }
  const Subgroup& left() const noexcept { return left_; }
  const Subgroup& right() const noexcept { return right_; }
  const std::vector<DoubleCoset>& cosets() const noexcept { return cosets_; }
  std::size_t size() const noexcept { return cosets_.size(); }

  // Index of the coset containing g; throws input_error if g is outside the domain.
  std::size_t index_of(Elem g) const;
  const DoubleCoset& coset_of(Elem g) const { return cosets_[index_of(g)]; }

 private:
  Subgroup domain_;
  Subgroup left_;
  Subgroup right_;
  std::vector<DoubleCoset> cosets_;
  std::vector<std::uint32_t> coset_index_;  // over the ambient carrier
};

DoubleCosetDecomposition double_cosets(const Subgroup& domain, const Subgroup& left,
                                       const Subgroup& right);
DoubleCosetDecomposition double_cosets(const GroupPtr& ambient, const Subgroup& left,
                                       const Subgroup& right);

// The coset map H\D/K -> xHx^-1 \ D / yKy^-1 induced by g -> x g y^-1.
struct CosetBijection {
  DoubleCosetDecomposition image;
  std::vector<std::size_t> forward;  // source coset index -> image coset index
};

// x and y must lie in the domain. Verifies that the map is well defined on
// every member and that g -> x^-1 g y inverts it; throws invariant_violation
// otherwise.
CosetBijection conjugated_double_coset_map(const DoubleCosetDecomposition& d, Elem x, Elem y);

}  // namespace zipdata
