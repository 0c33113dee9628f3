#include "zipdata/cosets.hpp"

#include <algorithm>

#include "zipdata/errors.hpp"

namespace zipdata {

namespace {

constexpr std::uint32_t no_coset = static_cast<std::uint32_t>(-1);

}  // namespace

DoubleCosetDecomposition::DoubleCosetDecomposition(Subgroup domain, Subgroup left, Subgroup right,
                                                   std::vector<DoubleCoset> cosets)
    : domain_(std::move(domain)),
      left_(std::move(left)),
      right_(std::move(right)),
      cosets_(std::move(cosets)),
      coset_index_(domain_.ambient().order(), no_coset) {
  std::size_t covered = 0;
  for (std::uint32_t i = 0; i < cosets_.size(); ++i) {
    const auto& c = cosets_[i];
    if (c.members.empty() || c.members.front() != c.representative)
      throw invariant_violation("double coset representative is not key-minimal");
    for (Elem m : c.members) {
      if (!domain_.contains(m) || coset_index_[m] != no_coset)
        throw invariant_violation("double cosets do not partition the domain");
      coset_index_[m] = i;
    }
    covered += c.members.size();
  }
  if (covered != domain_.order()) throw invariant_violation("double cosets miss domain elements");
}

std::size_t DoubleCosetDecomposition::index_of(Elem g) const {
  if (g >= coset_index_.size() || coset_index_[g] == no_coset)
    throw input_error("element is outside the double coset domain");
  return coset_index_[g];
}

DoubleCosetDecomposition double_cosets(const Subgroup& domain, const Subgroup& left,
                                       const Subgroup& right) {
  if (!left.is_subset_of(domain) || !right.is_subset_of(domain))
    throw input_error("double_cosets: left and right must be subgroups of the domain");
  const FiniteGroup& g = domain.ambient();
  const auto left_gens = generating_set(left);
  const auto right_gens = generating_set(right);

  std::vector<bool> seen(g.order(), false);
  std::vector<DoubleCoset> cosets;
  for (Elem seed : domain.members()) {
    if (seen[seed]) continue;
    // seed is the smallest unseen element, so it is key-minimal in its coset
    std::vector<Elem> members{seed};
    seen[seed] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Elem cur = members[i];
      auto visit = [&](Elem next) {
        if (!seen[next]) {
          seen[next] = true;
          members.push_back(next);
        }
      };
      for (Elem h : left_gens) visit(g.mul(h, cur));
      for (Elem k : right_gens) visit(g.mul(cur, k));
    }
    std::sort(members.begin(), members.end());
    cosets.push_back({seed, std::move(members)});
  }
  return DoubleCosetDecomposition(domain, left, right, std::move(cosets));
}

DoubleCosetDecomposition double_cosets(const GroupPtr& ambient, const Subgroup& left,
                                       const Subgroup& right) {
  return double_cosets(Subgroup::whole(ambient), left, right);
}

CosetBijection conjugated_double_coset_map(const DoubleCosetDecomposition& d, Elem x, Elem y) {
  const FiniteGroup& g = d.domain().ambient();
  if (!d.domain().contains(x) || !d.domain().contains(y))
    throw input_error("conjugated_double_coset_map: x and y must lie in the domain");
  auto target = double_cosets(d.domain(), conjugate(d.left(), x), conjugate(d.right(), y));
  const Elem y_inv = g.inv(y);
  const Elem x_inv = g.inv(x);

  std::vector<std::size_t> forward(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& coset = d.cosets()[i];
    forward[i] = target.index_of(g.mul(g.mul(x, coset.representative), y_inv));
    for (Elem m : coset.members)
      if (target.index_of(g.mul(g.mul(x, m), y_inv)) != forward[i])
        throw invariant_violation("conjugated coset map is not well defined");
  }
  std::vector<bool> hit(target.size(), false);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Elem back = g.mul(g.mul(x_inv, target.cosets()[forward[i]].representative), y);
    if (d.index_of(back) != i || hit[forward[i]])
      throw invariant_violation("conjugated coset map is not injective");
    hit[forward[i]] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    throw invariant_violation("conjugated coset map is not surjective");
  return {std::move(target), std::move(forward)};
}

}  // namespace zipdata
