#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "zipdata/homomorphism.hpp"
#include "zipdata/subgroup.hpp"

namespace zipdata {

// (E, G, tau, sigma): two subgroups of ambient groups and two homomorphisms
// between the ambient groups, restricted to E. The twist element x replaces
// sigma by e -> x sigma(e) x^-1; twisting twice composes the elements.
class ZipDatum {
 public:
  ZipDatum(Subgroup e, Subgroup g, std::shared_ptr<const Homomorphism> tau,
           std::shared_ptr<const Homomorphism> sigma, Elem twist);

  // E and G are the whole source and target groups, untwisted.
  static ZipDatum from_homomorphisms(Homomorphism tau, Homomorphism sigma);

  const Subgroup& e() const noexcept { return e_; }
  const Subgroup& g() const noexcept { return g_; }
  const FiniteGroup& e_group() const noexcept { return e_.ambient(); }
  const FiniteGroup& g_group() const noexcept { return g_.ambient(); }
  const Homomorphism& tau_hom() const noexcept { return *tau_; }
  const Homomorphism& base_sigma_hom() const noexcept { return *sigma_; }
  const std::shared_ptr<const Homomorphism>& tau_ptr() const noexcept { return tau_; }
  const std::shared_ptr<const Homomorphism>& base_sigma_ptr() const noexcept { return sigma_; }
  Elem twist_element() const noexcept { return twist_; }

  Elem tau(Elem e) const { return (*tau_)(e); }
  // The effective (twisted) sigma.
  Elem sigma(Elem e) const {
    const Elem s = (*sigma_)(e);
    return twist_ == g_group().identity() ? s : g_group().conj(twist_, s);
  }
  // e.g = tau(e) g sigma(e)^-1
  Elem act(Elem e, Elem g) const {
    const FiniteGroup& G = g_group();
    return G.mul(G.mul(tau(e), g), G.inv(sigma(e)));
  }

  Subgroup tau_image() const;
  Subgroup sigma_image() const;
  bool tau_surjective() const;

  // Same E and G, and tau and sigma agree on every element of E.
  friend bool operator==(const ZipDatum& a, const ZipDatum& b);

 private:
  Subgroup e_;
  Subgroup g_;
  std::shared_ptr<const Homomorphism> tau_;
  std::shared_ptr<const Homomorphism> sigma_;
  Elem twist_;
};

// (sigma^-1(tau(E)), tau(E), tau, sigma)
ZipDatum refine(const ZipDatum& z);

// (E, G, tau, x sigma x^-1); x must lie in G.
ZipDatum twist(const ZipDatum& z, Elem x);

struct RefinementStage {
  Subgroup e;
  Subgroup g;
};

// Stages 0..N+1 of repeated refinement, where N is the first index with
// E_N = E_{N+1}. Every later stage equals stage N+1.
class RefinementTrace {
 public:
  RefinementTrace(ZipDatum base, std::vector<RefinementStage> stages, std::size_t stationary);

  const ZipDatum& base() const noexcept { return base_; }
  std::size_t stationary_index() const noexcept { return stationary_; }
  const std::vector<RefinementStage>& stages() const noexcept { return stages_; }

  const Subgroup& e_at(std::size_t i) const { return stages_[clamp(i)].e; }
  const Subgroup& g_at(std::size_t i) const { return stages_[clamp(i)].g; }
  // The i-times refined datum.
  ZipDatum datum_at(std::size_t i) const;

  const Subgroup& e_infinity() const noexcept { return stages_[stationary_].e; }
  // tau(E_infinity)
  const Subgroup& g_infinity() const noexcept { return stages_[stationary_ + 1].g; }

 private:
  std::size_t clamp(std::size_t i) const { return i < stages_.size() ? i : stages_.size() - 1; }

  ZipDatum base_;
  std::vector<RefinementStage> stages_;
  std::size_t stationary_;
};

RefinementTrace refine_to_stationary(const ZipDatum& z);

// Compares E_infinity from the trace with { e in E : sigma(e) in G_inf tau(e) G_inf },
// the latter computed from a (G_inf, G_inf) double coset partition of G.
bool e_infinity_characterization_check(const ZipDatum& z, const RefinementTrace& trace);

struct DoubleCosetWitnesses {
  Elem e;
  Elem e_tilde;
};

// Without witnesses: requires y in tau(E) and checks Z_1^{yx} = (Z_1^x)^y
// together with equality of their E_inf and G_inf.
// With witnesses: requires y = tau(e) x sigma(e~) and checks E_1^y = e~^-1 E_1^x e~.
// A failed precondition throws input_error naming it.
bool twist_refine_identity_check(const ZipDatum& z, Elem x, Elem y,
                                 std::optional<DoubleCosetWitnesses> witnesses = std::nullopt);

}  // namespace zipdata
