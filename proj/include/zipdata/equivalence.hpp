#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zipdata/zip_datum.hpp"

namespace zipdata {

enum class Relation { fine_orbit, zip_coarse };

std::string_view to_string(Relation r);

// How a member y was reached from the class witness x:
// y = tau(e) g x sigma(e)^-1 with g in G_inf^x (g is the identity for fine orbits).
struct MemberWitness {
  Elem e;
  Elem g;
};

struct EquivalenceClass {
  Elem witness;                                 // key-minimal member
  std::vector<Elem> members;                    // sorted
  std::vector<MemberWitness> member_witnesses;  // aligned with members
  std::optional<Subgroup> e_infinity;           // E_inf^witness, coarse relation only
  std::optional<Subgroup> g_infinity;           // G_inf^witness, coarse relation only
};

// A partition of G into classes, ordered by witness key.
class ClassReport {
 public:
  ClassReport(ZipDatum datum, Relation relation, std::vector<EquivalenceClass> classes);

  const ZipDatum& datum() const noexcept { return datum_; }
  Relation relation() const noexcept { return relation_; }
  const std::vector<EquivalenceClass>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return classes_.size(); }

  std::size_t class_index(Elem g) const;
  const EquivalenceClass& class_of(Elem g) const { return classes_[class_index(g)]; }

 private:
  ZipDatum datum_;
  Relation relation_;
  std::vector<EquivalenceClass> classes_;
  std::vector<std::uint32_t> index_;
};

// Orbits of e.g = tau(e) g sigma(e)^-1 on G.
ClassReport fine_orbits(const ZipDatum& z);

// Classes of the coarse relation y ~ x iff y = tau(e) g x sigma(e)^-1 with
// g in G_inf^x. Overlapping classes throw falsified_statement.
ClassReport zip_classes(const ZipDatum& z);

// The same partition computed with witnesses taken in the given order
// instead of key order. Classes are returned sorted, each sorted.
std::vector<std::vector<Elem>> zip_partition(const ZipDatum& z, std::span<const Elem> processing_order);

bool coarsening_check(const ClassReport& fine, const ClassReport& coarse);

// Recomputes the class of the key-maximal member of every class and
// compares; this exercises symmetry of the relation directly.
bool class_recomputation_check(const ClassReport& coarse);

// For up to `per_class` recorded members y of every class, checks
// e E_inf^x e^-1 = E_inf^y for the recorded witness e.
bool witness_conjugation_check(const ClassReport& coarse, std::size_t per_class = 3);

// The classes of Z_1^x, shifted by x, match the Z-classes meeting
// tau(E) x sigma(E) one-to-one, with o(y)x = o(yx) meet G_1^x x.
bool refinement_bijection_check(const ZipDatum& z, Elem x, const ClassReport& oracle);
bool refinement_bijection_check(const ZipDatum& z, Elem x);

// E x G_inf^x -> o(x), (e, g) -> tau(e) g x sigma(e)^-1 is surjective and
// each fiber is one free E_inf^x-orbit.
bool torsor_check(const ZipDatum& z, Elem x, const ClassReport& oracle);
bool torsor_check(const ZipDatum& z, Elem x);

// With y = tau(e) x sigma(e~), the maps eps -> e~^-1 eps e~ and
// g -> tau(e~)^-1 g x sigma(e~) y^-1 form an equivariant map
// [E_1^x \ G_1^x] -> [E_1^y \ G_1^y] that is bijective on orbits and on
// stabilizers, and induce the conjugated double quotient bijection.
bool groupoid_equivalence_check(const ZipDatum& z, Elem x, Elem y, Elem e, Elem e_tilde);

}  // namespace zipdata
