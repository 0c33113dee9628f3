#include "zipdata/zip_datum.hpp"

#include <algorithm>

#include "zipdata/cosets.hpp"
#include "zipdata/errors.hpp"

namespace zipdata {

ZipDatum::ZipDatum(Subgroup e, Subgroup g, std::shared_ptr<const Homomorphism> tau,
                   std::shared_ptr<const Homomorphism> sigma, Elem twist)
    : e_(std::move(e)), g_(std::move(g)), tau_(std::move(tau)), sigma_(std::move(sigma)), twist_(twist) {
  if (!tau_ || !sigma_) throw input_error("zip datum needs both homomorphisms");
  if (tau_->source_ptr() != sigma_->source_ptr() || tau_->target_ptr() != sigma_->target_ptr())
    throw input_error("tau and sigma must share source and target");
  if (e_.ambient_ptr() != tau_->source_ptr() || g_.ambient_ptr() != tau_->target_ptr())
    throw input_error("E and G must live in the source and target of tau");
  g_group().require_member(twist_, "twist element");
  for (Elem m : e_.members()) {
    if (!g_.contains(this->tau(m))) throw input_error("tau(E) is not contained in G");
    if (!g_.contains(this->sigma(m))) throw input_error("sigma(E) is not contained in G");
  }
}

ZipDatum ZipDatum::from_homomorphisms(Homomorphism tau, Homomorphism sigma) {
  auto t = std::make_shared<const Homomorphism>(std::move(tau));
  auto s = std::make_shared<const Homomorphism>(std::move(sigma));
  return ZipDatum(Subgroup::whole(t->source_ptr()), Subgroup::whole(t->target_ptr()), t, s,
                  t->target().identity());
}

Subgroup ZipDatum::tau_image() const { return image(*tau_, e_); }

Subgroup ZipDatum::sigma_image() const {
  std::vector<bool> seen(g_group().order(), false);
  std::vector<Elem> out;
  for (Elem m : e_.members()) {
    const Elem v = sigma(m);
    if (!seen[v]) {
      seen[v] = true;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return Subgroup::trusted(g_.ambient_ptr(), std::move(out));
}

bool ZipDatum::tau_surjective() const { return tau_image().order() == g_.order(); }

bool operator==(const ZipDatum& a, const ZipDatum& b) {
  if (!(a.e_ == b.e_) || !(a.g_ == b.g_)) return false;
  for (Elem m : a.e_.members())
    if (a.tau(m) != b.tau(m) || a.sigma(m) != b.sigma(m)) return false;
  return true;
}

ZipDatum refine(const ZipDatum& z) {
  Subgroup g1 = z.tau_image();
  std::vector<Elem> e1;
  for (Elem m : z.e().members())
    if (g1.contains(z.sigma(m))) e1.push_back(m);
  // the constructor re-checks tau(E_1), sigma(E_1) inside G_1
  return ZipDatum(Subgroup::trusted(z.e().ambient_ptr(), std::move(e1)), std::move(g1),
                  z.tau_ptr(), z.base_sigma_ptr(), z.twist_element());
}

ZipDatum twist(const ZipDatum& z, Elem x) {
  if (!z.g().contains(x)) throw input_error("twist element is not in G");
  return ZipDatum(z.e(), z.g(), z.tau_ptr(), z.base_sigma_ptr(), z.g_group().mul(x, z.twist_element()));
}

RefinementTrace::RefinementTrace(ZipDatum base, std::vector<RefinementStage> stages,
                                 std::size_t stationary)
    : base_(std::move(base)), stages_(std::move(stages)), stationary_(stationary) {
  if (stages_.size() != stationary_ + 2) throw invariant_violation("trace must hold stages 0..N+1");
}

ZipDatum RefinementTrace::datum_at(std::size_t i) const {
  return ZipDatum(e_at(i), g_at(i), base_.tau_ptr(), base_.base_sigma_ptr(), base_.twist_element());
}

RefinementTrace refine_to_stationary(const ZipDatum& z) {
  std::vector<RefinementStage> stages{{z.e(), z.g()}};
  ZipDatum cur = z;
  // |E_i| strictly decreases until it stops, so this loop ends.
  for (;;) {
    ZipDatum next = refine(cur);
    const bool stationary = next.e() == cur.e();
    if (!next.e().is_subset_of(cur.e()) || !next.g().is_subset_of(cur.g()))
      throw invariant_violation("refinement sequence is not decreasing");
    stages.push_back({next.e(), next.g()});
    if (stationary) break;
    cur = std::move(next);
  }
  const std::size_t n = stages.size() - 2;
  return RefinementTrace(z, std::move(stages), n);
}

bool e_infinity_characterization_check(const ZipDatum& z, const RefinementTrace& trace) {
  if (!(trace.base() == z)) throw input_error("trace was computed from a different datum");
  const Subgroup& g_inf = trace.g_infinity();
  const auto cosets = double_cosets(z.g(), g_inf, g_inf);
  std::vector<Elem> scanned;
  for (Elem e : z.e().members())
    if (cosets.index_of(z.sigma(e)) == cosets.index_of(z.tau(e))) scanned.push_back(e);
  const auto& e_inf = trace.e_infinity().members();
  return std::equal(scanned.begin(), scanned.end(), e_inf.begin(), e_inf.end());
}

bool twist_refine_identity_check(const ZipDatum& z, Elem x, Elem y,
                                 std::optional<DoubleCosetWitnesses> witnesses) {
  const FiniteGroup& G = z.g_group();
  if (!z.g().contains(x)) throw input_error("precondition failed: x is not in G");
  if (!z.g().contains(y)) throw input_error("precondition failed: y is not in G");

  if (!witnesses) {
    if (!z.tau_image().contains(y)) throw input_error("precondition failed: y is not in tau(E)");
    const ZipDatum lhs = refine(twist(z, G.mul(y, x)));
    const ZipDatum rhs = twist(refine(twist(z, x)), y);
    if (!(lhs == rhs)) return false;
    const auto lhs_trace = refine_to_stationary(twist(z, G.mul(y, x)));
    const auto rhs_trace = refine_to_stationary(rhs);
    return lhs_trace.e_infinity() == rhs_trace.e_infinity() &&
           lhs_trace.g_infinity() == rhs_trace.g_infinity();
  }

  const auto [e, e_tilde] = *witnesses;
  if (!z.e().contains(e) || !z.e().contains(e_tilde))
    throw input_error("precondition failed: witnesses are not in E");
  if (G.mul(G.mul(z.tau(e), x), z.sigma(e_tilde)) != y)
    throw input_error("precondition failed: y != tau(e) x sigma(e~)");
  const Subgroup e1_x = refine(twist(z, x)).e();
  const Subgroup e1_y = refine(twist(z, y)).e();
  return e1_y == conjugate(e1_x, z.e_group().inv(e_tilde));
}

}  // namespace zipdata
