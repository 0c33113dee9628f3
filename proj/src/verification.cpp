#include "zipdata/verification.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <random>

#include "zipdata/cosets.hpp"
#include "zipdata/equivalence.hpp"
#include "zipdata/forest.hpp"

namespace zipdata {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  // body returns an empty string on success and a description otherwise
  void run(std::string name, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    try {
      std::string failure = body();
      report_.checks.push_back({std::move(name), failure.empty(), std::move(failure), elapsed()});
    } catch (const std::exception& ex) {
      report_.checks.push_back({std::move(name), false, ex.what(), elapsed()});
    }
  }

 private:
  VerificationReport& report_;
};

bool trace_is_consistent(const ZipDatum& z, const RefinementTrace& t) {
  const auto& st = t.stages();
  if (!(st.front().e == z.e()) || !(st.front().g == z.g())) return false;
  for (std::size_t i = 0; i + 1 < st.size(); ++i) {
    if (!st[i + 1].e.is_subset_of(st[i].e) || !st[i + 1].g.is_subset_of(st[i].g)) return false;
    if (!(st[i + 1].g == image(z.tau_hom(), st[i].e))) return false;
    for (Elem m : st[i].e.members())
      if (st[i + 1].e.contains(m) != st[i + 1].g.contains(z.sigma(m))) return false;
  }
  const std::size_t n = t.stationary_index();
  if (n + 1 >= st.size() || !(st[n].e == st[n + 1].e)) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (st[i].e == st[i + 1].e) return false;
  for (Elem m : t.e_infinity().members())
    if (!t.g_infinity().contains(z.sigma(m))) return false;
  return true;
}

}  // namespace

VerificationReport run_verification(const ZipDatum& z, const VerificationOptions& options) {
  VerificationReport report;
  Recorder rec(report);
  std::mt19937_64 rng(options.seed);
  const FiniteGroup& E = z.e_group();
  const FiniteGroup& G = z.g_group();
  auto pick_e = [&] {
    auto m = z.e().members();
    return m[std::uniform_int_distribution<std::size_t>(0, m.size() - 1)(rng)];
  };

  rec.run("group-axioms", [&] {
    E.check_axioms(options.policy);
    G.check_axioms(options.policy);
    return std::string{};
  });
  rec.run("homomorphisms", [&] {
    z.tau_hom().check(options.policy);
    z.base_sigma_hom().check(options.policy);
    return std::string{};
  });

  const RefinementTrace trace = refine_to_stationary(z);
  rec.run("refinement-trace", [&] {
    return trace_is_consistent(z, trace) ? "" : std::string("trace violates a refinement invariant");
  });
  rec.run("refinement-invariance", [&] {
    const RefinementTrace once = refine_to_stationary(refine(z));
    if (!(once.e_infinity() == trace.e_infinity())) return std::string("E_inf changed under refinement");
    if (!(once.g_infinity() == trace.g_infinity())) return std::string("G_inf changed under refinement");
    return std::string{};
  });
  rec.run("e-infinity-characterization", [&] {
    return e_infinity_characterization_check(z, trace) ? "" : std::string("characterization differs");
  });

  const DoubleCosetDecomposition roots = double_cosets(z.g(), z.tau_image(), z.sigma_image());
  std::vector<Elem> root_reps;
  for (const auto& c : roots.cosets()) root_reps.push_back(c.representative);

  rec.run("twist-refine-identity", [&] {
    for (Elem x : root_reps)
      for (std::size_t i = 0; i < options.twist_samples_per_root; ++i) {
        const Elem y = z.tau(pick_e());
        if (!twist_refine_identity_check(z, x, y))
          return "fails for x=" + G.format(x) + ", y=" + G.format(y);
        const Elem e = pick_e(), et = pick_e();
        const Elem y2 = G.mul(G.mul(z.tau(e), x), z.sigma(et));
        if (!twist_refine_identity_check(z, x, y2, DoubleCosetWitnesses{e, et}))
          return "conjugation fails for x=" + G.format(x) + ", y=" + G.format(y2);
      }
    return std::string{};
  });

  std::optional<ClassReport> fine;
  std::optional<ClassReport> coarse;
  rec.run("fine-partition", [&] {
    fine.emplace(fine_orbits(z));
    report.fine_class_count = fine->size();
    return std::string{};
  });
  rec.run("coarse-partition", [&] {
    coarse.emplace(zip_classes(z));
    report.coarse_class_count = coarse->size();
    return std::string{};
  });
  if (!coarse) return report;

  if (fine)
    rec.run("coarsening", [&] {
      return coarsening_check(*fine, *coarse) ? "" : std::string("a fine orbit meets two classes");
    });
  rec.run("class-recomputation", [&] {
    return class_recomputation_check(*coarse) ? "" : std::string("recomputed class differs");
  });
  rec.run("witness-conjugation", [&] {
    return witness_conjugation_check(*coarse) ? "" : std::string("E_inf not conjugated by witness");
  });
  rec.run("refinement-bijection", [&] {
    for (Elem x : root_reps)
      if (!refinement_bijection_check(z, x, *coarse)) return "fails at x=" + G.format(x);
    return std::string{};
  });
  rec.run("torsor", [&] {
    std::vector<Elem> points = root_reps;
    for (const auto& c : coarse->classes()) points.push_back(c.witness);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (Elem x : points)
      if (!torsor_check(z, x, *coarse)) return "fails at x=" + G.format(x);
    return std::string{};
  });
  rec.run("groupoid-equivalence", [&] {
    for (Elem x : root_reps) {
      if (!groupoid_equivalence_check(z, x, x, E.identity(), E.identity()))
        return "identity case fails at x=" + G.format(x);
      for (std::size_t i = 0; i < options.groupoid_samples_per_root; ++i) {
        const Elem e = pick_e(), et = pick_e();
        const Elem y = G.mul(G.mul(z.tau(e), x), z.sigma(et));
        if (!groupoid_equivalence_check(z, x, y, e, et))
          return "fails at x=" + G.format(x) + ", e=" + E.format(e) + ", e~=" + E.format(et);
      }
    }
    return std::string{};
  });

  std::optional<RepForest> forest;
  rec.run("forest-build", [&] {
    forest.emplace(build_forest(z));
    if (forest->roots().size() != root_reps.size()) return std::string("root count differs");
    return std::string{};
  });
  if (!forest) return report;
  rec.run("forest-parent-product", [&] {
    return parent_product_check(*forest) ? "" : std::string("accumulated products inconsistent");
  });
  rec.run("forest-root-class-counts", [&] {
    return root_class_count_check(*forest, *coarse) ? "" : std::string("leaf counts differ per root");
  });
  rec.run("forest-path-roundtrip", [&] {
    return path_roundtrip_check(*forest) ? "" : std::string("classify(reconstruct(p)) != p");
  });
  rec.run("forest-limit-bijection", [&] {
    return limit_bijection_check(*forest, *coarse) ? "" : std::string("paths do not match classes");
  });
  return report;
}

}  // namespace zipdata
