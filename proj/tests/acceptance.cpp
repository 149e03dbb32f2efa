// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Time budgets are pinned next to each criterion; criteria without a budget
// are correctness-only and report wall time for information.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "omdual/cli.hpp"
#include "omdual/fixtures.hpp"
#include "omdual/homology.hpp"
#include "omdual/lawrence.hpp"
#include "omdual/oriented_matroid.hpp"
#include "omdual/random_gen.hpp"
#include "omdual/simplicial_complex.hpp"
#include "omdual/verify.hpp"

namespace {

using namespace omdual;

constexpr double kBudgetDemo = 1.0;
constexpr double kBudgetTheorem = 60.0;
constexpr double kBudgetDuality = 120.0;
constexpr double kBudgetFacets = 30.0;
constexpr double kBudgetPainting = 60.0;

constexpr int kTheoremInstances = 500;
constexpr int kOracleInstances = 50;
constexpr std::uint64_t kTheoremSeed = 20260823;

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Shared {
  std::vector<SimplicialComplex> deltas;
  SimplicialComplex delta_points;
  SimplicialComplex delta_gale;
};

SimplicialComplex dual_by_powerset(const SimplicialComplex& k) {
  const int n = k.vertex_count();
  const Mask all = full_mask(n);
  std::vector<Mask> faces;
  for (Mask s = 0;; ++s) {
    if (!k.is_face(all & ~s)) faces.push_back(s);
    if (s == all) break;
  }
  return SimplicialComplex::from_masks(k.vertices(), faces);
}

bool criterion_demo() {
  std::ostringstream out, err;
  const char* argv[] = {"omdual", "demo-paper"};
  return cli::run(2, argv, out, err) == 0;
}

bool criterion_theorem(Shared& shared) {
  bool pass = true;
  for (int i = 0; i < kTheoremInstances; ++i) {
    const RandomAffine inst =
        random_affine_om(kTheoremSeed + static_cast<std::uint64_t>(i), 4, 7, 5);
    const Theorem1Report rep = theorem1_check(inst.affine);
    if (!rep.rhs_defined || !rep.ok) pass = false;
    SimplicialComplex delta = delta_complex(inst.affine);
    if (i < kOracleInstances) {
      const SimplicialComplex oracle = dual_by_powerset(delta);
      if (!(oracle == rep.lhs_dual) || !(oracle == rep.rhs)) pass = false;
    }
    shared.deltas.push_back(std::move(delta));
  }
  return pass;
}

bool criterion_duality(const Shared& shared) {
  Rng rng(987654321);
  bool pass = true;
  int done = 0;
  while (done < 100) {
    const SimplicialComplex k = random_complex(rng, 10);
    if (k.is_void()) continue;
    ++done;
    if (!alexander_duality_check(k).ok) pass = false;
  }
  if (!alexander_duality_check(shared.delta_points).ok) pass = false;
  if (!alexander_duality_check(shared.delta_gale).ok) pass = false;
  return pass;
}

bool criterion_facets() {
  Rng rng(5551212);
  bool pass = true;
  for (int i = 0; i < 100; ++i) {
    const RatMat m = random_loopfree_matrix(rng, 3, 6, 5);
    if (!facet_count_check(om_from_matrix(m)).ok) pass = false;
  }
  const std::pair<RatMat, long long> fixed[] = {
      {fixtures::two_parallel_pairs(), 8},
      {fixtures::one_parallel_pair(), 10},
      {fixtures::collinear_gale_contracted(), 12},
  };
  for (const auto& [m, expected] : fixed) {
    const FacetCountReport rep = facet_count_check(om_from_matrix(m));
    if (!rep.ok || rep.enumerated != expected) pass = false;
  }
  return pass;
}

bool criterion_acyclic(const Shared& shared) {
  bool pass = true;
  for (const auto& delta : shared.deltas) {
    if (!reduced_homology(delta).trivial()) pass = false;
    if (!reduced_homology(alexander_dual(delta)).trivial()) pass = false;
  }
  return pass;
}

bool criterion_painting() {
  Rng rng(424242);
  bool pass = true;
  for (int i = 0; i < 20; ++i) {
    const int d = rng.uniform(1, 3);
    const int n = rng.uniform(d, 6);
    const OrientedMatroid om = om_from_matrix(random_int_matrix(rng, d, n, 4));
    const PaintingScan scan = painting_dichotomy_scan(om, rng);
    if (scan.violations != 0) pass = false;
    if (om.size() <= 6 && scan.checked == 0 && om.size() > 0) pass = false;
  }
  return pass;
}

bool criterion_spheres() {
  bool pass = true;

  const SimplicialComplex bip = SimplicialComplex::from_facets(
      GroundSet::numbered(5), fixtures::bipyramid_facets());
  const HomologyProfile dual_bip = reduced_homology(alexander_dual(bip));
  for (const auto& g : dual_bip.groups) {
    const int want = g.degree == 0 ? 1 : 0;
    if (g.betti != want || !g.torsion.empty()) pass = false;
  }
  if (dual_bip.betti(0) != 1) pass = false;

  for (int n = 3; n <= 6; ++n) {
    const GroundSet g = GroundSet::numbered(n);
    std::vector<Mask> fs;
    for (int i = 0; i < n; ++i) fs.push_back(full_mask(n) & ~bit(i));
    const SimplicialComplex boundary = SimplicialComplex::from_masks(g, fs);
    const SimplicialComplex dual = alexander_dual(boundary);
    if (dual.kind() != ComplexKind::empty_faces_only) pass = false;
    const HomologyProfile hp = reduced_homology(dual);
    if (hp.betti(-1) != 1 || !hp.torsion(-1).empty() || hp.groups.size() != 1)
      pass = false;
  }

  const AffineOM seg = make_affine(
      om_from_matrix(fixtures::segment_pair(), GroundSet::numbered_with_f(2)),
      "f");
  const SphereBallReport sphere = sphere_ball_check(seg);
  if (!sphere.sphere_predicted || sphere.expected_sphere_degree != -1 ||
      !sphere.homology_ok || sphere.dual_profile.betti(-1) != 1)
    pass = false;

  const AffineOM ball_instance = make_affine(
      om_from_matrix(fixtures::collinear_points(), fixtures::line_ground()), "f");
  const SphereBallReport ball = sphere_ball_check(ball_instance);
  if (ball.sphere_predicted || !ball.homology_ok) pass = false;

  return pass;
}

bool criterion_families() {
  const AffineOM pyramid = make_affine(
      om_from_matrix(fixtures::pyramid_points(), GroundSet::numbered_with_f(3)),
      "f");
  const FamilyFlags pf = classify_families(pyramid);
  const AffineOM dual_side =
      make_affine(reorient(dual(pyramid.om), bit(pyramid.f)), pyramid.f);
  const FamilyFlags df = classify_families(dual_side);

  bool pass = true;
  if (pf.families != std::vector<std::string>{"S", "R", "T", "RT", "RS"})
    pass = false;
  if (df.families != std::vector<std::string>{"S", "R", "U", "RS"}) pass = false;
  if (pf.deletion_uniform != df.contraction_uniform ||
      pf.contraction_uniform != df.deletion_uniform)
    pass = false;
  if (!(alexander_dual(delta_complex(pyramid)) == delta_complex(dual_side)))
    pass = false;
  return pass;
}

}  // namespace

int main() {
  Shared shared;
  {
    const AffineOM a = make_affine(
        om_from_matrix(fixtures::collinear_points(), fixtures::line_ground()),
        "f");
    const AffineOM b = make_affine(
        om_from_matrix(fixtures::collinear_gale(), fixtures::line_ground()), "f");
    shared.delta_points = delta_complex(a);
    shared.delta_gale = delta_complex(b);
  }

  bool all_pass = true;
  int index = 0;
  const auto report = [&](const char* text, double budget, bool pass,
                          double secs) {
    const bool in_budget = budget <= 0 || secs < budget;
    const bool ok = pass && in_budget;
    all_pass = all_pass && ok;
    std::printf("[%d] %-58s %s (%.2fs%s)\n", ++index, text, ok ? "PASS" : "FAIL",
                secs, in_budget ? "" : ", over budget");
    std::fflush(stdout);
  };

  const auto timed = [&](const char* text, double budget, auto&& criterion) {
    const double t = now();
    const bool pass = criterion();
    report(text, budget, pass, now() - t);
  };

  timed("worked example end-to-end reproduction", kBudgetDemo,
        [] { return criterion_demo(); });
  timed("duality theorem on 500 random instances (50 oracle-checked)",
        kBudgetTheorem, [&] { return criterion_theorem(shared); });
  timed("homology-level Alexander duality (100 complexes + worked pair)",
        kBudgetDuality, [&] { return criterion_duality(shared); });
  timed("Lawrence facet-count law (100 random + three fixed types)",
        kBudgetFacets, [] { return criterion_facets(); });
  timed("delta complexes and their duals are acyclic (500 instances)", 0.0,
        [&] { return criterion_acyclic(shared); });
  timed("painting dichotomy exhaustive on 20 small oriented matroids",
        kBudgetPainting, [] { return criterion_painting(); });
  timed("sphere/ball homology fixtures and degenerate duals", 0.0,
        [] { return criterion_spheres(); });
  timed("family flags swap under Alexander duality", 0.0,
        [] { return criterion_families(); });

  std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES present");
  return all_pass ? 0 : 1;
}
