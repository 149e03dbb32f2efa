#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "omdual/homology.hpp"
#include "omdual/lawrence.hpp"
#include "omdual/random_gen.hpp"

namespace omdual {

struct VerifyConfig {
  std::uint64_t seed = 1;
  int count = 100;
  int dmax = 4;
  int nmax = 7;
  int bound = 5;
};

struct VerifyFailure {
  int index = 0;  // seed offset of the instance
  std::string check;
  std::string detail;
  RatMat matrix;
};

struct VerifyReport {
  int instances_run = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct PaintingScan {
  long long checked = 0;
  long long violations = 0;
};

namespace detail {

inline Painting painting_from_code(std::uint64_t code, int n) {
  Painting p;
  for (int i = 0; i < n; ++i) {
    switch (code % 4) {
      case 0: p.black |= bit(i); break;
      case 1: p.white |= bit(i); break;
      case 2: p.green |= bit(i); break;
      default: p.red |= bit(i); break;
    }
    code /= 4;
  }
  return p;
}

}  // namespace detail

/**
 * Exercises the painting dichotomy: for every painting (exhaustive up to 6
 * elements, otherwise a deterministic sample) and every marked element in
 * the black or white class, exactly one witness kind must exist.
 */
inline PaintingScan painting_dichotomy_scan(const OrientedMatroid& om, Rng& rng,
                                            int sample_count = 512) {
  const int n = om.size();
  PaintingScan scan;
  const auto run_code = [&](std::uint64_t code) {
    Painting p = detail::painting_from_code(code, n);
    for (int e : bit_indices(p.black | p.white)) {
      p.e = e;
      const auto [circuit_case, cocircuit_case] = painting_cases(om, p);
      ++scan.checked;
      if (circuit_case == cocircuit_case) ++scan.violations;
    }
  };
  if (n <= 6) {
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (std::uint64_t code = 0; code < total; ++code) run_code(code);
  } else {
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    for (int i = 0; i < sample_count; ++i) run_code(rng.raw() % total);
  }
  return scan;
}

/**
 * Seeded batch verification. Instance i is drawn from seed+i and put
 * through the duality theorem, homology-level Alexander duality of its
 * complex, the painting dichotomy, the Lawrence facet-count law (loop-free
 * instances only) and the sphere/ball dichotomy when a lifting subdivision
 * exists. Failures carry the generating matrix.
 */
inline VerifyReport random_verify(const VerifyConfig& config) {
  VerifyReport report;
  for (int i = 0; i < config.count; ++i) {
    const RandomAffine inst = random_affine_om(config.seed + static_cast<std::uint64_t>(i),
                                               config.dmax, config.nmax, config.bound);
    const AffineOM& a = inst.affine;
    const auto fail = [&](const std::string& check, const std::string& detail) {
      report.failures.push_back({i, check, detail, inst.matrix});
    };

    const Theorem1Report t1 = theorem1_check(a);
    if (!t1.ok)
      fail("theorem1", t1.rhs_defined ? "facet sets differ" : t1.rhs_issue);

    const DualityReport duality = alexander_duality_check(delta_complex(a));
    if (!duality.ok) fail("alexander-duality-homology", "group mismatch");

    Rng painting_rng(config.seed + static_cast<std::uint64_t>(i) + 0x9e3779b97f4a7c15ULL);
    const PaintingScan scan = painting_dichotomy_scan(a.om, painting_rng);
    if (scan.violations != 0)
      fail("painting", std::to_string(scan.violations) + " of " +
                           std::to_string(scan.checked) + " painting cases violated");

    if (structural_flags(a.om).loops == 0) {
      const FacetCountReport fc = facet_count_check(a.om);
      if (!fc.ok)
        fail("facet-count", "predicted " + std::to_string(fc.predicted) +
                                ", enumerated " + std::to_string(fc.enumerated));
    }

    bool has_lifting = false;
    for (const auto& c : a.om.cocircuits)
      if (c.is_positive() && has_bit(c.pos, a.f)) {
        has_lifting = true;
        break;
      }
    if (has_lifting) {
      const SphereBallReport sb = sphere_ball_check(a);
      if (!sb.homology_ok)
        fail("sphere-ball", sb.sphere_predicted ? "sphere homology mismatch"
                                                : "ball not acyclic");
    }

    ++report.instances_run;
  }
  return report;
}

}  // namespace omdual
