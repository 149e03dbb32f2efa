#include "omdual/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "omdual/fixtures.hpp"
#include "omdual/homology.hpp"
#include "omdual/lawrence.hpp"
#include "omdual/matrix_io.hpp"
#include "omdual/oriented_matroid.hpp"
#include "omdual/random_gen.hpp"
#include "omdual/simplicial_complex.hpp"
#include "omdual/svg.hpp"
#include "omdual/verify.hpp"

namespace omdual::cli {
namespace {

struct Options {
  std::string input;
  std::string f_label;
  std::string svg_path;
  std::uint64_t seed = 1;
  int count = 100;
  int dmax = 4;
  int nmax = 7;
  int bound = 5;
  bool json = false;
};

struct LoadedInput {
  std::optional<LabeledMatrix> matrix;
  std::optional<OrientedMatroid> om;
  std::optional<SimplicialComplex> complex;
  std::optional<std::string> declared_f;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/**
 * Input files are either JSON (a matrix with "entries", an oriented matroid
 * with "circuits"/"cocircuits", or a complex with "vertices"/"facets") or a
 * plain-text chirotope. An optional "f" key records the distinguished
 * element.
 */
LoadedInput load_input(const std::string& path) {
  LoadedInput loaded;
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw std::invalid_argument("input file is empty: " + path);
  if (text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
    }
    if (j.contains("entries")) {
      loaded.matrix = matrix_from_json(j);
    } else if (j.contains("vertices") && j.contains("facets")) {
      loaded.complex = complex_from_json(j);
    } else if (j.contains("circuits") || j.contains("cocircuits")) {
      loaded.om = om_from_json(j);
    } else {
      throw std::invalid_argument(
          "unrecognized JSON input: expected a matrix (\"entries\"), an oriented "
          "matroid (\"circuits\"/\"cocircuits\") or a complex (\"vertices\"/\"facets\")");
    }
    if (j.contains("f")) loaded.declared_f = j.at("f").get<std::string>();
  } else {
    const ParsedChirotope parsed = chirotope_from_text(text);
    loaded.om = om_from_chirotope(parsed.chi, parsed.ground);
  }
  return loaded;
}

OrientedMatroid require_om(const LoadedInput& in) {
  if (in.om) return *in.om;
  if (in.matrix)
    return om_from_matrix(in.matrix->mat, GroundSet(in.matrix->labels_or_default()));
  throw std::invalid_argument(
      "this command needs a matrix, chirotope or oriented matroid input");
}

/** Precedence: --f flag, then a "f" key in the input, then a label literally
 * called "f", then the last column. */
std::string resolve_f(const OrientedMatroid& om, const Options& opt,
                      const LoadedInput& in) {
  if (!opt.f_label.empty()) return opt.f_label;
  if (in.declared_f) return *in.declared_f;
  if (om.ground.index("f") >= 0) return "f";
  return om.ground.label(om.size() - 1);
}

AffineOM require_affine(const LoadedInput& in, const Options& opt) {
  OrientedMatroid om = require_om(in);
  const std::string f = resolve_f(om, opt, in);
  return make_affine(std::move(om), f);
}

SimplicialComplex require_complex(const LoadedInput& in) {
  if (in.complex) return *in.complex;
  throw std::invalid_argument("this command needs a simplicial complex input");
}

std::string facet_spelling(const SimplicialComplex& k, Mask facet) {
  std::string s = "{";
  bool first = true;
  for (const std::string& l : k.vertices().labels_of(facet)) {
    if (!first) s += ", ";
    s += l;
    first = false;
  }
  return s + "}";
}

void print_facets(std::ostream& out, const SimplicialComplex& k) {
  if (k.is_void()) {
    out << "(void complex)\n";
    return;
  }
  for (Mask f : k.facets()) out << facet_spelling(k, f) << "\n";
}

void print_sign_vectors(std::ostream& out, const std::vector<SignVector>& vs,
                        const GroundSet& g) {
  for (const auto& v : vs) out << format_sign_vector(v, g) << "\n";
}

nlohmann::json sign_vectors_json(const std::vector<SignVector>& vs,
                                 const GroundSet& g) {
  auto arr = nlohmann::json::array();
  for (const auto& v : vs) arr.push_back(sign_vector_to_json(v, g));
  return arr;
}

std::string group_spelling(int betti, const std::vector<Integer>& torsion) {
  std::vector<std::string> parts;
  if (betti == 1)
    parts.push_back("Z");
  else if (betti > 1)
    parts.push_back("Z^" + std::to_string(betti));
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

void print_profile(std::ostream& out, const HomologyProfile& p, const char* name) {
  if (p.groups.empty()) {
    out << "(no reduced " << name << " groups: complex has only the empty face)\n";
    return;
  }
  for (const auto& g : p.groups)
    out << name << "[" << g.degree << "] = " << group_spelling(g.betti, g.torsion)
        << "\n";
}

nlohmann::json profile_json(const HomologyProfile& p) {
  auto arr = nlohmann::json::array();
  for (const auto& g : p.groups) {
    nlohmann::json row;
    row["degree"] = g.degree;
    row["betti"] = g.betti;
    auto tor = nlohmann::json::array();
    for (const auto& t : g.torsion) tor.push_back(t.str());
    row["torsion"] = std::move(tor);
    arr.push_back(std::move(row));
  }
  return arr;
}

void print_matrix(std::ostream& out, const RatMat& m,
                  const std::vector<std::string>& labels) {
  if (!labels.empty()) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      out << (i ? " " : "") << labels[i];
    out << "\n";
  }
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m(r, c));
    out << "\n";
  }
}

int cmd_sign_vectors(const Options& opt, std::ostream& out, bool circuits) {
  const OrientedMatroid om = require_om(load_input(opt.input));
  const auto& vs = circuits ? om.circuits : om.cocircuits;
  if (opt.json)
    out << sign_vectors_json(vs, om.ground).dump(2) << "\n";
  else
    print_sign_vectors(out, vs, om.ground);
  return 0;
}

int cmd_dual(const Options& opt, std::ostream& out) {
  const OrientedMatroid d = dual(require_om(load_input(opt.input)));
  if (opt.json) {
    out << om_to_json(d).dump(2) << "\n";
    return 0;
  }
  out << "ground:";
  for (const auto& l : d.ground.labels()) out << " " << l;
  out << "\nrank: " << d.rank << "\ncircuits:\n";
  print_sign_vectors(out, d.circuits, d.ground);
  out << "cocircuits:\n";
  print_sign_vectors(out, d.cocircuits, d.ground);
  return 0;
}

int cmd_delta(const Options& opt, std::ostream& out) {
  const LoadedInput in = load_input(opt.input);
  const AffineOM a = require_affine(in, opt);
  const SimplicialComplex k = delta_complex(a);
  if (!opt.svg_path.empty()) {
    const int n = a.om.size() - 1;
    const int d = a.om.rank - 1;
    if (n > 3 || d > 2)
      throw std::invalid_argument(
          "--svg is limited to at most 3 non-distinguished elements and affine rank "
          "at most 2");
    std::ofstream svg(opt.svg_path, std::ios::binary);
    if (!svg) throw std::invalid_argument("cannot write svg file: " + opt.svg_path);
    svg << complex_svg(k);
  }
  if (opt.json)
    out << complex_to_json(k).dump(2) << "\n";
  else
    print_facets(out, k);
  return 0;
}

int cmd_alexander_dual(const Options& opt, std::ostream& out) {
  const SimplicialComplex k = require_complex(load_input(opt.input));
  const SimplicialComplex d = alexander_dual(k);
  if (opt.json)
    out << complex_to_json(d).dump(2) << "\n";
  else
    print_facets(out, d);
  return 0;
}

int cmd_stanley_reisner(const Options& opt, std::ostream& out) {
  const SimplicialComplex k = require_complex(load_input(opt.input));
  const std::vector<std::string> gens = stanley_reisner_generators(k);
  if (opt.json) {
    const nlohmann::json arr = gens;
    out << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto& g : gens) out << g << "\n";
  return 0;
}

int cmd_homology(const Options& opt, std::ostream& out) {
  const SimplicialComplex k = require_complex(load_input(opt.input));
  const HomologyProfile p = reduced_homology(k);
  if (opt.json) {
    nlohmann::json j;
    j["homology"] = profile_json(p);
    j["trivial"] = p.trivial();
    out << j.dump(2) << "\n";
    return 0;
  }
  print_profile(out, p, "H");
  return 0;
}

int cmd_lawrence_matrix(const Options& opt, std::ostream& out) {
  const LoadedInput in = load_input(opt.input);
  if (!in.matrix) throw std::invalid_argument("lawrence-matrix needs a matrix input");
  const RatMat lz = lawrence_matrix(in.matrix->mat);
  const GroundSet labels = xy_ground(GroundSet(in.matrix->labels_or_default()));
  if (opt.json)
    out << matrix_to_json(lz, labels.labels()).dump(2) << "\n";
  else
    print_matrix(out, lz, labels.labels());
  return 0;
}

int cmd_check_theorem1(const Options& opt, std::ostream& out) {
  const LoadedInput in = load_input(opt.input);
  const AffineOM a = require_affine(in, opt);
  const Theorem1Report r = theorem1_check(a);
  if (opt.json) {
    nlohmann::json j;
    j["ok"] = r.ok;
    j["rhs_defined"] = r.rhs_defined;
    if (!r.rhs_defined) {
      j["rhs_issue"] = r.rhs_issue;
    } else {
      j["alexander_dual_of_delta"] = complex_to_json(r.lhs_dual);
      j["delta_of_reoriented_dual"] = complex_to_json(r.rhs);
    }
    out << j.dump(2) << "\n";
  } else if (!r.rhs_defined) {
    out << "right side undefined: " << r.rhs_issue << "\n";
  } else {
    out << "alexander dual of delta(M, f):\n";
    print_facets(out, r.lhs_dual);
    out << "delta of the reoriented dual:\n";
    print_facets(out, r.rhs);
    out << "equal: " << (r.ok ? "yes" : "no") << "\n";
  }
  if (!r.rhs_defined) return 2;
  return r.ok ? 0 : 1;
}

int cmd_check_duality_homology(const Options& opt, std::ostream& out) {
  const LoadedInput in = load_input(opt.input);
  const SimplicialComplex k =
      in.complex ? *in.complex : delta_complex(require_affine(in, opt));
  const DualityReport rep = alexander_duality_check(k);
  if (opt.json) {
    nlohmann::json j;
    j["ok"] = rep.ok;
    auto rows = nlohmann::json::array();
    for (const auto& row : rep.rows) {
      nlohmann::json r;
      r["degree"] = row.degree;
      r["dual_degree"] = row.dual_degree;
      r["homology"] = group_spelling(row.betti_primal, row.torsion_primal);
      r["dual_cohomology"] = group_spelling(row.betti_dual, row.torsion_dual);
      r["ok"] = row.ok;
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& row : rep.rows)
      out << "H[" << row.degree << "] = "
          << group_spelling(row.betti_primal, row.torsion_primal) << "  vs  dual H^["
          << row.dual_degree << "] = "
          << group_spelling(row.betti_dual, row.torsion_dual)
          << (row.ok ? "" : "  MISMATCH") << "\n";
    out << "alexander duality holds: " << (rep.ok ? "yes" : "no") << "\n";
  }
  return rep.ok ? 0 : 1;
}

int cmd_check_facet_count(const Options& opt, std::ostream& out) {
  const OrientedMatroid om = require_om(load_input(opt.input));
  const FacetCountReport r = facet_count_check(om);
  const bool has_loops = structural_flags(om).loops != 0;
  if (opt.json) {
    nlohmann::json j;
    j["elements"] = r.n;
    j["coloops"] = r.coloops;
    j["unsigned_cocircuits"] = r.unsigned_cocircuits;
    j["predicted_facets"] = r.predicted;
    j["enumerated_facets"] = r.enumerated;
    j["has_loops"] = has_loops;
    j["ok"] = r.ok;
    out << j.dump(2) << "\n";
  } else {
    out << "elements: " << r.n << "\ncoloops: " << r.coloops
        << "\nunsigned cocircuits: " << r.unsigned_cocircuits
        << "\npredicted facets (n - l + 2c): " << r.predicted
        << "\nenumerated facets: " << r.enumerated << "\n";
    if (has_loops)
      out << "note: the ground set has loops; the count law is only promised "
             "loop-free\n";
    out << "match: " << (r.ok ? "yes" : "no") << "\n";
  }
  return r.ok ? 0 : 1;
}

int cmd_check_painting(const Options& opt, std::ostream& out) {
  const OrientedMatroid om = require_om(load_input(opt.input));
  Rng rng(opt.seed);
  const PaintingScan scan = painting_dichotomy_scan(om, rng);
  if (opt.json) {
    nlohmann::json j;
    j["marked_paintings_checked"] = scan.checked;
    j["violations"] = scan.violations;
    j["ok"] = scan.violations == 0;
    out << j.dump(2) << "\n";
  } else {
    out << "marked paintings checked: " << scan.checked
        << "\nviolations: " << scan.violations << "\n";
  }
  return scan.violations == 0 ? 0 : 1;
}

int cmd_check_sphere_ball(const Options& opt, std::ostream& out) {
  const LoadedInput in = load_input(opt.input);
  const AffineOM a = require_affine(in, opt);
  const SphereBallReport r = sphere_ball_check(a);
  if (opt.json) {
    nlohmann::json j;
    j["prediction"] = r.sphere_predicted ? "sphere" : "ball";
    if (r.sphere_predicted) j["expected_sphere_degree"] = r.expected_sphere_degree;
    j["dual_is_void"] = r.vacuous;
    j["dual_homology"] = profile_json(r.dual_profile);
    j["ok"] = r.homology_ok;
    out << j.dump(2) << "\n";
  } else {
    out << "prediction for the dual of the lifting subdivision: "
        << (r.sphere_predicted ? "sphere" : "ball") << "\n";
    if (r.sphere_predicted)
      out << "expected sphere degree: " << r.expected_sphere_degree << "\n";
    if (r.vacuous)
      out << "lifting subdivision is the full simplex; its dual is void\n";
    else
      print_profile(out, r.dual_profile, "H");
    out << "homology matches the prediction: " << (r.homology_ok ? "yes" : "no")
        << "\n";
  }
  return r.homology_ok ? 0 : 1;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const LoadedInput in = load_input(opt.input);
  const AffineOM a = require_affine(in, opt);
  const FamilyFlags fl = classify_families(a);
  if (opt.json) {
    nlohmann::json j;
    j["deletion_uniform"] = fl.deletion_uniform;
    j["contraction_uniform"] = fl.contraction_uniform;
    j["realized"] = fl.realized;
    j["families"] = fl.families;
    out << j.dump(2) << "\n";
  } else {
    out << "M \\ f uniform: " << (fl.deletion_uniform ? "yes" : "no")
        << "\nM / f uniform: " << (fl.contraction_uniform ? "yes" : "no")
        << "\nrealized: " << (fl.realized ? "yes" : "no") << "\nfamilies:";
    for (const auto& fam : fl.families) out << " " << fam;
    out << "\n";
  }
  return 0;
}

int cmd_random_verify(const Options& opt, std::ostream& out) {
  if (opt.nmax < opt.dmax)
    throw std::invalid_argument("--nmax must be at least --dmax");
  VerifyConfig cfg;
  cfg.seed = opt.seed;
  cfg.count = opt.count;
  cfg.dmax = opt.dmax;
  cfg.nmax = opt.nmax;
  cfg.bound = opt.bound;
  const VerifyReport rep = random_verify(cfg);
  if (opt.json) {
    nlohmann::json j;
    j["instances_run"] = rep.instances_run;
    j["ok"] = rep.ok();
    auto fails = nlohmann::json::array();
    for (const auto& f : rep.failures) {
      nlohmann::json row;
      row["seed_offset"] = f.index;
      row["check"] = f.check;
      row["detail"] = f.detail;
      row["matrix"] = matrix_to_json(f.matrix);
      fails.push_back(std::move(row));
    }
    j["failures"] = std::move(fails);
    out << j.dump(2) << "\n";
  } else {
    out << "instances run: " << rep.instances_run << "\n";
    for (const auto& f : rep.failures)
      out << "failure at seed offset " << f.index << " [" << f.check
          << "]: " << f.detail << "\n  matrix: " << matrix_to_json(f.matrix).dump()
          << "\n";
    out << (rep.ok() ? "all checks passed" : "checks FAILED") << "\n";
  }
  return rep.ok() ? 0 : 1;
}

std::string braced(const std::vector<std::string>& parts) {
  std::string s = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i];
  }
  return s + "}";
}

std::string angled(const std::vector<std::string>& parts) {
  std::string s = "<";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i];
  }
  return s + ">";
}

/**
 * End-to-end run of the built-in worked example: four collinear points on an
 * affine line together with their Gale transform. Every printed artifact is
 * also asserted against the expected value; any mismatch exits nonzero.
 */
int cmd_demo(const Options& opt, std::ostream& out) {
  std::vector<std::pair<std::string, bool>> checks;
  const auto record = [&](const std::string& name, bool ok) {
    checks.emplace_back(name, ok);
  };

  const GroundSet ground = fixtures::line_ground();
  const AffineOM a = make_affine(om_from_matrix(fixtures::collinear_points(), ground), "f");
  const AffineOM b = make_affine(om_from_matrix(fixtures::collinear_gale(), ground), "f");

  const auto spelled_cocircuits_at_f = [](const AffineOM& x) {
    std::vector<std::string> res;
    for (const auto& c : x.om.cocircuits)
      if (has_bit(c.pos, x.f))
        res.push_back(braced(signed_set_spelling(c, x.om.ground, x.f)));
    std::sort(res.begin(), res.end());
    return res;
  };
  const auto spelled_fixture = [](std::vector<std::vector<std::string>> sets) {
    std::vector<std::string> res;
    for (auto& s : sets) res.push_back(braced(s));
    std::sort(res.begin(), res.end());
    return res;
  };

  const std::vector<std::string> cocirc_a = spelled_cocircuits_at_f(a);
  const std::vector<std::string> cocirc_b = spelled_cocircuits_at_f(b);
  record("point side has the four expected cocircuits through f",
         cocirc_a == spelled_fixture(fixtures::point_side_cocircuit_sets()));
  record("gale side has the six expected cocircuits through f",
         cocirc_b == spelled_fixture(fixtures::gale_side_cocircuit_sets()));

  const SimplicialComplex delta_a = delta_complex(a);
  const SimplicialComplex delta_b = delta_complex(b);
  record("delta on the point side is the staircase complex",
         delta_a == SimplicialComplex::from_facets(delta_a.vertices(),
                                                   fixtures::staircase_facets()));
  record("delta on the gale side is the six-facet complex",
         delta_b == SimplicialComplex::from_facets(delta_b.vertices(),
                                                   fixtures::gale_triangulation_facets()));
  record("alexander dual of the staircase equals the six-facet complex",
         alexander_dual(delta_a) == delta_b);

  const std::vector<std::string> sr_a = stanley_reisner_generators(delta_a);
  const std::vector<std::string> sr_b = stanley_reisner_generators(delta_b);
  record("stanley-reisner generators of the staircase",
         sr_a == fixtures::staircase_sr_generators());
  record("stanley-reisner generators of the six-facet complex",
         sr_b == fixtures::gale_sr_generators());

  const Theorem1Report ta = theorem1_check(a);
  const Theorem1Report tb = theorem1_check(b);
  record("duality theorem on the point side", ta.rhs_defined && ta.ok);
  record("duality theorem on the gale side", tb.rhs_defined && tb.ok);

  record("lifting subdivision on the point side is a triangulation",
         is_triangulation(a));
  record("lifting subdivision on the gale side is a triangulation",
         is_triangulation(b));

  const FacetCountReport fc = facet_count_check(
      om_from_matrix(fixtures::collinear_gale_contracted(), GroundSet::numbered(4)));
  record("Lawrence polytope of the contracted gale matrix has 12 facets",
         fc.ok && fc.enumerated == 12);

  record("staircase complex has trivial reduced homology",
         reduced_homology(delta_a).trivial());
  record("six-facet complex has trivial reduced homology",
         reduced_homology(delta_b).trivial());

  bool all_ok = true;
  for (const auto& [name, ok] : checks) all_ok = all_ok && ok;

  if (opt.json) {
    nlohmann::json j;
    j["ok"] = all_ok;
    auto arr = nlohmann::json::array();
    for (const auto& [name, ok] : checks)
      arr.push_back(nlohmann::json{{"check", name}, {"ok", ok}});
    j["checks"] = std::move(arr);
    j["delta_point_side"] = complex_to_json(delta_a);
    j["delta_gale_side"] = complex_to_json(delta_b);
    j["stanley_reisner_point_side"] = sr_a;
    j["stanley_reisner_gale_side"] = sr_b;
    out << j.dump(2) << "\n";
    return all_ok ? 0 : 1;
  }

  out << "four collinear points, lifted:\n";
  print_matrix(out, fixtures::collinear_points(), ground.labels());
  out << "gale transform side:\n";
  print_matrix(out, fixtures::collinear_gale(), ground.labels());
  out << "cocircuits through f, point side:\n";
  for (const auto& s : cocirc_a) out << "  " << s << "\n";
  out << "cocircuits through f, gale side:\n";
  for (const auto& s : cocirc_b) out << "  " << s << "\n";
  out << "delta(M, f), point side:\n";
  for (Mask fct : delta_a.facets()) out << "  " << facet_spelling(delta_a, fct) << "\n";
  out << "delta(M, f), gale side:\n";
  for (Mask fct : delta_b.facets()) out << "  " << facet_spelling(delta_b, fct) << "\n";
  out << "stanley-reisner generators, point side: " << angled(sr_a) << "\n";
  out << "stanley-reisner generators, gale side: " << angled(sr_b) << "\n";
  for (const auto& [name, ok] : checks)
    out << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
  out << (all_ok ? "demo passed" : "demo FAILED") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact tools for oriented matroid duality, Lawrence polytopes and "
               "lifting subdivisions"};
  app.require_subcommand(1);
  Options opt;

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input,
                    "JSON matrix/oriented matroid/complex, or a chirotope text file")
        ->required()
        ->check(CLI::ExistingFile);
  };
  const auto add_f = [&](CLI::App* sub) {
    sub->add_option("--f", opt.f_label,
                    "label of the distinguished element (default: \"f\" if present, "
                    "else the last column)");
  };
  const auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "emit JSON instead of text");
  };

  CLI::App* c_circuits = app.add_subcommand("circuits", "signed circuits of the input");
  CLI::App* c_cocircuits =
      app.add_subcommand("cocircuits", "signed cocircuits of the input");
  CLI::App* c_dual = app.add_subcommand("dual", "dual oriented matroid");
  CLI::App* c_delta = app.add_subcommand(
      "delta", "facets of the complex delta(M, f) on doubled vertices");
  CLI::App* c_adual =
      app.add_subcommand("alexander-dual", "Alexander dual of a complex");
  CLI::App* c_sr = app.add_subcommand(
      "stanley-reisner", "minimal generators of the Stanley-Reisner ideal");
  CLI::App* c_hom =
      app.add_subcommand("homology", "integer reduced homology of a complex");
  CLI::App* c_lmat =
      app.add_subcommand("lawrence-matrix", "Lawrence lifting (D 0; I I) of a matrix");
  CLI::App* c_thm = app.add_subcommand(
      "check-theorem1",
      "verify that the Alexander dual of delta(M, f) is delta of the reoriented dual");
  CLI::App* c_dh = app.add_subcommand(
      "check-duality-homology", "verify Alexander duality at homology level");
  CLI::App* c_fc = app.add_subcommand(
      "check-facet-count", "verify the Lawrence polytope facet-count law n - l + 2c");
  CLI::App* c_paint = app.add_subcommand(
      "check-painting", "verify the painting dichotomy over 4-colourings");
  CLI::App* c_sb = app.add_subcommand(
      "check-sphere-ball",
      "verify the sphere/ball dichotomy for the dual of the lifting subdivision");
  CLI::App* c_classify =
      app.add_subcommand("classify", "subdivision family membership of (M, f)");
  CLI::App* c_demo = app.add_subcommand(
      "demo-paper", "run the built-in collinear worked example end to end");
  CLI::App* c_rv = app.add_subcommand(
      "random-verify", "batch-verify random instances from a seed");

  for (CLI::App* sub :
       {c_circuits, c_cocircuits, c_dual, c_delta, c_adual, c_sr, c_hom, c_lmat,
        c_thm, c_dh, c_fc, c_paint, c_sb, c_classify})
    add_input(sub);
  for (CLI::App* sub : {c_delta, c_thm, c_dh, c_sb, c_classify}) add_f(sub);
  for (CLI::App* sub :
       {c_circuits, c_cocircuits, c_dual, c_delta, c_adual, c_sr, c_hom, c_lmat,
        c_thm, c_dh, c_fc, c_paint, c_sb, c_classify, c_demo, c_rv})
    add_json(sub);
  c_delta->add_option("--svg", opt.svg_path,
                      "write an SVG drawing (small instances only)");
  c_paint->add_option("--seed", opt.seed,
                      "sampling seed, used when the ground set has more than 6 "
                      "elements");
  c_rv->add_option("--seed", opt.seed, "base seed for instance generation")
      ->required();
  c_rv->add_option("--count", opt.count, "number of instances")
      ->check(CLI::NonNegativeNumber);
  c_rv->add_option("--dmax", opt.dmax, "maximum affine dimension")
      ->check(CLI::PositiveNumber);
  c_rv->add_option("--nmax", opt.nmax, "maximum number of non-distinguished columns")
      ->check(CLI::PositiveNumber);
  c_rv->add_option("--bound", opt.bound, "entries are drawn from [-bound, bound]")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  try {
    if (name == "circuits") return cmd_sign_vectors(opt, out, true);
    if (name == "cocircuits") return cmd_sign_vectors(opt, out, false);
    if (name == "dual") return cmd_dual(opt, out);
    if (name == "delta") return cmd_delta(opt, out);
    if (name == "alexander-dual") return cmd_alexander_dual(opt, out);
    if (name == "stanley-reisner") return cmd_stanley_reisner(opt, out);
    if (name == "homology") return cmd_homology(opt, out);
    if (name == "lawrence-matrix") return cmd_lawrence_matrix(opt, out);
    if (name == "check-theorem1") return cmd_check_theorem1(opt, out);
    if (name == "check-duality-homology") return cmd_check_duality_homology(opt, out);
    if (name == "check-facet-count") return cmd_check_facet_count(opt, out);
    if (name == "check-painting") return cmd_check_painting(opt, out);
    if (name == "check-sphere-ball") return cmd_check_sphere_ball(opt, out);
    if (name == "classify") return cmd_classify(opt, out);
    if (name == "demo-paper") return cmd_demo(opt, out);
    if (name == "random-verify") return cmd_random_verify(opt, out);
    err << "error: unknown command " << name << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace omdual::cli
