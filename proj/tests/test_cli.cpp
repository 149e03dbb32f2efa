#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "omdual/cli.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"omdual"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliResult res;
  res.code = omdual::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  res.out = out.str();
  res.err = err.str();
  return res;
}

std::string data_path(const std::string& name) {
  return std::string(OMDUAL_DATA_DIR) + "/" + name;
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content) {
    path_ = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream f(path_, std::ios::binary);
    f << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

using nlohmann::json;

TEST_CASE("demo subcommand passes and is deterministic") {
  const CliResult a = run_cli({"demo-paper"});
  CHECK(a.code == 0);
  CHECK(a.out.find("demo passed") != std::string::npos);
  CHECK(a.out.find("[FAIL]") == std::string::npos);
  const CliResult b = run_cli({"demo-paper"});
  CHECK(a.out == b.out);

  const CliResult j = run_cli({"demo-paper", "--json"});
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.at("ok").get<bool>());
  CHECK(doc.at("checks").size() == 14);
}

TEST_CASE("circuits and cocircuits from a matrix file") {
  const CliResult c = run_cli({"circuits", "--input", data_path("affine_line.json")});
  CHECK(c.code == 0);
  CHECK(count_lines(c.out) == 20);
  CHECK(c.out.find("+{1,3} -{2}") != std::string::npos);

  const CliResult cc =
      run_cli({"cocircuits", "--input", data_path("gale_dual.json"), "--json"});
  CHECK(cc.code == 0);
  const json arr = json::parse(cc.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 20);
}

TEST_CASE("circuits from a chirotope text file") {
  const CliResult c =
      run_cli({"circuits", "--input", data_path("four_points_chirotope.txt")});
  CHECK(c.code == 0);
  CHECK(count_lines(c.out) == 8);
  const CliResult again =
      run_cli({"circuits", "--input", data_path("four_points_chirotope.txt")});
  CHECK(c.out == again.out);
}

TEST_CASE("dual output is a loadable oriented matroid") {
  const CliResult d =
      run_cli({"dual", "--input", data_path("affine_line.json"), "--json"});
  CHECK(d.code == 0);
  const json doc = json::parse(d.out);
  CHECK(doc.at("rank").get<int>() == 3);
  TempFile f("omdual_cli_dual.json", d.out);
  const CliResult c = run_cli({"circuits", "--input", f.path()});
  CHECK(c.code == 0);
  CHECK(count_lines(c.out) > 0);
}

TEST_CASE("delta facets of the worked example") {
  const CliResult d = run_cli({"delta", "--input", data_path("affine_line.json")});
  CHECK(d.code == 0);
  CHECK(d.out ==
        "{x1, x2, x3, x4, y4}\n"
        "{x1, x2, x3, y3, y4}\n"
        "{x1, x2, y2, y3, y4}\n"
        "{x1, y1, y2, y3, y4}\n");

  const CliResult j =
      run_cli({"delta", "--input", data_path("gale_dual.json"), "--json"});
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.at("facets").size() == 6);
  CHECK(doc.at("vertices").size() == 8);
}

TEST_CASE("delta respects an explicit distinguished element") {
  const CliResult d = run_cli(
      {"delta", "--input", data_path("gale_contracted.json"), "--f", "2", "--json"});
  CHECK(d.code == 0);
  const json doc = json::parse(d.out);
  CHECK(doc.at("vertices").size() == 6);
}

TEST_CASE("alexander dual and stanley-reisner of the bipyramid") {
  const CliResult a =
      run_cli({"alexander-dual", "--input", data_path("bipyramid.json")});
  CHECK(a.code == 0);
  CHECK(a.out == "{1, 2, 3}\n{4, 5}\n");

  const CliResult s =
      run_cli({"stanley-reisner", "--input", data_path("bipyramid.json")});
  CHECK(s.code == 0);
  CHECK(s.out == "1*2*3\n4*5\n");
}

TEST_CASE("homology subcommand") {
  const CliResult h =
      run_cli({"homology", "--input", data_path("projective_plane.json")});
  CHECK(h.code == 0);
  CHECK(h.out.find("H[1] = Z/2") != std::string::npos);
  CHECK(h.out.find("H[2] = 0") != std::string::npos);

  const CliResult j =
      run_cli({"homology", "--input", data_path("bipyramid.json"), "--json"});
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK_FALSE(doc.at("trivial").get<bool>());
  bool found = false;
  for (const auto& row : doc.at("homology"))
    if (row.at("degree") == 2) {
      found = true;
      CHECK(row.at("betti") == 1);
      CHECK(row.at("torsion").empty());
    }
  CHECK(found);

  TempFile void_file("omdual_cli_void.json", "{\"vertices\": [], \"facets\": []}");
  const CliResult v = run_cli({"homology", "--input", void_file.path()});
  CHECK(v.code == 2);
}

TEST_CASE("lawrence-matrix subcommand") {
  const CliResult t =
      run_cli({"lawrence-matrix", "--input", data_path("gale_contracted.json")});
  CHECK(t.code == 0);
  CHECK(t.out.substr(0, t.out.find('\n')) == "x1 x2 x3 x4 y1 y2 y3 y4");
  CHECK(count_lines(t.out) == 7);

  const CliResult j = run_cli(
      {"lawrence-matrix", "--input", data_path("gale_contracted.json"), "--json"});
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.at("rows") == 6);
  CHECK(doc.at("cols") == 8);
}

TEST_CASE("check-theorem1 exit codes") {
  const CliResult ok =
      run_cli({"check-theorem1", "--input", data_path("affine_line.json")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("equal: yes") != std::string::npos);

  TempFile coloop("omdual_cli_coloop.json",
                  "{\"rows\": 2, \"cols\": 2, \"entries\": [[1, 0], [0, 1]], "
                  "\"labels\": [\"1\", \"f\"]}");
  const CliResult bad = run_cli({"check-theorem1", "--input", coloop.path()});
  CHECK(bad.code == 2);
  CHECK(bad.out.find("right side undefined") != std::string::npos);
}

TEST_CASE("check-duality-homology on a complex and on a matrix") {
  const CliResult c =
      run_cli({"check-duality-homology", "--input", data_path("bipyramid.json")});
  CHECK(c.code == 0);
  CHECK(c.out.find("alexander duality holds: yes") != std::string::npos);

  const CliResult m =
      run_cli({"check-duality-homology", "--input", data_path("prism.json")});
  CHECK(m.code == 0);
}

TEST_CASE("check-facet-count subcommand") {
  const CliResult r =
      run_cli({"check-facet-count", "--input", data_path("gale_contracted.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("enumerated facets: 12") != std::string::npos);
  CHECK(r.out.find("match: yes") != std::string::npos);
}

TEST_CASE("check-painting subcommand") {
  const CliResult r =
      run_cli({"check-painting", "--input", data_path("affine_line.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations: 0") != std::string::npos);
}

TEST_CASE("check-sphere-ball subcommand") {
  const CliResult sphere =
      run_cli({"check-sphere-ball", "--input", data_path("segment_pair.json")});
  CHECK(sphere.code == 0);
  CHECK(sphere.out.find("prediction for the dual of the lifting subdivision: "
                        "sphere") != std::string::npos);
  CHECK(sphere.out.find("expected sphere degree: -1") != std::string::npos);

  const CliResult ball =
      run_cli({"check-sphere-ball", "--input", data_path("affine_line.json")});
  CHECK(ball.code == 0);
  CHECK(ball.out.find("ball") != std::string::npos);
}

TEST_CASE("classify subcommand") {
  const CliResult p = run_cli({"classify", "--input", data_path("pyramid.json")});
  CHECK(p.code == 0);
  CHECK(p.out.find("families: S R T RT RS") != std::string::npos);

  const CliResult j =
      run_cli({"classify", "--input", data_path("affine_line.json"), "--json"});
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.at("families").size() == 8);
}

TEST_CASE("svg output for small instances only") {
  const std::string svg_path =
      (std::filesystem::temp_directory_path() / "omdual_cli_prism.svg").string();
  const CliResult ok = run_cli(
      {"delta", "--input", data_path("prism.json"), "--svg", svg_path});
  CHECK(ok.code == 0);
  {
    std::ifstream f(svg_path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str().rfind("<svg", 0) == 0);
  }
  std::remove(svg_path.c_str());

  const CliResult too_big = run_cli(
      {"delta", "--input", data_path("affine_line.json"), "--svg", svg_path});
  CHECK(too_big.code == 2);
  CHECK_FALSE(std::filesystem::exists(svg_path));
}

TEST_CASE("random-verify subcommand") {
  const CliResult missing = run_cli({"random-verify"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--seed") != std::string::npos);

  const CliResult a = run_cli({"random-verify", "--seed", "5", "--count", "3"});
  CHECK(a.code == 0);
  CHECK(a.out.find("instances run: 3") != std::string::npos);
  CHECK(a.out.find("all checks passed") != std::string::npos);
  const CliResult b = run_cli({"random-verify", "--seed", "5", "--count", "3"});
  CHECK(a.out == b.out);

  const CliResult j =
      run_cli({"random-verify", "--seed", "5", "--count", "2", "--json"});
  CHECK(j.code == 0);
  const json doc = json::parse(j.out);
  CHECK(doc.at("instances_run") == 2);
  CHECK(doc.at("ok").get<bool>());
}

TEST_CASE("usage and input errors exit with code 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"circuits"}).code == 2);
  CHECK(run_cli({"circuits", "--input", "/no/such/file.json"}).code == 2);

  TempFile garbage("omdual_cli_garbage.json", "{ this is not json");
  CHECK(run_cli({"circuits", "--input", garbage.path()}).code == 2);

  TempFile unknown("omdual_cli_unknown.json", "{\"foo\": 1}");
  CHECK(run_cli({"circuits", "--input", unknown.path()}).code == 2);

  CHECK(run_cli({"stanley-reisner", "--input", data_path("affine_line.json")}).code ==
        2);
  CHECK(run_cli({"circuits", "--input", data_path("bipyramid.json")}).code == 2);
  CHECK(run_cli({"delta", "--input", data_path("affine_line.json"), "--f",
                 "nope"})
            .code == 2);
}

TEST_CASE("help exits zero") {
  const CliResult h = run_cli({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("random-verify") != std::string::npos);
}
