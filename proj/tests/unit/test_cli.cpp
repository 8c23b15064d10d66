#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rotkit/commands.hpp"
#include "rotkit/coverage.hpp"
#include "rotkit/labels.hpp"
#include "support.hpp"

using namespace rotkit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rotkit");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "rotkit_unit_cli" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_records(const fs::path& p, const std::vector<Matrix3>& rots) {
  std::vector<PoseRecord> recs;
  for (std::size_t i = 0; i < rots.size(); ++i) {
    PoseRecord r;
    r.id = "rec" + std::to_string(i);
    r.rotation = rots[i];
    recs.push_back(r);
  }
  write_labels(p, recs);
}

}  // namespace

TEST_CASE("cli usage errors exit with 1") {
  CHECK(run_cli({}).code == cli::kExitValidation);
  CHECK(run_cli({"bogus"}).code == cli::kExitValidation);
  CHECK(run_cli({"augment", "--input", "x"}).code == cli::kExitValidation);
  CHECK(run_cli({"augment", "--input", "x", "--output", "y", "--mode", "shear"}).code == cli::kExitValidation);
  const Result help = run_cli({"--help"});
  CHECK(help.code == cli::kExitOk);
  CHECK(help.out.find("augment") != std::string::npos);
}

TEST_CASE("cli spiral then stats shows zero roll") {
  const fs::path dir = fresh_dir("spiral");
  const Result s = run_cli({"spiral", "--output", (dir / "spiral.jsonl").string(), "--count", "1440"});
  REQUIRE(s.code == 0);
  CHECK(s.out.find("\"records\":1440") != std::string::npos);
  CHECK(read_labels(dir / "spiral.jsonl").size() == 1440);

  const Result st = run_cli({"stats", "--input", (dir / "spiral.jsonl").string()});
  REQUIRE(st.code == 0);
  std::istringstream csv(st.out);
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  CHECK(header == "dataset,pitch_min_deg,pitch_max_deg,yaw_min_deg,yaw_max_deg,roll_min_deg,roll_max_deg,size");
  std::vector<std::string> cells;
  std::stringstream rs(row);
  for (std::string c; std::getline(rs, c, ',');) cells.push_back(c);
  REQUIRE(cells.size() == 8);
  CHECK(cells[0] == "spiral");
  CHECK(std::abs(std::stod(cells[5])) < 1e-8);
  CHECK(std::abs(std::stod(cells[6])) < 1e-8);
  CHECK(cells[7] == "1440");

  CHECK(run_cli({"spiral", "--output", (dir / "x.jsonl").string(), "--pitch-range", "10"}).code == 1);
  CHECK(run_cli({"spiral", "--output", (dir / "x.jsonl").string(), "--pitch-range", "-95,10"}).code == 1);
  CHECK(run_cli({"spiral", "--output", (dir / "x.jsonl").string(), "--pitch-range", "-30,30", "--turns",
                 "2", "--count", "10"})
            .code == 0);
}

TEST_CASE("cli augment") {
  const fs::path dir = fresh_dir("augment");
  const fs::path frontal = dir / "frontal.jsonl";
  write_records(frontal, std::vector<Matrix3>(5, Matrix3::identity()));

  SUBCASE("horizontal flip of frontal faces is the identity") {
    REQUIRE(run_cli({"augment", "--input", frontal.string(), "--output", (dir / "f.jsonl").string(), "--mode",
                     "flip", "--angle-deg", "90"})
                .code == 0);
    for (const PoseRecord& r : read_labels(dir / "f.jsonl")) {
      CHECK(r.rotation == Matrix3::identity());
      REQUIRE(r.provenance.size() == 1);
      CHECK(r.provenance[0].kind == AugmentKind::flip);
    }
  }

  const fs::path mixed = dir / "mixed.jsonl";
  const auto rots = random_rotations(40, 12);
  write_records(mixed, rots);

  SUBCASE("zero budget yields originals or horizontal flips") {
    REQUIRE(run_cli({"augment", "--input", mixed.string(), "--output", (dir / "z.jsonl").string(),
                     "--budget-deg", "0", "--seed", "3"})
                .code == 0);
    const auto out = read_labels(dir / "z.jsonl");
    REQUIRE(out.size() == rots.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      CHECK((out[i].rotation == rots[i] || out[i].rotation == flip_image_label(rots[i], kHalfPi)));
  }

  SUBCASE("flipping twice restores the file") {
    const std::string once = (dir / "once.jsonl").string(), twice = (dir / "twice.jsonl").string();
    REQUIRE(run_cli({"augment", "--input", mixed.string(), "--output", once, "--mode", "flip", "--angle-deg", "33"}).code == 0);
    REQUIRE(run_cli({"augment", "--input", once, "--output", twice, "--mode", "flip", "--angle-deg", "33"}).code == 0);
    const auto out = read_labels(twice);
    REQUIRE(out.size() == rots.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(testing::max_abs(out[i].rotation, rots[i]) < 1e-12);
      CHECK(out[i].provenance.size() == 2);
    }
  }

  SUBCASE("multiplier, summary and seed fallback") {
    const std::string a = (dir / "a.jsonl").string(), b = (dir / "b.jsonl").string();
    const Result r = run_cli({"augment", "--input", mixed.string(), "--output", a, "--multiplier", "3", "--seed", "99"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"records_out\":120") != std::string::npos);
    const auto out = read_labels(a);
    REQUIRE(out.size() == 120);
    CHECK(out[4].id == "rec1#1");
    for (const PoseRecord& p : out) CHECK(is_rotation(p.rotation, 1e-12));

    // Matches densify_rolls with the same seed.
    const auto dense = densify_rolls(rots, deg_to_rad(20), 99, {3, AugmentPolicy::mixed});
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i].rotation == dense[i]);

    ::setenv("ROTKIT_SEED", "99", 1);
    REQUIRE(run_cli({"augment", "--input", mixed.string(), "--output", b, "--multiplier", "3"}).code == 0);
    CHECK(slurp(a) == slurp(b));
    ::setenv("ROTKIT_SEED", "not-a-number", 1);
    CHECK(run_cli({"augment", "--input", mixed.string(), "--output", b}).code == 1);
    ::unsetenv("ROTKIT_SEED");
  }

  SUBCASE("errors") {
    CHECK(run_cli({"augment", "--input", (dir / "missing.jsonl").string(), "--output", (dir / "o.jsonl").string()}).code == 2);
    CHECK(run_cli({"augment", "--input", mixed.string(), "--output", (dir / "nodir" / "o.jsonl").string()}).code == 2);
    CHECK(run_cli({"augment", "--input", mixed.string(), "--output", (dir / "o.jsonl").string(), "--budget-deg", "91"}).code == 1);
    std::ofstream(dir / "bad.jsonl") << "{\"id\":\"x\",\"rotation\":[1,0,0,0,1,0,0,0,-1]}\n";
    const Result bad = run_cli({"augment", "--input", (dir / "bad.jsonl").string(), "--output", (dir / "o.jsonl").string()});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("'x'") != std::string::npos);
  }
}

TEST_CASE("cli convert") {
  const fs::path dir = fresh_dir("convert");
  const fs::path ids = dir / "ids.jsonl";
  write_records(ids, std::vector<Matrix3>(3, Matrix3::identity()));
  REQUIRE(run_cli({"convert", "--input", ids.string(), "--output", (dir / "e.jsonl").string(), "--target", "euler_pyr"}).code == 0);
  for (const PoseRecord& r : read_labels(dir / "e.jsonl")) {
    REQUIRE(r.euler_pyr);
    CHECK(*r.euler_pyr == EulerPyr{0, 0, 0});
    CHECK_FALSE(r.gimbal);
  }

  const auto rots = random_rotations(200, 13);
  write_records(dir / "r.jsonl", rots);
  REQUIRE(run_cli({"convert", "--input", (dir / "r.jsonl").string(), "--output", (dir / "rpy.jsonl").string(), "--target", "euler_rpy"}).code == 0);
  const auto rpy = read_labels(dir / "rpy.jsonl");
  for (std::size_t i = 0; i < rpy.size(); ++i) {
    REQUIRE(rpy[i].euler_rpy);
    CHECK(frobenius_diff(compose_rpy(*rpy[i].euler_rpy), rots[i]) < 1e-9);
    CHECK(rpy[i].rotation == rots[i]);
  }
  REQUIRE(run_cli({"convert", "--input", (dir / "rpy.jsonl").string(), "--output", (dir / "m.jsonl").string(), "--target", "matrix"}).code == 0);
  for (const PoseRecord& r : read_labels(dir / "m.jsonl")) {
    CHECK_FALSE(r.euler_pyr);
    CHECK_FALSE(r.euler_rpy);
  }

  write_records(dir / "gimbal.jsonl",
                {compose_pyr(pyr_from_degrees(-16.090911401458296, -89.9985818251308, -6.854511900533989))});
  const Result g = run_cli({"convert", "--input", (dir / "gimbal.jsonl").string(), "--output", (dir / "g.jsonl").string()});
  REQUIRE(g.code == 0);
  CHECK(g.out.find("\"gimbal\":1") != std::string::npos);
  const auto gr = read_labels(dir / "g.jsonl");
  REQUIRE(gr.size() == 1);
  CHECK(gr[0].gimbal);
  REQUIRE(gr[0].gimbal_sum);
  CHECK(std::abs(rad_to_deg(*gr[0].gimbal_sum) + 22.94542388660367) < 1e-3);
  CHECK(slurp(dir / "g.jsonl").find("\"gimbal\":true") != std::string::npos);
}

TEST_CASE("cli eval") {
  const fs::path dir = fresh_dir("eval");
  const auto rots = random_rotations(50, 14);
  write_records(dir / "gt.jsonl", rots);
  const Result self = run_cli({"eval", "--input", (dir / "gt.jsonl").string(), "--reference", (dir / "gt.jsonl").string(),
                               "--output", (dir / "report.csv").string()});
  REQUIRE(self.code == 0);
  CHECK(self.out.find("\"mean_rad\":0.0") != std::string::npos);
  const std::string csv = slurp(dir / "report.csv");
  CHECK(csv.rfind("id,geodesic_rad,geodesic_deg\n", 0) == 0);
  CHECK(csv.find("rec0,0,0\n") != std::string::npos);

  write_records(dir / "short.jsonl", std::vector<Matrix3>(rots.begin(), rots.begin() + 10));
  const Result mismatch = run_cli({"eval", "--input", (dir / "short.jsonl").string(), "--reference", (dir / "gt.jsonl").string()});
  CHECK(mismatch.code == 1);
  CHECK(mismatch.err.find("rec10") != std::string::npos);
  CHECK(run_cli({"eval", "--input", (dir / "none.jsonl").string(), "--reference", (dir / "gt.jsonl").string()}).code == 2);
}

TEST_CASE("cli pca") {
  const fs::path dir = fresh_dir("pca");
  write_records(dir / "same.jsonl", std::vector<Matrix3>(6, compose_pyr({0.3, 0.2, 0.1})));
  REQUIRE(run_cli({"pca", "--input", (dir / "same.jsonl").string(), "--output", (dir / "p.csv").string()}).code == 0);
  std::istringstream csv(slurp(dir / "p.csv"));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "id,source,pc1,pc2,pc3");
  int rows = 0;
  while (std::getline(csv, line)) {
    CHECK(line.substr(line.find(',')) == ",0,0,0,0");
    ++rows;
  }
  CHECK(rows == 6);

  write_records(dir / "rand.jsonl", random_rotations(30, 15));
  const Result r = run_cli({"pca", "--input", (dir / "same.jsonl").string(), "--input", (dir / "rand.jsonl").string(),
                            "--output", (dir / "q.csv").string(), "--k", "2"});
  REQUIRE(r.code == 0);
  CHECK(slurp(dir / "q.csv").find("id,source,pc1,pc2\n") == 0);
  CHECK(slurp(dir / "q.csv").find("\nrec0,1,") != std::string::npos);
  CHECK(run_cli({"pca", "--input", (dir / "same.jsonl").string(), "--output", (dir / "q.csv").string(), "--k", "10"}).code == 1);
}

TEST_CASE("cli draw") {
  const fs::path dir = fresh_dir("draw");
  std::ofstream(dir / "in.jsonl") << "{\"id\":\"front/0\",\"image_path\":\"img/0.jpg\",\"rotation\":[1,0,0,0,1,0,0,0,1]}\n"
                                  << "{\"id\":\"front:0\",\"rotation\":[1,0,0,0,1,0,0,0,1]}\n";
  const Result r = run_cli({"draw", "--input", (dir / "in.jsonl").string(), "--output", (dir / "svg").string(), "--center",
                            "50,60", "--size", "25", "--width", "120", "--height", "100"});
  REQUIRE(r.code == 0);
  const std::string a = slurp(dir / "svg" / "front_0.svg");
  const std::string b = slurp(dir / "svg" / "front_0_1.svg");
  CHECK(a.find("<image xlink:href=\"img/0.jpg\"") != std::string::npos);
  CHECK(b.find("<image") == std::string::npos);
  CHECK(a.find("<line x1=\"50.000\" y1=\"60.000\" x2=\"50.000\" y2=\"60.000\" stroke=\"#0000FF\"") != std::string::npos);
  CHECK(a.find("x2=\"75.000\" y2=\"60.000\" stroke=\"#FF0000\"") != std::string::npos);
  CHECK(run_cli({"draw", "--input", (dir / "in.jsonl").string(), "--output", (dir / "svg").string(), "--center", "a,b"}).code == 1);
  CHECK(run_cli({"draw", "--input", (dir / "in.jsonl").string(), "--output", (dir / "svg").string(), "--size", "0"}).code == 1);
}

TEST_CASE("cli random") {
  const fs::path dir = fresh_dir("random");
  REQUIRE(run_cli({"random", "--output", (dir / "a.jsonl").string(), "--count", "25", "--seed", "5"}).code == 0);
  const auto recs = read_labels(dir / "a.jsonl");
  REQUIRE(recs.size() == 25);
  CHECK(recs[0].id == "random_0000");
  const auto want = random_rotations(25, 5);
  for (std::size_t i = 0; i < recs.size(); ++i) CHECK(recs[i].rotation == want[i]);
}
