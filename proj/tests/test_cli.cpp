#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fglab/cli.hpp"
#include "fglab/serialize.hpp"
#include "support.hpp"

using namespace fglab;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Fixtures {
  fs::path dir;
  Fixtures() : dir(fs::temp_directory_path() / ("fglab_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(dir);
    const auto z = z_ring();
    write("additive.json", fgl_to_json(FormalGroupLaw::additive(z, 6)).dump());
    write("mult.json", fgl_to_json(FormalGroupLaw::multiplicative(z, 6)).dump());
    auto broken = FormalGroupLaw::additive(z, 4).series();
    broken.add(SeriesIndex{{2, 0, 0}}, GradedPolynomial::constant(z, 1));
    write("broken.json", series_to_json(broken).dump());
    write("h.json", series_to_json(TruncatedSeries::univariate(z, 4, std::vector<BigRational>{1, 1, 0, 2})).dump());
    write("strict.json", series_to_json(TruncatedSeries::univariate(z, 6, std::vector<BigRational>{0, 1, 1, -1})).dump());
    write("cube.json", series_to_json(TruncatedSeries::univariate(z, 3, std::vector<BigRational>{1, 3, 3, 1})).dump());
    write("garbage.json", "{\"ring\": [");
  }
  ~Fixtures() { fs::remove_all(dir); }
  void write(const char* name, const std::string& text) const { std::ofstream(dir / name) << text; }
  std::string operator[](const char* name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("check verdicts and exit codes") {
  const Fixtures fx;
  const auto ok = invoke({"check", "--input", fx["additive.json"]});
  CHECK(ok.code == 0);
  const auto doc = Json::parse(ok.out);
  CHECK(doc["certificate"]["kind"] == "axioms");
  CHECK(doc["certificate"]["verdict"] == true);
  CHECK(doc["certificate"]["inputs_digest"].get<std::string>().size() == 64);

  const auto bad = invoke({"check", "--input", fx["broken.json"]});
  CHECK(bad.code == 1);
  const auto bdoc = Json::parse(bad.out);
  CHECK(bdoc["certificate"]["verdict"] == false);
  int unitality = 0;
  for (const auto& v : bdoc["certificate"]["violations"]) unitality += v["axiom"] == "unitality";
  CHECK(unitality == 1);
}

TEST_CASE("ptypify output") {
  const Fixtures fx;
  const auto r = invoke({"ptypify", "--input", fx["mult.json"], "--prime", "2", "--degree", "4"});
  REQUIRE(r.code == 0);
  const auto doc = Json::parse(r.out);
  std::string t3;
  for (const auto& e : doc["iso"]["coefficients"])
    if (e["texp"] == 3) t3 = e["value"];
  CHECK(t3 == "-1/3");
  CHECK(doc["strict_iso_certificate"]["verdict"] == true);
}

TEST_CASE("usage errors exit with 2") {
  const Fixtures fx;
  const auto low = invoke({"idempotent", "--input", fx["mult.json"], "--prime", "5", "--degree", "1"});
  CHECK(low.code == 2);
  CHECK(low.err.find("truncation degree must be ≥ 2") != std::string::npos);
  CHECK(std::count(low.err.begin(), low.err.end(), '\n') == 1);

  CHECK(invoke({"ptypify", "--input", fx["mult.json"], "--prime", "4"}).code == 2);
  CHECK(invoke({"check", "--input", fx["garbage.json"]}).code == 2);
  CHECK(invoke({"check", "--input", fx["missing.json"]}).code == 2);
  CHECK(invoke({"log", "--input", fx["broken.json"]}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"universal"}).code == 2);
  CHECK(invoke({"check", "--builtin", "universal"}).code == 2);
}

TEST_CASE("every subcommand runs and is deterministic") {
  const Fixtures fx;
  const std::vector<std::vector<std::string>> matrix = {
      {"check", "--builtin", "multiplicative"},
      {"log", "--input", fx["mult.json"]},
      {"exp", "--builtin", "additive", "--degree", "5"},
      {"nseries", "--input", fx["mult.json"], "--count", "3"},
      {"ptypify", "--builtin", "multiplicative", "--prime", "3", "--degree", "6"},
      {"idempotent", "--input", fx["mult.json"], "--prime", "2"},
      {"universal", "--degree", "4"},
      {"universal", "--degree", "5", "--prime", "2"},
      {"hazewinkel", "--prime", "2", "--count", "2"},
      {"chern-expand", "--input", fx["h.json"], "--n", "2"},
      {"chern-expand", "--input", fx["h.json"], "--n", "2", "--m", "1"},
      {"orient-roundtrip", "--builtin", "multiplicative", "--series", fx["strict.json"]},
      {"projective-reduce", "--input", fx["cube.json"], "--n", "1"},
      {"check", "--builtin", "universal", "--degree", "4", "--format", "text"},
  };
  for (const auto& args : matrix) {
    CAPTURE(args[0]);
    const auto a = invoke(args), b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("subcommand contents") {
  const Fixtures fx;
  const auto reduced = Json::parse(invoke({"projective-reduce", "--input", fx["cube.json"], "--n", "1"}).out);
  CHECK(reduced["reduced"]["coefficients"].size() == 2);
  CHECK(reduced["reduced"]["coefficients"][1]["value"] == "3");

  const auto haz = Json::parse(invoke({"hazewinkel", "--prime", "2", "--count", "1"}).out);
  CHECK(haz.dump().find("\"m1\"") != std::string::npos);

  const auto round = Json::parse(invoke({"orient-roundtrip", "--builtin", "additive", "--series", fx["strict.json"]}).out);
  CHECK(round["certificate"]["kind"] == "roundtrip");
  CHECK(round["certificate"]["verdict"] == true);

  const auto mult = Json::parse(invoke({"chern-expand", "--input", fx["h.json"], "--n", "2", "--m", "2"}).out);
  CHECK(mult["certificate"]["kind"] == "multiplicativity");
  CHECK(mult["certificate"]["verdict"] == true);

  const auto path = fx["out.json"];
  const auto to_file = invoke({"log", "--builtin", "multiplicative", "--output", path});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in(path);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == invoke({"log", "--builtin", "multiplicative"}).out);
}
