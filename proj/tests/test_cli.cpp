#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using quasipolar::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_float(const nlohmann::json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured()) {
    for (const auto& child : j) {
      if (has_float(child)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("quasipolarities subcommand") {
  const Result r = invoke({"quasipolarities", "--n", "12", "--group", "affine", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4 conjugacy classes, 12 quasipolarities") != std::string::npos);

  const Result csv = invoke({"quasipolarities", "--n", "12", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("n,group,v,u,orbit_size,stabilizer_size\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 13);
  CHECK(csv.out.find("12,affine,5,2,3,16\n") != std::string::npos);

  const Result json = invoke({"quasipolarities", "--n", "12", "--group", "dihedral", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(nlohmann::json::parse(json.out)["count"] == 7);
}

TEST_CASE("bounds subcommand") {
  const Result r = invoke({"bounds", "--n", "6", "--group", "symmetric", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["cota"]["num"] == 1);
  CHECK(doc["cota"]["den"] == 6);
  CHECK(doc["exact_strong_count"] == 0);

  const Result affine = invoke({"bounds", "--n", "12", "--format", "json"});
  REQUIRE(affine.code == 0);
  const auto a = nlohmann::json::parse(affine.out);
  CHECK(a["cota"] == nlohmann::json{{"num", 16}, {"den", 1}});
  CHECK(a["closed_form"] == nlohmann::json{{"num", 32}, {"den", 1}});

  CHECK(invoke({"bounds", "--n", "12", "--group", "symmetric"}).code == 2);
}

TEST_CASE("json output round-trips byte for byte") {
  for (const auto& cmd : {std::vector<std::string>{"bounds", "--n", "12", "--format", "json"},
                          std::vector<std::string>{"strong", "--n", "12", "--format", "json"},
                          std::vector<std::string>{"quasipolarities", "--n", "10", "--format", "json"},
                          std::vector<std::string>{"verify", "--n-max", "6", "--format", "json"}}) {
    const Result r = invoke(cmd);
    REQUIRE(r.code == 0);
    CHECK_FALSE(has_float(nlohmann::json::parse(r.out)));
    CHECK(nlohmann::json::parse(r.out).dump(2) + "\n" == r.out);
  }
}

TEST_CASE("strong subcommand csv columns") {
  const Result r = invoke({"strong", "--n", "12", "--format", "csv", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,group,mask_hex,polarity_u,polarity_v\n", 0) == 0);
}

TEST_CASE("verify subcommand") {
  const Result r = invoke({"verify", "--n-max", "10", "--group", "affine", "--check"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS characterization_matches_bruteforce") != std::string::npos);

  // Determinism across worker counts.
  const Result a = invoke({"verify", "--n-max", "12", "--workers", "1"});
  const Result b = invoke({"verify", "--n-max", "12", "--workers", "4"});
  CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"quasipolarities"}).code == 2);
  CHECK(invoke({"quasipolarities", "--n", "7"}).code == 2);
  CHECK(invoke({"bounds", "--n", "12", "--group", "cyclic"}).code == 2);
  CHECK(invoke({"strong", "--n", "20", "--strategy", "bruteforce"}).code == 2);
  CHECK(invoke({"quasipolarities", "--n", "12", "--check", "--no-check"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("budget override from flag and environment") {
  CHECK(invoke({"strong", "--n", "18", "--strategy", "bruteforce", "--budget", "18", "--no-check"}).code == 0);
  ::setenv("ANTICHAIN_BUDGET", "18", 1);
  CHECK(invoke({"strong", "--n", "18", "--strategy", "bruteforce", "--no-check"}).code == 0);
  ::setenv("ANTICHAIN_BUDGET", "lots", 1);
  CHECK(invoke({"strong", "--n", "12"}).code == 2);
  ::unsetenv("ANTICHAIN_BUDGET");
}

TEST_CASE("export writes a parseable golden file") {
  const auto path = std::filesystem::temp_directory_path() / "quasipolar_export_test.csv";
  const Result r = invoke({"export", "--n", "10", "--output", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("10,affine,", 0) == 0);
  std::filesystem::remove(path);
}
