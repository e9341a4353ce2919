#include "cli.hpp"

#include "binform/certificates.hpp"

#include "doctest.h"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace binform;
using json = nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const Result r = run(std::move(args));
  INFO(r.err);
  REQUIRE(r.status == 0);
  return json::parse(r.out);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("sixj commands") {
  const json v = run_json({"sixj", "value", "--k", "2", "--n", "3"});
  CHECK(v["S"] == "0");
  CHECK(v["seed"] == 0);
  CHECK(run_json({"sixj", "value", "--k", "2", "--n", "4"})["S"] == "-27");
  CHECK(run_json({"sixj", "scan", "--kmax", "2", "--nmax", "10"})["zeros"] == json::parse("[[2,3]]"));

  const std::string ppm = "test_cli_grid.ppm", csv = "test_cli_grid.csv";
  const json g = run_json({"sixj", "grid", "--rows", "1", "--cols", "3", "--out", ppm});
  CHECK(g["zero_cells"] == json::parse("[[1,2]]"));
  CHECK(slurp(ppm) == "P3\n3 1\n255\n190 190 190\n255 255 255\n60 60 60\n");
  run_json({"sixj", "grid", "--rows", "1", "--cols", "3", "--out", csv});
  CHECK(slurp(csv) == "r,c,k,n,sign\n1,1,2,2,1\n1,2,2,3,0\n1,3,2,4,-1\n");
  // Threads never change the bytes.
  run_json({"--jobs", "3", "sixj", "grid", "--rows", "12", "--cols", "15", "--out", ppm});
  const std::string threaded = slurp(ppm);
  run_json({"sixj", "grid", "--rows", "12", "--cols", "15", "--out", ppm});
  CHECK(slurp(ppm) == threaded);
  std::remove(ppm.c_str());
  std::remove(csv.c_str());

  CHECK(run({"sixj", "grid", "--out", "grid.txt"}).status != 0);
  CHECK(run({"sixj", "value", "--k", "3", "--n", "2"}).status != 0);
}

TEST_CASE("independence command") {
  const json r = run_json({"independence", "--k", "2"});
  CHECK(r["rank"] == 2);
  CHECK(r["pass"] == true);
  CHECK(r["minor"] == "-3/16");
  CHECK(r["N"]["2"] == "4");
  CHECK(r["N"]["3"] == "2");
  const json rp = run_json({"--seed", "9", "independence", "--k", "4", "--random-point"});
  CHECK(rp["rank"] == 4);
  CHECK(rp["random_point"]["rank"] == 4);
  CHECK(rp["seed"] == 9);
  CHECK(run({"independence", "--k", "3"}).status != 0);
}

TEST_CASE("combsum commands and method agreement") {
  const json c = run_json({"combsum", "ups", "--args", "1,1", "--method", "closed"});
  CHECK(c["value"] == "2");
  CHECK(c["closed_form"] == "von_szily");
  for (const std::string args : {"1,2,3", "0,4,4", "2,-1,3", "5,5"}) {
    const auto direct = run_json({"combsum", "ups", "--args", args, "--method", "direct"})["value"];
    CHECK(run_json({"combsum", "ups", "--args", args, "--method", "recursive"})["value"] == direct);
    CHECK(run_json({"combsum", "ups", "--args", args, "--method", "closed"})["value"] == direct);
  }
  CHECK(run_json({"combsum", "ups", "--args", "1,2,3,4", "--method", "recursive"})["value"] ==
        run_json({"combsum", "ups", "--args", "1,2,3,4"})["value"]);
  CHECK(run({"combsum", "ups", "--args", "1,2,3,4", "--method", "closed"}).status != 0);
  CHECK(run({"combsum", "ups", "--args", "1,x"}).status != 0);

  CHECK(run_json({"combsum", "nkr", "--k", "4", "--r", "3"})["N"] == "-48");
  CHECK(run_json({"combsum", "nkr", "--k", "4", "--r", "3", "--via-ups"})["N"] == "-48");
  CHECK(run({"combsum", "nkr", "--k", "4", "--r", "2", "--via-ups"}).status != 0);
}

TEST_CASE("invariant commands") {
  const std::string path = "test_cli_form.json";
  {
    std::ofstream f(path);
    f << R"({"d": 4, "coeffs": ["1", "0", "0", "0", "1"]})";
  }
  CHECK(run_json({"invariant", "P", "--d", "4", "--n", "2", "--p", "2", "--form", path})["value"] == "2");
  CHECK(run_json({"invariant", "P", "--d", "4", "--n", "2", "--p", "3", "--form", path})["value"] == "0");
  const json h = run_json({"invariant", "H", "--d", "4", "--n", "2", "--form", path});
  CHECK(h["H"].size() == 4);
  CHECK(h["H"][3] == "1");
  CHECK(h["H"][2] == "0");
  CHECK(run({"invariant", "P", "--d", "8", "--n", "4", "--p", "2", "--form", path}).status != 0);
  CHECK(run({"invariant", "P", "--d", "4", "--n", "2", "--p", "2"}).status != 0);
  CHECK(run({"invariant", "P", "--d", "4", "--n", "2", "--p", "2", "--generic", "--random"}).status != 0);
  std::remove(path.c_str());

  const json gen = run_json({"invariant", "P", "--d", "4", "--n", "3", "--p", "3", "--generic"});
  CHECK(gen["value"] == "0");
  const json j2 = run_json({"invariant", "shioda", "--idx", "2", "--generic"});
  CHECK(j2["hash"] == run_json({"invariant", "P", "--d", "8", "--n", "4", "--p", "2", "--generic"})["hash"]);
  CHECK(run({"invariant", "shioda", "--idx", "6", "--generic"}).status != 0);

  // Seeded reports are byte-identical; different seeds differ.
  const Result a = run({"--seed", "7", "invariant", "P", "--d", "8", "--n", "5", "--p", "4", "--random"});
  const Result b = run({"invariant", "P", "--d", "8", "--n", "5", "--p", "4", "--random", "--seed", "7"});
  const Result c = run({"--seed", "8", "invariant", "P", "--d", "8", "--n", "5", "--p", "4", "--random"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
}

TEST_CASE("octavic verify") {
  const json r = run_json({"octavic", "verify"});
  CHECK(r["pass"] == true);
  CHECK(r["identities"].size() == 12);
  for (const auto& id : r["identities"]) {
    CHECK(id["pass"] == true);
    CHECK(id["lhs_hash"] == id["rhs_hash"]);
  }
}

TEST_CASE("bracket eval") {
  const json r = run_json({"bracket", "eval", "--expr", "(ab)^8", "--generic"});
  CHECK(r["order"] == 0);
  CHECK(r["coeffs"].size() == 1);
  const json z = run_json({"bracket", "eval", "--expr", "(ab)^3 (ac)^3 (bc)^4 a_x^2 b_x c_x ; deg=8", "--generic"});
  for (const auto& c : z["coeffs"]) CHECK(c == "0");
  CHECK(run({"bracket", "eval", "--expr", "(ab", "--generic"}).status != 0);
}

TEST_CASE("output plumbing") {
  const Result csv = run({"--format", "csv", "sixj", "value", "--k", "2", "--n", "2"});
  CHECK(csv.status == 0);
  CHECK(csv.out == "S,command,k,n,seed\n1,sixj value,2,2,0\n");
  const std::string path = "test_cli_report.json";
  CHECK(run({"--out", path, "sixj", "value", "--k", "2", "--n", "3"}).out.empty());
  CHECK(json::parse(slurp(path))["S"] == "0");
  std::remove(path.c_str());
  CHECK(run({}).status != 0);
  CHECK(run({"nonsense"}).status != 0);
  CHECK(run({"--format", "xml", "sixj", "value", "--k", "2", "--n", "2"}).status != 0);
}
