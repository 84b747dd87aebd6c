#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "duadic/cli.hpp"
#include "oracles.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = duadic::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exists") {
  const auto a = run({"exists", "--q", "13", "--n", "14", "--lambda", "5"});
  CHECK(a.code == 0);
  const auto j = json::parse(a.out);
  CHECK(j["exists"] == true);
  CHECK(j["reason"] == "n_r-even");
  CHECK(j["witness"]["s"].is_number());

  const auto b = run({"exists", "--q", "2", "--n", "5", "--lambda", "1"});
  CHECK(b.code == 1);
  CHECK(json::parse(b.out)["exists"] == false);

  const auto c = run({"exists", "--q", "4", "--n", "21", "--lambda", "0 1"});
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["reason"] == "odd-square");
}

TEST_CASE("usage errors go to stderr only") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"exists", "--q", "6", "--n", "5", "--lambda", "1"},
           {"exists", "--q", "5", "--n", "10", "--lambda", "2"},
           {"exists", "--q", "5", "--n", "6", "--lambda", "0"},
           {"exists", "--q", "5", "--n", "6"},
           {"code", "--q", "5", "--n", "6", "--lambda", "2", "--P", "9"},
           {"code", "--q", "5", "--n", "6", "--lambda", "2", "--P", "x"},
           {"iso", "--q", "5", "--n", "6", "--lambda", "2", "--P", "9,21", "--t", "2"},
           {"mds", "--q", "7"},
           {"verify", "--q", "5", "--n", "6", "--lambda", "2", "--P", "13,17"},
       }) {
    const auto r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
  }
  const auto bad = run({"verify"}, "{not json");
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("mds") {
  const auto r = run({"mds", "--q", "5"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["d_found"] == 5);
  CHECK(j["mds"] == true);
  CHECK(j["d_expected"] == 5);
  CHECK(j["grs_oracle"] == true);
  const auto big = json::parse(run({"mds", "--q", "29"}).out);
  CHECK(big["distance"] == "unverified");
  CHECK(big["d_lower_bound"] == 17);
  CHECK(big["mds"] == true);
}

TEST_CASE("code, dual and iso") {
  const auto c = json::parse(run({"code", "--q", "5", "--n", "6", "--lambda", "2", "--P", "9,21", "--distance"}).out);
  CHECK(c["dimension"] == 2);
  CHECK(c["check_poly"] == "2 0 1");
  const auto d = json::parse(run({"dual", "--q", "5", "--n", "6", "--lambda", "2", "--P", "9,21"}).out);
  CHECK(d["check_set"] == json::array({7, 11, 19, 23}));
  CHECK(d["dimension"] == 4);
  const auto zero = json::parse(run({"code", "--q", "5", "--n", "6", "--lambda", "2", "--P", "", "--distance"}).out);
  CHECK(zero["min_distance"] == "infinite");

  const auto yes = run({"iso", "--q", "13", "--n", "14", "--lambda", "5", "--P", "25,29,33,37,41,45", "--t", "-29"});
  CHECK(yes.code == 0);
  CHECK(json::parse(yes.out)["iso_orthogonal"] == true);
  const auto no = run({"iso", "--q", "13", "--n", "14", "--lambda", "5", "--P", "25,29,33,37,41,45", "--t", "1"});
  CHECK(no.code == 1);
}

TEST_CASE("verify by flags, file and tampering") {
  const auto ok = run({"verify", "--q", "13", "--n", "14", "--lambda", "5", "--s", "29", "--P", "25,29,33,37,41,45"});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["valid"] == true);

  auto cert = json::parse(run({"split", "--q", "4", "--n", "21", "--lambda", "0 1"}).out);
  const std::string path = "duadic_cli_test_cert.json";
  {
    std::ofstream f(path);
    f << cert.dump();
  }
  CHECK(run({"verify", "--file", path}).code == 0);
  std::remove(path.c_str());

  auto broken = cert;
  broken["sP"] = broken["P"];
  const auto r1 = run({"verify"}, broken.dump());
  CHECK(r1.code == 1);
  CHECK(json::parse(r1.out)["valid"] == false);
  auto wrong_r = cert;
  wrong_r["r"] = 7;
  CHECK(run({"verify"}, wrong_r.dump()).code == 1);
  auto missing = cert;
  missing.erase("s");
  CHECK(run({"verify"}, missing.dump()).code == 2);
}

TEST_CASE("split piped into verify succeeds on every atlas setting") {
  std::size_t round_trips = 0;
  for (const auto& p : oracle::sweep()) {
    auto f = oracle::field(p.q);
    const std::vector<std::string> args = {"split", "--q", std::to_string(p.q), "--n", std::to_string(p.n),
                                           "--lambda", f->format(p.lambda)};
    const auto split = run(args);
    if (split.code == 1) {
      CHECK(json::parse(split.out)["exists"] == false);
      continue;
    }
    REQUIRE(split.code == 0);
    const auto verify = run({"verify"}, split.out);
    CHECK(verify.code == 0);
    ++round_trips;
  }
  CHECK(round_trips > 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"split", "--q", "9", "--n", "20", "--lambda", "1 1", "--t", "3"};
  const auto a = run(args);
  CHECK(a.code == 0);
  CHECK(run(args).out == a.out);
  CHECK(run({"mds", "--q", "13"}).out == run({"mds", "--q", "13"}).out);
}

TEST_CASE("atlas covers the sweep") {
  const auto r = run({"atlas", "--q", "16", "--n", "30"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto j = json::parse(line);
    CHECK(j.contains("exists"));
    ++count;
  }
  CHECK(count == oracle::sweep().size());
}
