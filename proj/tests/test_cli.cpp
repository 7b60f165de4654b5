#include "demj/cli/commands.hpp"

#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace demj;
using namespace demj::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "demj");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() / ("demj-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

json strip_timestamp(json j) {
  j.erase("timestamp");
  return j;
}

}  // namespace

TEST_CASE("rational and point serialization") {
  Rational q = make_rational(-22, 7);
  CHECK(to_json(q) == json{{"num", "-22"}, {"den", "7"}});
  CHECK(rational_from_json(to_json(q)) == q);
  BigInt big("123456789012345678901234567890");
  Rational huge = make_rational(big, big + 1);
  CHECK(rational_from_json(json::parse(to_json(huge).dump())) == huge);
  CHECK_THROWS_AS(rational_from_json(json{{"num", "2"}, {"den", "4"}}), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json{{"num", "2"}}), std::invalid_argument);
  RationalPoint p{make_rational(1, 2), -3};
  CHECK(point_from_json(to_json(p)) == p);
  CHECK(to_json(ECPoint::infinity()) == "infinity");
}

TEST_CASE("certificate and envelope round trip") {
  QuarticArgs qa;
  qa.a = "-4";
  qa.b = "-3";
  qa.generator = "4,-16";
  CommandResult r = cmd_quartic(qa);
  CHECK(r.exit_code == kExitOk);
  PointCertificate c = certificate_from_json(r.envelope.payload["certificate"]);
  CHECK(c.points.size() == 12);
  CHECK(to_json(c) == r.envelope.payload["certificate"]);
  json j = json::parse(to_json(r.envelope).dump());
  ResultEnvelope back = envelope_from_json(j);
  CHECK(to_json(back) == to_json(r.envelope));
  CHECK(back.toolkit_version == toolkit_version());
  CHECK(back.assumptions == c.conditional_on);
}

TEST_CASE("identical inputs give identical payloads") {
  CommandResult a = cmd_cheb(20), b = cmd_cheb(20);
  CHECK(strip_timestamp(to_json(a.envelope)).dump() == strip_timestamp(to_json(b.envelope)).dump());
  CHECK(a.envelope.payload["case"] == "4 | d, 3 !| d");
  CHECK(a.envelope.payload["certificate"]["points"].size() == 12);
  CommandResult nine = cmd_cheb(9);
  CHECK(nine.envelope.payload["case"] == "3 | d");
  CHECK(nine.envelope.payload["certificate"]["points"].empty());
  CommandResult seven = cmd_cheb(7, 50);
  CHECK(seven.envelope.payload["case"] == "conjectural");
  CHECK(seven.envelope.payload["evidence"]["exceptional"].empty());
}

TEST_CASE("rank-zero twist gives an empty certificate") {
  QuarticArgs qa;
  qa.a = "-4";
  qa.b = "-6";
  qa.alpha = "5";
  CHECK_THROWS_AS(cmd_quartic(qa), std::invalid_argument);
  qa.rank = 0;
  CommandResult r = cmd_quartic(qa);
  CHECK(r.envelope.payload["empty"] == true);
  CHECK(r.envelope.payload["certificate"]["points"].empty());
  CHECK(r.envelope.assumptions == std::vector<std::string>{"rank 0 certified externally"});
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"cheb", "--d", "9"}).code == kExitOk);
  CHECK(run_cli({"--json", "cheb", "--d", "20"}).code == kExitOk);
  Run degenerate = run_cli({"--json", "quartic", "--a", "1", "--b", "0"});
  CHECK(degenerate.code == kExitPrecondition);
  CHECK(json::parse(degenerate.out)["error"]["type"] == "precondition");
  CHECK(run_cli({"quartic", "--a=-4", "--b=-3", "--generator=1,2"}).code == kExitPrecondition);
  CHECK(run_cli({"quartic", "--a=-4", "--b=1/0"}).code == kExitPrecondition);
  CHECK(run_cli({"quartic", "--a=-4", "--b=abc"}).code == kExitPrecondition);
  CHECK(run_cli({"quartic", "--a=-4", "--b=-3"}).code == kExitPrecondition);
  CHECK(run_cli({"cheb", "--d", "2"}).code == kExitPrecondition);
  CHECK(run_cli({"descent", "--p", "9"}).code == kExitPrecondition);
  CHECK(run_cli({"hasse-scan", "--lo", "50", "--hi", "10"}).code == kExitPrecondition);
  CHECK(run_cli({"nonsense"}).code == kExitPrecondition);
  CHECK(run_cli({}).code == kExitPrecondition);
  CHECK(run_cli({"cheb", "--d", "x"}).code == kExitPrecondition);
  CHECK(run_cli({"heights", "--point", "4,-16"}).code == kExitPrecondition);
  CHECK(run_cli({"--help"}).code == kExitOk);
}

TEST_CASE("negative values parse as option values") {
  Run r = run_cli({"--json", "quartic", "--a", "-4", "--b", "-3", "--generator", "4,-16", "--min-window", "40"});
  REQUIRE(r.code == kExitOk);
  json j = json::parse(r.out);
  CHECK(j["payload"]["certificate"]["points"].size() == 12);
  CHECK(j["payload"]["certificate"]["enumerated_window"] == 40);
  Run eq = run_cli({"--json", "quartic", "--a=-4", "--b=-3", "--generator=4,-16"});
  REQUIRE(eq.code == kExitOk);
  CHECK(json::parse(eq.out)["payload"]["certificate"]["points"] == j["payload"]["certificate"]["points"]);
}

TEST_CASE("undetermined places give exit code 3") {
  // p = 11 leaves its own place to the bounded search, which runs out of precision
  CommandResult r = cmd_descent(11);
  bool undetermined = r.envelope.payload["local_solvability"]["undetermined"].get<bool>() ||
                      r.envelope.payload["selmer"]["undetermined"].get<bool>();
  CHECK(r.exit_code == (undetermined ? kExitUndetermined : kExitOk));
  CommandResult ok = cmd_descent(73);
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.envelope.payload["root_number"]["W"] == -1);
}

TEST_CASE("other subcommands") {
  Run h = run_cli({"--json", "heights", "--quartic=-4,-3", "--point", "4,-16"});
  REQUIRE(h.code == kExitOk);
  json hj = json::parse(h.out);
  CHECK(hj["payload"]["canonical_height"].get<double>() == doctest::Approx(0.358693).epsilon(1e-5));
  CHECK(hj["payload"]["torsion_order"] == 0);
  Run hc = run_cli({"--json", "heights", "--curve", "16,-16,0", "--point", "0,0"});
  REQUIRE(hc.code == kExitOk);
  CHECK(json::parse(hc.out)["payload"]["canonical_height"].get<double>() < 1e-8);
  CHECK(run_cli({"heights", "--curve", "16,-16,0", "--point", "1,2"}).code == kExitPrecondition);

  Run o = run_cli({"--json", "orbit", "--f=-2,0,1", "--n", "2", "--start", "-1", "--beta", "0", "--twist", "1,-1",
                   "--preperiodic-cap", "100"});
  REQUIRE(o.code == kExitOk);
  json oj = json::parse(o.out);
  CHECK(oj["payload"]["intersection"]["values"] == json::array({to_json(Rational(2))}));
  CHECK(oj["payload"]["intersection"]["exact"] == true);
  CHECK(oj["payload"]["preperiodic"].size() == 5);
  CHECK(run_cli({"orbit", "--f", "1,1"}).code == kExitPrecondition);
}

TEST_CASE("hasse scan, cache hits and corruption") {
  TempDir dir;
  CommandResult first = cmd_hasse_scan(3, 500, true, dir.path);
  REQUIRE(first.cache.has_value());
  CHECK(first.cache->misses == 9);
  CHECK(first.cache->hits == 0);
  std::vector<long> ps;
  for (const auto& v : first.envelope.payload["verdicts"]) ps.push_back(v["p"].get<long>());
  CHECK(ps == std::vector<long>{73, 97, 193, 241, 313, 337, 409, 433, 457});
  for (const auto& v : first.envelope.payload["verdicts"]) {
    long p = v["p"].get<long>();
    CHECK(v["congruence_ok"] == (p % 48 == 25));
    if (p % 48 == 25) CHECK(v["verdict"] == "candidate (below explicit threshold)");
  }

  CommandResult second = cmd_hasse_scan(3, 500, true, dir.path);
  CHECK(second.cache->hits == 9);
  CHECK(second.cache->misses == 0);
  CHECK(second.envelope.payload.dump() == first.envelope.payload.dump());

  // damage one line: flip a payload byte, keep the JSON valid
  const auto file = dir.path / "hasse-scan.jsonl";
  std::vector<std::string> lines;
  {
    std::ifstream in(file);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  REQUIRE(lines.size() == 9);
  auto pos = lines[2].find("candidate");
  if (pos == std::string::npos) pos = lines[2].find("fails");
  REQUIRE(pos != std::string::npos);
  lines[2][pos] = 'X';
  lines[4] = lines[4].substr(0, lines[4].size() / 2);  // torn write
  {
    std::ofstream out(file, std::ios::trunc);
    for (auto& l : lines) out << l << "\n";
  }
  CommandResult third = cmd_hasse_scan(3, 500, true, dir.path);
  CHECK(third.cache->corrupted == 2);
  CHECK(third.cache->misses == 2);
  CHECK(third.cache->hits == 7);
  CHECK(third.envelope.payload.dump() == first.envelope.payload.dump());
  CommandResult fourth = cmd_hasse_scan(3, 500, true, dir.path);
  CHECK(fourth.cache->hits == 9);

  CommandResult unconditional = cmd_hasse_scan(3, 500, false, dir.path);
  CHECK(unconditional.cache->misses == 9);
  for (const auto& v : unconditional.envelope.payload["verdicts"]) {
    std::string s = v["verdict"];
    CHECK((s == "unconditional conclusion unavailable" || s.rfind("fails congruence gate", 0) == 0));
  }
}

TEST_CASE("cache lock and directory resolution") {
  TempDir dir;
  ScanCache held(dir.path, "family");
  CHECK_THROWS_AS(ScanCache(dir.path, "family"), std::runtime_error);
  CHECK_NOTHROW(ScanCache(dir.path, "other"));
  CHECK(cmd_hasse_scan(3, 100, true, std::nullopt).cache == std::nullopt);

  ::setenv("DEMJANENKO_CACHE", dir.path.c_str(), 1);
  CHECK(resolve_cache_dir(std::nullopt) == dir.path);
  CHECK(resolve_cache_dir(std::string("/elsewhere")) == std::filesystem::path("/elsewhere"));
  ::unsetenv("DEMJANENKO_CACHE");
  CHECK(resolve_cache_dir(std::nullopt) == std::nullopt);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache is used from the command line through the environment") {
  TempDir dir;
  ::setenv("DEMJANENKO_CACHE", dir.path.c_str(), 1);
  Run a = run_cli({"hasse-scan", "--lo", "70", "--hi", "80", "--assume-parity"});
  Run b = run_cli({"hasse-scan", "--lo", "70", "--hi", "80", "--assume-parity"});
  ::unsetenv("DEMJANENKO_CACHE");
  CHECK(a.code == kExitOk);
  CHECK(a.err.find("0 hits, 1 misses") != std::string::npos);
  CHECK(b.err.find("1 hits, 0 misses") != std::string::npos);
  CHECK(a.out == b.out);
}
