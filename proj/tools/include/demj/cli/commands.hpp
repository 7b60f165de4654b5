#pragma once

// Subcommands of the `demj` front end. Each cmd_* builds a ResultEnvelope and
// an exit code; run() adds argument parsing and printing.
//
// Exit codes: 0 result produced, 1 internal or I/O failure, 2 precondition
// violation, 3 some place or verdict undetermined.

#include "demj/cli/cache.hpp"
#include "demj/cli/json_io.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace demj::cli {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitUndetermined = 3;

struct CommandResult {
  ResultEnvelope envelope;
  int exit_code = kExitOk;
  std::string text;                         // human-readable summary
  std::optional<ScanCache::Stats> cache;    // hasse-scan only
};

struct QuarticArgs {
  std::string a;
  std::string b;
  std::string alpha = "1";
  std::optional<std::string> generator;  // "x,y"
  std::optional<int> rank;               // defaults to 1 with a generator, else 0
  long min_window = 0;
};
CommandResult cmd_quartic(const QuarticArgs& args);

CommandResult cmd_cheb(int d, long scan_cap = 200);

CommandResult cmd_hasse_scan(long lo, long hi, bool assume_parity, const std::optional<std::filesystem::path>& cache_dir);

struct HeightsArgs {
  std::optional<std::string> curve;    // "a2,a4,a6"
  std::optional<std::string> quartic;  // "a,b" or "a,b,alpha": its companion curve
  std::string point;                   // "x,y"
  double tol = 1e-10;
};
CommandResult cmd_heights(const HeightsArgs& args);

CommandResult cmd_descent(long p);

struct OrbitArgs {
  std::string f = "-2,0,1";  // coefficients, constant term first
  long n = 0;
  std::string start = "0";
  long horizon = 20;
  std::optional<std::string> beta;
  std::string twist = "0,1";  // L(x) = u + v x as "u,v"
  std::optional<long> preperiodic_cap;
};
CommandResult cmd_orbit(const OrbitArgs& args);

/// Full command line. Prints JSON with --json, text otherwise; errors go to err
/// (and as {"error": ...} to out with --json).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Comma-separated rationals.
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace demj::cli
