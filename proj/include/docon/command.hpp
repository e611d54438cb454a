#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "docon/eqprover.hpp"
#include "docon/nat.hpp"

namespace docon::cli {

/// Exit statuses. 0 and 1 are results; 2 and above are errors, one per
/// ErrorCode.
enum Exit : int {
  kOk = 0,
  kNegative = 1,  // laws found failures, prove answered No, isprime found a factor
  kUsage = 2,
  kSyntax = 3,
  kDivisionByZero = 4,
  kNotPrime = 5,
  kDomain = 6,
  kStructural = 7,
  kMismatch = 8,
};

struct LawsCmd {
  std::string instance = "all";
  std::uint64_t seed = 1;
  std::size_t budget = 500;
  std::size_t sweep = 0;
  /// Run the unique-factorization check instead of the law catalogue.
  bool unique = false;
};
struct FactorCmd {
  Int n;
};
struct EgcdCmd {
  Int a;
  Int b;
};
struct IsPrimeCmd {
  Int n;
};
struct ResidueCmd {
  Int modulus;
  bool field = false;
  std::string expression;
};
struct FracCmd {
  std::string expression;
};
struct PolyCmd {
  std::string expression;
  /// Coefficients in ℤ/(m) when set, otherwise in ℤ.
  std::optional<Int> modulus;
};
struct SortCmd {
  std::string order = "int";
  std::vector<std::string> values;
};
struct PowCmd {
  std::string monoid;
  std::string base;
  Nat exponent;
};
struct ProveCmd {
  Theory theory = Theory::CommSemiring;
  std::string equation;
};

using Command = std::variant<LawsCmd, FactorCmd, EgcdCmd, IsPrimeCmd, ResidueCmd, FracCmd, PolyCmd, SortCmd, PowCmd,
                             ProveCmd>;

/// Names accepted by `laws`: the fixed instances, zmod<b> for b ≥ 2, gf<p>
/// for primes p, nat-monus, and "all".
bool known_instance(const std::string& name);
/// The instances covered by `laws all`.
std::vector<std::string> default_instances();
/// Instances accepted by `pow`. nat-monus is accepted and rejected at run
/// time as a kind mismatch (it is not a monoid).
bool known_monoid(const std::string& name);

struct Outcome {
  int exit = kOk;
  /// Human-readable text, or the JSON document when requested.
  std::string output;
};

/// Executes a validated command. Library errors become their exit codes with
/// the message (and any witness) in the output.
Outcome run(const Command& cmd, bool json);

/// Full command-line entry point: parses argv (without the program name),
/// validates, runs, and writes to out / err. Returns the exit status.
/// `input` feeds `sort` when no values are given on the command line.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream* input = nullptr);

}  // namespace docon::cli
