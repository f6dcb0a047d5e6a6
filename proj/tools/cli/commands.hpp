#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bohr::cli {

enum ExitCode : int {
  kOk = 0,
  kNotAdmissible = 1,
  kUsage = 2,
  kContradicts = 3,  // also: verify or multidim found a FAIL
  kInconclusive = 4,
  kIoError = 5,
};

enum class Format { csv, json };
Format parse_format(std::string_view text);

/// Shared flags.
struct RunConfig {
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;  // per-command default when unset
  std::size_t order = 128;
  Format format = Format::json;
};

/// "0.25", "1e-3" or a fraction "1/3". Throws InvalidInput.
double parse_real(std::string_view text);
/// Comma-separated parse_real list.
std::vector<double> parse_real_list(std::string_view text);

/// Shortest round-trip decimal.
std::string format_real(double x);

int cmd_radii(const RunConfig& cfg, std::ostream& out);

struct VerifyArgs {
  std::string kind;
  double r = 0.0;
  double a0_min = 0.0;
  double a0_max = 1.0;
  std::size_t dim = 4;
};
/// Seeded Schur samples (default 1000) checked at r. Exit 0 iff no FAIL.
int cmd_verify(const RunConfig& cfg, const VerifyArgs& args, std::ostream& out);

struct AdjudicateArgs {
  std::vector<std::string> kinds;
  std::vector<double> b_grid;  // empty: default grid
  double r_tol = 1e-6;
  std::optional<double> head;
  std::size_t dim = 4;
};
/// One report per kind (default 64 random samples each). Exit 0 if every
/// verdict is CONFIRMS, 3 if any is CONTRADICTS, else 4.
int cmd_adjudicate(const RunConfig& cfg, const AdjudicateArgs& args, std::ostream& out);

struct SharpnessArgs {
  std::string kind;
  std::vector<double> b_grid;  // empty: default grid
  double r_min = 0.05;
  double r_max = 0.6;
  std::size_t r_steps = 56;
};
/// Margin curves of the extremal family. Always exit 0.
int cmd_sharpness(const RunConfig& cfg, const SharpnessArgs& args, std::ostream& out);

struct MultidimArgs {
  std::string domain = "polydisc";
  std::size_t n = 2;
  std::string kind;
  double rho = 0.0;
  std::optional<double> inner_b;             // inner series Phi_b ...
  std::optional<std::size_t> inner_sample;   // ... or sample #k of the seeded sampler
  std::vector<double> w;                     // empty: first basis vector
  std::size_t dim = 4;
  bool exhaustive = false;
};
/// Homothety check over seeded directions (default 10000).
/// Exit 0 PASS, 3 FAIL, 4 INCONCLUSIVE or UNSUPPORTED-HYPOTHESIS.
int cmd_multidim(const RunConfig& cfg, const MultidimArgs& args, std::ostream& out);

struct GpolyArgs {
  std::vector<double> coeffs;
  std::string variant = "sqrt5_minus2";
};
/// Exit 0 if admissible, 1 if not.
int cmd_gpoly(const RunConfig& cfg, const GpolyArgs& args, std::ostream& out);

}  // namespace bohr::cli
