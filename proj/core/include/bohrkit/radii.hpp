#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bohr {

namespace radius {

/// Positive root of 2(1 + r) r^N - (1 - r)^2.
struct RN {
  int n;
};
/// Positive root of (1 + r) r^N - (1 - r)^2.
struct RNprime {
  int n;
};
/// Positive root of 2(1 + r) r^N - p (1 - r)^2.
struct RNp {
  int n;
  double p;
};
/// 2 / (3 + a0 + sqrt 5 (1 + a0)); a0 = 1 is allowed and gives sqrt 5 - 2.
struct ScalarRefined1 {
  double a0;
};
/// Root in (0, 1) of (1 - a0^3) r^3 - (1 + 2 a0) r^2 - 2 r + 1.
struct ScalarRefinedCubic {
  double a0;
};
struct Const {
  double value;
};
/// Smallest root in (0, 1) of 277 - 857a + 281a^2 + 371a^3 - 49a^4 - 27a^5 + 3a^6 + a^7.
struct ThresholdN1 {};
/// Smallest root in (0, 1) of 216 - 780a + 876a^2 - 419a^3 + 95a^4 - 13a^5 + a^6.
struct ThresholdN2 {};
/// 1 / (3 - a0).
struct RadiusOfNkind {
  double a0;
};

}  // namespace radius

using RadiusSpec = std::variant<radius::RN, radius::RNprime, radius::RNp, radius::ScalarRefined1,
                                radius::ScalarRefinedCubic, radius::Const, radius::ThresholdN1, radius::ThresholdN2,
                                radius::RadiusOfNkind>;

struct RadiusResult {
  double value;
  double residual;  // |defining equation at value|; 0 for pure constants
};

/// Throws InvalidInput when a parameter is out of range.
void validate_spec(const RadiusSpec& spec);

/// Name ("RN", "ThresholdN1", ...) and a CSV-safe parameter string ("1", "2;0.5", "").
std::string spec_tag(const RadiusSpec& spec);
std::string spec_params(const RadiusSpec& spec);

/// The defining function whose root a RadiusSpec names (closed forms use
/// r * denominator - numerator).
double defining_equation(const RadiusSpec& spec, double r);

/// Closed forms are returned directly. Everything else is bracketed by a
/// 1000-point sign scan of [1e-9, 1 - 1e-9] and bisected to width 1e-13.
/// RN, RNprime, RNp and the cubic need exactly one sign change; the
/// thresholds take the smallest one.
/// Throws NoRoot without a sign change and AmbiguousRoot (all brackets) with
/// more than one.
RadiusResult solve_radius(const RadiusSpec& spec);

/// 2 / (3 + a0 + sqrt 5 (1 + a0)) for a0 in [0, 1]. Throws DomainError otherwise.
double scalar_refined_radius(double a0);

/// Root of the cubic; throws InternalInconsistency if it falls outside
/// (1/3, 1/(2 + a0)).
double cubic_radius(double a0);

enum class ThresholdKind { n1, n2 };
double threshold_a(ThresholdKind kind);

/// Named constants, each computed from its defining expression.
namespace constants {
double sqrt5_minus_2();
double one_third();
double one_fifth();
double inv_sqrt5();
double four_sqrt2_minus_5();  // head bound of the scalar C2 inequality at 1/3
double inv_sqrt2();
}  // namespace constants

/// Rows of the CLI radius table: RN, RNprime and RNp(N, 1/2) for N = 1..10,
/// the scalar closed forms and cubic on a0 = 0, 0.1, ..., 0.9, RadiusOfNkind
/// on the same grid, the named constants and both thresholds.
std::vector<std::pair<RadiusSpec, RadiusResult>> radius_table();

}  // namespace bohr
