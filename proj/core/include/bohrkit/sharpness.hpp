#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bohrkit/functionals.hpp"
#include "bohrkit/kinds.hpp"

namespace bohr {

/// Functional parts of Phi_b at radius r from closed forms:
/// ||A_n|| = (1 - b^2) b^(n-1), sup_{|z|=r} |Phi_b| = (b + r) / (1 + b r).
/// Every slack is zero. Throws DomainError unless 0 <= b < 1 and 0 <= r < 1.
FunctionalParts extremal_parts(const FunctionalKind& k, double b, double r);

/// compose(k, extremal_parts(k, b, r)).value - 1.
double extremal_margin(const FunctionalKind& k, double b, double r);

/// The radius asserted for the kind: 1/3 (Bohr, M(2), C(2), Bp, E, N1),
/// 1/sqrt 5 (M(1)), 1/5 (C(1)), sqrt 5 - 2 (D), R_N / R'_N (TN with j = 1 / 2)
/// and 1/(3 - a0) for N2, with a0 = 0 unless `head` is given.
double claimed_radius(const FunctionalKind& k, std::optional<double> head = std::nullopt);

/// Largest head norm the kind's claim admits: the N1 / N2 thresholds, else 1.
double head_limit(const FunctionalKind& k);

std::vector<double> default_b_grid();

enum class AdjudicationVerdict { confirms, contradicts, inconclusive };
std::string_view to_string(AdjudicationVerdict v);

struct Witness {
  std::optional<double> b;  // extremal parameter, empty for a random sample
  double r = 0.0;
  double value = 0.0;
  double slack = 0.0;
  std::string source;  // "Phi_b" or "sample #i (a0=...)"
};

struct AdjudicationOptions {
  std::vector<double> b_grid = default_b_grid();
  double r_tol = 1e-6;
  std::uint64_t seed = 1;
  std::size_t samples = 64;
  std::size_t dim = 4;
  std::size_t order = kDefaultTruncationOrder;
  /// Pin the head: Phi_b only at b = head and samples with a0 = head.
  std::optional<double> head;
};

struct AdjudicationReport {
  FunctionalKind kind = kind::Bohr{};
  double claimed_radius = 0.0;
  double empirical_radius = 0.0;
  Witness worst_witness;
  /// Phi_b at the largest admissible grid b, evaluated at the witness radius:
  /// the b -> 1 behavior the sharpness arguments rely on.
  std::optional<Witness> extremal_witness;
  AdjudicationVerdict verdict = AdjudicationVerdict::inconclusive;
  double slack_budget = 0.0;  // largest certificate slack met during the search
  std::optional<double> head;
  std::size_t candidates = 0;
};

/// Largest r (bisected to r_tol) at which every candidate, Phi_b over the b
/// grid plus seeded random Schur samples, keeps the functional at most 1 + slack.
/// Candidates respect head_limit(k); grid points past it are dropped.
/// CONFIRMS when |empirical - claimed| <= 10 r_tol, CONTRADICTS otherwise,
/// INCONCLUSIVE when no violation shows up below r = 0.99. The witness is the
/// worst candidate at min(empirical + 0.01, (empirical + claimed) / 2) when the
/// claim overshoots, else just past the empirical radius.
AdjudicationReport adjudicate_radius(const FunctionalKind& k, const AdjudicationOptions& options = {});

nlohmann::json report_to_json(const AdjudicationReport& r);

struct SearchOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 32;
  std::size_t dim = 4;
  std::size_t order = kDefaultTruncationOrder;
};

/// Best violation at radius r: a b scan on [0, head_limit) with extra points
/// near 1, golden-section polish around the best b, then random samples.
/// Returns the largest-margin candidate whose value - slack exceeds 1.
std::optional<Witness> violation_witness(const FunctionalKind& k, double r, const SearchOptions& options = {});

struct MarginPoint {
  double b;
  double r;
  double margin;
};

/// extremal_margin over the product grid, b-major.
std::vector<MarginPoint> margin_curve(const FunctionalKind& k, const std::vector<double>& b_values,
                                      const std::vector<double>& r_values);

}  // namespace bohr
