#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "bohrkit/kinds.hpp"
#include "bohrkit/series.hpp"

namespace bohr {

/// A computed value with a symmetric certified error radius: the exact
/// quantity lies in [value - slack, value + slack].
struct Certified {
  double value = 0.0;
  double slack = 0.0;
};

enum class Verdict { pass, fail, inconclusive };

/// PASS iff value + slack <= bound, FAIL iff value - slack > bound.
Verdict judge(const Certified& c, double bound = 1.0);
std::string_view to_string(Verdict v);

struct CircleOptions {
  std::size_t initial_points = 512;   // power of two
  double target_slack = 1e-8;
  std::size_t max_points = std::size_t{1} << 22;
};

struct CircleSup {
  double value = 0.0;       // max of ||F|| over the evaluated points
  double grid_slack = 0.0;  // certified gap between value and sup of the truncated series
  double tail_slack = 0.0;  // truncation tail bound (0 for the general class)
  double argument = 0.0;    // angle of the best point
  std::size_t evaluations = 0;

  Certified certified() const { return {value, grid_slack + tail_slack}; }
};

/// sup_{|z| = r} ||f(z)||.
///
/// Starts from a uniform grid (values through one batched FFT of the
/// coefficient sequences) and refines only the arcs that could still hold the
/// supremum. An arc of angular width h with endpoint norms u, v can exceed
/// max(u, v) by at most min(h/2 * L1, h^2/8 * L2), where L1 = sum n ||A_n|| r^n
/// and L2 = sum n^2 ||A_n|| r^n bound the first two angular derivatives.
/// Refinement stops once every arc is within target_slack of the best value.
/// Throws DomainError unless 0 <= r < 1.
CircleSup circle_sup_norm(const OperatorSeries& s, double r, const CircleOptions& options = {});

/// sum_{n=from}^{M} ||A_n|| r^n; slack is the geometric tail (schur_scalar_head)
/// or 0 for the general class, where the stored polynomial is taken as exact.
Certified majorant_sum(const OperatorSeries& s, double r, std::size_t from_index);

/// sum_{n>=1} ||A_n||^2 r^(2n), tail (1 - a0^2)^2 r^(2(M+1)) / (1 - r^2).
Certified weighted_square_sum(const OperatorSeries& s, double r);

/// S_r / pi = sum_{n>=1} n ||A_n||^2 r^(2n), with the matching tail.
Certified sr_over_pi(const OperatorSeries& s, double r);

/// W(r) = 1 / (1 + ||A_0||) + r / (1 - r).
double refinement_weight(double head_norm, double r);

/// The building blocks every functional is composed from, at one radius.
struct FunctionalParts {
  double r = 0.0;
  double head_norm = 0.0;  // ||A_0||, exact
  std::optional<Certified> sup;         // sup_{|z|=r} ||f(z)||
  Certified majorant_from_one;          // sum_{n>=1} ||A_n|| r^n
  std::optional<Certified> majorant_tail;  // sum_{n>=N} ||A_n|| r^n for TN kinds
  std::size_t tail_index = 0;
  std::optional<Certified> square_sum;  // sum_{n>=1} ||A_n||^2 r^2n
  std::optional<Certified> area;        // S_r / pi
};

struct PartNeeds {
  bool sup = false;
  bool square_sum = false;
  bool area = false;
  std::optional<std::size_t> tail_index;
};

PartNeeds needs_of(const FunctionalKind& k);
/// Union of two requirement sets (tail indices must agree when both are set).
PartNeeds merge(const PartNeeds& a, const PartNeeds& b);

FunctionalParts evaluate_parts(const OperatorSeries& s, double r, const PartNeeds& needs,
                               const CircleOptions& circle = {});

/// Assemble the kind's formula from precomputed parts, summing slacks
/// through each monotone operation. Throws InvalidInput when a part is missing.
Certified compose(const FunctionalKind& k, const FunctionalParts& parts);

/// compose(k, evaluate_parts(s, r, needs_of(k))). ||f(z) - A_0|| in the C kinds
/// is replaced by its majorant sum_{n>=1} ||A_n|| r^n.
/// Throws DomainError unless 0 <= r < 1; Unsupported for Bp, N1, N2 on the
/// general class.
Certified functional_value(const FunctionalKind& k, const OperatorSeries& s, double r,
                           const CircleOptions& circle = {});

/// Worst case of the functional over all Schur-class f with ||A_0|| = a,
/// assembled from the coefficient bound ||A_n|| <= 1 - a^2, the growth bound
/// ||f(z)|| <= (a + r) / (1 + a r) and (N kinds) the area bound
/// S_r / pi <= r^2 (1 - a^2)^2 / (1 - a^2 r^2)^2.
/// Supported: M(1), M(2), C(1), C(2), Bp, D, N1, N2; the N kinds need r <= 1/sqrt 2.
double envelope_bound(const FunctionalKind& k, double a, double r);

struct SchwarzPickReport {
  bool ok = true;
  std::optional<std::size_t> worst_index;  // index of the largest excess, when !ok
  double worst_excess = 0.0;               // max_n ||A_n|| - (1 - a0^2)
};

/// ||A_n|| <= 1 - a0^2 + 1e-9 for every n >= 1. Throws Unsupported for the general class.
SchwarzPickReport schwarz_pick_check(const OperatorSeries& s);

/// {kind, params, r, value, slack, verdict}
nlohmann::json verification_record(const FunctionalKind& k, double r, const Certified& c, Verdict v);

}  // namespace bohr
