#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bohrkit/functionals.hpp"
#include "bohrkit/kinds.hpp"
#include "bohrkit/sampling.hpp"
#include "bohrkit/series.hpp"

namespace bohr {

using Point = std::vector<Complex>;

enum class DomainTag { polydisc, ball };

/// Unit polydisc or Euclidean unit ball in C^n.
struct CircularDomain {
  DomainTag tag;
  std::size_t n;

  /// Throws InvalidInput for n = 0.
  CircularDomain(DomainTag tag, std::size_t n);
};

std::string_view to_string(DomainTag t);
DomainTag parse_domain(std::string_view text);

/// Minkowski gauge: max |z_i| (polydisc) or Euclidean norm (ball).
/// Throws InvalidInput when z has the wrong length.
double gauge(const CircularDomain& d, std::span<const Complex> z);

/// sup_{gauge(z) < 1} |w . z|: sum |w_i| (polydisc), Euclidean norm (ball).
double dual_norm(const CircularDomain& d, std::span<const Complex> w);

/// omega(z) = w_1 z_1 + ... + w_n z_n.
Complex linear_form(std::span<const Complex> w, std::span<const Complex> z);

/// Uniform on the torus |z_i| = 1 (polydisc) or on the unit sphere (ball).
Point sample_direction(const CircularDomain& d, Rng& rng);

struct LinearComposite {
  OperatorSeries inner;
  Point w;
};
struct CustomConstruction {};

/// f on a complete circular domain, held through its complex-line slices
/// h -> f(b h) = sum_k P_k(b) h^k for directions b on the gauge sphere.
class MultiSeries {
 public:
  using Slicer = std::function<OperatorSeries(std::span<const Complex>)>;

  /// A custom map. `slicer` must return series whose coefficient 0 is `f0`
  /// for every direction; slice() checks this.
  MultiSeries(CircularDomain domain, ComplexMatrix f0, Slicer slicer);

  const CircularDomain& domain() const noexcept { return domain_; }
  const ComplexMatrix& f0() const noexcept { return f0_; }
  /// Present for linear composites.
  const LinearComposite* linear() const noexcept { return std::get_if<LinearComposite>(&construction_); }
  /// a0 when f(0) = a0 I is known to come with a Schur-class guarantee.
  std::optional<double> scalar_head() const noexcept { return head_; }

  friend MultiSeries compose_linear(const OperatorSeries& inner, Point w, const CircularDomain& d);
  friend OperatorSeries slice(const MultiSeries& m, std::span<const Complex> b);

 private:
  MultiSeries(CircularDomain domain, LinearComposite lc);

  CircularDomain domain_;
  ComplexMatrix f0_;
  Slicer slicer_;
  std::variant<LinearComposite, CustomConstruction> construction_;
  std::optional<double> head_;
};

/// (inner o omega). Slice coefficients are A_k omega(b)^k.
/// Throws PreconditionError when dual_norm(d, w) > 1 and InvalidInput on a length mismatch.
MultiSeries compose_linear(const OperatorSeries& inner, Point w, const CircularDomain& d);

/// Throws DomainError unless |gauge(b) - 1| <= 1e-12, InternalInconsistency
/// if a custom slicer breaks P_0 = f(0).
OperatorSeries slice(const MultiSeries& m, std::span<const Complex> b);

enum class HomothetyVerdict { pass, fail, inconclusive, unsupported_hypothesis };
std::string_view to_string(HomothetyVerdict v);

struct HomothetyOptions {
  std::uint64_t seed = 1;
  std::size_t count = 10000;
  /// Evaluate every sampled direction even when the map is a linear composite.
  bool exhaustive = false;
  CircleOptions circle{};
};

struct HomothetyResult {
  HomothetyVerdict verdict = HomothetyVerdict::pass;
  Point worst_direction;
  std::size_t worst_index = 0;
  double worst_omega = 0.0;  // |omega(b)| at the worst direction (linear composites)
  Certified worst{};
  std::size_t directions = 0;
  std::size_t evaluations = 0;  // functional evaluations performed
  std::string note;
};

/// Samples `count` directions and checks functional_value(k, slice(m, b), rho) <= 1.
///
/// For a linear composite every part of every functional is nondecreasing in
/// |omega(b)| (the slice is the inner series at argument omega(b) h, and
/// W(rho) does not depend on b), so unless `exhaustive` is set only the
/// direction of largest |omega| is evaluated. Slices without a scalar-head
/// guarantee give UNSUPPORTED_HYPOTHESIS.
HomothetyResult homothety_verify(const MultiSeries& m, const FunctionalKind& k, double rho,
                                 const HomothetyOptions& options = {});

nlohmann::json homothety_to_json(const HomothetyResult& r, const FunctionalKind& k, double rho);

/// 1 / (3 - a0). Throws Unsupported without a scalar head.
double radius_of_nkind_domain(const MultiSeries& m);

}  // namespace bohr
