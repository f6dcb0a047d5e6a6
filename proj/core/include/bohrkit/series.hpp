#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bohrkit/matrix.hpp"

namespace bohr {

inline constexpr std::size_t kDefaultTruncationOrder = 128;

/// f is Schur class with f(0) = a0 * I exactly, a0 in [0, 1).
struct SchurScalarHead {
  double a0;
};

/// No head structure; no certified truncation tail.
struct GeneralClass {};

using ClassTag = std::variant<GeneralClass, SchurScalarHead>;

/// Truncated operator-valued power series sum_{n=0}^{M} A_n z^n.
///
/// Coefficient spectral norms are computed once at construction and cached;
/// the series is immutable afterwards. The Schwarz-Pick bound
/// ||A_n|| <= 1 - a0^2 is not enforced here (see schwarz_pick_check), so a
/// violating series can still be represented and diagnosed.
class OperatorSeries {
 public:
  /// Throws InvalidInput for an empty list or mixed dimensions, and for a
  /// scalar-head tag whose a0 is outside [0, 1) or whose A_0 differs from a0*I.
  OperatorSeries(std::vector<ComplexMatrix> coeffs, ClassTag tag);

  std::size_t dim() const noexcept { return coeffs_.front().dim(); }
  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const std::vector<ComplexMatrix>& coeffs() const noexcept { return coeffs_; }
  const ComplexMatrix& coeff(std::size_t n) const { return coeffs_.at(n); }
  std::span<const double> norms() const noexcept { return norms_; }
  const ClassTag& class_tag() const noexcept { return tag_; }

  /// a0 when tagged schur_scalar_head, nullopt otherwise.
  std::optional<double> scalar_head() const noexcept;

  /// g(z) = f(w z); coefficients A_n w^n, norms scaled by |w|^n without
  /// recomputation. The head tag survives when |w| <= 1.
  friend OperatorSeries rescale_argument(const OperatorSeries& s, Complex w);

 private:
  OperatorSeries(std::vector<ComplexMatrix> coeffs, ClassTag tag, std::vector<double> norms);

  std::vector<ComplexMatrix> coeffs_;
  ClassTag tag_;
  std::vector<double> norms_;
};

OperatorSeries rescale_argument(const OperatorSeries& s, Complex w);

/// Phi_b(z) = ((b - z) / (1 - b z)) I truncated at `order`:
/// A_0 = b I, A_n = -(1 - b^2) b^(n-1) I. Throws DomainError unless 0 <= b < 1.
OperatorSeries blaschke_series(double b, std::size_t dim, std::size_t order);

/// Horner evaluation of the stored coefficients. Throws DomainError for |z| >= 1.
ComplexMatrix evaluate(const OperatorSeries& s, Complex z);

/// Expansion of f(z) = (a0 I - z g(z)) (I - a0 z g(z))^{-1} to `order`.
///
/// f is Schur class with f(0) = a0 I whenever g is Schur class. Coefficient n
/// of f depends on g_0 .. g_{n-1} only; coefficients of g past its truncation
/// order are taken as zero, so pass g with order >= order - 1 for the exact
/// expansion of the untruncated map. Throws InternalInconsistency if the
/// result breaks ||A_n|| <= 1 - a0^2 (g was not Schur class).
OperatorSeries mobius_schur(double a0, const OperatorSeries& g, std::size_t order);

/// Transfer function f(z) = A + z B (I - z D)^{-1} C of a contractive
/// colligation: A_0 = A, A_n = B D^(n-1) C. Throws PreconditionError when the
/// block matrix [[A, B], [C, D]] has norm above 1 + 1e-9.
OperatorSeries colligation_series(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const ComplexMatrix& c, const ComplexMatrix& d, std::size_t order);

/// Certified bound (1 - a0^2) r^(M+1) / (1 - r) on sum_{n>M} ||A_n|| r^n.
/// Throws Unsupported for the general class and DomainError unless 0 <= r < 1.
double tail_majorant_bound(const OperatorSeries& s, double r);

std::vector<double> coeff_norms(const OperatorSeries& s);

// {"dim": d, "class": "schur_scalar_head"|"general", "a0": x|null, "coeffs": [matrix, ...]}
nlohmann::json series_to_json(const OperatorSeries& s);
OperatorSeries series_from_json(const nlohmann::json& j);

}  // namespace bohr
