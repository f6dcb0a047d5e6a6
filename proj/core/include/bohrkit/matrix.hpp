#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace bohr {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. Models a bounded operator on C^d.
///
/// Every constructor rejects non-finite entries, so a live ComplexMatrix always
/// satisfies dim >= 1 and finite entries.
class ComplexMatrix {
 public:
  /// Zero matrix of size dim x dim.
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix scalar(std::size_t dim, Complex value);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;
  double max_abs_entry() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Largest singular value of m.
///
/// Power iteration on the Hermitian matrix m^H m. Iterates are accelerated by
/// repeated squaring (the k-th step works with (m^H m)^(2^k)), and the estimate
/// is the Rayleigh quotient of the dominant column, stopped once it no longer
/// changes at working precision. Absolute accuracy is ~1e-15 * ||m||.
/// Throws InvalidInput for non-finite entries.
double spectral_norm(const ComplexMatrix& m);

/// Inverse by LU with partial pivoting. Throws SingularMatrix when a pivot
/// vanishes or the 2-norm condition number exceeds 1e12.
ComplexMatrix invert(const ComplexMatrix& m);

/// Spectral condition number ||m|| * ||m^-1||; infinity when m is singular.
double condition_number(const ComplexMatrix& m);

/// [[a, b], [c, d]] assembled into a 2d x 2d matrix.
ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                       const ComplexMatrix& d);

// {"dim": d, "entries": [[[re, im], ...], ...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
/// Throws InvalidInput on a malformed document.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace bohr
