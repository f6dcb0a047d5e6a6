#include "bohrkit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include <nlohmann/json.hpp>

#include "bohrkit/errors.hpp"

namespace bohr {

namespace {

constexpr double kMaxCondition = 1e12;

void require_finite(std::span<const Complex> entries) {
  for (const Complex& c : entries) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidInput("matrix entry is not finite");
    }
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw InvalidInput("matrix dimension mismatch");
}

// LU with partial pivoting; nullopt when a pivot is exactly zero.
std::optional<ComplexMatrix> lu_inverse(const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix inv = ComplexMatrix::identity(d);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    double best = std::abs(a(col, col));
    for (std::size_t row = col + 1; row < d; ++row) {
      if (std::abs(a(row, col)) > best) {
        best = std::abs(a(row, col));
        pivot = row;
      }
    }
    if (best == 0.0) return std::nullopt;
    if (pivot != col) {
      for (std::size_t k = 0; k < d; ++k) {
        std::swap(a(col, k), a(pivot, k));
        std::swap(inv(col, k), inv(pivot, k));
      }
    }
    const Complex p = a(col, col);
    for (std::size_t k = 0; k < d; ++k) {
      a(col, k) /= p;
      inv(col, k) /= p;
    }
    for (std::size_t row = 0; row < d; ++row) {
      if (row == col) continue;
      const Complex factor = a(row, col);
      if (factor == Complex(0.0)) continue;
      for (std::size_t k = 0; k < d; ++k) {
        a(row, k) -= factor * a(col, k);
        inv(row, k) -= factor * inv(col, k);
      }
    }
  }
  return inv;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex(0.0)) {
  if (dim == 0) throw InvalidInput("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw InvalidInput("matrix dimension must be positive");
  if (entries_.size() != dim * dim) throw InvalidInput("matrix entries must be dim x dim");
  require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) { return scalar(dim, 1.0); }

ComplexMatrix ComplexMatrix::scalar(std::size_t dim, Complex value) {
  require_finite(std::span<const Complex>(&value, 1));
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = value;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  require_finite(diag);
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& c : entries_) s += std::norm(c);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs_entry() const {
  double s = 0.0;
  for (const Complex& c : entries_) s = std::max(s, std::abs(c));
  return s;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& c : entries_) c *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t d = lhs.dim();
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex(0.0)) continue;
      for (std::size_t j = 0; j < d; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double spectral_norm(const ComplexMatrix& m) {
  require_finite(m.entries());
  const std::size_t d = m.dim();
  if (d == 1) return std::abs(m(0, 0));

  // Split real/imaginary storage: gram g, normalized power p, product t.
  const std::size_t dd = d * d;
  thread_local std::vector<double> buf;
  buf.assign(6 * dd, 0.0);
  double* gr = buf.data();
  double* gi = gr + dd;
  double* pr = gi + dd;
  double* pi = pr + dd;
  double* tr = pi + dd;
  double* ti = tr + dd;

  const Complex* a = m.entries().data();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      double sr = 0.0;
      double si = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        const Complex x = a[k * d + i];
        const Complex y = a[k * d + j];
        sr += x.real() * y.real() + x.imag() * y.imag();
        si += x.real() * y.imag() - x.imag() * y.real();
      }
      gr[i * d + j] = sr;
      gi[i * d + j] = si;
      gr[j * d + i] = sr;
      gi[j * d + i] = -si;
    }
  }
  double scale = 0.0;
  for (std::size_t e = 0; e < dd; ++e) scale += gr[e] * gr[e] + gi[e] * gi[e];
  scale = std::sqrt(scale);
  if (scale == 0.0) return 0.0;
  for (std::size_t e = 0; e < dd; ++e) {
    pr[e] = gr[e] / scale;
    pi[e] = gi[e] / scale;
  }

  // Rayleigh quotient of the gram matrix at column `col` of p.
  auto rayleigh = [&](std::size_t col) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      double hr = 0.0;
      double hi = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        const double vr = pr[k * d + col];
        const double vi = pi[k * d + col];
        hr += gr[i * d + k] * vr - gi[i * d + k] * vi;
        hi += gr[i * d + k] * vi + gi[i * d + k] * vr;
      }
      const double vr = pr[i * d + col];
      const double vi = pi[i * d + col];
      num += vr * hr + vi * hi;
      den += vr * vr + vi * vi;
    }
    return den > 0.0 ? num / den : 0.0;
  };

  double estimate = 0.0;
  int stable = 0;
  for (int step = 0; step < 64; ++step) {
    std::size_t best_col = 0;
    double best_norm = -1.0;
    for (std::size_t j = 0; j < d; ++j) {
      double n = 0.0;
      for (std::size_t i = 0; i < d; ++i) n += pr[i * d + j] * pr[i * d + j] + pi[i * d + j] * pi[i * d + j];
      if (n > best_norm) {
        best_norm = n;
        best_col = j;
      }
    }
    const double next = rayleigh(best_col);
    if (step > 0 && std::abs(next - estimate) <= 4.0 * std::numeric_limits<double>::epsilon() * next) {
      if (++stable >= 2) {
        estimate = std::max(estimate, next);
        break;
      }
    } else {
      stable = 0;
    }
    estimate = std::max(estimate, next);

    // p <- p * p, then renormalize (p stays Hermitian positive semidefinite)
    std::fill(tr, tr + 2 * dd, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        const double xr = pr[i * d + k];
        const double xi = pi[i * d + k];
        for (std::size_t j = 0; j < d; ++j) {
          tr[i * d + j] += xr * pr[k * d + j] - xi * pi[k * d + j];
          ti[i * d + j] += xr * pi[k * d + j] + xi * pr[k * d + j];
        }
      }
    }
    double f = 0.0;
    for (std::size_t e = 0; e < dd; ++e) f += tr[e] * tr[e] + ti[e] * ti[e];
    f = std::sqrt(f);
    if (f == 0.0) break;
    for (std::size_t e = 0; e < dd; ++e) {
      pr[e] = tr[e] / f;
      pi[e] = ti[e] / f;
    }
  }
  return std::sqrt(std::max(estimate, 0.0));
}

ComplexMatrix invert(const ComplexMatrix& m) {
  require_finite(m.entries());
  auto inv = lu_inverse(m);
  if (!inv) throw SingularMatrix("matrix is singular");
  const double cond = spectral_norm(m) * spectral_norm(*inv);
  if (!(cond <= kMaxCondition)) throw SingularMatrix("matrix condition number exceeds 1e12");
  return *std::move(inv);
}

double condition_number(const ComplexMatrix& m) {
  auto inv = lu_inverse(m);
  if (!inv) return std::numeric_limits<double>::infinity();
  return spectral_norm(m) * spectral_norm(*inv);
}

ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                       const ComplexMatrix& d) {
  require_same_dim(a, b);
  require_same_dim(a, c);
  require_same_dim(a, d);
  const std::size_t n = a.dim();
  ComplexMatrix out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = a(i, j);
      out(i, j + n) = b(i, j);
      out(i + n, j) = c(i, j);
      out(i + n, j + n) = d(i, j);
    }
  }
  return out;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != dim) throw InvalidInput("matrix json: wrong row count");
    std::vector<Complex> entries;
    entries.reserve(dim * dim);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != dim) throw InvalidInput("matrix json: wrong column count");
      for (const auto& cell : row) {
        if (!cell.is_array() || cell.size() != 2) throw InvalidInput("matrix json: entry must be [re, im]");
        entries.emplace_back(cell[0].get<double>(), cell[1].get<double>());
      }
    }
    return ComplexMatrix(dim, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("matrix json: ") + e.what());
  }
}

}  // namespace bohr
