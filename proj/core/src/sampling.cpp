#include "bohrkit/sampling.hpp"

#include <cmath>
#include <numbers>

#include "bohrkit/errors.hpp"

namespace bohr {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u = uniform();
  while (u <= 0.0) u = uniform();
  const double v = uniform();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix random_contraction(Rng& rng, std::size_t dim, double target_norm) {
  if (!(target_norm >= 0.0 && target_norm <= 1.0)) throw DomainError("random_contraction: norm must lie in [0, 1]");
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rng.complex_normal();
  }
  const double n = spectral_norm(m);
  if (n == 0.0) return m;
  m *= target_norm / n;
  return m;
}

OperatorSeries random_colligation(Rng& rng, std::size_t dim, std::size_t order, double block_norm) {
  const ComplexMatrix block = random_contraction(rng, 2 * dim, block_norm);
  ComplexMatrix a(dim), b(dim), c(dim), d(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      a(i, j) = block(i, j);
      b(i, j) = block(i, j + dim);
      c(i, j) = block(i + dim, j);
      d(i, j) = block(i + dim, j + dim);
    }
  }
  return colligation_series(a, b, c, d, order);
}

SchurSampler::SchurSampler(std::uint64_t seed, SampleOptions options) : rng_(seed), options_(options) {
  if (!(options_.a0_min >= 0.0 && options_.a0_min <= options_.a0_max && options_.a0_max <= 1.0)) {
    throw InvalidInput("SchurSampler: need 0 <= a0_min <= a0_max <= 1");
  }
  if (options_.dim == 0) throw InvalidInput("SchurSampler: dim must be positive");
}

OperatorSeries SchurSampler::next() {
  const std::size_t i = produced_++;
  double a0 = rng_.uniform(options_.a0_min, options_.a0_max);
  if (a0 >= 1.0) a0 = std::nextafter(1.0, 0.0);
  switch (i % 8) {
    case 0:
      return blaschke_series(a0, options_.dim, options_.order);
    case 1:
    case 2:
    case 3: {
      const auto g = random_colligation(rng_, options_.dim, options_.order, 1.0);
      return mobius_schur(a0, g, options_.order);
    }
    default: {
      const double norm = rng_.uniform(0.3, 1.0);
      const auto g = random_colligation(rng_, options_.dim, options_.order, norm);
      return mobius_schur(a0, g, options_.order);
    }
  }
}

}  // namespace bohr
