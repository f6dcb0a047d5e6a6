#pragma once

#include <cstdint>
#include <random>

#include "bohrkit/matrix.hpp"
#include "bohrkit/series.hpp"

namespace bohr {

/// Portable variates on top of mt19937_64 (no std distributions, whose output
/// differs between standard libraries). Same seed, same numbers everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller, one variate per call).
  double normal();
  Complex complex_normal();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Complex Gaussian matrix scaled to spectral norm exactly `target_norm`.
ComplexMatrix random_contraction(Rng& rng, std::size_t dim, double target_norm);

/// Transfer function of a random colligation whose 2d x 2d block has spectral
/// norm `block_norm` (<= 1). Class general.
OperatorSeries random_colligation(Rng& rng, std::size_t dim, std::size_t order, double block_norm);

struct SampleOptions {
  std::size_t dim = 4;
  std::size_t order = kDefaultTruncationOrder;
  double a0_min = 0.0;
  double a0_max = 1.0;  // exclusive
};

/// Seeded stream of Schur-class series with scalar head a0 drawn uniformly
/// from [a0_min, a0_max).
///
/// Sample i cycles through three families:
///   i % 8 == 0      the extremal map Phi_b with b = a0,
///   i % 8 in 1..3   mobius_schur(a0, g) for g from a norm-one colligation,
///   otherwise       mobius_schur(a0, g) with block norm uniform in [0.3, 1).
class SchurSampler {
 public:
  SchurSampler(std::uint64_t seed, SampleOptions options);

  OperatorSeries next();
  std::size_t produced() const noexcept { return produced_; }
  const SampleOptions& options() const noexcept { return options_; }

 private:
  Rng rng_;
  SampleOptions options_;
  std::size_t produced_ = 0;
};

}  // namespace bohr
