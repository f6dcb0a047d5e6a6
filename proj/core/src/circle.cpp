#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>
#include <vector>

#include <fftw3.h>

#include "bohrkit/errors.hpp"
#include "bohrkit/functionals.hpp"

namespace bohr {

namespace {

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n)
      : data(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))), size(n) {
    if (!data) throw std::bad_alloc();
    std::fill_n(reinterpret_cast<double*>(data), 2 * n, 0.0);
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  fftw_complex* data;
  std::size_t size;
};

// fftw planning is not thread-safe; execution with fresh aligned buffers is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t length, std::size_t batch) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(length, batch);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    FftwBuffer in(length * batch);
    FftwBuffer out(length * batch);
    const int n = static_cast<int>(length);
    fftw_plan plan = fftw_plan_many_dft(1, &n, static_cast<int>(batch), in.data, nullptr, 1, n, out.data, nullptr, 1,
                                        n, FFTW_BACKWARD, FFTW_ESTIMATE);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, std::size_t>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

// ||F(theta_j)|| for theta_j = 2 pi j / n, F(theta) = sum_k A_k r^k e^{i k theta}.
std::vector<double> grid_norms(const OperatorSeries& s, double r, std::size_t n) {
  const std::size_t d = s.dim();
  const std::size_t batch = d * d;
  FftwBuffer in(n * batch);
  FftwBuffer out(n * batch);
  double rk = 1.0;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    const auto& a = s.coeff(k);
    const std::size_t slot = k % n;
    for (std::size_t e = 0; e < batch; ++e) {
      const Complex c = a.entries()[e] * rk;
      in.data[e * n + slot][0] += c.real();
      in.data[e * n + slot][1] += c.imag();
    }
    rk *= r;
  }
  fftw_execute_dft(plan_cache().get(n, batch), in.data, out.data);

  std::vector<double> norms(n);
  ComplexMatrix f(d);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t e = 0; e < batch; ++e) {
      f(e / d, e % d) = Complex(out.data[e * n + j][0], out.data[e * n + j][1]);
    }
    norms[j] = spectral_norm(f);
  }
  return norms;
}

struct Arc {
  std::size_t index;  // arc [index, index + 1] of the current level
  double lo;
  double hi;
};

}  // namespace

CircleSup circle_sup_norm(const OperatorSeries& s, double r, const CircleOptions& options) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("circle_sup_norm: r must lie in [0, 1)");
  std::size_t n = options.initial_points;
  if (n < 4 || (n & (n - 1)) != 0) throw InvalidInput("circle_sup_norm: initial_points must be a power of two >= 4");

  CircleSup out;
  if (s.scalar_head()) out.tail_slack = tail_majorant_bound(s, r);
  if (r == 0.0) {
    out.value = s.norms()[0];
    out.evaluations = 1;
    return out;
  }

  double l1 = 0.0;
  double l2 = 0.0;
  {
    double rk = r;
    for (std::size_t k = 1; k <= s.order(); ++k) {
      const double kk = static_cast<double>(k);
      l1 += kk * s.norms()[k] * rk;
      l2 += kk * kk * s.norms()[k] * rk;
      rk *= r;
    }
  }
  auto arc_excess = [&](const Arc& a, std::size_t level_points) {
    const double h = 2.0 * std::numbers::pi / static_cast<double>(level_points);
    return std::max(a.lo, a.hi) + std::min(0.5 * h * l1, 0.125 * h * h * l2);
  };

  std::vector<double> values = grid_norms(s, r, n);
  out.evaluations = n;
  std::size_t best_index = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
  out.value = values[best_index];
  out.argument = 2.0 * std::numbers::pi * static_cast<double>(best_index) / static_cast<double>(n);

  std::vector<Arc> active;
  active.reserve(n);
  for (std::size_t j = 0; j < n; ++j) active.push_back({j, values[j], values[(j + 1) % n]});

  double certified_gap = 0.0;
  while (true) {
    std::vector<Arc> keep;
    for (const Arc& a : active) {
      const double excess = arc_excess(a, n) - out.value;
      if (excess <= options.target_slack) {
        certified_gap = std::max(certified_gap, excess);
      } else {
        keep.push_back(a);
      }
    }
    if (keep.empty()) break;
    if (2 * n > options.max_points) {
      for (const Arc& a : keep) certified_gap = std::max(certified_gap, arc_excess(a, n) - out.value);
      break;
    }

    const std::size_t next_n = 2 * n;
    std::vector<double> midpoints(keep.size());
    if (keep.size() > n / 16) {
      const auto fine = grid_norms(s, r, next_n);
      out.evaluations += next_n;
      for (std::size_t i = 0; i < keep.size(); ++i) midpoints[i] = fine[2 * keep[i].index + 1];
    } else {
      for (std::size_t i = 0; i < keep.size(); ++i) {
        const double theta =
            2.0 * std::numbers::pi * static_cast<double>(2 * keep[i].index + 1) / static_cast<double>(next_n);
        midpoints[i] = spectral_norm(evaluate(s, std::polar(r, theta)));
      }
      out.evaluations += keep.size();
    }

    active.clear();
    for (std::size_t i = 0; i < keep.size(); ++i) {
      const Arc& a = keep[i];
      const double mid = midpoints[i];
      if (mid > out.value) {
        out.value = mid;
        out.argument = 2.0 * std::numbers::pi * static_cast<double>(2 * a.index + 1) / static_cast<double>(next_n);
      }
      active.push_back({2 * a.index, a.lo, mid});
      active.push_back({2 * a.index + 1, mid, a.hi});
    }
    n = next_n;
  }
  out.grid_slack = std::max(certified_gap, 0.0);
  return out;
}

}  // namespace bohr
