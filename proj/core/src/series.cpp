#include "bohrkit/series.hpp"

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "bohrkit/errors.hpp"

namespace bohr {

namespace {

constexpr double kSchwarzPickTolerance = 1e-9;
constexpr double kContractionTolerance = 1e-9;

std::vector<double> compute_norms(const std::vector<ComplexMatrix>& coeffs) {
  std::vector<double> norms;
  norms.reserve(coeffs.size());
  for (const auto& c : coeffs) norms.push_back(spectral_norm(c));
  return norms;
}

void validate(const std::vector<ComplexMatrix>& coeffs, const ClassTag& tag) {
  if (coeffs.empty()) throw InvalidInput("series needs at least one coefficient");
  const std::size_t d = coeffs.front().dim();
  for (const auto& c : coeffs) {
    if (c.dim() != d) throw InvalidInput("series coefficients must share one dimension");
  }
  if (const auto* head = std::get_if<SchurScalarHead>(&tag)) {
    if (!(head->a0 >= 0.0 && head->a0 < 1.0)) throw InvalidInput("scalar head a0 must lie in [0, 1)");
    if (!(coeffs.front() == ComplexMatrix::scalar(d, head->a0))) {
      throw InvalidInput("scalar-head series must have A_0 = a0 * I exactly");
    }
  }
}

}  // namespace

OperatorSeries::OperatorSeries(std::vector<ComplexMatrix> coeffs, ClassTag tag)
    : coeffs_(std::move(coeffs)), tag_(tag) {
  validate(coeffs_, tag_);
  norms_ = compute_norms(coeffs_);
}

OperatorSeries::OperatorSeries(std::vector<ComplexMatrix> coeffs, ClassTag tag, std::vector<double> norms)
    : coeffs_(std::move(coeffs)), tag_(tag), norms_(std::move(norms)) {
  validate(coeffs_, tag_);
}

std::optional<double> OperatorSeries::scalar_head() const noexcept {
  if (const auto* head = std::get_if<SchurScalarHead>(&tag_)) return head->a0;
  return std::nullopt;
}

OperatorSeries rescale_argument(const OperatorSeries& s, Complex w) {
  const double modulus = std::abs(w);
  std::vector<ComplexMatrix> coeffs;
  std::vector<double> norms;
  coeffs.reserve(s.coeffs_.size());
  norms.reserve(s.coeffs_.size());
  Complex power = 1.0;
  double power_abs = 1.0;
  for (std::size_t n = 0; n < s.coeffs_.size(); ++n) {
    coeffs.push_back(n == 0 ? s.coeffs_[0] : s.coeffs_[n] * power);
    norms.push_back(s.norms_[n] * power_abs);
    power *= w;
    power_abs *= modulus;
  }
  ClassTag tag = s.tag_;
  if (modulus > 1.0 + 1e-12) tag = GeneralClass{};
  return OperatorSeries(std::move(coeffs), tag, std::move(norms));
}

OperatorSeries blaschke_series(double b, std::size_t dim, std::size_t order) {
  if (!(b >= 0.0 && b < 1.0)) throw DomainError("blaschke_series: b must lie in [0, 1)");
  std::vector<ComplexMatrix> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(ComplexMatrix::scalar(dim, b));
  const double lead = 1.0 - b * b;
  double power = 1.0;  // b^(n-1)
  for (std::size_t n = 1; n <= order; ++n) {
    coeffs.push_back(ComplexMatrix::scalar(dim, -lead * power));
    power *= b;
  }
  return OperatorSeries(std::move(coeffs), SchurScalarHead{b});
}

ComplexMatrix evaluate(const OperatorSeries& s, Complex z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("evaluate: |z| must be < 1");
  const auto& c = s.coeffs();
  ComplexMatrix acc = c.back();
  for (std::size_t n = c.size() - 1; n-- > 0;) {
    acc *= z;
    acc += c[n];
  }
  return acc;
}

OperatorSeries mobius_schur(double a0, const OperatorSeries& g, std::size_t order) {
  if (!(a0 >= 0.0 && a0 < 1.0)) throw DomainError("mobius_schur: a0 must lie in [0, 1)");
  const std::size_t d = g.dim();
  // h(z) = z g(z): h_0 = 0, h_k = g_{k-1}.
  auto h = [&](std::size_t k) -> const ComplexMatrix* {
    if (k == 0 || k - 1 > g.order()) return nullptr;
    return &g.coeff(k - 1);
  };

  // f (I - a0 h) = a0 I - h  =>  f_n = -h_n + a0 sum_{k=1}^{n} f_{n-k} h_k.
  std::vector<ComplexMatrix> f;
  f.reserve(order + 1);
  f.push_back(ComplexMatrix::scalar(d, a0));
  for (std::size_t n = 1; n <= order; ++n) {
    ComplexMatrix acc(d);
    for (std::size_t k = 1; k <= n; ++k) {
      if (const auto* hk = h(k)) acc += f[n - k] * *hk;
    }
    acc *= a0;
    if (const auto* hn = h(n)) acc -= *hn;
    f.push_back(std::move(acc));
  }

  OperatorSeries out(std::move(f), SchurScalarHead{a0});
  const double bound = 1.0 - a0 * a0 + kSchwarzPickTolerance;
  for (std::size_t n = 1; n < out.norms().size(); ++n) {
    if (out.norms()[n] > bound) {
      throw InternalInconsistency("mobius_schur: coefficient " + std::to_string(n) +
                                  " breaks the Schwarz-Pick bound; input is not Schur class");
    }
  }
  return out;
}

OperatorSeries colligation_series(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const ComplexMatrix& c, const ComplexMatrix& d, std::size_t order) {
  const ComplexMatrix block = block2x2(a, b, c, d);
  if (spectral_norm(block) > 1.0 + kContractionTolerance) {
    throw PreconditionError("colligation_series: block matrix is not a contraction");
  }
  std::vector<ComplexMatrix> coeffs;
  coeffs.reserve(order + 1);
  coeffs.push_back(a);
  ComplexMatrix right = c;  // D^(n-1) C
  for (std::size_t n = 1; n <= order; ++n) {
    coeffs.push_back(b * right);
    right = d * right;
  }
  return OperatorSeries(std::move(coeffs), GeneralClass{});
}

double tail_majorant_bound(const OperatorSeries& s, double r) {
  const auto a0 = s.scalar_head();
  if (!a0) throw Unsupported("tail_majorant_bound: no certified tail for the general class");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("tail_majorant_bound: r must lie in [0, 1)");
  if (r == 0.0) return 0.0;
  return (1.0 - *a0 * *a0) * std::pow(r, static_cast<double>(s.order() + 1)) / (1.0 - r);
}

std::vector<double> coeff_norms(const OperatorSeries& s) { return {s.norms().begin(), s.norms().end()}; }

nlohmann::json series_to_json(const OperatorSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(matrix_to_json(c));
  nlohmann::json j;
  j["dim"] = s.dim();
  if (auto a0 = s.scalar_head()) {
    j["class"] = "schur_scalar_head";
    j["a0"] = *a0;
  } else {
    j["class"] = "general";
    j["a0"] = nullptr;
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

OperatorSeries series_from_json(const nlohmann::json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<ComplexMatrix> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(matrix_from_json(c));
    for (const auto& c : coeffs) {
      if (c.dim() != dim) throw InvalidInput("series json: coefficient dimension differs from dim");
    }
    const auto cls = j.at("class").get<std::string>();
    if (cls == "schur_scalar_head") {
      return OperatorSeries(std::move(coeffs), SchurScalarHead{j.at("a0").get<double>()});
    }
    if (cls == "general") return OperatorSeries(std::move(coeffs), GeneralClass{});
    throw InvalidInput("series json: unknown class '" + cls + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("series json: ") + e.what());
  }
}

}  // namespace bohr
