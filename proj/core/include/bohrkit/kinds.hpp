#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace bohr {

/// G(t) = c_1 t + c_2 t^2 + ... + c_l t^l with every c_m >= 0 and l >= 1.
class GPoly {
 public:
  /// Throws InvalidInput for an empty list or a negative / non-finite coefficient.
  explicit GPoly(std::vector<double> coeffs);

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size(); }
  double operator()(double t) const;

  friend bool operator==(const GPoly&, const GPoly&) = default;

 private:
  std::vector<double> coeffs_;
};

double gpoly_eval(const GPoly& g, double t);

enum class GPolyVariant {
  sqrt5_minus2,  // sum c_m 2^(1-4m) <= (13 - 5 sqrt 5) / 4
  one_third,     // sum 8 (2m - 1) c_m (3/8)^(2m) <= 1
};

struct Admissibility {
  bool admissible;
  double value;   // left-hand side
  double bound;   // right-hand side
  double margin;  // bound - value
};

Admissibility gpoly_admissible(const GPoly& g, GPolyVariant variant);

/// Right-hand side of the sqrt5_minus2 condition, (13 - 5 sqrt 5) / 4.
double sqrt5_minus2_gpoly_bound();

namespace kind {

/// sum_{n>=0} ||A_n|| r^n
struct Bohr {};
/// ||f(z)||^j + sum_{n>=N} ||A_n|| r^n
struct TN {
  int n;
  int j;
};
/// ||f(z)||^j + sum_{n>=1} ||A_n|| r^n + W(r) sum_{n>=1} ||A_n||^2 r^2n
struct M {
  int j;
};
/// sum_{n>=0} ||A_n|| r^n + W(r) sum_{n>=1} ||A_n||^2 r^2n + ||f(z) - A_0||^j
struct C {
  int j;
};
/// ||A_0||^p + sum_{n>=1} ||A_n|| r^n + W(r) sum_{n>=1} ||A_n||^2 r^2n
struct Bp {
  double p;
};
/// ||f(z)|| + sum_{n>=1} ||A_n|| r^n + G(S_r / pi)
struct D {
  GPoly g;
};
/// ||A_0|| + sum_{n>=1} ||A_n|| r^n + G(S_r / pi)
struct E {
  GPoly g;
};
/// ||A_0|| + sum_{n>=1} ||A_n|| r^n + W(r) sum ||A_n||^2 r^2n + lambda S_r / pi
struct N1 {
  double lambda;
};
/// Same as N1 with ||A_0||^2 in front.
struct N2 {
  double lambda;
};

}  // namespace kind

/// Every Bohr-type quantity the toolkit evaluates. W(r) = 1/(1 + ||A_0||) + r/(1 - r).
using FunctionalKind = std::variant<kind::Bohr, kind::TN, kind::M, kind::C, kind::Bp, kind::D, kind::E,
                                    kind::N1, kind::N2>;

/// Throws InvalidInput when a parameter is out of range
/// (N >= 1, j in {1, 2}, p in (0, 1], lambda >= 0).
void validate_kind(const FunctionalKind& k);

/// Short tag: "Bohr", "TN", "M", "C", "Bp", "D", "E", "N1", "N2".
std::string kind_tag(const FunctionalKind& k);

/// Parameters as a JSON object, e.g. {"j": 2} or {"G": [2.47]}.
nlohmann::json kind_params(const FunctionalKind& k);

/// Command-line spelling, inverse of parse_kind: bohr, t1:N, t2:N, m1, m2,
/// c1, c2, bp:P, d:c1,c2,..., e:c1,c2,..., n1:LAMBDA, n2:LAMBDA.
std::string kind_to_string(const FunctionalKind& k);
FunctionalKind parse_kind(std::string_view text);

}  // namespace bohr
