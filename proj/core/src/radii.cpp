#include "bohrkit/radii.hpp"

#include <charconv>
#include <cmath>

#include "bohrkit/errors.hpp"

namespace bohr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr int kScanPoints = 1000;
constexpr double kScanLo = 1e-9;
constexpr double kScanHi = 1.0 - 1e-9;
constexpr double kBisectWidth = 1e-13;

std::string num(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

double horner(std::initializer_list<double> ascending, double x) {
  double acc = 0.0;
  for (auto it = std::rbegin(ascending); it != std::rend(ascending); ++it) acc = acc * x + *it;
  return acc;
}

double n1_polynomial(double a) { return horner({277, -857, 281, 371, -49, -27, 3, 1}, a); }
double n2_polynomial(double a) { return horner({216, -780, 876, -419, 95, -13, 1}, a); }

std::vector<std::pair<double, double>> sign_brackets(const RadiusSpec& spec) {
  std::vector<std::pair<double, double>> out;
  double x0 = kScanLo;
  double f0 = defining_equation(spec, x0);
  for (int i = 1; i <= kScanPoints; ++i) {
    const double x1 = kScanLo + (kScanHi - kScanLo) * i / kScanPoints;
    const double f1 = defining_equation(spec, x1);
    if (f0 == 0.0) {
      out.emplace_back(x0, x0);
    } else if (std::signbit(f0) != std::signbit(f1) && f1 != 0.0) {
      out.emplace_back(x0, x1);
    }
    x0 = x1;
    f0 = f1;
  }
  if (f0 == 0.0) out.emplace_back(x0, x0);
  return out;
}

double bisect(const RadiusSpec& spec, double lo, double hi) {
  double flo = defining_equation(spec, lo);
  if (flo == 0.0) return lo;
  while (hi - lo > kBisectWidth) {
    const double mid = 0.5 * (lo + hi);
    const double fm = defining_equation(spec, mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

bool is_closed_form(const RadiusSpec& spec) {
  return std::holds_alternative<radius::ScalarRefined1>(spec) || std::holds_alternative<radius::Const>(spec) ||
         std::holds_alternative<radius::RadiusOfNkind>(spec);
}

bool takes_smallest_root(const RadiusSpec& spec) {
  return std::holds_alternative<radius::ThresholdN1>(spec) || std::holds_alternative<radius::ThresholdN2>(spec);
}

void require_head(double a0, bool allow_one) {
  const bool ok = a0 >= 0.0 && (allow_one ? a0 <= 1.0 : a0 < 1.0);
  if (!ok) throw InvalidInput(allow_one ? "a0 must lie in [0, 1]" : "a0 must lie in [0, 1)");
}

}  // namespace

void validate_spec(const RadiusSpec& spec) {
  std::visit(overloaded{
                 [](const radius::RN& s) {
                   if (s.n < 1) throw InvalidInput("RN needs N >= 1");
                 },
                 [](const radius::RNprime& s) {
                   if (s.n < 1) throw InvalidInput("RNprime needs N >= 1");
                 },
                 [](const radius::RNp& s) {
                   if (s.n < 1) throw InvalidInput("RNp needs N >= 1");
                   if (!(s.p > 0.0 && s.p <= 1.0)) throw InvalidInput("RNp needs p in (0, 1]");
                 },
                 [](const radius::ScalarRefined1& s) { require_head(s.a0, true); },
                 [](const radius::ScalarRefinedCubic& s) { require_head(s.a0, false); },
                 [](const radius::Const& s) {
                   if (!(s.value > 0.0 && s.value < 1.0)) throw InvalidInput("Const value must lie in (0, 1)");
                 },
                 [](const radius::ThresholdN1&) {},
                 [](const radius::ThresholdN2&) {},
                 [](const radius::RadiusOfNkind& s) { require_head(s.a0, false); },
             },
             spec);
}

std::string spec_tag(const RadiusSpec& spec) {
  return std::visit(overloaded{
                        [](const radius::RN&) { return std::string("RN"); },
                        [](const radius::RNprime&) { return std::string("RNprime"); },
                        [](const radius::RNp&) { return std::string("RNp"); },
                        [](const radius::ScalarRefined1&) { return std::string("ScalarRefined1"); },
                        [](const radius::ScalarRefinedCubic&) { return std::string("ScalarRefinedCubic"); },
                        [](const radius::Const&) { return std::string("Const"); },
                        [](const radius::ThresholdN1&) { return std::string("ThresholdN1"); },
                        [](const radius::ThresholdN2&) { return std::string("ThresholdN2"); },
                        [](const radius::RadiusOfNkind&) { return std::string("RadiusOfNkind"); },
                    },
                    spec);
}

std::string spec_params(const RadiusSpec& spec) {
  return std::visit(overloaded{
                        [](const radius::RN& s) { return std::to_string(s.n); },
                        [](const radius::RNprime& s) { return std::to_string(s.n); },
                        [](const radius::RNp& s) { return std::to_string(s.n) + ";" + num(s.p); },
                        [](const radius::ScalarRefined1& s) { return num(s.a0); },
                        [](const radius::ScalarRefinedCubic& s) { return num(s.a0); },
                        [](const radius::Const& s) { return num(s.value); },
                        [](const radius::ThresholdN1&) { return std::string(); },
                        [](const radius::ThresholdN2&) { return std::string(); },
                        [](const radius::RadiusOfNkind& s) { return num(s.a0); },
                    },
                    spec);
}

double defining_equation(const RadiusSpec& spec, double r) {
  const double sq = (1.0 - r) * (1.0 - r);
  return std::visit(
      overloaded{
          [&](const radius::RN& s) { return 2.0 * (1.0 + r) * std::pow(r, s.n) - sq; },
          [&](const radius::RNprime& s) { return (1.0 + r) * std::pow(r, s.n) - sq; },
          [&](const radius::RNp& s) { return 2.0 * (1.0 + r) * std::pow(r, s.n) - s.p * sq; },
          [&](const radius::ScalarRefined1& s) {
            return r * (3.0 + s.a0 + std::sqrt(5.0) * (1.0 + s.a0)) - 2.0;
          },
          [&](const radius::ScalarRefinedCubic& s) {
            const double a = s.a0;
            return ((1.0 - a * a * a) * r - (1.0 + 2.0 * a)) * r * r - 2.0 * r + 1.0;
          },
          [&](const radius::Const& s) { return r - s.value; },
          [&](const radius::ThresholdN1&) { return n1_polynomial(r); },
          [&](const radius::ThresholdN2&) { return n2_polynomial(r); },
          [&](const radius::RadiusOfNkind& s) { return r * (3.0 - s.a0) - 1.0; },
      },
      spec);
}

RadiusResult solve_radius(const RadiusSpec& spec) {
  validate_spec(spec);
  if (is_closed_form(spec)) {
    const double value = std::visit(overloaded{
                                        [](const radius::ScalarRefined1& s) { return scalar_refined_radius(s.a0); },
                                        [](const radius::Const& s) { return s.value; },
                                        [](const radius::RadiusOfNkind& s) { return 1.0 / (3.0 - s.a0); },
                                        [](const auto&) { return 0.0; },
                                    },
                                    spec);
    const double residual = std::holds_alternative<radius::Const>(spec) ? 0.0 : std::abs(defining_equation(spec, value));
    return {value, residual};
  }

  const auto brackets = sign_brackets(spec);
  const std::string name = spec_tag(spec) + "(" + spec_params(spec) + ")";
  if (brackets.empty()) throw NoRoot("solve_radius: no sign change in (0, 1) for " + name);
  if (brackets.size() > 1 && !takes_smallest_root(spec)) {
    throw AmbiguousRoot("solve_radius: " + std::to_string(brackets.size()) + " sign changes for " + name, brackets);
  }
  const auto [lo, hi] = brackets.front();
  const double root = lo == hi ? lo : bisect(spec, lo, hi);
  return {root, std::abs(defining_equation(spec, root))};
}

double scalar_refined_radius(double a0) {
  if (!(a0 >= 0.0 && a0 <= 1.0)) throw DomainError("scalar_refined_radius: a0 must lie in [0, 1]");
  return 2.0 / (3.0 + a0 + std::sqrt(5.0) * (1.0 + a0));
}

double cubic_radius(double a0) {
  if (!(a0 >= 0.0 && a0 < 1.0)) throw DomainError("cubic_radius: a0 must lie in [0, 1)");
  const double root = solve_radius(radius::ScalarRefinedCubic{a0}).value;
  if (!(root > 1.0 / 3.0 && root < 1.0 / (2.0 + a0))) {
    throw InternalInconsistency("cubic_radius: root " + num(root) + " outside (1/3, 1/(2 + a0)) at a0 = " + num(a0));
  }
  return root;
}

double threshold_a(ThresholdKind kind) {
  try {
    return kind == ThresholdKind::n1 ? solve_radius(radius::ThresholdN1{}).value
                                     : solve_radius(radius::ThresholdN2{}).value;
  } catch (const NoRoot& e) {
    throw InternalInconsistency(e.what());
  }
}

namespace constants {
double sqrt5_minus_2() { return std::sqrt(5.0) - 2.0; }
double one_third() { return 1.0 / 3.0; }
double one_fifth() { return 1.0 / 5.0; }
double inv_sqrt5() { return 1.0 / std::sqrt(5.0); }
double four_sqrt2_minus_5() { return 4.0 * std::sqrt(2.0) - 5.0; }
double inv_sqrt2() { return 1.0 / std::sqrt(2.0); }
}  // namespace constants

std::vector<std::pair<RadiusSpec, RadiusResult>> radius_table() {
  std::vector<RadiusSpec> specs;
  for (int n = 1; n <= 10; ++n) specs.emplace_back(radius::RN{n});
  for (int n = 1; n <= 10; ++n) specs.emplace_back(radius::RNprime{n});
  for (int n = 1; n <= 10; ++n) specs.emplace_back(radius::RNp{n, 0.5});
  for (int i = 0; i <= 10; ++i) specs.emplace_back(radius::ScalarRefined1{i / 10.0});
  for (int i = 0; i < 10; ++i) specs.emplace_back(radius::ScalarRefinedCubic{i / 10.0});
  for (int i = 0; i < 10; ++i) specs.emplace_back(radius::RadiusOfNkind{i / 10.0});
  specs.emplace_back(radius::Const{constants::one_third()});
  specs.emplace_back(radius::Const{constants::one_fifth()});
  specs.emplace_back(radius::Const{constants::sqrt5_minus_2()});
  specs.emplace_back(radius::Const{constants::inv_sqrt5()});
  specs.emplace_back(radius::Const{constants::four_sqrt2_minus_5()});
  specs.emplace_back(radius::ThresholdN1{});
  specs.emplace_back(radius::ThresholdN2{});

  std::vector<std::pair<RadiusSpec, RadiusResult>> rows;
  rows.reserve(specs.size());
  for (const auto& s : specs) {
    if (const auto* c = std::get_if<radius::ScalarRefinedCubic>(&s)) {
      const double v = cubic_radius(c->a0);
      rows.emplace_back(s, RadiusResult{v, std::abs(defining_equation(s, v))});
    } else {
      rows.emplace_back(s, solve_radius(s));
    }
  }
  return rows;
}

}  // namespace bohr
