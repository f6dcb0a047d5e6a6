#include "bohrkit/kinds.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include <nlohmann/json.hpp>

#include "bohrkit/errors.hpp"

namespace bohr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw InvalidInput("cannot parse number '" + std::string(text) + "'");
  return value;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw InvalidInput("cannot parse integer '" + std::string(text) + "'");
  return value;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_double(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string join(std::span<const double> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_double(xs[i]);
  }
  return out;
}

void require_index(int j) {
  if (j != 1 && j != 2) throw InvalidInput("functional index j must be 1 or 2");
}

}  // namespace

GPoly::GPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw InvalidInput("G polynomial needs at least one coefficient");
  for (double c : coeffs_) {
    if (!std::isfinite(c) || c < 0.0) throw InvalidInput("G polynomial coefficients must be finite and >= 0");
  }
}

double GPoly::operator()(double t) const {
  double acc = 0.0;
  for (std::size_t m = coeffs_.size(); m-- > 0;) acc = (acc + coeffs_[m]) * t;
  return acc;
}

double gpoly_eval(const GPoly& g, double t) {
  if (!(t >= 0.0)) throw DomainError("gpoly_eval: t must be >= 0");
  return g(t);
}

double sqrt5_minus2_gpoly_bound() { return (13.0 - 5.0 * std::sqrt(5.0)) / 4.0; }

Admissibility gpoly_admissible(const GPoly& g, GPolyVariant variant) {
  double value = 0.0;
  double bound = 0.0;
  const auto c = g.coeffs();
  switch (variant) {
    case GPolyVariant::sqrt5_minus2:
      for (std::size_t i = 0; i < c.size(); ++i) {
        const double m = static_cast<double>(i + 1);
        value += c[i] * std::exp2(1.0 - 4.0 * m);
      }
      bound = sqrt5_minus2_gpoly_bound();
      break;
    case GPolyVariant::one_third:
      for (std::size_t i = 0; i < c.size(); ++i) {
        const double m = static_cast<double>(i + 1);
        value += 8.0 * (2.0 * m - 1.0) * c[i] * std::pow(3.0 / 8.0, 2.0 * m);
      }
      bound = 1.0;
      break;
  }
  return {value <= bound, value, bound, bound - value};
}

void validate_kind(const FunctionalKind& k) {
  std::visit(overloaded{
                 [](const kind::Bohr&) {},
                 [](const kind::TN& t) {
                   if (t.n < 1) throw InvalidInput("T^N_j needs N >= 1");
                   require_index(t.j);
                 },
                 [](const kind::M& m) { require_index(m.j); },
                 [](const kind::C& c) { require_index(c.j); },
                 [](const kind::Bp& b) {
                   if (!(b.p > 0.0 && b.p <= 1.0)) throw InvalidInput("B_p needs p in (0, 1]");
                 },
                 [](const kind::D&) {},
                 [](const kind::E&) {},
                 [](const kind::N1& n) {
                   if (!(n.lambda >= 0.0) || !std::isfinite(n.lambda)) throw InvalidInput("lambda must be >= 0");
                 },
                 [](const kind::N2& n) {
                   if (!(n.lambda >= 0.0) || !std::isfinite(n.lambda)) throw InvalidInput("lambda must be >= 0");
                 },
             },
             k);
}

std::string kind_tag(const FunctionalKind& k) {
  return std::visit(overloaded{
                        [](const kind::Bohr&) { return std::string("Bohr"); },
                        [](const kind::TN&) { return std::string("TN"); },
                        [](const kind::M&) { return std::string("M"); },
                        [](const kind::C&) { return std::string("C"); },
                        [](const kind::Bp&) { return std::string("Bp"); },
                        [](const kind::D&) { return std::string("D"); },
                        [](const kind::E&) { return std::string("E"); },
                        [](const kind::N1&) { return std::string("N1"); },
                        [](const kind::N2&) { return std::string("N2"); },
                    },
                    k);
}

nlohmann::json kind_params(const FunctionalKind& k) {
  return std::visit(
      overloaded{
          [](const kind::Bohr&) { return nlohmann::json::object(); },
          [](const kind::TN& t) { return nlohmann::json{{"N", t.n}, {"j", t.j}}; },
          [](const kind::M& m) { return nlohmann::json{{"j", m.j}}; },
          [](const kind::C& c) { return nlohmann::json{{"j", c.j}}; },
          [](const kind::Bp& b) { return nlohmann::json{{"p", b.p}}; },
          [](const kind::D& d) {
            return nlohmann::json{{"G", std::vector<double>(d.g.coeffs().begin(), d.g.coeffs().end())}};
          },
          [](const kind::E& e) {
            return nlohmann::json{{"G", std::vector<double>(e.g.coeffs().begin(), e.g.coeffs().end())}};
          },
          [](const kind::N1& n) { return nlohmann::json{{"lambda", n.lambda}}; },
          [](const kind::N2& n) { return nlohmann::json{{"lambda", n.lambda}}; },
      },
      k);
}

std::string kind_to_string(const FunctionalKind& k) {
  return std::visit(overloaded{
                        [](const kind::Bohr&) { return std::string("bohr"); },
                        [](const kind::TN& t) { return "t" + std::to_string(t.j) + ":" + std::to_string(t.n); },
                        [](const kind::M& m) { return "m" + std::to_string(m.j); },
                        [](const kind::C& c) { return "c" + std::to_string(c.j); },
                        [](const kind::Bp& b) { return "bp:" + format_double(b.p); },
                        [](const kind::D& d) { return "d:" + join(d.g.coeffs()); },
                        [](const kind::E& e) { return "e:" + join(e.g.coeffs()); },
                        [](const kind::N1& n) { return "n1:" + format_double(n.lambda); },
                        [](const kind::N2& n) { return "n2:" + format_double(n.lambda); },
                    },
                    k);
}

FunctionalKind parse_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  const std::string_view s = lower;
  const auto colon = s.find(':');
  const std::string_view head = s.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw InvalidInput("kind '" + std::string(text) + "' needs a parameter after ':'");
  };

  FunctionalKind k = kind::Bohr{};
  if (head == "bohr") {
    k = kind::Bohr{};
  } else if (head == "t1" || head == "t2") {
    need_arg();
    k = kind::TN{parse_int(arg), head[1] - '0'};
  } else if (head == "m1" || head == "m2") {
    k = kind::M{head[1] - '0'};
  } else if (head == "c1" || head == "c2") {
    k = kind::C{head[1] - '0'};
  } else if (head == "bp") {
    need_arg();
    k = kind::Bp{parse_double(arg)};
  } else if (head == "d") {
    need_arg();
    k = kind::D{GPoly(parse_list(arg))};
  } else if (head == "e") {
    need_arg();
    k = kind::E{GPoly(parse_list(arg))};
  } else if (head == "n1") {
    need_arg();
    k = kind::N1{parse_double(arg)};
  } else if (head == "n2") {
    need_arg();
    k = kind::N2{parse_double(arg)};
  } else {
    throw InvalidInput("unknown functional kind '" + std::string(text) + "'");
  }
  if ((head == "bohr" || head[0] == 'm' || head[0] == 'c') && !arg.empty()) {
    throw InvalidInput("kind '" + std::string(text) + "' takes no parameter");
  }
  validate_kind(k);
  return k;
}

}  // namespace bohr
