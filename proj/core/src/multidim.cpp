#include "bohrkit/multidim.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "bohrkit/errors.hpp"

namespace bohr {

namespace {

constexpr double kGaugeTolerance = 1e-12;

void require_length(const CircularDomain& d, std::span<const Complex> z, const char* what) {
  if (z.size() != d.n) {
    throw InvalidInput(std::string(what) + ": expected " + std::to_string(d.n) + " coordinates, got " +
                       std::to_string(z.size()));
  }
}

nlohmann::json point_to_json(std::span<const Complex> z) {
  auto out = nlohmann::json::array();
  for (const Complex& c : z) out.push_back({c.real(), c.imag()});
  return out;
}

}  // namespace

CircularDomain::CircularDomain(DomainTag tag_, std::size_t n_) : tag(tag_), n(n_) {
  if (n == 0) throw InvalidInput("CircularDomain: n must be >= 1");
}

std::string_view to_string(DomainTag t) { return t == DomainTag::polydisc ? "polydisc" : "ball"; }

DomainTag parse_domain(std::string_view text) {
  if (text == "polydisc") return DomainTag::polydisc;
  if (text == "ball" || text == "euclidean_ball") return DomainTag::ball;
  throw InvalidInput("unknown domain '" + std::string(text) + "' (polydisc or ball)");
}

double gauge(const CircularDomain& d, std::span<const Complex> z) {
  require_length(d, z, "gauge");
  double acc = 0.0;
  for (const Complex& c : z) acc = d.tag == DomainTag::polydisc ? std::max(acc, std::abs(c)) : std::hypot(acc, std::abs(c));
  return acc;
}

double dual_norm(const CircularDomain& d, std::span<const Complex> w) {
  require_length(d, w, "dual_norm");
  double acc = 0.0;
  for (const Complex& c : w) acc = d.tag == DomainTag::polydisc ? acc + std::abs(c) : std::hypot(acc, std::abs(c));
  return acc;
}

Complex linear_form(std::span<const Complex> w, std::span<const Complex> z) {
  if (w.size() != z.size()) throw InvalidInput("linear_form: length mismatch");
  Complex acc{};
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * z[i];
  return acc;
}

Point sample_direction(const CircularDomain& d, Rng& rng) {
  Point z(d.n);
  if (d.tag == DomainTag::polydisc) {
    for (auto& c : z) c = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    return z;
  }
  double norm = 0.0;
  do {
    for (auto& c : z) c = rng.complex_normal();
    norm = gauge(d, z);
  } while (norm == 0.0);
  for (auto& c : z) c /= norm;
  return z;
}

MultiSeries::MultiSeries(CircularDomain domain, ComplexMatrix f0, Slicer slicer)
    : domain_(domain), f0_(std::move(f0)), slicer_(std::move(slicer)), construction_(CustomConstruction{}) {
  if (!slicer_) throw InvalidInput("MultiSeries: empty slicer");
}

MultiSeries::MultiSeries(CircularDomain domain, LinearComposite lc)
    : domain_(domain), f0_(lc.inner.coeff(0)), construction_(std::move(lc)) {
  const auto& stored = std::get<LinearComposite>(construction_);
  head_ = stored.inner.scalar_head();
  slicer_ = [inner = stored.inner, w = stored.w](std::span<const Complex> b) {
    return rescale_argument(inner, linear_form(w, b));
  };
}

MultiSeries compose_linear(const OperatorSeries& inner, Point w, const CircularDomain& d) {
  const double dn = dual_norm(d, w);
  if (dn > 1.0 + kGaugeTolerance) {
    throw PreconditionError("compose_linear: dual norm of w is " + std::to_string(dn) + " > 1");
  }
  return MultiSeries(d, LinearComposite{inner, std::move(w)});
}

OperatorSeries slice(const MultiSeries& m, std::span<const Complex> b) {
  const double g = gauge(m.domain_, b);
  if (std::abs(g - 1.0) > kGaugeTolerance) throw DomainError("slice: direction must satisfy gauge(b) = 1");
  OperatorSeries s = m.slicer_(b);
  if (s.dim() != m.f0_.dim() || !(s.coeff(0) == m.f0_)) {
    throw InternalInconsistency("slice: coefficient 0 of the slice differs from f(0)");
  }
  return s;
}

std::string_view to_string(HomothetyVerdict v) {
  switch (v) {
    case HomothetyVerdict::pass:
      return "PASS";
    case HomothetyVerdict::fail:
      return "FAIL";
    case HomothetyVerdict::inconclusive:
      return "INCONCLUSIVE";
    case HomothetyVerdict::unsupported_hypothesis:
      return "UNSUPPORTED-HYPOTHESIS";
  }
  return "INCONCLUSIVE";
}

HomothetyResult homothety_verify(const MultiSeries& m, const FunctionalKind& k, double rho,
                                 const HomothetyOptions& options) {
  if (!(rho > 0.0 && rho < 1.0)) throw DomainError("homothety_verify: rho must lie in (0, 1)");
  if (options.count == 0) throw InvalidInput("homothety_verify: count must be positive");
  validate_kind(k);

  HomothetyResult out;
  Rng rng(options.seed);
  std::vector<Point> dirs;
  dirs.reserve(options.count);
  for (std::size_t i = 0; i < options.count; ++i) dirs.push_back(sample_direction(m.domain(), rng));
  out.directions = dirs.size();

  const LinearComposite* lc = m.linear();
  std::vector<std::size_t> to_evaluate;
  if (lc && !options.exhaustive) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const double a = std::abs(linear_form(lc->w, dirs[i]));
      if (a > best_abs) {
        best_abs = a;
        best = i;
      }
    }
    to_evaluate.push_back(best);
    out.note = "linear composite: evaluated the direction of largest |omega|";
  } else {
    for (std::size_t i = 0; i < dirs.size(); ++i) to_evaluate.push_back(i);
  }

  bool any_fail = false;
  bool any_inconclusive = false;
  bool have_worst = false;
  for (std::size_t i : to_evaluate) {
    const OperatorSeries s = slice(m, dirs[i]);
    if (!s.scalar_head()) {
      out.verdict = HomothetyVerdict::unsupported_hypothesis;
      out.worst_direction = dirs[i];
      out.worst_index = i;
      out.note = "slice has no scalar-head Schur guarantee; the one-variable lemmas assume f(0) = a0 I";
      return out;
    }
    const Certified c = functional_value(k, s, rho, options.circle);
    ++out.evaluations;
    const Verdict v = judge(c);
    any_fail |= v == Verdict::fail;
    any_inconclusive |= v == Verdict::inconclusive;
    if (!have_worst || c.value > out.worst.value) {
      have_worst = true;
      out.worst = c;
      out.worst_index = i;
      out.worst_direction = dirs[i];
      out.worst_omega = lc ? std::abs(linear_form(lc->w, dirs[i])) : 0.0;
    }
  }
  out.verdict = any_fail ? HomothetyVerdict::fail
                         : (any_inconclusive ? HomothetyVerdict::inconclusive : HomothetyVerdict::pass);
  return out;
}

nlohmann::json homothety_to_json(const HomothetyResult& r, const FunctionalKind& k, double rho) {
  return {{"kind", kind_tag(k)},
          {"params", kind_params(k)},
          {"rho", rho},
          {"verdict", std::string(to_string(r.verdict))},
          {"directions", r.directions},
          {"evaluations", r.evaluations},
          {"worst",
           {{"index", r.worst_index},
            {"direction", point_to_json(r.worst_direction)},
            {"omega_abs", r.worst_omega},
            {"value", r.worst.value},
            {"slack", r.worst.slack}}},
          {"note", r.note}};
}

double radius_of_nkind_domain(const MultiSeries& m) {
  const auto a0 = m.scalar_head();
  if (!a0) throw Unsupported("radius_of_nkind_domain: map has no scalar head");
  return 1.0 / (3.0 - *a0);
}

}  // namespace bohr
