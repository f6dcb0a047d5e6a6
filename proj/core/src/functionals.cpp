#include "bohrkit/functionals.hpp"

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

constexpr double kSchwarzPickTolerance = 1e-9;

void require_radius(double r, const char* what) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError(std::string(what) + ": r must lie in [0, 1)");
}

double head_factor(const OperatorSeries& s) {
  const auto a0 = s.scalar_head();
  return a0 ? 1.0 - *a0 * *a0 : 0.0;
}

// x^j with x known to within +-slack; returns the composed certificate.
Certified power_of(const Certified& x, int j) {
  if (j == 1) return x;
  const double v = x.value * x.value;
  const double hi = (x.value + x.slack) * (x.value + x.slack);
  return {v, hi - v};
}

Certified g_of(const GPoly& g, const Certified& t) {
  const double v = g(t.value);
  return {v, g(t.value + t.slack) - v};
}

const Certified& need(const std::optional<Certified>& part, const char* name) {
  if (!part) throw InvalidInput(std::string("compose: missing part '") + name + "'");
  return *part;
}

Certified sum(std::initializer_list<Certified> xs) {
  Certified out;
  for (const auto& x : xs) {
    out.value += x.value;
    out.slack += x.slack;
  }
  return out;
}

Certified scaled(double w, const Certified& x) { return {w * x.value, w * x.slack}; }

}  // namespace

Verdict judge(const Certified& c, double bound) {
  if (c.value + c.slack <= bound) return Verdict::pass;
  if (c.value - c.slack > bound) return Verdict::fail;
  return Verdict::inconclusive;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

Certified majorant_sum(const OperatorSeries& s, double r, std::size_t from_index) {
  require_radius(r, "majorant_sum");
  Certified out;
  const auto norms = s.norms();
  double rk = std::pow(r, static_cast<double>(from_index));
  for (std::size_t n = from_index; n < norms.size(); ++n) {
    out.value += norms[n] * rk;
    rk *= r;
  }
  if (s.scalar_head() && from_index <= s.order() + 1) out.slack = tail_majorant_bound(s, r);
  return out;
}

Certified weighted_square_sum(const OperatorSeries& s, double r) {
  require_radius(r, "weighted_square_sum");
  Certified out;
  const auto norms = s.norms();
  const double q = r * r;
  double qk = q;
  for (std::size_t n = 1; n < norms.size(); ++n) {
    out.value += norms[n] * norms[n] * qk;
    qk *= q;
  }
  if (s.scalar_head()) {
    const double h = head_factor(s);
    out.slack = h * h * std::pow(q, static_cast<double>(s.order() + 1)) / (1.0 - q);
  }
  return out;
}

Certified sr_over_pi(const OperatorSeries& s, double r) {
  require_radius(r, "sr_over_pi");
  Certified out;
  const auto norms = s.norms();
  const double q = r * r;
  double qk = q;
  for (std::size_t n = 1; n < norms.size(); ++n) {
    out.value += static_cast<double>(n) * norms[n] * norms[n] * qk;
    qk *= q;
  }
  if (s.scalar_head()) {
    // sum_{n>=M+1} n q^n = q^(M+1) ((M+1) - M q) / (1 - q)^2
    const double h = head_factor(s);
    const double m = static_cast<double>(s.order());
    out.slack = h * h * std::pow(q, m + 1.0) * ((m + 1.0) - m * q) / ((1.0 - q) * (1.0 - q));
  }
  return out;
}

double refinement_weight(double head_norm, double r) { return 1.0 / (1.0 + head_norm) + r / (1.0 - r); }

PartNeeds needs_of(const FunctionalKind& k) {
  auto parts = [](bool sup, bool square_sum, bool area) {
    PartNeeds n;
    n.sup = sup;
    n.square_sum = square_sum;
    n.area = area;
    return n;
  };
  return std::visit(overloaded{
                        [&](const kind::Bohr&) { return parts(false, false, false); },
                        [&](const kind::TN& t) {
                          PartNeeds n = parts(true, false, false);
                          n.tail_index = static_cast<std::size_t>(t.n);
                          return n;
                        },
                        [&](const kind::M&) { return parts(true, true, false); },
                        [&](const kind::C&) { return parts(false, true, false); },
                        [&](const kind::Bp&) { return parts(false, true, false); },
                        [&](const kind::D&) { return parts(true, false, true); },
                        [&](const kind::E&) { return parts(false, false, true); },
                        [&](const kind::N1&) { return parts(false, true, true); },
                        [&](const kind::N2&) { return parts(false, true, true); },
                    },
                    k);
}

PartNeeds merge(const PartNeeds& a, const PartNeeds& b) {
  if (a.tail_index && b.tail_index && *a.tail_index != *b.tail_index) {
    throw InvalidInput("merge: conflicting majorant tail indices");
  }
  return {a.sup || b.sup, a.square_sum || b.square_sum, a.area || b.area,
          a.tail_index ? a.tail_index : b.tail_index};
}

FunctionalParts evaluate_parts(const OperatorSeries& s, double r, const PartNeeds& needs,
                               const CircleOptions& circle) {
  require_radius(r, "evaluate_parts");
  FunctionalParts p;
  p.r = r;
  p.head_norm = s.norms()[0];
  p.majorant_from_one = majorant_sum(s, r, 1);
  if (needs.sup) p.sup = circle_sup_norm(s, r, circle).certified();
  if (needs.tail_index) {
    p.tail_index = *needs.tail_index;
    p.majorant_tail = majorant_sum(s, r, *needs.tail_index);
  }
  if (needs.square_sum) p.square_sum = weighted_square_sum(s, r);
  if (needs.area) p.area = sr_over_pi(s, r);
  return p;
}

Certified compose(const FunctionalKind& k, const FunctionalParts& p) {
  const Certified head{p.head_norm, 0.0};
  const double w = refinement_weight(p.head_norm, p.r);
  return std::visit(
      overloaded{
          [&](const kind::Bohr&) { return sum({head, p.majorant_from_one}); },
          [&](const kind::TN& t) {
            if (p.tail_index != static_cast<std::size_t>(t.n)) throw InvalidInput("compose: tail index mismatch");
            return sum({power_of(need(p.sup, "sup"), t.j), need(p.majorant_tail, "majorant_tail")});
          },
          [&](const kind::M& m) {
            return sum({power_of(need(p.sup, "sup"), m.j), p.majorant_from_one,
                        scaled(w, need(p.square_sum, "square_sum"))});
          },
          [&](const kind::C& c) {
            return sum({head, p.majorant_from_one, scaled(w, need(p.square_sum, "square_sum")),
                        power_of(p.majorant_from_one, c.j)});
          },
          [&](const kind::Bp& b) {
            return sum({Certified{std::pow(p.head_norm, b.p), 0.0}, p.majorant_from_one,
                        scaled(w, need(p.square_sum, "square_sum"))});
          },
          [&](const kind::D& d) {
            return sum({need(p.sup, "sup"), p.majorant_from_one, g_of(d.g, need(p.area, "area"))});
          },
          [&](const kind::E& e) { return sum({head, p.majorant_from_one, g_of(e.g, need(p.area, "area"))}); },
          [&](const kind::N1& n) {
            return sum({head, p.majorant_from_one, scaled(w, need(p.square_sum, "square_sum")),
                        scaled(n.lambda, need(p.area, "area"))});
          },
          [&](const kind::N2& n) {
            return sum({Certified{p.head_norm * p.head_norm, 0.0}, p.majorant_from_one,
                        scaled(w, need(p.square_sum, "square_sum")), scaled(n.lambda, need(p.area, "area"))});
          },
      },
      k);
}

Certified functional_value(const FunctionalKind& k, const OperatorSeries& s, double r, const CircleOptions& circle) {
  validate_kind(k);
  require_radius(r, "functional_value");
  const bool needs_head = std::holds_alternative<kind::Bp>(k) || std::holds_alternative<kind::N1>(k) ||
                          std::holds_alternative<kind::N2>(k);
  if (needs_head && !s.scalar_head()) {
    throw Unsupported("functional_value: " + kind_tag(k) + " requires a schur_scalar_head series");
  }
  return compose(k, evaluate_parts(s, r, needs_of(k), circle));
}

double envelope_bound(const FunctionalKind& k, double a, double r) {
  validate_kind(k);
  if (!(a >= 0.0 && a < 1.0)) throw DomainError("envelope_bound: a must lie in [0, 1)");
  require_radius(r, "envelope_bound");
  const double h = 1.0 - a * a;
  const double growth = (a + r) / (1.0 + a * r);
  const double majorant = h * r / (1.0 - r);
  // W(r) * sum (1 - a^2)^2 r^2n = (1 + a r)(1 - a^2)^2 r^2 / ((1 + a)(1 - r)(1 - r^2))
  const double refinement = (1.0 + a * r) * h * h * r * r / ((1.0 + a) * (1.0 - r) * (1.0 - r * r));
  const double area_coeff = h * h * r * r / ((1.0 - r * r) * (1.0 - r * r));
  auto area_subordinate = [&] {
    if (r > 1.0 / std::sqrt(2.0)) throw DomainError("envelope_bound: N kinds need r <= 1/sqrt(2)");
    return r * r * h * h / ((1.0 - a * a * r * r) * (1.0 - a * a * r * r));
  };

  return std::visit(overloaded{
                        [&](const kind::M& m) { return std::pow(growth, m.j) + majorant + refinement; },
                        [&](const kind::C& c) { return a + majorant + refinement + std::pow(majorant, c.j); },
                        [&](const kind::Bp& b) { return std::pow(a, b.p) + majorant + refinement; },
                        [&](const kind::D& d) { return growth + majorant + d.g(area_coeff); },
                        [&](const kind::N1& n) { return a + majorant + refinement + n.lambda * area_subordinate(); },
                        [&](const kind::N2& n) {
                          return a * a + majorant + refinement + n.lambda * area_subordinate();
                        },
                        [&](const auto&) -> double {
                          throw Unsupported("envelope_bound: no closed-form envelope for " + kind_tag(k));
                        },
                    },
                    k);
}

SchwarzPickReport schwarz_pick_check(const OperatorSeries& s) {
  const auto a0 = s.scalar_head();
  if (!a0) throw Unsupported("schwarz_pick_check: requires a schur_scalar_head series");
  const double bound = 1.0 - *a0 * *a0;
  SchwarzPickReport rep;
  rep.worst_excess = -bound;
  const auto norms = s.norms();
  for (std::size_t n = 1; n < norms.size(); ++n) {
    const double excess = norms[n] - bound;
    if (excess > rep.worst_excess) {
      rep.worst_excess = excess;
      if (excess > kSchwarzPickTolerance) rep.worst_index = n;
    }
  }
  rep.ok = !(rep.worst_excess > kSchwarzPickTolerance);
  if (rep.ok) rep.worst_index.reset();
  return rep;
}

nlohmann::json verification_record(const FunctionalKind& k, double r, const Certified& c, Verdict v) {
  return {{"kind", kind_tag(k)},       {"params", kind_params(k)}, {"r", r},
          {"value", c.value},          {"slack", c.slack},         {"verdict", std::string(to_string(v))}};
}

}  // namespace bohr
