#include "bohrkit/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bohrkit/errors.hpp"
#include "bohrkit/radii.hpp"
#include "bohrkit/sampling.hpp"

namespace bohr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kMaxRadius = 0.99;

std::string sample_label(std::size_t i, double a0) {
  std::ostringstream os;
  os.precision(6);
  os << "sample #" << i << " (a0=" << a0 << ")";
  return os.str();
}

struct Sample {
  OperatorSeries series;
  double a0;
};

std::vector<Sample> draw_samples(std::uint64_t seed, std::size_t count, std::size_t dim, std::size_t order,
                                 double a0_min, double a0_max) {
  SampleOptions so;
  so.dim = dim;
  so.order = order;
  so.a0_min = a0_min;
  so.a0_max = a0_max;
  SchurSampler sampler(seed, so);
  std::vector<Sample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto s = sampler.next();
    const double a0 = *s.scalar_head();
    out.push_back({std::move(s), a0});
  }
  return out;
}

// Phi_b grid restricted to heads the claim admits.
std::vector<double> admissible_b_values(const std::vector<double>& grid, double limit) {
  std::vector<double> out;
  if (limit >= 1.0) {
    for (double b : grid) {
      if (b >= 0.0 && b < 1.0) out.push_back(b);
    }
    return out;
  }
  for (double b : grid) {
    if (b >= 0.0 && b <= limit) out.push_back(b);
  }
  for (int i = 0; i <= 8; ++i) out.push_back(limit * i / 8.0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

FunctionalParts extremal_parts(const FunctionalKind& k, double b, double r) {
  if (!(b >= 0.0 && b < 1.0)) throw DomainError("extremal_parts: b must lie in [0, 1)");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("extremal_parts: r must lie in [0, 1)");
  validate_kind(k);
  const double h = 1.0 - b * b;
  const double br = b * r;
  FunctionalParts p;
  p.r = r;
  p.head_norm = b;
  p.majorant_from_one = {h * r / (1.0 - br), 0.0};
  const PartNeeds needs = needs_of(k);
  if (needs.sup) p.sup = Certified{(b + r) / (1.0 + br), 0.0};
  if (needs.tail_index) {
    const double n = static_cast<double>(*needs.tail_index);
    p.tail_index = *needs.tail_index;
    p.majorant_tail = Certified{h * std::pow(b, n - 1.0) * std::pow(r, n) / (1.0 - br), 0.0};
  }
  if (needs.square_sum) p.square_sum = Certified{h * h * r * r / (1.0 - br * br), 0.0};
  if (needs.area) p.area = Certified{h * h * r * r / ((1.0 - br * br) * (1.0 - br * br)), 0.0};
  return p;
}

double extremal_margin(const FunctionalKind& k, double b, double r) {
  return compose(k, extremal_parts(k, b, r)).value - 1.0;
}

double claimed_radius(const FunctionalKind& k, std::optional<double> head) {
  validate_kind(k);
  return std::visit(overloaded{
                        [](const kind::Bohr&) { return constants::one_third(); },
                        [](const kind::TN& t) {
                          return t.j == 1 ? solve_radius(radius::RN{t.n}).value
                                          : solve_radius(radius::RNprime{t.n}).value;
                        },
                        [](const kind::M& m) { return m.j == 1 ? constants::inv_sqrt5() : constants::one_third(); },
                        [](const kind::C& c) { return c.j == 1 ? constants::one_fifth() : constants::one_third(); },
                        [](const kind::Bp&) { return constants::one_third(); },
                        [](const kind::D&) { return constants::sqrt5_minus_2(); },
                        [](const kind::E&) { return constants::one_third(); },
                        [](const kind::N1&) { return constants::one_third(); },
                        [&](const kind::N2&) { return 1.0 / (3.0 - head.value_or(0.0)); },
                    },
                    k);
}

double head_limit(const FunctionalKind& k) {
  static const double n1 = threshold_a(ThresholdKind::n1);
  static const double n2 = threshold_a(ThresholdKind::n2);
  if (std::holds_alternative<kind::N1>(k)) return n1;
  if (std::holds_alternative<kind::N2>(k)) return n2;
  return 1.0;
}

std::vector<double> default_b_grid() { return {0.5, 0.9, 0.99, 0.999, 0.9999, 0.99999}; }

std::string_view to_string(AdjudicationVerdict v) {
  switch (v) {
    case AdjudicationVerdict::confirms:
      return "CONFIRMS";
    case AdjudicationVerdict::contradicts:
      return "CONTRADICTS";
    case AdjudicationVerdict::inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

AdjudicationReport adjudicate_radius(const FunctionalKind& k, const AdjudicationOptions& options) {
  validate_kind(k);
  if (!(options.r_tol > 0.0 && options.r_tol < 0.1)) throw InvalidInput("adjudicate_radius: r_tol must lie in (0, 0.1)");
  const double limit = head_limit(k);
  if (options.head && !(*options.head >= 0.0 && *options.head <= limit && *options.head < 1.0)) {
    throw InvalidInput("adjudicate_radius: head outside the kind's admissible range");
  }

  std::vector<double> bs = options.head ? std::vector<double>{*options.head}
                                        : admissible_b_values(options.b_grid, limit);
  const double a0_lo = options.head.value_or(0.0);
  const double a0_hi = options.head.value_or(std::min(limit, 1.0));
  const auto samples = draw_samples(options.seed, options.samples, options.dim, options.order, a0_lo, a0_hi);
  const PartNeeds needs = needs_of(k);

  AdjudicationReport rep;
  rep.kind = k;
  rep.head = options.head;
  rep.claimed_radius = claimed_radius(k, options.head);
  rep.candidates = bs.size() + samples.size();

  auto within = [&](double r) {
    for (double b : bs) {
      if (extremal_margin(k, b, r) > 0.0) return false;
    }
    for (const auto& s : samples) {
      const Certified c = compose(k, evaluate_parts(s.series, r, needs));
      rep.slack_budget = std::max(rep.slack_budget, c.slack);
      if (c.value > 1.0 + c.slack) return false;
    }
    return true;
  };

  if (within(kMaxRadius)) {
    rep.empirical_radius = kMaxRadius;
    rep.verdict = AdjudicationVerdict::inconclusive;
    rep.worst_witness = {std::nullopt, kMaxRadius, 0.0, 0.0, "no violation below r = 0.99"};
    return rep;
  }
  double lo = 0.0;
  double hi = kMaxRadius;
  while (hi - lo > options.r_tol) {
    const double mid = 0.5 * (lo + hi);
    (within(mid) ? lo : hi) = mid;
  }
  rep.empirical_radius = lo;

  const double gap = rep.claimed_radius - rep.empirical_radius;
  rep.verdict = std::abs(gap) <= 10.0 * options.r_tol ? AdjudicationVerdict::confirms
                                                      : AdjudicationVerdict::contradicts;
  const double r_w = gap > 10.0 * options.r_tol
                         ? std::min(rep.empirical_radius + 0.01, 0.5 * (rep.empirical_radius + rep.claimed_radius))
                         : std::min(hi + 10.0 * options.r_tol, kMaxRadius);

  Witness best{std::nullopt, r_w, -1.0, 0.0, ""};
  for (double b : bs) {
    const double v = extremal_margin(k, b, r_w) + 1.0;
    if (v > best.value) best = {b, r_w, v, 0.0, "Phi_b"};
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Certified c = compose(k, evaluate_parts(samples[i].series, r_w, needs));
    if (c.value - c.slack > best.value - best.slack) best = {std::nullopt, r_w, c.value, c.slack, sample_label(i, samples[i].a0)};
  }
  rep.worst_witness = best;
  if (!bs.empty()) {
    const double b_top = *std::max_element(bs.begin(), bs.end());
    rep.extremal_witness = Witness{b_top, r_w, extremal_margin(k, b_top, r_w) + 1.0, 0.0, "Phi_b"};
  }
  return rep;
}

nlohmann::json report_to_json(const AdjudicationReport& r) {
  auto witness_json = [](const Witness& w) {
    return nlohmann::json{{"b", w.b ? nlohmann::json(*w.b) : nlohmann::json(nullptr)},
                          {"r", w.r},
                          {"value", w.value},
                          {"slack", w.slack},
                          {"source", w.source}};
  };
  return {{"kind", kind_tag(r.kind)},
          {"params", kind_params(r.kind)},
          {"head", r.head ? nlohmann::json(*r.head) : nlohmann::json(nullptr)},
          {"claimed_radius", r.claimed_radius},
          {"empirical_radius", r.empirical_radius},
          {"worst_witness", witness_json(r.worst_witness)},
          {"extremal_witness", r.extremal_witness ? witness_json(*r.extremal_witness) : nlohmann::json(nullptr)},
          {"verdict", std::string(to_string(r.verdict))},
          {"slack_budget", r.slack_budget},
          {"candidates", r.candidates}};
}

std::optional<Witness> violation_witness(const FunctionalKind& k, double r, const SearchOptions& options) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("violation_witness: r must lie in (0, 1)");
  validate_kind(k);
  const double limit = head_limit(k);
  const double b_max = std::min(limit, std::nextafter(1.0, 0.0));

  std::vector<double> bs;
  for (int j = 0; j < 200; ++j) {
    const double b = j / 200.0;
    if (b <= b_max) bs.push_back(b);
  }
  for (double e = 1e-3; e >= 1e-6; e /= 10.0) {
    if (1.0 - e <= b_max) bs.push_back(1.0 - e);
  }
  if (limit < 1.0) bs.push_back(limit);

  std::optional<Witness> best;
  auto offer = [&](Witness w) {
    if (w.value - w.slack <= 1.0) return;
    if (!best || w.value - w.slack > best->value - best->slack) best = std::move(w);
  };

  double b_star = bs.front();
  double m_star = extremal_margin(k, b_star, r);
  for (double b : bs) {
    const double m = extremal_margin(k, b, r);
    if (m > m_star) {
      m_star = m;
      b_star = b;
    }
  }
  // golden-section polish of the margin around the best grid point
  {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = std::max(0.0, b_star - 0.005);
    double c = std::min(b_max, b_star + 0.005);
    for (int it = 0; it < 60 && c - a > 1e-12; ++it) {
      const double x1 = c - g * (c - a);
      const double x2 = a + g * (c - a);
      if (extremal_margin(k, x1, r) >= extremal_margin(k, x2, r)) {
        c = x2;
      } else {
        a = x1;
      }
    }
    const double b_polished = 0.5 * (a + c);
    const double m_polished = extremal_margin(k, b_polished, r);
    if (m_polished > m_star) {
      m_star = m_polished;
      b_star = b_polished;
    }
  }
  offer({b_star, r, m_star + 1.0, 0.0, "Phi_b"});

  const auto samples = draw_samples(options.seed, options.samples, options.dim, options.order, 0.0, std::min(limit, 1.0));
  const PartNeeds needs = needs_of(k);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Certified c = compose(k, evaluate_parts(samples[i].series, r, needs));
    offer({std::nullopt, r, c.value, c.slack, sample_label(i, samples[i].a0)});
  }
  return best;
}

std::vector<MarginPoint> margin_curve(const FunctionalKind& k, const std::vector<double>& b_values,
                                      const std::vector<double>& r_values) {
  std::vector<MarginPoint> out;
  out.reserve(b_values.size() * r_values.size());
  for (double b : b_values) {
    for (double r : r_values) out.push_back({b, r, extremal_margin(k, b, r)});
  }
  return out;
}

}  // namespace bohr
