#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

#include "bohrkit/errors.hpp"
#include "bohrkit/functionals.hpp"
#include "bohrkit/kinds.hpp"
#include "bohrkit/multidim.hpp"
#include "bohrkit/radii.hpp"
#include "bohrkit/sampling.hpp"
#include "bohrkit/sharpness.hpp"

namespace bohr::cli {

namespace {

double parse_plain(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw InvalidInput("cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string row;
  for (const auto& c : cells) {
    if (!row.empty()) row += ',';
    row += c;
  }
  return row + '\n';
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw InvalidInput("unknown format '" + std::string(text) + "' (csv or json)");
}

double parse_real(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_plain(text);
  const double num = parse_plain(text.substr(0, slash));
  const double den = parse_plain(text.substr(slash + 1));
  if (den == 0.0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_real(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw InvalidInput("empty number list");
  return out;
}

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

int cmd_radii(const RunConfig& cfg, std::ostream& out) {
  const auto rows = radius_table();
  if (cfg.format == Format::csv) {
    out << "spec,params,radius,residual\n";
    for (const auto& [spec, res] : rows) {
      out << csv_row({spec_tag(spec), spec_params(spec), format_real(res.value), format_real(res.residual)});
    }
  } else {
    auto arr = nlohmann::json::array();
    for (const auto& [spec, res] : rows) {
      arr.push_back({{"spec", spec_tag(spec)}, {"params", spec_params(spec)}, {"radius", res.value},
                     {"residual", res.residual}});
    }
    out << arr.dump(2) << '\n';
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const VerifyArgs& args, std::ostream& out) {
  const FunctionalKind k = parse_kind(args.kind);
  if (!(args.r >= 0.0 && args.r < 1.0)) throw InvalidInput("verify: r must lie in [0, 1)");
  const std::size_t count = cfg.samples.value_or(1000);

  SampleOptions so;
  so.dim = args.dim;
  so.order = cfg.order;
  so.a0_min = args.a0_min;
  so.a0_max = args.a0_max;
  SchurSampler sampler(cfg.seed, so);

  std::size_t counts[3] = {0, 0, 0};
  std::optional<std::size_t> worst_index;
  double worst_a0 = 0.0;
  Certified worst;
  if (cfg.format == Format::csv) out << "index,a0,value,slack,verdict\n";
  for (std::size_t i = 0; i < count; ++i) {
    const OperatorSeries s = sampler.next();
    const Certified c = functional_value(k, s, args.r);
    const Verdict v = judge(c);
    ++counts[static_cast<int>(v)];
    if (!worst_index || c.value > worst.value) {
      worst_index = i;
      worst = c;
      worst_a0 = *s.scalar_head();
    }
    if (cfg.format == Format::csv) {
      out << csv_row({std::to_string(i), format_real(*s.scalar_head()), format_real(c.value), format_real(c.slack),
                      std::string(to_string(v))});
    }
  }
  if (cfg.format == Format::json) {
    nlohmann::json j{{"kind", kind_tag(k)},
                     {"params", kind_params(k)},
                     {"r", args.r},
                     {"samples", count},
                     {"dim", args.dim},
                     {"order", cfg.order},
                     {"seed", cfg.seed},
                     {"a0_min", args.a0_min},
                     {"a0_max", args.a0_max},
                     {"pass", counts[0]},
                     {"fail", counts[1]},
                     {"inconclusive", counts[2]}};
    if (worst_index) {
      j["worst"] = {{"index", *worst_index}, {"a0", worst_a0}, {"value", worst.value}, {"slack", worst.slack},
                    {"verdict", std::string(to_string(judge(worst)))}};
    }
    out << j.dump(2) << '\n';
  }
  return counts[1] == 0 ? kOk : kContradicts;
}

int cmd_adjudicate(const RunConfig& cfg, const AdjudicateArgs& args, std::ostream& out) {
  if (args.kinds.empty()) throw InvalidInput("adjudicate: at least one --kind is required");
  std::vector<FunctionalKind> kinds;
  for (const auto& text : args.kinds) kinds.push_back(parse_kind(text));

  AdjudicationOptions opt;
  if (!args.b_grid.empty()) opt.b_grid = args.b_grid;
  opt.r_tol = args.r_tol;
  opt.seed = cfg.seed;
  opt.samples = cfg.samples.value_or(64);
  opt.dim = args.dim;
  opt.order = cfg.order;
  opt.head = args.head;

  bool any_contradicts = false;
  bool any_inconclusive = false;
  if (cfg.format == Format::csv) {
    out << "kind,params,head,claimed_radius,empirical_radius,verdict,witness_b,witness_r,witness_value,witness_source\n";
  }
  for (const auto& k : kinds) {
    const AdjudicationReport rep = adjudicate_radius(k, opt);
    any_contradicts |= rep.verdict == AdjudicationVerdict::contradicts;
    any_inconclusive |= rep.verdict == AdjudicationVerdict::inconclusive;
    if (cfg.format == Format::csv) {
      const auto& w = rep.worst_witness;
      out << csv_row({kind_tag(k), "\"" + kind_to_string(k) + "\"", rep.head ? format_real(*rep.head) : std::string(),
                      format_real(rep.claimed_radius), format_real(rep.empirical_radius),
                      std::string(to_string(rep.verdict)), w.b ? format_real(*w.b) : std::string(), format_real(w.r),
                      format_real(w.value), "\"" + w.source + "\""});
    } else {
      out << report_to_json(rep).dump() << '\n';
    }
  }
  if (any_contradicts) return kContradicts;
  return any_inconclusive ? kInconclusive : kOk;
}

int cmd_sharpness(const RunConfig& cfg, const SharpnessArgs& args, std::ostream& out) {
  const FunctionalKind k = parse_kind(args.kind);
  if (!(args.r_min > 0.0 && args.r_min <= args.r_max && args.r_max < 1.0) || args.r_steps == 0) {
    throw InvalidInput("sharpness: need 0 < r_min <= r_max < 1 and r_steps >= 1");
  }
  const std::vector<double> bs = args.b_grid.empty() ? default_b_grid() : args.b_grid;
  std::vector<double> rs;
  for (std::size_t i = 0; i < args.r_steps; ++i) {
    rs.push_back(args.r_steps == 1 ? args.r_min
                                   : args.r_min + (args.r_max - args.r_min) * static_cast<double>(i) /
                                                      static_cast<double>(args.r_steps - 1));
  }
  const auto curve = margin_curve(k, bs, rs);
  if (cfg.format == Format::csv) {
    out << "b,r,margin\n";
    for (const auto& p : curve) out << csv_row({format_real(p.b), format_real(p.r), format_real(p.margin)});
  } else {
    auto arr = nlohmann::json::array();
    for (const auto& p : curve) arr.push_back({{"b", p.b}, {"r", p.r}, {"margin", p.margin}});
    out << nlohmann::json{{"kind", kind_tag(k)}, {"params", kind_params(k)}, {"curve", arr}}.dump(2) << '\n';
  }
  return kOk;
}

int cmd_multidim(const RunConfig& cfg, const MultidimArgs& args, std::ostream& out) {
  const FunctionalKind k = parse_kind(args.kind);
  const CircularDomain domain(parse_domain(args.domain), args.n);
  if (args.inner_b && args.inner_sample) throw InvalidInput("multidim: give --inner-b or --inner-sample, not both");

  std::optional<OperatorSeries> inner;
  if (args.inner_sample) {
    SampleOptions so;
    so.dim = args.dim;
    so.order = cfg.order;
    SchurSampler sampler(cfg.seed, so);
    for (std::size_t i = 0; i <= *args.inner_sample; ++i) inner = sampler.next();
  } else {
    inner = blaschke_series(args.inner_b.value_or(0.5), args.dim, cfg.order);
  }

  Point w(args.n, Complex(0.0));
  if (args.w.empty()) {
    w[0] = 1.0;
  } else {
    if (args.w.size() != args.n) throw InvalidInput("multidim: --w needs exactly n weights");
    std::transform(args.w.begin(), args.w.end(), w.begin(), [](double x) { return Complex(x); });
  }
  const MultiSeries m = compose_linear(*inner, w, domain);

  HomothetyOptions ho;
  ho.seed = cfg.seed;
  ho.count = cfg.samples.value_or(10000);
  ho.exhaustive = args.exhaustive;
  const HomothetyResult res = homothety_verify(m, k, args.rho, ho);

  if (cfg.format == Format::csv) {
    out << "domain,n,kind,params,rho,verdict,directions,worst_index,worst_omega,worst_value,worst_slack\n";
    out << csv_row({std::string(to_string(domain.tag)), std::to_string(domain.n), kind_tag(k), "\"" + kind_to_string(k) + "\"",
                    format_real(args.rho), std::string(to_string(res.verdict)), std::to_string(res.directions),
                    std::to_string(res.worst_index), format_real(res.worst_omega), format_real(res.worst.value),
                    format_real(res.worst.slack)});
  } else {
    auto j = homothety_to_json(res, k, args.rho);
    j["domain"] = {{"tag", std::string(to_string(domain.tag))}, {"n", domain.n}};
    out << j.dump(2) << '\n';
  }
  switch (res.verdict) {
    case HomothetyVerdict::pass:
      return kOk;
    case HomothetyVerdict::fail:
      return kContradicts;
    default:
      return kInconclusive;
  }
}

int cmd_gpoly(const RunConfig& cfg, const GpolyArgs& args, std::ostream& out) {
  GPolyVariant variant;
  if (args.variant == "sqrt5_minus2") {
    variant = GPolyVariant::sqrt5_minus2;
  } else if (args.variant == "one_third") {
    variant = GPolyVariant::one_third;
  } else {
    throw InvalidInput("unknown variant '" + args.variant + "' (sqrt5_minus2 or one_third)");
  }
  const GPoly g(args.coeffs);
  const Admissibility a = gpoly_admissible(g, variant);
  if (cfg.format == Format::csv) {
    out << "variant,admissible,value,bound,margin\n";
    out << csv_row({args.variant, a.admissible ? "true" : "false", format_real(a.value), format_real(a.bound),
                    format_real(a.margin)});
  } else {
    out << nlohmann::json{{"variant", args.variant},
                          {"coeffs", args.coeffs},
                          {"admissible", a.admissible},
                          {"value", a.value},
                          {"bound", a.bound},
                          {"margin", a.margin}}
               .dump(2)
        << '\n';
  }
  return a.admissible ? kOk : kNotAdmissible;
}

}  // namespace bohr::cli
