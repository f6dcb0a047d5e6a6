#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bohrkit/errors.hpp"
#include "commands.hpp"

namespace {

using namespace bohr::cli;

struct Shared {
  std::uint64_t seed = 1;
  std::optional<std::size_t> samples;
  std::size_t order = 128;
  std::string format = "json";
  std::string out = "-";
};

void add_shared(CLI::App* sub, Shared& s) {
  sub->add_option("--seed", s.seed, "RNG seed")->capture_default_str();
  sub->add_option("--samples", s.samples, "sample / direction count");
  sub->add_option("--order", s.order, "truncation order")->capture_default_str()->check(CLI::Range(1, 1 << 16));
  sub->add_option("--format", s.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--out", s.out, "output file, - for stdout")->capture_default_str();
}

std::optional<double> opt_real(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_real(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bohrkit: Bohr-type inequalities for operator-valued power series"};
  app.require_subcommand(1);
  Shared shared;

  auto* radii = app.add_subcommand("radii", "radius and threshold table");
  add_shared(radii, shared);

  VerifyArgs verify;
  std::string verify_r;
  auto* ver = app.add_subcommand("verify", "check a functional on seeded Schur samples");
  add_shared(ver, shared);
  ver->add_option("--kind", verify.kind, "functional kind, e.g. bohr, m2, bp:0.5, d:2.472")->required();
  ver->add_option("-r,--r", verify_r, "radius (decimal or p/q)")->required();
  ver->add_option("--a0-min", verify.a0_min)->capture_default_str();
  ver->add_option("--a0-max", verify.a0_max)->capture_default_str();
  ver->add_option("--dim", verify.dim)->capture_default_str()->check(CLI::Range(1, 64));

  AdjudicateArgs adjudicate;
  std::string adj_grid;
  std::string adj_head;
  auto* adj = app.add_subcommand("adjudicate", "empirical sharp radius of each kind");
  add_shared(adj, shared);
  adj->add_option("--kind", adjudicate.kinds, "functional kind (repeatable)")->required();
  adj->add_option("--b-grid", adj_grid, "comma-separated extremal parameters");
  adj->add_option("--r-tol", adjudicate.r_tol)->capture_default_str();
  adj->add_option("--head", adj_head, "pin ||A_0|| (decimal or p/q)");
  adj->add_option("--dim", adjudicate.dim)->capture_default_str()->check(CLI::Range(1, 64));

  SharpnessArgs sharp;
  std::string sharp_grid;
  auto* shp = app.add_subcommand("sharpness", "margin curves of the extremal family");
  add_shared(shp, shared);
  shp->add_option("--kind", sharp.kind)->required();
  shp->add_option("--b-grid", sharp_grid, "comma-separated extremal parameters");
  shp->add_option("--r-min", sharp.r_min)->capture_default_str();
  shp->add_option("--r-max", sharp.r_max)->capture_default_str();
  shp->add_option("--r-steps", sharp.r_steps)->capture_default_str();

  MultidimArgs multi;
  std::string multi_rho;
  std::string multi_w;
  std::string multi_b;
  auto* mul = app.add_subcommand("multidim", "homothety check on a polydisc or ball");
  add_shared(mul, shared);
  mul->add_option("--domain", multi.domain)->check(CLI::IsMember({"polydisc", "ball"}))->capture_default_str();
  mul->add_option("--n", multi.n, "number of variables")->capture_default_str()->check(CLI::Range(1, 1024));
  mul->add_option("--kind", multi.kind)->required();
  mul->add_option("--rho", multi_rho, "homothety factor (decimal or p/q)")->required();
  auto* ib = mul->add_option("--inner-b", multi_b, "inner series Phi_b (default b = 0.5)");
  auto* is = mul->add_option("--inner-sample", multi.inner_sample, "inner series: sample #k of the seeded sampler");
  ib->excludes(is);
  mul->add_option("--w", multi_w, "comma-separated real weights of the linear form (default e1)");
  mul->add_option("--dim", multi.dim)->capture_default_str()->check(CLI::Range(1, 64));
  mul->add_flag("--exhaustive", multi.exhaustive, "evaluate every sampled direction");

  GpolyArgs gpoly;
  std::string gpoly_coeffs;
  auto* gp = app.add_subcommand("gpoly", "admissibility of G(t) = c1 t + c2 t^2 + ...");
  add_shared(gp, shared);
  gp->add_option("--coeffs", gpoly_coeffs, "comma-separated c1,c2,...")->required();
  gp->add_option("--variant", gpoly.variant)->check(CLI::IsMember({"sqrt5_minus2", "one_third"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  RunConfig cfg;
  int rc = kOk;
  try {
    cfg.seed = shared.seed;
    cfg.samples = shared.samples;
    cfg.order = shared.order;
    cfg.format = parse_format(shared.format);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (shared.out != "-") {
      file.open(shared.out, std::ios::out | std::ios::trunc);
      if (!file) {
        std::cerr << "bohrkit: cannot open " << shared.out << " for writing\n";
        return kIoError;
      }
      out = &file;
    }

    if (*radii) {
      rc = cmd_radii(cfg, *out);
    } else if (*ver) {
      verify.r = parse_real(verify_r);
      rc = cmd_verify(cfg, verify, *out);
    } else if (*adj) {
      if (!adj_grid.empty()) adjudicate.b_grid = parse_real_list(adj_grid);
      adjudicate.head = opt_real(adj_head);
      rc = cmd_adjudicate(cfg, adjudicate, *out);
    } else if (*shp) {
      if (!sharp_grid.empty()) sharp.b_grid = parse_real_list(sharp_grid);
      rc = cmd_sharpness(cfg, sharp, *out);
    } else if (*mul) {
      multi.rho = parse_real(multi_rho);
      multi.inner_b = opt_real(multi_b);
      if (!multi_w.empty()) multi.w = parse_real_list(multi_w);
      rc = cmd_multidim(cfg, multi, *out);
    } else if (*gp) {
      gpoly.coeffs = parse_real_list(gpoly_coeffs);
      rc = cmd_gpoly(cfg, gpoly, *out);
    }

    out->flush();
    if (!*out) {
      std::cerr << "bohrkit: write failed\n";
      return kIoError;
    }
  } catch (const bohr::InvalidInput& e) {
    std::cerr << "bohrkit: " << e.what() << '\n';
    return kUsage;
  } catch (const bohr::DomainError& e) {
    std::cerr << "bohrkit: " << e.what() << '\n';
    return kUsage;
  } catch (const bohr::PreconditionError& e) {
    std::cerr << "bohrkit: " << e.what() << '\n';
    return kUsage;
  } catch (const bohr::Error& e) {
    std::cerr << "bohrkit: " << e.what() << '\n';
    return kInconclusive;
  }
  return rc;
}
