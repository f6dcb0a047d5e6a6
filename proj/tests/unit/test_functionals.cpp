#include <doctest.h>

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "bohrkit/errors.hpp"
#include "bohrkit/functionals.hpp"
#include "bohrkit/sampling.hpp"
#include "oracles.hpp"

using namespace bohr;
namespace bl = oracle::blaschke;

namespace {

OperatorSeries from_scalars(std::size_t dim, std::vector<double> diag_per_n, ClassTag tag) {
  std::vector<ComplexMatrix> coeffs;
  for (double c : diag_per_n) coeffs.push_back(ComplexMatrix::scalar(dim, c));
  return OperatorSeries(std::move(coeffs), tag);
}

// |computed - expected| must lie inside the certificate (plus rounding).
void check_certified(const Certified& c, double expected) {
  CHECK(std::abs(c.value - expected) <= c.slack + 1e-12);
}

}  // namespace

TEST_SUITE("functionals") {
  TEST_CASE("judge is three-valued") {
    CHECK(judge({0.9, 0.05}) == Verdict::pass);
    CHECK(judge({1.0, 0.0}) == Verdict::pass);
    CHECK(judge({1.1, 0.05}) == Verdict::fail);
    CHECK(judge({0.99, 0.02}) == Verdict::inconclusive);
    CHECK(judge({1.01, 0.02}) == Verdict::inconclusive);
    CHECK(to_string(Verdict::inconclusive) == "INCONCLUSIVE");
  }

  TEST_CASE("circle supremum of simple maps") {
    CHECK(circle_sup_norm(from_scalars(2, {0.4}, SchurScalarHead{0.4}), 0.5).value == doctest::Approx(0.4));
    const auto z = from_scalars(2, {0.0, 1.0}, SchurScalarHead{0.0});
    CHECK(circle_sup_norm(z, 0.3).value == doctest::Approx(0.3).epsilon(1e-14));
    for (const double b : {0.0, 0.5, 0.9, 0.999}) {
      for (const double r : {0.1, 1.0 / 3.0, 0.6}) {
        const auto s = blaschke_series(b, 2, 128);
        const auto cs = circle_sup_norm(s, r);
        check_certified(cs.certified(), bl::sup(b, r));
        CHECK(cs.certified().slack < 1e-7);
        if (b > 0.0) CHECK(std::abs(std::cos(cs.argument) + 1.0) < 1e-3);  // attained at z = -r
      }
    }
    CHECK_THROWS_AS(circle_sup_norm(z, 1.0), DomainError);
  }

  TEST_CASE("circle supremum agrees with a dense SVD scan") {
    SampleOptions so;
    so.dim = 3;
    so.order = 48;
    SchurSampler sampler(17, so);
    for (int i = 0; i < 12; ++i) {
      const auto s = sampler.next();
      for (const double r : {0.2, 0.5, 0.8}) {
        const auto cs = circle_sup_norm(s, r);
        const double dense = oracle::dense_circle_max(s, r, 2048);
        CHECK(dense <= cs.value + cs.grid_slack + 1e-12);
        CHECK(cs.value <= dense + 1e-5);
      }
    }
  }

  TEST_CASE("sums on the extremal family") {
    for (const double b : {0.0, 0.3, 0.8, 0.99}) {
      for (const double r : {0.05, 0.2, 0.5, 0.7}) {
        const auto s = blaschke_series(b, 2, 128);
        check_certified(majorant_sum(s, r, 1), bl::majorant(b, r));
        check_certified(majorant_sum(s, r, 0), b + bl::majorant(b, r));
        check_certified(weighted_square_sum(s, r), bl::square_sum(b, r));
        check_certified(sr_over_pi(s, r), bl::area(b, r));
      }
    }
    const auto phi0 = blaschke_series(0.0, 1, 8);
    CHECK(weighted_square_sum(phi0, 0.4).value == doctest::Approx(0.16));
    CHECK(majorant_sum(phi0, 0.4, 0).value == doctest::Approx(0.4));
    const auto zero = from_scalars(2, {0.0, 0.0, 0.0}, SchurScalarHead{0.0});
    CHECK(majorant_sum(zero, 0.5, 0).value == 0.0);
    CHECK(sr_over_pi(zero, 0.5).value == 0.0);
    CHECK(weighted_square_sum(zero, 0.5).value == 0.0);
    const auto z = from_scalars(1, {0.0, 1.0}, GeneralClass{});
    CHECK(sr_over_pi(z, 0.3).value == doctest::Approx(0.09));
    CHECK(sr_over_pi(z, 0.3).slack == 0.0);
  }

  TEST_CASE("functional values on the extremal family match closed forms") {
    const double c1 = 2.0 * (std::sqrt(5.0) - 1.0);
    for (const double b : {0.0, 0.4, 0.9, 0.999}) {
      for (const double r : {0.1, 0.2, 1.0 / 3.0, 0.5}) {
        const auto s = blaschke_series(b, 3, 128);
        check_certified(functional_value(kind::Bohr{}, s, r), bl::bohr(b, r));
        check_certified(functional_value(kind::M{1}, s, r), bl::m(1, b, r));
        check_certified(functional_value(kind::M{2}, s, r), bl::m(2, b, r));
        check_certified(functional_value(kind::C{1}, s, r), bl::c(1, b, r));
        check_certified(functional_value(kind::C{2}, s, r), bl::c(2, b, r));
        check_certified(functional_value(kind::Bp{0.5}, s, r), bl::bp(0.5, b, r));
        check_certified(functional_value(kind::D{GPoly({c1})}, s, r), bl::d_linear(c1, b, r));
        check_certified(functional_value(kind::E{GPoly({0.5})}, s, r), b + bl::majorant(b, r) + 0.5 * bl::area(b, r));
        check_certified(functional_value(kind::N1{8.0 / 9.0}, s, r),
                        b + bl::majorant(b, r) + bl::weight(b, r) * bl::square_sum(b, r) + 8.0 / 9.0 * bl::area(b, r));
        check_certified(functional_value(kind::N2{9.0 / 8.0}, s, r), b * b + bl::majorant(b, r) +
                                                                         bl::weight(b, r) * bl::square_sum(b, r) +
                                                                         9.0 / 8.0 * bl::area(b, r));
        // TN(2, j=1): sup + sum_{n>=2}
        check_certified(functional_value(kind::TN{2, 1}, s, r), bl::sup(b, r) + bl::majorant(b, r) - (1 - b * b) * r);
      }
    }
  }

  TEST_CASE("hand-composed examples") {
    const auto phi0 = blaschke_series(0.0, 2, 64);
    CHECK(functional_value(kind::M{2}, phi0, 1.0 / 3.0).value == doctest::Approx(1.0 / 9 + 1.0 / 3 + 1.5 / 9));
    CHECK(functional_value(kind::M{2}, phi0, 1.0 / 3.0).value == doctest::Approx(0.6111).epsilon(1e-4));
    CHECK(functional_value(kind::C{1}, phi0, 0.2).value == doctest::Approx(0.45));
    const double b = 0.9;
    CHECK(functional_value(kind::Bohr{}, blaschke_series(b, 1, 128), 1.0 / 3.0).value ==
          doctest::Approx(b + (1 - b * b) / (3 - b)));
  }

  TEST_CASE("functional values are nondecreasing in r") {
    SchurSampler sampler(23, SampleOptions{3, 96, 0.0, 1.0});
    const std::vector<FunctionalKind> kinds{kind::Bohr{}, kind::M{1},          kind::C{2},
                                            kind::Bp{0.5}, kind::D{GPoly({2.0})}, kind::N2{1.0}};
    for (int i = 0; i < 6; ++i) {
      const auto s = sampler.next();
      for (const auto& k : kinds) {
        double prev = -1.0;
        for (int j = 0; j <= 18; ++j) {
          const auto c = functional_value(k, s, j * 0.05);
          CHECK(c.value >= prev - 1e-9);
          prev = c.value;
        }
      }
    }
  }

  TEST_CASE("class requirements") {
    Rng rng(1);
    const auto g = random_colligation(rng, 2, 32, 0.9);
    CHECK_THROWS_AS(functional_value(kind::Bp{1.0}, g, 0.3), Unsupported);
    CHECK_THROWS_AS(functional_value(kind::N1{1.0}, g, 0.3), Unsupported);
    CHECK_THROWS_AS(functional_value(kind::N2{1.0}, g, 0.3), Unsupported);
    CHECK_NOTHROW(functional_value(kind::M{2}, g, 0.3));
    CHECK(functional_value(kind::Bohr{}, g, 0.3).slack < 1e-7);
    CHECK_THROWS_AS(functional_value(kind::Bohr{}, g, 1.0), DomainError);
    CHECK_THROWS_AS(functional_value(kind::Bohr{}, g, -0.1), DomainError);
  }

  TEST_CASE("envelope examples") {
    CHECK(envelope_bound(kind::M{1}, 0.0, 0.2) == doctest::Approx(0.2 + 0.25 + 0.04 / (0.8 * 0.96)));
    CHECK(envelope_bound(kind::M{1}, 0.0, 0.2) == doctest::Approx(0.5021).epsilon(1e-4));
    CHECK(envelope_bound(kind::C{1}, 0.0, 0.2) == doctest::Approx(0.5521).epsilon(1e-4));
    CHECK(envelope_bound(kind::M{1}, 1.0 - 1e-9, 0.3) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(envelope_bound(kind::Bohr{}, 0.2, 0.2), Unsupported);
    CHECK_THROWS_AS(envelope_bound(kind::E{GPoly({1.0})}, 0.2, 0.2), Unsupported);
    CHECK_THROWS_AS(envelope_bound(kind::N1{1.0}, 0.2, 0.75), DomainError);
  }

  TEST_CASE("the area bound fails for matrix-valued maps with a vanishing head") {
    // f(z) = diag(z, z^2): Schur class, f(0) = 0, yet S_r/pi = r^2 + 2 r^4 > r^2
    std::vector<ComplexMatrix> coeffs(3, ComplexMatrix(2));
    coeffs[1](0, 0) = 1.0;
    coeffs[2](1, 1) = 1.0;
    const OperatorSeries f(coeffs, SchurScalarHead{0.0});
    CHECK(schwarz_pick_check(f).ok);
    const double r = 0.5;
    const auto area = sr_over_pi(f, r);
    CHECK(area.value == doctest::Approx(r * r + 2 * std::pow(r, 4)));
    CHECK(area.value - area.slack > bl::area(0.0, r));
  }

  TEST_CASE("schwarz-pick check") {
    const auto phi = blaschke_series(0.6, 2, 32);
    const auto rep = schwarz_pick_check(phi);
    CHECK(rep.ok);
    CHECK(rep.worst_excess == doctest::Approx(0.0).epsilon(1e-15));
    const auto bad = from_scalars(2, {0.5, 1.0 - 0.25 + 0.01, 0.1}, SchurScalarHead{0.5});
    const auto rb = schwarz_pick_check(bad);
    CHECK_FALSE(rb.ok);
    CHECK(rb.worst_index == std::optional<std::size_t>(1));
    CHECK(rb.worst_excess == doctest::Approx(0.01));
    CHECK(schwarz_pick_check(from_scalars(1, {0.0, 0.0}, SchurScalarHead{0.0})).ok);
    CHECK_THROWS_AS(schwarz_pick_check(from_scalars(1, {0.0}, GeneralClass{})), Unsupported);
  }

  TEST_CASE("parts composition") {
    const auto s = blaschke_series(0.7, 2, 128);
    const auto needs = merge(needs_of(kind::M{1}), needs_of(kind::N1{1.0}));
    CHECK(needs.sup);
    CHECK(needs.square_sum);
    CHECK(needs.area);
    const auto parts = evaluate_parts(s, 0.3, needs);
    CHECK(compose(kind::M{1}, parts).value == doctest::Approx(functional_value(kind::M{1}, s, 0.3).value));
    CHECK(compose(kind::Bohr{}, parts).value == doctest::Approx(majorant_sum(s, 0.3, 0).value).epsilon(1e-12));
    const auto bare = evaluate_parts(s, 0.3, needs_of(kind::Bohr{}));
    CHECK_THROWS_AS(compose(kind::M{1}, bare), InvalidInput);
    CHECK_THROWS_AS(merge(needs_of(kind::TN{2, 1}), needs_of(kind::TN{3, 1})), InvalidInput);
  }

  TEST_CASE("verification record") {
    const auto j = verification_record(kind::C{2}, 0.25, {0.9, 1e-9}, Verdict::pass);
    CHECK(j["kind"] == "C");
    CHECK(j["params"]["j"] == 2);
    CHECK(j["verdict"] == "PASS");
    CHECK(j["r"] == 0.25);
  }
}
