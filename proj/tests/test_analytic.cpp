#include <doctest.h>

#include <cmath>
#include <random>

#include "janus/analytic.hpp"
#include "janus/error.hpp"
#include "support/oracle.hpp"

using namespace janus;

namespace {

double sinh2(double r) { return std::sinh(r) * std::sinh(r); }

double single_state_g2(double r) { return 3.0 + 1.0 / sinh2(r); }

JanusParams single(double r, double theta = 0.0) {
  return JanusParams::make(SqueezeParam::make(r, theta), SqueezeParam::make(r, theta), 1.0, 0.0, 0.0);
}

cplx oracle_cross(double r, double theta, double s, double phi, int order) {
  const int pairs = oracle::pairs_for(std::max(r, s));
  const oracle::lc v = oracle::inner(oracle::squeezed(r, theta, pairs), oracle::squeezed(s, phi, pairs), order);
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace

TEST_CASE("reduced_vars of the vacuum") {
  const auto v = reduced_vars(single(0.0));
  CHECK(v.x == 0.0);
  CHECK(v.y == 0.0);
  CHECK(v.z == cplx{});
}

TEST_CASE("reduced_vars at Delta = pi is real negative") {
  const auto p = JanusParams::make(SqueezeParam::make(0.34, kPi), SqueezeParam::make(0.34, 0.0), 1.0, 0.0, 0.0);
  const auto v = reduced_vars(p);
  const double t = std::tanh(0.34);
  CHECK(v.z.real() == doctest::Approx(-t * t).epsilon(1e-15));
  CHECK(std::abs(v.z.imag()) < 1e-16);
  REQUIRE(v.K.has_value());
  CHECK(*v.K == doctest::Approx(1.0 / std::sqrt(1.0 + 2.0 * sinh2(0.34))).epsilon(1e-15));
}

TEST_CASE("reduced_vars at Delta = pi/2 matches the oracle overlap") {
  const auto p = JanusParams::make(SqueezeParam::make(0.7, kPi / 2), SqueezeParam::make(0.3, 0.0), 1.0, 0.0, 0.0);
  const auto v = reduced_vars(p);
  CHECK(std::abs(v.z - cplx{0.0, std::tanh(0.7) * std::tanh(0.3)}) < 1e-15);
  // invert ⟨ζ|ξ⟩ = (1-x)^{1/4}(1-y)^{1/4}(1-z)^{-1/2} for z
  const cplx ov = oracle_cross(0.7, kPi / 2, 0.3, 0.0, 0);
  const double pre = std::pow(v.one_minus_x * v.one_minus_y, 0.25);
  const cplx z_est = 1.0 - (pre / ov) * (pre / ov);
  CHECK(std::abs(z_est - v.z) < 1e-12);
}

TEST_CASE("overlap") {
  SUBCASE("identical states") {
    for (double r : {0.0, 0.1, 0.7, 1.5}) {
      for (double th : {0.0, 1.0, 4.0}) {
        const auto xi = SqueezeParam::make(r, th);
        CHECK(std::abs(overlap(xi, xi) - 1.0) < 1e-15);
      }
    }
  }
  SUBCASE("vacuum with any phases") {
    CHECK(std::abs(overlap(SqueezeParam::make(0.0, 1.0), SqueezeParam::make(0.0, 2.5)) - 1.0) < 1e-15);
  }
  SUBCASE("r = s = 0.5, Delta = pi") {
    const cplx ov = overlap(SqueezeParam::make(0.5, kPi), SqueezeParam::make(0.5, 0.0));
    const double t = std::tanh(0.5);
    const double expected = 1.0 / (std::cosh(0.5) * std::sqrt(1.0 + t * t));
    CHECK(ov.real() == doctest::Approx(expected).epsilon(1e-14));
    CHECK(std::abs(ov.imag()) < 1e-16);
    CHECK(std::abs(ov - oracle_cross(0.5, kPi, 0.5, 0.0, 0)) < 1e-12);
  }
}

TEST_CASE("overlap is Hermitian and matches the oracle on random pairs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> rr(0.0, 1.2), ph(0.0, kTwoPi);
  for (int i = 0; i < 50; ++i) {
    const auto a = SqueezeParam::make(rr(rng), ph(rng));
    const auto b = SqueezeParam::make(rr(rng), ph(rng));
    CHECK(std::abs(overlap(a, b) - std::conj(overlap(b, a))) < 1e-14);
    CHECK(std::abs(overlap(a, b) - oracle_cross(a.r, a.theta, b.r, b.theta, 0)) < 1e-12);
  }
}

TEST_CASE("cross_n") {
  SUBCASE("diagonal gives sinh^2 r") {
    for (double r : {0.1, 0.5, 1.2, 2.0}) {
      const auto xi = SqueezeParam::make(r, 0.3);
      CHECK(cross_n(xi, xi).real() == doctest::Approx(sinh2(r)).epsilon(1e-13));
    }
  }
  SUBCASE("vanishes when either state is vacuum") {
    CHECK(std::abs(cross_n(SqueezeParam::make(0.0), SqueezeParam::make(0.8, 1.0))) == 0.0);
    CHECK(std::abs(cross_n(SqueezeParam::make(0.8, 1.0), SqueezeParam::make(0.0))) == 0.0);
  }
  SUBCASE("r = s = 0.5, Delta = pi is real negative") {
    const cplx v = cross_n(SqueezeParam::make(0.5, kPi), SqueezeParam::make(0.5, 0.0));
    CHECK(v.real() < 0.0);
    CHECK(std::abs(v.imag()) < 1e-16);
    CHECK(std::abs(v - oracle_cross(0.5, kPi, 0.5, 0.0, 1)) < 1e-12);
  }
}

TEST_CASE("cross_n2") {
  SUBCASE("diagonal gives sinh^2 r (3 sinh^2 r + 1)") {
    for (double r : {0.1, 0.5, 1.2}) {
      const auto xi = SqueezeParam::make(r, 2.0);
      const double u = sinh2(r);
      CHECK(cross_n2(xi, xi).real() == doctest::Approx(u * (3.0 * u + 1.0)).epsilon(1e-13));
    }
  }
  SUBCASE("r = 0") { CHECK(std::abs(cross_n2(SqueezeParam::make(0.0), SqueezeParam::make(0.4, 1.0))) == 0.0); }
  SUBCASE("r = s = 0.4, Delta = pi/2") {
    const cplx v = cross_n2(SqueezeParam::make(0.4, kPi / 2), SqueezeParam::make(0.4, 0.0));
    CHECK(std::abs(v.imag()) > 1e-3);
    CHECK(std::abs(v - oracle_cross(0.4, kPi / 2, 0.4, 0.0, 2)) < 1e-12);
  }
}

TEST_CASE("norm_residual") {
  CHECK(std::abs(norm_residual(single(0.7, 1.0))) < 1e-15);

  const auto xi = SqueezeParam::make(0.6, 0.4);
  CHECK(norm_residual(JanusParams::make(xi, xi, 1.0, 1.0, 0.0)) == doctest::Approx(3.0).epsilon(1e-14));

  const auto a = SqueezeParam::make(0.34, kPi);
  const auto b = SqueezeParam::make(0.34, 0.0);
  const double chi = solve_chi(2.20070, a, b, kPi);
  CHECK(std::abs(norm_residual(JanusParams::make(a, b, chi, 2.20070, kPi))) <= 1e-12);
  const int pairs = oracle::pairs_for(0.34);
  const auto v = oracle::combine(chi, oracle::squeezed(0.34, kPi, pairs), std::polar<oracle::ld>(2.20070, kPi),
                                 oracle::squeezed(0.34, 0.0, pairs));
  CHECK(std::abs(static_cast<double>(oracle::stats(v).norm) - 1.0) < 1e-12);
}

TEST_CASE("solve_chi") {
  const auto a = SqueezeParam::make(0.5, 1.0);
  const auto b = SqueezeParam::make(0.8, 0.2);
  CHECK(solve_chi(0.0, a, b, 0.3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(solve_chi(1.0, a, a, kPi) == doctest::Approx(2.0).epsilon(1e-14));

  SUBCASE("ridge point agrees with the oracle quadratic") {
    const auto x = SqueezeParam::make(0.34, kPi);
    const auto z = SqueezeParam::make(0.34, 0.0);
    const double chi = solve_chi(2.20070, x, z, kPi);
    CHECK(chi == doctest::Approx(static_cast<double>(oracle::solve_chi(0.34, kPi, 0.34, 0.0, 2.20070, kPi)))
                     .epsilon(1e-12));
    CHECK(chi == doctest::Approx(2.2247876676).epsilon(1e-9));
    CHECK(solve_chi(2.20070, x, z, kPi, ChiRoot::Smaller) < chi);
  }
  SUBCASE("infeasible amplitude") {
    const auto x = SqueezeParam::make(0.40, kPi);
    const auto z = SqueezeParam::make(0.40, 0.0);
    CHECK_THROWS_AS(solve_chi(2.20070, x, z, kPi), Error);
    try {
      solve_chi(2.20070, x, z, kPi);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Infeasible);
    }
  }
  SUBCASE("normalizes random states") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> rr(0.05, 1.2), ph(0.0, kTwoPi), et(0.0, 3.0);
    int checked = 0;
    while (checked < 100) {
      const auto p = SqueezeParam::make(rr(rng), ph(rng));
      const auto q = SqueezeParam::make(rr(rng), ph(rng));
      const double eta = et(rng), delta = ph(rng);
      try {
        const double chi = solve_chi(eta, p, q, delta);
        CHECK(std::abs(norm_residual(JanusParams::make(p, q, chi, eta, delta))) < 1e-12);
        ++checked;
      } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::Infeasible);
      }
    }
  }
}

TEST_CASE("g2_general single state") {
  const double g = g2_general(single(1.0));
  CHECK(g == doctest::Approx(single_state_g2(1.0)).epsilon(1e-13));
  CHECK(g == doctest::Approx(static_cast<double>(oracle::janus_g2(1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0))).epsilon(1e-12));
}

TEST_CASE("g2_general agrees with the independent oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> rr(0.05, 1.2), ph(0.0, kTwoPi), et(0.0, 3.0);
  int checked = 0;
  double worst = 0.0;
  while (checked < 200) {
    const auto p = SqueezeParam::make(rr(rng), ph(rng));
    const auto q = SqueezeParam::make(rr(rng), ph(rng));
    const double eta = et(rng), delta = ph(rng);
    double chi = 0.0;
    try {
      chi = solve_chi(eta, p, q, delta);
    } catch (const Error&) {
      continue;
    }
    const double g = g2_general(JanusParams::make(p, q, chi, eta, delta));
    const double ref = static_cast<double>(oracle::janus_g2(p.r, p.theta, q.r, q.theta, chi, eta, delta));
    worst = std::max(worst, std::abs(g - ref));
    ++checked;
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("g2 is invariant under a common squeezing phase") {
  const double chi = solve_chi(0.8, SqueezeParam::make(0.6, 2.0), SqueezeParam::make(0.4, 0.5), 1.1);
  const double base = g2_general(
      JanusParams::make(SqueezeParam::make(0.6, 2.0), SqueezeParam::make(0.4, 0.5), chi, 0.8, 1.1));
  for (double shift : {0.3, 1.7, 4.0}) {
    const auto p = JanusParams::make(SqueezeParam::make(0.6, 2.0 + shift), SqueezeParam::make(0.4, 0.5 + shift),
                                     chi, 0.8, 1.1);
    CHECK(g2_general(p) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("g2_general errors") {
  CHECK_THROWS_AS(g2_general(single(0.0)), Error);
  try {
    g2_general(single(0.0));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Undefined);
    CHECK(std::string(e.what()).find("g2 undefined for vacuum") != std::string::npos);
  }
  const auto xi = SqueezeParam::make(0.5);
  try {
    g2_general(JanusParams::make(xi, xi, 1.0, 1.0, 0.0));
    FAIL("expected an unnormalized error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unnormalized);
  }
  CHECK_THROWS_AS(SqueezeParam::make(-0.1), Error);
}

TEST_CASE("phase_geometry") {
  for (double r : {0.0, 0.2, 1.0}) {
    const auto g = phase_geometry(r, 0.0);
    CHECK(g.f == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.gamma == 0.0);
  }
  const auto pi = phase_geometry(0.34, kPi);
  CHECK(pi.f == doctest::Approx(std::pow(2.0 * sinh2(0.34) + 1.0, 2)).epsilon(1e-14));
  CHECK(std::abs(pi.gamma) < 1e-15);

  const double r = 0.5;
  const auto g = phase_geometry(r, kPi / 2);
  const double x = std::tanh(r) * std::tanh(r);
  const cplx direct = (1.0 - x) / (1.0 - std::polar(x, kPi / 2));
  CHECK(std::abs(direct - std::polar(1.0 / std::sqrt(g.f), -g.gamma)) < 1e-14);
}

TEST_CASE("g2_equal_squeeze") {
  CHECK(g2_equal_squeeze(0.7, 1.0, 2.0, 1.0, 0.0) == doctest::Approx(single_state_g2(0.7)).epsilon(1e-13));

  const auto a = SqueezeParam::make(0.5, kPi);
  const auto b = SqueezeParam::make(0.5, 0.0);
  const double chi = solve_chi(1.0, a, b, 0.0);
  const double g = g2_equal_squeeze(0.5, kPi, 0.0, chi, 1.0);
  CHECK(g > 1.0);
  CHECK(g == doctest::Approx(static_cast<double>(oracle::janus_g2(0.5, kPi, 0.5, 0.0, chi, 1.0, 0.0))).epsilon(1e-11));
}

TEST_CASE("specialization chain: general, equal squeezing and optimal phase agree") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> rr(0.05, 1.2), ph(0.0, kTwoPi), et(0.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double r = rr(rng), Delta = ph(rng), delta = ph(rng), eta = et(rng);
    const auto a = SqueezeParam::make(r, Delta);
    const auto b = SqueezeParam::make(r, 0.0);
    double chi = 0.0;
    try {
      chi = solve_chi(eta, a, b, delta);
    } catch (const Error&) {
      continue;
    }
    const double g = g2_general(JanusParams::make(a, b, chi, eta, delta));
    CHECK(g2_equal_squeeze(r, Delta, delta, chi, eta) == doctest::Approx(g).epsilon(1e-11));
  }
  for (double r : {0.1, 0.34, 0.8}) {
    for (double eta : {0.0, 0.5, 1.0, 1.2}) {
      const double chi = solve_chi_ridge(r, eta);
      const double g = g2_general(
          JanusParams::make(SqueezeParam::make(r, kPi), SqueezeParam::make(r, 0.0), chi, eta, kPi));
      CHECK(g2_optimal(r, chi, eta) == doctest::Approx(g).epsilon(1e-11));
      CHECK(g2_equal_squeeze(r, kPi, kPi, chi, eta) == doctest::Approx(g).epsilon(1e-11));
    }
  }
}

TEST_CASE("g2_optimal") {
  CHECK(g2_optimal(0.6, 1.0, 0.0) == doctest::Approx(single_state_g2(0.6)).epsilon(1e-13));
  try {
    g2_optimal(0.6, 1.0, 1.0);
    FAIL("expected a constraint violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unnormalized);
  }
}

TEST_CASE("K and 1 - K") {
  for (double r : {1e-8, 1e-3, 0.34, 3.0}) {
    const double K = squeeze_K(r);
    CHECK(K == doctest::Approx(1.0 / std::sqrt(1.0 + 2.0 * sinh2(r))).epsilon(1e-15));
    const oracle::ld sh = std::sinh(static_cast<oracle::ld>(r));
    const oracle::ld gap = 1.0L - 1.0L / std::sqrt(1.0L + 2.0L * sh * sh);
    if (r > 1e-3) CHECK(one_minus_K(r) == doctest::Approx(static_cast<double>(gap)).epsilon(1e-14));
  }
  // leading order u = sinh² r for tiny r
  CHECK(one_minus_K(1e-8) == doctest::Approx(1e-16).epsilon(1e-6));
}

TEST_CASE("g2_boundary rational expression") {
  CHECK(g2_boundary(0.0) == 0.5);
  CHECK(g2_boundary(std::asinh(1.0)) == doctest::Approx(144.0 / 98.0).epsilon(1e-14));
  CHECK(std::abs(g2_boundary(6.0) - 3.0) < 0.01);
  CHECK(g2_boundary(6.0) < 3.0);
  CHECK_THROWS_AS(g2_boundary(-1.0), Error);
}

TEST_CASE("g2_boundary_series") {
  CHECK(g2_boundary_series(0.0, 0) == 0.5);
  CHECK(g2_boundary_series(0.0, 3) == 0.5);
  CHECK(g2_boundary_series(0.05, 1) == doctest::Approx(0.5 + 0.75 * sinh2(0.05)).epsilon(1e-15));
  CHECK(std::abs(g2_boundary_series(0.1, 3) - g2_boundary(0.1)) <= 1e-7);
}
