#include <cmath>
#include <complex>

#include "doctest.h"
#include "holospec/errors.hpp"
#include "holospec/testfuncs.hpp"
#include "oracles.hpp"

using namespace holospec;
using oracles::cnear;
using oracles::near;
using oracles::simpson;

TEST_CASE("psi: support, lower bound, unit mass") {
  CHECK(psi_eval(1.0) == 0.0);
  CHECK(psi_eval(-1.0) == 0.0);
  CHECK(psi_eval(1.2) == 0.0);
  for (double x = -0.5; x <= 0.5; x += 0.05)
    CHECK(psi_eval(x) >= 0.5);
  for (double x = 0.1; x < 1.0; x += 0.17)
    CHECK(near(psi_eval(x), psi_eval(-x), 1e-15));

  const double mass = simpson([](double x) { return psi_eval(x); }, -1, 1, 4000);
  CHECK(near(mass, 1.0, 1e-10));

  const double c = psi_norm_constant();
  CHECK(near(c, 2.2522836, 1e-4));
  CHECK(near(psi_eval(0.0), c * std::exp(-1.0), 1e-14));
  CHECK(near(psi_eval(0.0), 0.8285824, 1e-4));
  CHECK(near(psi_eval(0.5), 0.5936985, 1e-4));
}

TEST_CASE("psi_cdf matches integrated psi") {
  CHECK(psi_cdf(-1.0) == 0.0);
  CHECK(psi_cdf(-2.0) == 0.0);
  CHECK(psi_cdf(1.0) == 1.0);
  CHECK(psi_cdf(3.0) == 1.0);
  CHECK(near(psi_cdf(0.0), 0.5, 1e-10));
  double prev = -1.0;
  for (double x = -1.0; x <= 1.0; x += 0.125) {
    const double v = psi_cdf(x);
    CHECK(v >= prev);
    prev = v;
    const double ref =
        simpson([](double s) { return psi_eval(s); }, -1.0, x, 3000);
    CHECK(near(v, ref, 1e-9));
  }
}

TEST_CASE("psi_fourier against direct quadrature") {
  CHECK(cnear(psi_fourier(Complex(0, 0)), Complex(1, 0), 1e-12));
  const Complex xs[] = {Complex(0.4, 0), Complex(-1.3, 0), Complex(0, 0.3),
                        Complex(0.5, -0.4)};
  for (const Complex xi : xs) {
    const Complex ref = simpson(
        [&](double x) {
          return psi_eval(x) *
                 std::exp(Complex(0, -oracles::kTwoPi) * x * xi);
        },
        -1.0, 1.0, 4000);
    CHECK(cnear(psi_fourier(xi), ref, 1e-9));
    CHECK(cnear(psi_fourier(-xi), psi_fourier(xi), 1e-12));
  }
}

TEST_CASE("descriptor validation refuses bad parameters") {
  CHECK_THROWS_AS(make_psi_eta(0.0), InvalidDescriptor);
  CHECK_THROWS_AS(make_psi_eta(-1.0), InvalidDescriptor);
  CHECK_THROWS_AS(make_g_y_eta(0.0, 0.5), InvalidDescriptor);
  CHECK_THROWS_AS(make_h_y_eta(2.0, -0.1), InvalidDescriptor);
  CHECK_THROWS_AS(make_g_lambda(0.2, 0.5, 0.5), InvalidDescriptor);  // t < eta
  CHECK_THROWS_AS(make_g_lambda(2.0, 0.5, 1.5), InvalidDescriptor);
  CHECK_THROWS_AS(make_f_interval(1.0, 1.0, 0.2), InvalidDescriptor);
  CHECK_THROWS_AS(make_f_interval(0.0, 7.0, 0.2), InvalidDescriptor);
  CHECK_THROWS_AS(make_indicator_len(-2.0), InvalidDescriptor);
}

TEST_CASE("g_{y,eta}: plateau, support, parity") {
  const CutoffDescriptor g = make_g_y_eta(2.0, 0.5);
  CHECK(cutoff_eval(g, 0.0) == 1.0);
  CHECK(cutoff_eval(g, 1.5) == 1.0);
  CHECK(cutoff_eval(g, -1.2) == 1.0);
  CHECK(cutoff_eval(g, 2.5) == 0.0);
  CHECK(cutoff_eval(g, -3.0) == 0.0);
  const double mid = cutoff_eval(g, 2.1);
  CHECK(mid > 0.0);
  CHECK(mid < 1.0);
  for (double x = 0.1; x < 3.0; x += 0.23)
    CHECK(near(cutoff_eval(g, x), cutoff_eval(g, -x), 1e-14));
}

TEST_CASE("h_{y,eta}: odd, signed plateaus") {
  const CutoffDescriptor h = make_h_y_eta(2.0, 0.5);
  CHECK(cutoff_eval(h, 0.0) == 0.0);
  CHECK(near(cutoff_eval(h, 1.0), 1.0, 1e-12));
  CHECK(near(cutoff_eval(h, -1.0), -1.0, 1e-12));
  CHECK(cutoff_eval(h, 2.6) == 0.0);
  for (double x = 0.05; x < 3.0; x += 0.19)
    CHECK(near(cutoff_eval(h, x), -cutoff_eval(h, -x), 1e-14));
}

TEST_CASE("majorant window is the two-bump sum") {
  const CutoffDescriptor f = make_f_majorant_len(2.0, 0.4);
  for (double x = -4.0; x <= 4.0; x += 0.37) {
    const double ref =
        psi_eval((x - 2.0) / 0.8) + psi_eval((x + 2.0) / 0.8);
    CHECK(near(cutoff_eval(f, x), ref, 1e-14));
  }
}

TEST_CASE("tilted windows: even, compact support") {
  const CutoffDescriptor g = make_g_lambda(2.0, 0.5, 0.6);
  CHECK(cutoff_eval(g, 2.6) == 0.0);
  CHECK(cutoff_eval(g, -2.6) == 0.0);
  for (double x = 0.2; x < 2.6; x += 0.4)
    CHECK(near(cutoff_eval(g, x), cutoff_eval(g, -x), 1e-9));
  const CutoffDescriptor h = make_h_lambda(2.0, 0.5, 0.6);
  for (double x = 0.2; x < 2.6; x += 0.4)
    CHECK(near(cutoff_eval(h, x), -cutoff_eval(h, -x), 1e-9));
  CHECK(near(cutoff_eval(h, 0.0), 0.0, 1e-12));
}

TEST_CASE("indicators use exact comparisons") {
  const CutoffDescriptor ind = make_indicator_len(2.0);
  CHECK(cutoff_eval(ind, 2.0) == 1.0);
  CHECK(cutoff_eval(ind, -2.0) == 1.0);
  CHECK(cutoff_eval(ind, std::nextafter(2.0, 3.0)) == 0.0);
  CHECK(cutoff_eval(ind, 0.0) == 1.0);
}

TEST_CASE("line transforms match quadrature") {
  const CutoffDescriptor pool[] = {
      make_psi_eta(0.3),        make_g_y_eta(2.0, 0.5),
      make_h_y_eta(2.0, 0.5),   make_f_majorant_len(2.0, 0.4),
      make_g_lambda(2.0, 0.5, 0.6), make_h_lambda(1.5, 0.3, 1.0)};
  const Complex xis[] = {Complex(0.0, 0.0), Complex(0.7, 0.0),
                         Complex(-0.23, 0.0), Complex(0.0, 0.3),
                         Complex(0.45, -0.35)};
  for (const CutoffDescriptor& d : pool) {
    const double R = d.kind == CutoffKind::GLambda ||
                             d.kind == CutoffKind::HLambda
                         ? d.t + d.eta
                         : (d.kind == CutoffKind::PsiEta ? d.eta
                                                         : d.y + 2.0 * d.eta);
    for (const Complex xi : xis) {
      const Complex got = cutoff_fourier(d, xi);
      const Complex ref = simpson(
          [&](double x) {
            return cutoff_eval(d, x) *
                   std::exp(Complex(0, -oracles::kTwoPi) * x * xi);
          },
          -R, R, 4000);
      CHECK(cnear(got, ref, 1e-8 * std::max(1.0, std::abs(ref))));
    }
  }
}

TEST_CASE("transform normalizations at zero") {
  CHECK(cnear(cutoff_fourier(make_g_y_eta(4.0, 0.5), Complex(0, 0)),
              Complex(8.0, 0.0), 1e-10));
  CHECK(cnear(cutoff_fourier(make_h_y_eta(3.0, 0.5), Complex(0, 0)),
              Complex(0.0, 0.0), 1e-12));
}

TEST_CASE("fourier_at_exponent is the rotated transform") {
  const CutoffDescriptor g = make_g_y_eta(2.0, 0.5);
  const Complex nus[] = {Complex(1.0, 0.0), Complex(0.5, 0.3),
                         Complex(0.0, 0.8)};
  for (const Complex nu : nus) {
    const Complex got = fourier_at_exponent(g, nu);
    const Complex ref = simpson(
        [&](double u) { return cutoff_eval(g, u) * std::exp(u * nu); }, -3.0,
        3.0, 4000);
    CHECK(cnear(got, ref, 1e-8 * std::max(1.0, std::abs(ref))));
    CHECK(cnear(got, cutoff_fourier(g, Complex(0, 1) * nu / oracles::kTwoPi),
                1e-13));
  }
}

TEST_CASE("circle coefficients against quadrature") {
  const CutoffDescriptor f = make_f_interval(0.3, 1.7, 0.25);
  CHECK(cnear(periodic_coeff(f, 0), Complex(1.4, 0.0), 1e-12));
  const double mass =
      simpson([&](double th) { return cutoff_eval(f, th); }, -oracles::kPi,
              oracles::kPi, 4000);
  CHECK(near(mass, 1.4, 1e-9));
  for (const long n : {1L, -2L, 5L}) {
    const Complex ref = simpson(
        [&](double th) {
          return cutoff_eval(f, th) *
                 std::exp(Complex(0, -double(n)) * th);
        },
        -oracles::kPi, oracles::kPi, 4000);
    CHECK(cnear(periodic_coeff(f, n), ref, 1e-8));
  }
}

TEST_CASE("circle window wrapping past the branch cut") {
  // centered near pi, so the support wraps; coefficients must not care
  const CutoffDescriptor f = make_f_around(3.0, 0.5, 0.2);
  CHECK(cnear(periodic_coeff(f, 0), Complex(1.0, 0.0), 1e-12));
  for (const long n : {1L, 2L, -3L}) {
    const Complex ref = simpson(
        [&](double th) {
          return cutoff_eval(f, th) *
                 std::exp(Complex(0, -double(n)) * th);
        },
        -oracles::kPi, oracles::kPi, 6000);
    CHECK(cnear(periodic_coeff(f, n), ref, 1e-8));
  }
}

TEST_CASE("coefficient norms are honest upper bounds") {
  const CutoffDescriptor f = make_f_interval(0.3, 1.7, 0.25);
  const PeriodicNorms nm = f_norms(f);
  CHECK(nm.truncation == 200);  // ceil(50 / 0.25)
  CHECK(nm.norm1 >= std::abs(periodic_coeff(f, 0)));
  CHECK(nm.norm21 >= nm.norm1);
  CHECK(nm.tail1 > 0.0);
  CHECK(nm.tail21 > 0.0);
}

TEST_CASE("kind mismatches are rejected") {
  CHECK_THROWS_AS(cutoff_fourier(make_f_interval(0.0, 1.0, 0.2), Complex(0, 0)),
                  UnsupportedKind);
  CHECK_THROWS_AS(cutoff_fourier(make_indicator_len(1.0), Complex(0, 0)),
                  UnsupportedKind);
  CHECK_THROWS_AS(periodic_coeff(make_g_y_eta(2.0, 0.5), 1), UnsupportedKind);
  CHECK_THROWS_AS(f_norms(make_g_y_eta(2.0, 0.5)), UnsupportedKind);
}
