#include <cmath>
#include <complex>

#include "doctest.h"
#include "holospec/algebra.hpp"
#include "holospec/errors.hpp"
#include "oracles.hpp"

using namespace holospec;
using oracles::cnear;
using oracles::near;

namespace {

Mat2 identity() {
  return Mat2{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)};
}

Mat2 rotation(double alpha) {
  return Mat2{Complex(std::cos(alpha), 0), Complex(-std::sin(alpha), 0),
              Complex(std::sin(alpha), 0), Complex(std::cos(alpha), 0)};
}

}  // namespace

TEST_CASE("wrap_angle lands on (-pi, pi]") {
  CHECK(wrap_angle(oracles::kPi) == doctest::Approx(oracles::kPi));
  CHECK(near(wrap_angle(-oracles::kPi), oracles::kPi, 1e-15));
  CHECK(near(wrap_angle(3.0 * oracles::kPi), oracles::kPi, 1e-12));
  CHECK(near(wrap_angle(2.0 * oracles::kPi), 0.0, 1e-12));
  CHECK(near(wrap_angle(-0.5), -0.5, 0.0));
  CHECK(near(wrap_angle(oracles::kPi + 0.1), -oracles::kPi + 0.1, 1e-12));
}

TEST_CASE("classify separates the conjugacy types") {
  CHECK(classify(identity()) == ElementClass::Identity);
  CHECK(classify(-identity()) == ElementClass::Identity);
  CHECK(classify(Mat2{Complex(1, 0), Complex(1, 0), Complex(0, 0),
                      Complex(1, 0)}) == ElementClass::Parabolic);
  CHECK(classify(rotation(0.4)) == ElementClass::Elliptic);
  CHECK(classify(oracles::diag_loxodromic(0.7, 0.0)) ==
        ElementClass::Hyperbolic);
  CHECK(classify(oracles::diag_loxodromic(0.7, 1.1)) ==
        ElementClass::Loxodromic);

  Mat2 bad = identity();
  bad.a = Complex(2, 0);  // det = 2
  CHECK_THROWS_AS(classify(bad), NonUnitDeterminant);
}

TEST_CASE("complex_length on companion matrices of known traces") {
  // trace 3: lambda = (3 + sqrt 5)/2, l = 2 ln lambda, holonomy 0
  const Mat2 tr3{Complex(3, 0), Complex(-1, 0), Complex(1, 0), Complex(0, 0)};
  const ComplexLength a = complex_length(tr3);
  const double lam = (3.0 + std::sqrt(5.0)) / 2.0;
  CHECK(near(a.length, 2.0 * std::log(lam), 1e-12));
  CHECK(near(a.length, 1.9248473002384139, 1e-9));
  CHECK(near(a.holonomy, 0.0, 1e-12));

  // trace 2i: lambda = i(1 + sqrt 2), l = 2 ln(1 + sqrt 2), holonomy pi
  const Mat2 tr2i{Complex(0, 2), Complex(-1, 0), Complex(1, 0), Complex(0, 0)};
  const ComplexLength b = complex_length(tr2i);
  CHECK(near(b.length, 2.0 * std::log(1.0 + std::sqrt(2.0)), 1e-12));
  CHECK(near(b.length, 1.7627471740390861, 1e-9));
  CHECK(near(b.holonomy, oracles::kPi, 1e-12));
}

TEST_CASE("complex_length is a class function and inverse-invariant") {
  oracles::Rng rng(0x51ec7a11u);
  for (int i = 0; i < 50; ++i) {
    const double l = rng.uniform(0.3, 3.0);
    const double th = rng.uniform(-oracles::kPi + 1e-6, oracles::kPi);
    const Mat2 d = oracles::diag_loxodromic(l, th);
    const Mat2 p = oracles::random_sl2(rng);
    const Mat2 m = p * d * p.inverse();

    const ComplexLength got = complex_length(m);
    CHECK(near(got.length, l, 1e-9));
    CHECK(near(std::abs(wrap_angle(got.holonomy - th)), 0.0, 1e-9));

    const ComplexLength inv = complex_length(m.inverse());
    CHECK(near(inv.length, got.length, 1e-9));
    CHECK(near(inv.holonomy, got.holonomy, 1e-9));
  }
}

TEST_CASE("complex_length rejects non-loxodromic input") {
  CHECK_THROWS_AS(complex_length(identity()), NotLoxodromic);
  CHECK_THROWS_AS(
      complex_length(Mat2{Complex(1, 0), Complex(1, 0), Complex(0, 0),
                          Complex(1, 0)}),
      NotLoxodromic);
  // Elliptic elements carry length zero.
  const ComplexLength e = complex_length(rotation(0.4));
  CHECK(e.length == 0.0);
}

TEST_CASE("weight against the expanded denominator") {
  // w(l, th) = 1 / (e^l + e^-l - 2 cos th), evaluated through the factored
  // complex form by the library.
  CHECK(near(weight(ComplexLength{2.0, 0.0}),
             1.0 / (std::exp(2.0) + std::exp(-2.0) - 2.0), 1e-14));
  CHECK(near(weight(ComplexLength{2.0, 0.0}), 0.18101541524157762, 1e-9));
  CHECK(near(weight(ComplexLength{1.0, oracles::kPi / 2}),
             1.0 / (std::exp(1.0) + std::exp(-1.0)), 1e-14));
  CHECK(near(weight(ComplexLength{1.0, oracles::kPi / 2}),
             0.32402713683194270, 1e-9));
  CHECK_THROWS_AS(weight(ComplexLength{0.0, 0.0}), DegenerateLength);
}

TEST_CASE("power_class multiplies length and wraps holonomy") {
  const auto [cl3, root3] =
      power_class(ComplexLength{1.0, oracles::kPi / 2}, 1.0, 3);
  CHECK(near(cl3.length, 3.0, 0.0));
  CHECK(near(cl3.holonomy, -oracles::kPi / 2, 1e-12));
  CHECK(near(root3, 1.0, 0.0));

  const auto [cl2, root2] =
      power_class(ComplexLength{1.0, oracles::kPi / 2}, 1.0, 2);
  CHECK(near(cl2.holonomy, oracles::kPi, 1e-12));
  CHECK(near(cl2.length, 2.0, 0.0));
  (void)root2;

  CHECK_THROWS_AS(power_class(ComplexLength{1.0, 0.0}, 1.0, 0), DomainError);
}

TEST_CASE("canonicalize fixes the projective sign") {
  oracles::Rng rng(0xc0ffee11u);
  for (int i = 0; i < 25; ++i) {
    const Mat2 m = oracles::random_sl2(rng);
    const CanonicalElement a = canonicalize(m, kDefaultTol, "w");
    const CanonicalElement b = canonicalize(-m, kDefaultTol, "w");
    CHECK(a.m.close_to(b.m, 1e-14));
    CHECK(a.word == "w");
  }
  Mat2 singular{Complex(1, 0), Complex(1, 0), Complex(1, 0), Complex(1, 0)};
  CHECK_THROWS_AS(canonicalize(singular), SingularMatrix);
}

TEST_CASE("canonical keys quantize and close under inversion") {
  oracles::Rng rng(0xfeed5eedu);
  for (int i = 0; i < 25; ++i) {
    const Mat2 m = oracles::random_sl2(rng);
    const CanonicalElement g = canonicalize(m);
    CHECK(canonical_key(g.m) == canonical_key(g.m));
    const CanonicalElement ginv = canonicalize(g.m.inverse());
    CHECK(inverse_closed_key(g.m) == inverse_closed_key(ginv.m));
  }
}
