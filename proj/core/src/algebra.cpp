#include "holospec/algebra.hpp"

#include <cmath>
#include <limits>

namespace holospec {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_pm_identity(const Mat2& m, double tol) {
  const Mat2 id{};
  return m.close_to(id, tol) || (-m).close_to(id, tol);
}

std::int64_t quantize(double x, double tol) {
  const double q = x / tol;
  // Saturate instead of overflowing for wildly out-of-range entries.
  constexpr double lim = 9.0e18;
  if (q > lim) return std::numeric_limits<std::int64_t>::max();
  if (q < -lim) return std::numeric_limits<std::int64_t>::min();
  return static_cast<std::int64_t>(std::llround(q));
}

ElementKey key_of(const Mat2& m, double tol) {
  return ElementKey{quantize(m.a.real(), tol), quantize(m.a.imag(), tol),
                    quantize(m.b.real(), tol), quantize(m.b.imag(), tol),
                    quantize(m.c.real(), tol), quantize(m.c.imag(), tol),
                    quantize(m.d.real(), tol), quantize(m.d.imag(), tol)};
}

}  // namespace

const char* to_string(ElementClass c) {
  switch (c) {
    case ElementClass::Identity: return "identity";
    case ElementClass::Parabolic: return "parabolic";
    case ElementClass::Elliptic: return "elliptic";
    case ElementClass::Hyperbolic: return "hyperbolic";
    case ElementClass::Loxodromic: return "loxodromic";
  }
  return "?";
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t <= -kPi) t += 2.0 * kPi;
  if (t > kPi) t -= 2.0 * kPi;
  return t;
}

ElementClass classify(const Mat2& m, double tol) {
  if (std::abs(m.det() - 1.0) > tol)
    throw NonUnitDeterminant("classify: determinant differs from 1 beyond tol");
  if (is_pm_identity(m, tol)) return ElementClass::Identity;

  const Complex tr2 = m.trace() * m.trace();
  if (std::abs(tr2 - 4.0) <= tol) return ElementClass::Parabolic;
  if (std::abs(tr2.imag()) <= tol) {
    const double re = tr2.real();
    if (re >= -tol && re < 4.0) return ElementClass::Elliptic;
    if (re > 4.0) return ElementClass::Hyperbolic;
  }
  return ElementClass::Loxodromic;
}

ComplexLength complex_length(const Mat2& m, double tol) {
  const ElementClass cls = classify(m, tol);
  if (cls == ElementClass::Identity || cls == ElementClass::Parabolic)
    throw NotLoxodromic("complex_length: element has no axis");

  const Complex tr = m.trace();
  const Complex s = std::sqrt(tr * tr - 4.0);
  Complex lam = 0.5 * (tr + s);
  const Complex lam2 = 0.5 * (tr - s);
  if (std::abs(lam2) > std::abs(lam)) lam = lam2;

  if (cls == ElementClass::Elliptic) {
    // Unit-modulus eigenvalues; report the rotation angle with length 0.
    if (std::arg(lam) < 0.0) lam = 1.0 / lam;
    return ComplexLength{0.0, wrap_angle(2.0 * std::arg(lam))};
  }
  return ComplexLength{2.0 * std::log(std::abs(lam)),
                       wrap_angle(2.0 * std::arg(lam))};
}

double weight(const ComplexLength& cl) {
  if (!(cl.length > 0.0))
    throw DegenerateLength("weight: requires positive length");
  const Complex z{cl.length, cl.holonomy};
  return 1.0 / (std::abs(1.0 - std::exp(z)) * std::abs(1.0 - std::exp(-z)));
}

std::pair<ComplexLength, double> power_class(const ComplexLength& cl,
                                             double root_length, int k) {
  if (k < 1) throw DomainError("power_class: k must be >= 1");
  if (!(cl.length > 0.0))
    throw DomainError("power_class: requires positive length");
  return {ComplexLength{k * cl.length, wrap_angle(k * cl.holonomy)},
          root_length};
}

CanonicalElement canonicalize(const Mat2& raw, double tol, std::string word) {
  const Complex det = raw.det();
  if (std::abs(det) < tol)
    throw SingularMatrix("canonicalize: determinant is ~ 0");
  const Complex s = std::sqrt(det);
  Mat2 m{raw.a / s, raw.b / s, raw.c / s, raw.d / s};

  const ElementKey kp = key_of(m, tol);
  const ElementKey kn = key_of(-m, tol);
  if (kn < kp) m = -m;
  return CanonicalElement{m, std::move(word)};
}

ElementKey canonical_key(const Mat2& canonical, double tol) {
  return key_of(canonical, tol);
}

ElementKey inverse_closed_key(const Mat2& canonical, double tol) {
  const ElementKey k1 = key_of(canonical, tol);
  const Mat2 inv_canon = canonicalize(canonical.inverse(), tol).m;
  const ElementKey k2 = key_of(inv_canon, tol);
  return k2 < k1 ? k2 : k1;
}

}  // namespace holospec
