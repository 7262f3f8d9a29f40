#include "holospec/measures.hpp"

#include <cmath>

#include "holospec/quadrature.hpp"

namespace holospec {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void validate_spectral(const std::vector<SpectralDatum>& data) {
  for (const SpectralDatum& s : data) {
    if (s.multiplicity < 0)
      throw InvariantViolation("spectral datum: negative multiplicity");
    const bool principal = s.nu.real() == 0.0;
    if (principal) continue;
    if (!s.is_complementary())
      throw InvariantViolation(
          "spectral datum: nu must be purely imaginary, or real in (0,1) "
          "with p = 0");
  }
}

double varpi_density(double t, const std::vector<SpectralDatum>& comp) {
  if (t <= 0.0) throw DomainError("varpi_density: t must be > 0");
  double v = std::exp(2.0 * t) / t;
  for (const SpectralDatum& s : comp)
    v += double(s.multiplicity) * std::exp((1.0 + s.nu.real()) * t) / t;
  return v;
}

double varpi_star_density(double u, const std::vector<SpectralDatum>& comp) {
  double v = std::exp(u);
  for (const SpectralDatum& s : comp)
    v += double(s.multiplicity) * std::exp(u * s.nu.real());
  return v;
}

double ei_main_term(double a, double b,
                    const std::vector<SpectralDatum>& comp) {
  if (a < 2.0) throw DomainError("ei_main_term: lower limit must be >= 2");
  if (b < a) throw DomainError("ei_main_term: need a <= b");
  if (b == a) return 0.0;
  return quad::integrate_rel(
      [&](double t) { return varpi_density(t, comp); }, a, b, 1e-10, 48);
}

double plancherel_window(double a, double b, int n) {
  if (a < 0.0 || b < a)
    throw DomainError("plancherel_window: need 0 <= a <= b");
  const double nn = double(n) * double(n);
  return (2.0 * (b * b * b - a * a * a) / 3.0 + 2.0 * nn * (b - a)) /
         (4.0 * kPi * kPi);
}

}  // namespace holospec
