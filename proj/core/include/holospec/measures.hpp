#ifndef HOLOSPEC_MEASURES_HPP
#define HOLOSPEC_MEASURES_HPP

#include <complex>
#include <vector>

#include "holospec/algebra.hpp"
#include "holospec/errors.hpp"

namespace holospec {

// One spectral multiplicity entry: principal series have purely imaginary nu
// (any integer p), complementary entries have nu real in (0,1) and p = 0.
struct SpectralDatum {
  Complex nu{0.0, 0.0};
  int p = 0;
  long multiplicity = 1;

  bool is_complementary() const {
    return nu.imag() == 0.0 && nu.real() > 0.0 && nu.real() < 1.0 && p == 0;
  }
};

// Throws InvariantViolation unless every entry is a valid principal or
// complementary datum.
void validate_spectral(const std::vector<SpectralDatum>& data);

struct ManifoldConstants {
  double volume = 1.0;   // vol(Gamma\G) in the fixed Haar normalization
  double systole = 1.0;  // shortest geodesic length
};

// Density of the length counting main term: e^{2t}/t plus one lower-order
// exponential per complementary entry.  Defined for t > 0; integrals start
// at 2.
double varpi_density(double t, const std::vector<SpectralDatum>& comp);

// Density e^u + sum m_j e^{u nu_j} entering the n = 0 spectral side.
double varpi_star_density(double u, const std::vector<SpectralDatum>& comp);

// Integral of varpi_density over [a, b], 2 <= a <= b, to ~1e-9 relative.
double ei_main_term(double a, double b, const std::vector<SpectralDatum>& comp);
inline double ei_main_term(double b, const std::vector<SpectralDatum>& comp) {
  return ei_main_term(2.0, b, comp);
}

// Plancherel mass of the two-sided window a <= |t| <= b at circle parameter
// n: (1/4pi^2) (2(b^3-a^3)/3 + 2n^2(b-a)).
double plancherel_window(double a, double b, int n);

}  // namespace holospec

#endif
