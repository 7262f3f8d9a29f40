#ifndef HOLOSPEC_TESTFUNCS_HPP
#define HOLOSPEC_TESTFUNCS_HPP

#include <complex>

#include "holospec/algebra.hpp"
#include "holospec/errors.hpp"

namespace holospec {

// Fourier conventions used throughout:
//   line:   f^(xi) = Int f(x) e^{-2 pi i x xi} dx
//   circle: f^(n)  = Int_0^{2pi} f(x) e^{-i n x} dx
// Exponential moments reduce to the line transform at a rotated argument,
//   Int f(u) e^{u nu} du = f^(i nu / 2pi),
// and fourier_at_exponent() below owns that bookkeeping.  The circle
// coefficient of the scaled bump psi_{eta'} is the line transform at
// eta' n / 2pi; periodic_coeff() owns this second adjustment.

enum class CutoffKind {
  Psi,            // the fixed bump psi
  PsiEta,         // psi_eta(x) = psi(x/eta)/eta
  GYEta,          // even plateau window psi_eta * chi_[-y,y]
  HYEta,          // odd window psi_eta * (chi_[-y,y] sgn)
  FMajorantLen,   // psi((x-y)/2eta) + psi((x+y)/2eta)
  GLambda,        // tilted even window, edge t, tilt lambda
  HLambda,        // tilted odd window
  FIEtaPrime,     // 2pi-periodic smooth cutoff of a circle interval
  IndicatorLen,   // chi_[-y,y]
  IndicatorHol,   // circle-interval indicator
};

const char* to_string(CutoffKind k);

struct CutoffDescriptor {
  CutoffKind kind = CutoffKind::Psi;
  double y = 0.0;         // half-width of the length window
  double eta = 0.0;       // line smoothing width
  double t = 0.0;         // window edge of the tilted kinds
  double lambda = 0.0;    // tilt exponent, in [0, 1]
  double theta0 = 0.0;    // center recorded by the symmetric circle factory
  double theta_lo = 0.0;  // circle interval (theta_lo, theta_hi]
  double theta_hi = 0.0;
  double etaprime = 0.0;  // circle smoothing width
};

// Factories (validated; all throw InvalidDescriptor on bad parameters).
CutoffDescriptor make_psi();
CutoffDescriptor make_psi_eta(double eta);
CutoffDescriptor make_g_y_eta(double y, double eta);
CutoffDescriptor make_h_y_eta(double y, double eta);
CutoffDescriptor make_f_majorant_len(double y, double eta);
CutoffDescriptor make_g_lambda(double t, double eta, double lambda);
CutoffDescriptor make_h_lambda(double t, double eta, double lambda);
CutoffDescriptor make_f_interval(double theta_lo, double theta_hi,
                                 double etaprime);
// Symmetric circle window centered at theta0 with the given half-width.
CutoffDescriptor make_f_around(double theta0, double halfwidth,
                               double etaprime);
CutoffDescriptor make_indicator_len(double y);
CutoffDescriptor make_indicator_hol(double theta_lo, double theta_hi);

void validate(const CutoffDescriptor& d);

// The fixed bump: psi(x) = c exp(-1/(1-x^2)) on (-1,1), zero outside, with c
// chosen so that the integral is 1.  Satisfies psi >= 1/2 on [-1/2, 1/2].
double psi_eval(double x);
// Normalization constant c (cached).
double psi_norm_constant();
// CDF of psi, from a cached 4096-cell grid with monotone cubic interpolation
// between nodes (absolute error well under 1e-10).
double psi_cdf(double x);
// Line transform of psi at a complex argument, by adaptive quadrature to
// absolute 1e-10 or better.
Complex psi_fourier(Complex xi);

// Pointwise evaluation.  Closed-form via the psi CDF for the convolution
// kinds; direct quadrature for the tilted kinds.
double cutoff_eval(const CutoffDescriptor& d, double x);

// Line-convention transform by closed-form product formulas; supports real
// and purely imaginary xi (any complex xi works).  Periodic kinds are
// rejected with UnsupportedKind, indicator kinds with UnsupportedKind too
// (sharp windows never enter transform-side formulas).
Complex cutoff_fourier(const CutoffDescriptor& d, Complex xi);

// Int f(u) e^{u nu} du = f^(i nu / 2pi): the one line-transform rotation used
// for spectral weights.
Complex fourier_at_exponent(const CutoffDescriptor& d, Complex nu);

// Circle Fourier coefficient of an f_I_etaprime descriptor.
Complex periodic_coeff(const CutoffDescriptor& d, long n);

struct PeriodicNorms {
  double norm1 = 0.0;    // sum of |f^(n)| plus tail bound
  double norm21 = 0.0;   // norm1 + sum of n^2 |f^(n)| plus tail bound
  double tail1 = 0.0;    // the tail bound included in norm1
  double tail21 = 0.0;   // the extra tail bound included in norm21
  long truncation = 0;   // N actually used
};

// Truncated coefficient norms with rigorous Schwartz tails (four integrations
// by parts give |psi^(xi)| <= ||psi''''||_1 / (2 pi |xi|)^4).  N = 0 picks
// the default ceil(50/etaprime).
PeriodicNorms f_norms(const CutoffDescriptor& d, long N = 0);

}  // namespace holospec

#endif
