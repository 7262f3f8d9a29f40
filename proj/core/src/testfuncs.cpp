#include "holospec/testfuncs.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "holospec/quadrature.hpp"

namespace holospec {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kCdfCells = 4096;

double psi_raw(double x) {
  const double u = 1.0 - x * x;
  if (u <= 0.0) return 0.0;
  return std::exp(-1.0 / u);
}

// psi'(x)/c, analytically: psi_raw * d/dx(-1/(1-x^2)).
double psi_raw_deriv(double x) {
  const double u = 1.0 - x * x;
  if (u <= 0.0) return 0.0;
  return psi_raw(x) * (-2.0 * x / (u * u));
}

// Everything derived from the fixed bump, built once.
struct PsiTables {
  double c = 0.0;                  // normalization constant
  double h = 0.0;                  // grid step
  std::vector<double> cdf;         // kCdfCells + 1 nodes on [-1, 1]
  std::vector<double> cell_a0, cell_a1, cell_a2, cell_a3;  // cubic of psi
  double psi4_l1 = 0.0;            // upper bound for ||psi''''||_1

  PsiTables() {
    const double h_ = 2.0 / kCdfCells;
    h = h_;
    std::vector<double> cell(kCdfCells);
    for (int i = 0; i < kCdfCells; ++i) {
      const double a = -1.0 + i * h_;
      cell[i] = quad::integrate(psi_raw, a, a + h_, 1e-15, 8);
    }
    // The bump is even, so mirror-average the cell masses and build the node
    // table antisymmetric about 0: cdf(0) = 1/2 and cdf(-x) = 1 - cdf(x)
    // hold exactly, which keeps the odd windows odd to the last bit.
    static_assert(kCdfCells % 2 == 0);
    for (int i = 0; i < kCdfCells / 2; ++i) {
      const double m = 0.5 * (cell[i] + cell[kCdfCells - 1 - i]);
      cell[i] = m;
      cell[kCdfCells - 1 - i] = m;
    }
    cdf.resize(kCdfCells + 1);
    cdf[0] = 0.0;
    for (int i = 0; i < kCdfCells / 2; ++i) cdf[i + 1] = cdf[i] + cell[i];
    const double half = cdf[kCdfCells / 2];
    c = 0.5 / half;
    for (int i = 0; i < kCdfCells / 2; ++i) cdf[i] *= c;
    cdf[kCdfCells / 2] = 0.5;
    for (int i = kCdfCells / 2 + 1; i <= kCdfCells; ++i)
      cdf[i] = 1.0 - cdf[kCdfCells - i];

    // Cubic pieces of the normalized bump itself, for the oscillatory
    // transform path (exact values and derivatives at the nodes).
    cell_a0.resize(kCdfCells);
    cell_a1.resize(kCdfCells);
    cell_a2.resize(kCdfCells);
    cell_a3.resize(kCdfCells);
    for (int i = 0; i < kCdfCells; ++i) {
      const double x0 = -1.0 + i * h_;
      const double v0 = c * psi_raw(x0);
      const double v1 = c * psi_raw(x0 + h_);
      const double d0 = c * psi_raw_deriv(x0);
      const double d1 = c * psi_raw_deriv(x0 + h_);
      cell_a0[i] = v0;
      cell_a1[i] = d0;
      cell_a2[i] = (3.0 * (v1 - v0) / h_ - 2.0 * d0 - d1) / h_;
      cell_a3[i] = (d0 + d1 - 2.0 * (v1 - v0) / h_) / (h_ * h_);
    }

    // ||psi''''||_1 via the closed-form fourth derivative of the bump, with a
    // small safety factor; only used for rigorous Fourier tail bounds.
    auto psi4 = [this](double x) {
      const double u = 1.0 - x * x;
      if (u <= 1e-8) return 0.0;
      const double x2 = x * x;
      const double g1 = -2.0 * x / (u * u);
      const double g2 = -2.0 / (u * u) - 8.0 * x2 / (u * u * u);
      const double g3 =
          -24.0 * x / (u * u * u) - 48.0 * x2 * x / (u * u * u * u);
      const double g4 = -24.0 / (u * u * u) - 288.0 * x2 / (u * u * u * u) -
                        384.0 * x2 * x2 / (u * u * u * u * u);
      const double p = g4 + 4.0 * g3 * g1 + 3.0 * g2 * g2 +
                       6.0 * g2 * g1 * g1 + g1 * g1 * g1 * g1;
      return std::abs(c * psi_raw(x) * p);
    };
    psi4_l1 = 1.5 * quad::integrate(psi4, -1.0, 1.0, 1e-7, 30);
  }
};

const PsiTables& tables() {
  static const PsiTables t;
  return t;
}

// Monotone cubic Hermite interpolation of the CDF: node slopes are the exact
// density values, limited to 3x the secant slope so the piece stays monotone
// (the limiter only fires in the numerically dead zone near the support
// boundary, where the cell mass underflows).
double cdf_eval(double x) {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const PsiTables& t = tables();
  int i = static_cast<int>((x + 1.0) / t.h);
  i = std::clamp(i, 0, kCdfCells - 1);
  const double x0 = -1.0 + i * t.h;
  const double v0 = t.cdf[i], v1 = t.cdf[i + 1];
  const double delta = (v1 - v0) / t.h;
  if (delta <= 0.0) return v0;
  const double m0 = std::min(t.c * psi_raw(x0), 3.0 * delta);
  const double m1 = std::min(t.c * psi_raw(x0 + t.h), 3.0 * delta);
  const double s = (x - x0) / t.h;
  const double s2 = s * s, s3 = s2 * s;
  const double v = v0 * (2.0 * s3 - 3.0 * s2 + 1.0) +
                   t.h * m0 * (s3 - 2.0 * s2 + s) +
                   v1 * (-2.0 * s3 + 3.0 * s2) + t.h * m1 * (s3 - s2);
  return std::clamp(v, 0.0, 1.0);
}

// (e^{p u} - e^{-q u})/u with a series branch for small |u| (p, q >= 0).
Complex exp_ratio(double p, double q, Complex u) {
  const double scale = std::max(p, q);
  if (std::abs(u) * scale <= 1e-2) {
    const Complex u2 = u * u;
    return (p + q) + u * (p * p - q * q) / 2.0 +
           u2 * (p * p * p + q * q * q) / 6.0 +
           u2 * u * (p * p * p * p - q * q * q * q) / 24.0 +
           u2 * u2 * (std::pow(p, 5) + std::pow(q, 5)) / 120.0;
  }
  return (std::exp(p * u) - std::exp(-q * u)) / u;
}

// Oscillatory transform of psi via the cached cubic pieces: exact moments of
// s^k e^{-i w s} per cell, assembled with an incrementally rotated phase.
Complex psi_fourier_filon(double xi) {
  const PsiTables& t = tables();
  const double w = kTwoPi * xi;
  const double h = t.h;
  const Complex iw(0.0, w);

  // Moments M_k = Int_0^h s^k e^{-i w s} ds.
  Complex M[4];
  const Complex eh = std::exp(Complex(0.0, -w * h));
  if (std::abs(w) * h <= 2.0) {
    for (int k = 0; k < 4; ++k) {
      Complex sum = 0.0;
      Complex term = std::pow(h, k + 1) / double(k + 1);
      int m = 0;
      while (true) {
        sum += term;
        ++m;
        term *= Complex(0.0, -w) * h * (double(k + m) / double(m)) /
                double(k + m + 1);
        if (std::abs(term) < 1e-22 * (1.0 + std::abs(sum)) || m > 60) break;
      }
      M[k] = sum;
    }
  } else {
    M[0] = (1.0 - eh) / iw;
    for (int k = 1; k < 4; ++k)
      M[k] = (double(k) * M[k - 1] - std::pow(h, k) * eh) / iw;
  }

  Complex acc = 0.0;
  Complex phase;
  for (int i = 0; i < kCdfCells; ++i) {
    // Resync the incrementally rotated phase to kill drift.
    if (i % 256 == 0) phase = std::exp(Complex(0.0, -w * (-1.0 + i * h)));
    acc += phase * (t.cell_a0[i] * M[0] + t.cell_a1[i] * M[1] +
                    t.cell_a2[i] * M[2] + t.cell_a3[i] * M[3]);
    phase *= eh;
  }
  return acc;
}

double interval_length(const CutoffDescriptor& d) {
  return d.theta_hi - d.theta_lo;
}

double positive_mod(double x, double m) {
  double r = std::fmod(x, m);
  if (r < 0.0) r += m;
  return r;
}

}  // namespace

const char* to_string(CutoffKind k) {
  switch (k) {
    case CutoffKind::Psi: return "psi";
    case CutoffKind::PsiEta: return "psi_eta";
    case CutoffKind::GYEta: return "g_y_eta";
    case CutoffKind::HYEta: return "h_y_eta";
    case CutoffKind::FMajorantLen: return "f_majorant_len";
    case CutoffKind::GLambda: return "g_lambda";
    case CutoffKind::HLambda: return "h_lambda";
    case CutoffKind::FIEtaPrime: return "f_I_etaprime";
    case CutoffKind::IndicatorLen: return "indicator_len";
    case CutoffKind::IndicatorHol: return "indicator_hol";
  }
  return "?";
}

CutoffDescriptor make_psi() { return CutoffDescriptor{}; }

CutoffDescriptor make_psi_eta(double eta) {
  CutoffDescriptor d;
  d.kind = CutoffKind::PsiEta;
  d.eta = eta;
  validate(d);
  return d;
}

CutoffDescriptor make_g_y_eta(double y, double eta) {
  CutoffDescriptor d;
  d.kind = CutoffKind::GYEta;
  d.y = y;
  d.eta = eta;
  validate(d);
  return d;
}

CutoffDescriptor make_h_y_eta(double y, double eta) {
  CutoffDescriptor d;
  d.kind = CutoffKind::HYEta;
  d.y = y;
  d.eta = eta;
  validate(d);
  return d;
}

CutoffDescriptor make_f_majorant_len(double y, double eta) {
  CutoffDescriptor d;
  d.kind = CutoffKind::FMajorantLen;
  d.y = y;
  d.eta = eta;
  validate(d);
  return d;
}

CutoffDescriptor make_g_lambda(double t, double eta, double lambda) {
  CutoffDescriptor d;
  d.kind = CutoffKind::GLambda;
  d.t = t;
  d.eta = eta;
  d.lambda = lambda;
  validate(d);
  return d;
}

CutoffDescriptor make_h_lambda(double t, double eta, double lambda) {
  CutoffDescriptor d;
  d.kind = CutoffKind::HLambda;
  d.t = t;
  d.eta = eta;
  d.lambda = lambda;
  validate(d);
  return d;
}

CutoffDescriptor make_f_interval(double theta_lo, double theta_hi,
                                 double etaprime) {
  CutoffDescriptor d;
  d.kind = CutoffKind::FIEtaPrime;
  d.theta_lo = theta_lo;
  d.theta_hi = theta_hi;
  d.theta0 = 0.5 * (theta_lo + theta_hi);
  d.etaprime = etaprime;
  validate(d);
  return d;
}

CutoffDescriptor make_f_around(double theta0, double halfwidth,
                               double etaprime) {
  CutoffDescriptor d = make_f_interval(theta0 - halfwidth, theta0 + halfwidth,
                                       etaprime);
  d.theta0 = theta0;
  return d;
}

CutoffDescriptor make_indicator_len(double y) {
  CutoffDescriptor d;
  d.kind = CutoffKind::IndicatorLen;
  d.y = y;
  validate(d);
  return d;
}

CutoffDescriptor make_indicator_hol(double theta_lo, double theta_hi) {
  CutoffDescriptor d;
  d.kind = CutoffKind::IndicatorHol;
  d.theta_lo = theta_lo;
  d.theta_hi = theta_hi;
  d.theta0 = 0.5 * (theta_lo + theta_hi);
  validate(d);
  return d;
}

void validate(const CutoffDescriptor& d) {
  auto need = [](bool ok, const char* msg) {
    if (!ok) throw InvalidDescriptor(msg);
  };
  switch (d.kind) {
    case CutoffKind::Psi:
      break;
    case CutoffKind::PsiEta:
      need(d.eta > 0.0, "psi_eta: eta must be > 0");
      break;
    case CutoffKind::GYEta:
    case CutoffKind::HYEta:
    case CutoffKind::FMajorantLen:
      need(d.y > 0.0, "window: y must be > 0");
      need(d.eta > 0.0, "window: eta must be > 0");
      break;
    case CutoffKind::GLambda:
    case CutoffKind::HLambda:
      need(d.eta > 0.0, "tilted window: eta must be > 0");
      need(d.t >= d.eta, "tilted window: t must be >= eta");
      need(d.lambda >= 0.0 && d.lambda <= 1.0,
           "tilted window: lambda must lie in [0,1]");
      break;
    case CutoffKind::FIEtaPrime:
      need(d.theta_hi - d.theta_lo > 0.0 &&
               d.theta_hi - d.theta_lo <= kTwoPi + 1e-12,
           "circle window: need 0 < theta_hi - theta_lo <= 2pi");
      need(d.etaprime > 0.0 && d.etaprime <= kTwoPi,
           "circle window: etaprime must lie in (0, 2pi]");
      break;
    case CutoffKind::IndicatorLen:
      need(d.y > 0.0, "indicator: y must be > 0");
      break;
    case CutoffKind::IndicatorHol:
      need(d.theta_hi - d.theta_lo > 0.0 &&
               d.theta_hi - d.theta_lo <= kTwoPi + 1e-12,
           "circle indicator: need 0 < theta_hi - theta_lo <= 2pi");
      break;
  }
}

double psi_eval(double x) { return tables().c * psi_raw(x); }

double psi_norm_constant() { return tables().c; }

double psi_cdf(double x) { return cdf_eval(x); }

Complex psi_fourier(Complex xi) {
  if (xi.imag() == 0.0 && std::abs(xi.real()) > 8.0)
    return psi_fourier_filon(xi.real());
  const Complex fac(0.0, -kTwoPi);
  auto re = [&](double x) {
    return (psi_eval(x) * std::exp(fac * xi * x)).real();
  };
  auto im = [&](double x) {
    return (psi_eval(x) * std::exp(fac * xi * x)).imag();
  };
  return Complex(quad::integrate(re, -1.0, 1.0, 5e-11, 40),
                 quad::integrate(im, -1.0, 1.0, 5e-11, 40));
}

double cutoff_eval(const CutoffDescriptor& d, double x) {
  validate(d);
  switch (d.kind) {
    case CutoffKind::Psi:
      return psi_eval(x);
    case CutoffKind::PsiEta:
      return psi_eval(x / d.eta) / d.eta;
    case CutoffKind::GYEta:
      return cdf_eval((x + d.y) / d.eta) - cdf_eval((x - d.y) / d.eta);
    case CutoffKind::HYEta:
      return 2.0 * cdf_eval(x / d.eta) - cdf_eval((x - d.y) / d.eta) -
             cdf_eval((x + d.y) / d.eta);
    case CutoffKind::FMajorantLen:
      return psi_eval((x - d.y) / (2.0 * d.eta)) +
             psi_eval((x + d.y) / (2.0 * d.eta));
    case CutoffKind::GLambda:
    case CutoffKind::HLambda: {
      // (chi_[-eta,t] * psi_eta^lambda)(x) = Int psi(s) e^{lambda eta s} ds
      // over [(x-t)/eta, x/eta + 1], clipped to the bump's support.
      const double mu = d.lambda * d.eta;
      auto piece = [&](double lo, double hi, double sgn) {
        lo = std::max(lo, -1.0);
        hi = std::min(hi, 1.0);
        if (lo >= hi) return 0.0;
        auto f = [&](double s) { return psi_eval(s) * std::exp(sgn * mu * s); };
        return quad::integrate(f, lo, hi, 1e-12, 40);
      };
      const double term1 = piece((x - d.t) / d.eta, x / d.eta + 1.0, +1.0);
      const double term2 = piece(x / d.eta - 1.0, (x + d.t) / d.eta, -1.0);
      return d.kind == CutoffKind::GLambda ? term1 + term2 : term1 - term2;
    }
    case CutoffKind::FIEtaPrime: {
      // Periodized convolution: sum the CDF differences of the windows that
      // overlap the bump's support.
      const double lo = d.theta_lo, hi = d.theta_hi, ep = d.etaprime;
      const double A = (lo - ep - x) / kTwoPi;
      const double B = (hi + ep - x) / kTwoPi;
      double v = 0.0;
      for (long n = static_cast<long>(std::floor(A)) - 1;
           n <= static_cast<long>(std::ceil(B)) + 1; ++n) {
        const double u_hi = (x + kTwoPi * n - lo) / ep;
        const double u_lo = (x + kTwoPi * n - hi) / ep;
        if (u_hi <= -1.0 || u_lo >= 1.0) continue;
        v += cdf_eval(u_hi) - cdf_eval(u_lo);
      }
      return v;
    }
    case CutoffKind::IndicatorLen:
      return std::abs(x) <= d.y ? 1.0 : 0.0;
    case CutoffKind::IndicatorHol: {
      const double r = positive_mod(x - d.theta_lo, kTwoPi);
      return r <= (d.theta_hi - d.theta_lo) + 1e-12 ? 1.0 : 0.0;
    }
  }
  throw InvalidDescriptor("cutoff_eval: unknown kind");
}

Complex cutoff_fourier(const CutoffDescriptor& d, Complex xi) {
  validate(d);
  const Complex u = Complex(0.0, kTwoPi) * xi;  // 2 pi i xi
  switch (d.kind) {
    case CutoffKind::Psi:
      return psi_fourier(xi);
    case CutoffKind::PsiEta:
      return psi_fourier(d.eta * xi);
    case CutoffKind::GYEta: {
      // psi^(eta xi) sin(2 pi y xi)/(pi xi), with a series branch near 0.
      const Complex w = kTwoPi * d.y * xi;
      Complex box;
      if (std::abs(w) <= 1e-2) {
        const Complex w2 = w * w;
        box = 2.0 * d.y *
              (1.0 - w2 / 6.0 + w2 * w2 / 120.0 - w2 * w2 * w2 / 5040.0);
      } else {
        box = std::sin(w) / (kPi * xi);
      }
      return psi_fourier(d.eta * xi) * box;
    }
    case CutoffKind::HYEta: {
      // -i psi^(eta xi) (1 - cos(2 pi y xi))/(pi xi).
      const Complex w = kTwoPi * d.y * xi;
      Complex box;
      if (std::abs(w) <= 1e-2) {
        const Complex w2 = w * w;
        box = 2.0 * d.y * (w / 2.0 - w * w2 / 24.0 + w * w2 * w2 / 720.0);
      } else {
        box = (1.0 - std::cos(w)) / (kPi * xi);
      }
      return Complex(0.0, -1.0) * psi_fourier(d.eta * xi) * box;
    }
    case CutoffKind::FMajorantLen:
      return 4.0 * d.eta * std::cos(kTwoPi * d.y * xi) *
             psi_fourier(2.0 * d.eta * xi);
    case CutoffKind::GLambda:
    case CutoffKind::HLambda: {
      const Complex shift(0.0, d.eta * d.lambda / kTwoPi);
      const Complex plus =
          exp_ratio(d.eta, d.t, u) * psi_fourier(d.eta * xi + shift);
      const Complex minus =
          exp_ratio(d.t, d.eta, u) * psi_fourier(d.eta * xi - shift);
      return d.kind == CutoffKind::GLambda ? plus + minus : plus - minus;
    }
    case CutoffKind::FIEtaPrime:
    case CutoffKind::IndicatorHol:
      throw UnsupportedKind("cutoff_fourier: periodic kinds use periodic_coeff");
    case CutoffKind::IndicatorLen:
      throw UnsupportedKind("cutoff_fourier: sharp indicator not supported");
  }
  throw InvalidDescriptor("cutoff_fourier: unknown kind");
}

Complex fourier_at_exponent(const CutoffDescriptor& d, Complex nu) {
  return cutoff_fourier(d, Complex(0.0, 1.0) * nu / kTwoPi);
}

Complex periodic_coeff(const CutoffDescriptor& d, long n) {
  validate(d);
  if (d.kind != CutoffKind::FIEtaPrime)
    throw UnsupportedKind("periodic_coeff: needs an f_I_etaprime descriptor");
  const double len = interval_length(d);
  if (n == 0) return Complex(len, 0.0);
  if (len >= kTwoPi - 1e-12) return Complex(0.0, 0.0);
  const Complex num = std::exp(Complex(0.0, -double(n) * d.theta_hi)) -
                      std::exp(Complex(0.0, -double(n) * d.theta_lo));
  const Complex chi_hat = num / Complex(0.0, -double(n));
  // Circle coefficient of psi_{eta'} = line transform at eta' n / 2pi.
  return chi_hat * psi_fourier(Complex(d.etaprime * double(n) / kTwoPi, 0.0));
}

PeriodicNorms f_norms(const CutoffDescriptor& d, long N) {
  validate(d);
  if (d.kind != CutoffKind::FIEtaPrime)
    throw UnsupportedKind("f_norms: needs an f_I_etaprime descriptor");
  if (N <= 0) N = static_cast<long>(std::ceil(50.0 / d.etaprime));

  PeriodicNorms out;
  out.truncation = N;
  double s1 = std::abs(periodic_coeff(d, 0));
  double s2 = 0.0;
  for (long n = 1; n <= N; ++n) {
    // f is real, so |f^(-n)| = |f^(n)|.
    const double a = std::abs(periodic_coeff(d, n));
    s1 += 2.0 * a;
    s2 += 2.0 * double(n) * double(n) * a;
  }

  // Tail: |chi_I^(n)| <= 2/n and |psi^(eta' n/2pi)| <= K/(eta' n)^4 from four
  // integrations by parts, so sum_{|n|>N} |f^(n)| <= K/(eta'^4 N^4) and the
  // n^2-weighted tail is <= 2K/(eta'^4 N^2).  A full-circle window has all
  // nonzero coefficients identically zero.
  if (interval_length(d) < kTwoPi - 1e-12) {
    const double K = tables().psi4_l1;
    const double e4 = std::pow(d.etaprime, 4);
    out.tail1 = K / (e4 * std::pow(double(N), 4));
    out.tail21 = 2.0 * K / (e4 * double(N) * double(N));
  }
  out.norm1 = s1 + out.tail1;
  out.norm21 = out.norm1 + s2 + out.tail21;
  return out;
}

}  // namespace holospec
