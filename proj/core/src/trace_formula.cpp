#include "holospec/trace_formula.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace holospec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Parity { Even, Odd, Circle };

Parity parity_of(CutoffKind k) {
  switch (k) {
    case CutoffKind::Psi:
    case CutoffKind::PsiEta:
    case CutoffKind::GYEta:
    case CutoffKind::FMajorantLen:
    case CutoffKind::GLambda:
    case CutoffKind::IndicatorLen:
      return Parity::Even;
    case CutoffKind::HYEta:
    case CutoffKind::HLambda:
      return Parity::Odd;
    case CutoffKind::FIEtaPrime:
    case CutoffKind::IndicatorHol:
      return Parity::Circle;
  }
  throw UnsupportedKind("unknown cutoff kind");
}

// 5-point central difference, fixed step.  The window families are flat
// around 0 once the smoothing width fits inside the plateau, so the stencil
// values coincide exactly and the result is an exact 0; the step only
// matters for windows with no plateau.
double second_derivative_at_zero(const CutoffDescriptor& d) {
  const double h = 1e-4;
  const double f2p = cutoff_eval(d, 2.0 * h);
  const double f1p = cutoff_eval(d, h);
  const double f0 = cutoff_eval(d, 0.0);
  const double f1m = cutoff_eval(d, -h);
  const double f2m = cutoff_eval(d, -2.0 * h);
  return (-f2p + 16.0 * f1p - 30.0 * f0 + 16.0 * f1m - f2m) / (12.0 * h * h);
}

std::string spectral_note(const std::vector<SpectralDatum>& spectral,
                          const SpectrumTable& table,
                          const SumResult& geo_sum) {
  std::ostringstream os;
  os << "spectral entries: " << spectral.size() << " (caller-truncated list)";
  if (!geo_sum.warning.empty()) os << "; geometric: " << geo_sum.warning;
  if (!table.complete) os << "; table marked incomplete";
  return os.str();
}

}  // namespace

double weyl_discriminant_root(const ComplexLength& cl) {
  return std::exp(cl.length) + std::exp(-cl.length) -
         2.0 * std::cos(cl.holonomy);
}

Complex abel_transform(const CutoffDescriptor& g, TrigKind trig, long n,
                       Complex nu, long p) {
  if (parity_of(g.kind) == Parity::Circle)
    throw UnsupportedKind("abel_transform needs a line kind");
  Complex factor{0.0, 0.0};
  if (trig == TrigKind::Cos) {
    if (n == 0 && p == 0)
      factor = {1.0, 0.0};
    else if (n != 0 && (p == n || p == -n))
      factor = {0.5, 0.0};
    else
      return {0.0, 0.0};
  } else {
    if (n != 0 && p == n)
      factor = {0.0, 0.5};
    else if (n != 0 && p == -n)
      factor = {0.0, -0.5};
    else
      return {0.0, 0.0};
  }
  return factor * fourier_at_exponent(g, nu);
}

TraceFormulaReport even_tf_sides(const CutoffDescriptor& g, long n,
                                 const std::vector<SpectralDatum>& spectral,
                                 const SpectrumTable& table,
                                 const ManifoldConstants& mc,
                                 EvenGrouping grouping, int threads) {
  switch (parity_of(g.kind)) {
    case Parity::Odd:
      throw OddKind("even trace formula needs an even window");
    case Parity::Circle:
      throw UnsupportedKind("even trace formula needs a line kind");
    case Parity::Even:
      break;
  }
  if (g.kind == CutoffKind::IndicatorLen)
    throw UnsupportedKind("even trace formula needs a smooth window");
  validate(g);
  validate_spectral(spectral);

  const Complex ghat0 = cutoff_fourier(g, Complex{0.0, 0.0});
  const Complex trivial_exp = fourier_at_exponent(g, Complex{1.0, 0.0});
  const bool n_zero = n == 0;
  const bool n_one = n == 1 || n == -1;

  TraceFormulaReport r;
  Complex entry_sum;
  if (grouping == EvenGrouping::Standard) {
    entry_sum = chunk_tree_sum(
        [&](std::size_t i) {
          const SpectralDatum& d = spectral[i];
          return static_cast<double>(d.multiplicity) *
                 abel_transform(g, TrigKind::Cos, n, d.nu, d.p);
        },
        spectral.size());
    r.trivial_rep_term = (n_zero ? trivial_exp : Complex{0.0, 0.0}) -
                         (n_one ? 0.5 * ghat0 : Complex{0.0, 0.0});
  } else {
    entry_sum = chunk_tree_sum(
        [&](std::size_t i) -> Complex {
          const SpectralDatum& d = spectral[i];
          if (d.is_complementary()) return {0.0, 0.0};
          return static_cast<double>(d.multiplicity) *
                 abel_transform(g, TrigKind::Cos, n, d.nu, d.p);
        },
        spectral.size());
    Complex comp_mass = chunk_tree_sum(
        [&](std::size_t i) -> Complex {
          const SpectralDatum& d = spectral[i];
          if (!d.is_complementary()) return {0.0, 0.0};
          return static_cast<double>(d.multiplicity) *
                 fourier_at_exponent(g, d.nu);
        },
        spectral.size());
    Complex density_integral = trivial_exp + comp_mass;  // Int g dw*
    r.trivial_rep_term = (n_zero ? density_integral : Complex{0.0, 0.0}) -
                         (n_one ? 0.5 * ghat0 : Complex{0.0, 0.0});
  }
  r.spectral_side = entry_sum + r.trivial_rep_term;

  const double g0 = cutoff_eval(g, 0.0);
  const double gpp0 = second_derivative_at_zero(g);
  r.identity_term = Complex{
      mc.volume / kTwoPi * (static_cast<double>(n) * n * g0 - gpp0), 0.0};

  SumSpec spec;
  spec.weight_mode = WeightMode::TraceWeight;
  spec.class_filter = ClassFilter::All;
  spec.length_window = smooth_window(g);
  spec.holonomy_mode = HolonomyMode::CosN;
  spec.n = n;
  SumResult geo = weighted_sum(table, spec, threads);

  r.geometric_side = r.identity_term + geo.value;
  r.residual = r.spectral_side - r.geometric_side;
  r.truncation_note = spectral_note(spectral, table, geo);
  return r;
}

TraceFormulaReport odd_tf_sides(const CutoffDescriptor& h, long n,
                                const std::vector<SpectralDatum>& spectral,
                                const SpectrumTable& table,
                                const ManifoldConstants& mc, int threads) {
  switch (parity_of(h.kind)) {
    case Parity::Even:
      throw EvenKind("odd trace formula needs an odd window");
    case Parity::Circle:
      throw UnsupportedKind("odd trace formula needs a line kind");
    case Parity::Odd:
      break;
  }
  (void)mc;  // no identity term survives an odd window
  validate(h);
  validate_spectral(spectral);

  TraceFormulaReport r;
  r.spectral_side = chunk_tree_sum(
      [&](std::size_t i) {
        const SpectralDatum& d = spectral[i];
        return static_cast<double>(d.multiplicity) *
               abel_transform(h, TrigKind::Sin, n, d.nu, d.p);
      },
      spectral.size());

  SumSpec spec;
  spec.weight_mode = WeightMode::TraceWeight;
  spec.class_filter = ClassFilter::All;
  spec.length_window = smooth_window(h);
  spec.holonomy_mode = HolonomyMode::SinN;
  spec.n = n;
  SumResult geo = weighted_sum(table, spec, threads);

  r.geometric_side = geo.value;
  r.identity_term = {0.0, 0.0};
  r.trivial_rep_term = {0.0, 0.0};
  r.residual = r.spectral_side - r.geometric_side;
  r.truncation_note = spectral_note(spectral, table, geo);
  return r;
}

WeylWindowReport weyl_window_report(const std::vector<SpectralDatum>& spectral,
                                    double R, long n,
                                    const ManifoldConstants& mc) {
  if (!(R >= 0.0)) throw DomainError("weyl_window_report needs R >= 0");
  validate_spectral(spectral);
  WeylWindowReport rep;
  for (const SpectralDatum& d : spectral) {
    const double a = std::abs(d.nu);
    if (a >= R - 1.0 && a <= R + 1.0 && d.p == n) rep.count += d.multiplicity;
  }
  rep.plancherel_term =
      mc.volume *
      plancherel_window(std::max(R - 1.0, 0.0), R + 1.0, static_cast<int>(n));
  return rep;
}

}  // namespace holospec
