#ifndef HOLOSPEC_TRACE_FORMULA_HPP
#define HOLOSPEC_TRACE_FORMULA_HPP

#include <string>
#include <vector>

#include "holospec/algebra.hpp"
#include "holospec/measures.hpp"
#include "holospec/spectrum.hpp"
#include "holospec/sums.hpp"
#include "holospec/testfuncs.hpp"

namespace holospec {

// Both sides of the even/odd circle-twisted trace identities, assembled from
// a spectral multiplicity list and a spectrum table.  The residual is what a
// complete spectrum and complete table would drive to zero; with truncated
// inputs it measures the truncation, which is why every report carries a
// note instead of failing.
struct TraceFormulaReport {
  Complex spectral_side{0.0, 0.0};
  Complex geometric_side{0.0, 0.0};
  Complex identity_term{0.0, 0.0};     // included in geometric_side
  Complex trivial_rep_term{0.0, 0.0};  // included in spectral_side
  Complex residual{0.0, 0.0};          // spectral_side - geometric_side
  std::string truncation_note;
};

// |D|^{1/2} = |1 - e^{l + i th}| |1 - e^{-l - i th}| = e^l + e^{-l} - 2 cos th.
// Computed in the expanded real form; weight() takes the complex route, so
// the reciprocal identity weight * root = 1 is a meaningful cross-check
// rather than a tautology.
double weyl_discriminant_root(const ComplexLength& cl);

enum class TrigKind { Cos, Sin };

// Torus integral Int F(t_{u,theta}) chi_{nu,p}^{-1} dt for the product test
// function F(t_{u,theta}) = g(u) trig(n theta), reduced by character
// orthogonality:
//   cos:  p = n = 0      ->        Int g(u) e^{u nu} du
//         p = +-n != 0   ->  1/2   Int g(u) e^{u nu} du
//   sin:  p = +n != 0    -> +i/2   Int g(u) e^{u nu} du
//         p = -n != 0    -> -i/2   Int g(u) e^{u nu} du
// and exact 0 in every other case.  Throws UnsupportedKind on circle kinds.
Complex abel_transform(const CutoffDescriptor& g, TrigKind trig, long n,
                       Complex nu, long p);

enum class EvenGrouping {
  // spectral side = sum over all entries + [d_0(n) Int g e^u - 1/2 d_{|n|=1}
  // g^(0)], the latter reported as trivial_rep_term.
  Standard,
  // complementary entries move out of the sum and into the density integral
  // d_0(n) Int g dw* (reported as trivial_rep_term together with the g^(0)
  // correction); principal entries stay in the sum.  Same total.
  MeasureAbsorbed,
};

// Even identity: spectral side as above with entry weights
// m * abel_transform(g, cos, n, nu, p); geometric side =
// (vol/2pi)(n^2 g(0) - g''(0)) + trace-weighted cos(n theta) sum over the
// table.  g''(0) uses a 5-point central difference with step 1e-4; for this
// window family the plateau makes the difference exact.  Throws OddKind for
// odd windows, UnsupportedKind for circle or sharp-indicator kinds.
TraceFormulaReport even_tf_sides(const CutoffDescriptor& g, long n,
                                 const std::vector<SpectralDatum>& spectral,
                                 const SpectrumTable& table,
                                 const ManifoldConstants& mc,
                                 EvenGrouping grouping = EvenGrouping::Standard,
                                 int threads = 1);

// Odd identity: spectral side (i/2) sum of (m(nu,n) - m(nu,-n)) Int h e^{u nu};
// geometric side is the sin(n theta) sum alone -- identity and trivial-rep
// terms vanish for odd windows.  Throws EvenKind for even windows.
TraceFormulaReport odd_tf_sides(const CutoffDescriptor& h, long n,
                                const std::vector<SpectralDatum>& spectral,
                                const SpectrumTable& table,
                                const ManifoldConstants& mc, int threads = 1);

struct WeylWindowReport {
  long count = 0;               // multiplicity mass with R-1 <= |nu| <= R+1
  double plancherel_term = 0.0;  // vol x Plancherel mass of the same window
};

// Report-only comparison of a unit spectral window against its Plancherel
// prediction; no verdict is attached.
WeylWindowReport weyl_window_report(const std::vector<SpectralDatum>& spectral,
                                    double R, long n,
                                    const ManifoldConstants& mc);

}  // namespace holospec

#endif
