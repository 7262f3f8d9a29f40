#ifndef HOLOSPEC_SUMS_HPP
#define HOLOSPEC_SUMS_HPP

#include <cstddef>
#include <functional>
#include <string>

#include "holospec/algebra.hpp"
#include "holospec/spectrum.hpp"
#include "holospec/testfuncs.hpp"

namespace holospec {

// One engine for every geometric sum: length-window sums with cos/sin/e^{in.}
// holonomy factors, holonomy character sums, ambient box counts and the
// boundary-zone sums used when trading smooth windows for sharp ones.

enum class WeightMode {
  TraceWeight,  // root_length * w(length, holonomy)
  ExpWeight,    // length * e^{-length}
  Unit,
};

enum class ClassFilter { All, PrimitiveOnly };

enum class HolonomyMode {
  CosN,    // cos(n theta)
  SinN,    // sin(n theta)
  ExpIN,   // e^{i n theta}
  Window,  // smooth or sharp circle window descriptor
};

struct LengthWindow {
  bool sharp = true;
  double lo = 0.0, hi = 0.0;      // closed interval, used when sharp
  CutoffDescriptor descriptor{};  // line kind, used when !sharp
};

LengthWindow sharp_window(double lo, double hi);
LengthWindow smooth_window(const CutoffDescriptor& d);

// Largest |x| in the support of a line-kind descriptor.
double support_radius(const CutoffDescriptor& d);

struct SumSpec {
  WeightMode weight_mode = WeightMode::TraceWeight;
  ClassFilter class_filter = ClassFilter::All;
  LengthWindow length_window{};
  HolonomyMode holonomy_mode = HolonomyMode::ExpIN;
  long n = 0;                          // character index
  CutoffDescriptor holonomy_window{};  // used when holonomy_mode == Window
};

// Throws DomainError / InvalidDescriptor on inconsistent specs (circle kinds
// as length windows, negative sharp bounds, ...).
void validate_sum_spec(const SumSpec& spec);

// Sums never fail on an incomplete table; they carry the caveat instead.
struct SumResult {
  Complex value{0.0, 0.0};
  bool complete = true;  // table complete and window inside the horizon
  std::string warning;   // set when the window reaches past the horizon
};

struct CountResult {
  long value = 0;
  bool complete = true;
  std::string warning;
};

// Deterministic reduction used by every sum in the library: terms are
// accumulated with Neumaier compensation inside fixed chunks of 256 indices,
// and chunk totals are combined by a fixed pairwise tree.  The result is a
// pure function of the term sequence, so running chunks on any number of
// threads reproduces the single-thread result bit for bit.
Complex chunk_tree_sum(const std::function<Complex(std::size_t)>& term,
                       std::size_t count, int threads = 1);

// Sum over filtered classes of
//   multiplicity x weight factor x length window at l x holonomy factor at
//   theta, in table order.
SumResult weighted_sum(const SpectrumTable& table, const SumSpec& spec,
                       int threads = 1);

// Holonomy character sum K_n: unit weight, primitive classes only, factor
// e^{i n theta}.  K_0 counts primitive classes under the window.
SumResult char_sum(const SpectrumTable& table, long n,
                   const LengthWindow& window, int threads = 1);

// Count, with multiplicity, of primitive classes in the closed box
// [l_lo, l_hi] x circle interval from th_lo to th_hi (may wrap; a width
// of 2 pi or more means the full circle).
CountResult ambient_count(const SpectrumTable& table, double l_lo, double l_hi,
                          double th_lo, double th_hi);

// Trace-weighted sum over all classes with |l - y| <= eta.
double boundary_length_sum(const SpectrumTable& table, double y, double eta);

// Trace-weighted sum over all classes with l <= y whose holonomy lies within
// etaprime of theta0 or of -theta0 on the circle (the even pairing).
double boundary_holonomy_sum(const SpectrumTable& table, double y,
                             double theta0, double etaprime);

}  // namespace holospec

#endif
