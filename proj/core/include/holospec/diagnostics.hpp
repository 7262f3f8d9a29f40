#ifndef HOLOSPEC_DIAGNOSTICS_HPP
#define HOLOSPEC_DIAGNOSTICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "holospec/measures.hpp"
#include "holospec/spectrum.hpp"

namespace holospec {

// Desk-scale empirical reports.  Verdicts come from fixed, documented and
// deliberately crude trend rules (least-squares slopes over the top half of
// the grid); they are labeled non-rigorous because no grid this size can
// confirm an exponent.

enum class Verdict { Consistent, Inconclusive, Violated };

const char* to_string(Verdict v);

struct DiagnosticReport {
  std::string name;
  std::string inputs;                    // echo of the call parameters
  std::vector<std::string> columns;      // stable column order
  std::vector<std::vector<double>> rows; // one vector per grid evaluation
  std::vector<std::pair<std::string, double>> fitted;  // constants, in order
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> caveats;
};

// Counts primitive classes up to each grid point against the integrated
// main-term density; normalized column = gap * y * e^{-5y/3}.  Verdict
// "consistent" when |normalized| has no upward trend over the top half of
// the grid (slope <= 0.1), "inconclusive" otherwise; this report never
// declares a violation.  Grid points must be increasing, >= 2 and within the
// horizon (IncompleteSpectrum otherwise).
DiagnosticReport pgt_report(const SpectrumTable& table,
                            const std::vector<SpectralDatum>& comp,
                            const std::vector<double>& y_grid);

// Sup over closed circle arcs, with endpoints restricted to the sample
// holonomies and a uniform grid of grid_size points, of
// |empirical fraction - arc length / 2 pi| among primitive classes with
// length <= y (multiplicity-weighted).  Exact over that candidate family.
// Throws EmptySample when no class qualifies, DomainError for grid_size < 8.
double equidist_discrepancy(const SpectrumTable& table, double y,
                            int grid_size);

// |K_n(y)| against the reference envelope e^{5y/3}/y + n^2 e^y.  Verdict
// "violated" when, for some n, the ratio trend slope exceeds 0.1 and the
// last ratio exceeds twice the first; "consistent" when every slope is
// <= 0.1; "inconclusive" otherwise.
DiagnosticReport charsum_cancellation_report(const SpectrumTable& table,
                                             const std::vector<long>& n_list,
                                             const std::vector<double>& y_grid);

// The four-sum chain: per (n, y) the gaps |S_n - S_n^P|, |S_n^P - T_n^P|,
// |T_n^P - T_n| and the same divided by y, with fitted sup constants.
// Verdict "consistent" when no gap/y column trends upward (slope <= 0.1),
// "inconclusive" otherwise; never "violated".
DiagnosticReport primitivity_gap_report(const SpectrumTable& table,
                                        const std::vector<long>& n_list,
                                        const std::vector<double>& y_grid);

}  // namespace holospec

#endif
