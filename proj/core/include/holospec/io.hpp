#ifndef HOLOSPEC_IO_HPP
#define HOLOSPEC_IO_HPP

#include <string>
#include <vector>

#include "holospec/diagnostics.hpp"
#include "holospec/enumeration.hpp"
#include "holospec/measures.hpp"
#include "holospec/spectrum.hpp"
#include "holospec/trace_formula.hpp"

namespace holospec {

// Spectrum CSV: header
//   length,holonomy,multiplicity,primitive,root_length,power_index
// preceded or followed by metadata lines "#horizon=", "#systole=",
// "#complete=" and free-form "#" comments.  Floats are written with 17
// significant digits so a write/read cycle is bit-exact.
//
// On import the table is re-sorted, each row is checked against the class
// invariants (errors carry the file line), systole is recomputed as the
// minimum length (the #systole line is informational), horizon comes from
// #horizon or else the maximum length, and completeness from #complete or
// else emptiness.
SpectrumTable import_spectrum(const std::string& path);
void export_spectrum(const SpectrumTable& table, const std::string& path);

// Presentation text format: one generator per line, eight whitespace
// separated reals (Re a, Im a, Re b, Im b, Re c, Im c, Re d, Im d), "#"
// comments.  Entries must already have determinant 1 (NonUnitDeterminant
// otherwise); the PSL sign is normalized on load.
GroupPresentation import_presentation(const std::string& path);

// Spectral data CSV with header "re_nu,im_nu,p,multiplicity".
std::vector<SpectralDatum> import_spectral_data(const std::string& path);

// 17-significant-digit formatting shared by all writers.
std::string format_double(double v);

// JSON with a fixed field order, so identical inputs give identical bytes.
std::string report_to_json(const DiagnosticReport& r);
std::string trace_report_to_json(const TraceFormulaReport& r);
// CSV of the per-grid rows only (header + data), for external plotting.
std::string report_to_csv(const DiagnosticReport& r);

std::string spectrum_to_csv(const SpectrumTable& table);

}  // namespace holospec

#endif
