#ifndef HOLOSPEC_SPECTRUM_HPP
#define HOLOSPEC_SPECTRUM_HPP

#include <vector>

#include "holospec/errors.hpp"

namespace holospec {

// One aggregated conjugacy-class bucket of the length spectrum.  A row with
// multiplicity m stands for m distinct classes sharing (length, holonomy,
// primitivity data).  Inverse pairs are identified and counted once.
struct GeodesicClass {
  double length = 0.0;     // > 0
  double holonomy = 0.0;   // in (-pi, pi]
  long multiplicity = 1;   // >= 1
  bool primitive = true;
  double root_length = 0.0;  // length of the primitive root class
  int power_index = 1;       // length = power_index * root_length
};

struct SpectrumTable {
  std::vector<GeodesicClass> classes;  // sorted by (length, holonomy)
  double systole = 0.0;                // minimum length present or declared
  double horizon = 0.0;                // guaranteed-complete length bound
  bool complete = false;
};

// Structural invariants: positive sorted lengths, holonomy branch, power law
// length = power_index * root_length within 1e-8, primitive iff power_index
// is 1, multiplicities >= 1, systole <= min length, and no two rows within
// merge_tol in both coordinates.  Throws InvariantViolation.
void validate_table(const SpectrumTable& table, double merge_tol = 1e-7);

}  // namespace holospec

#endif
