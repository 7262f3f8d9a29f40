#ifndef HOLOSPEC_ENUMERATION_HPP
#define HOLOSPEC_ENUMERATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "holospec/algebra.hpp"
#include "holospec/spectrum.hpp"

namespace holospec {

struct GroupPresentation {
  std::vector<CanonicalElement> generators;
  std::string name;
  std::string source;  // file path or "inline"
};

struct BallStats {
  std::size_t words_visited = 0;      // BFS products formed, duplicates included
  std::size_t distinct_elements = 0;  // distinct group elements seen, identity included
  std::size_t nonidentity = 0;        // distinct elements minus the identity
  std::size_t after_inverse_pairing = 0;  // size of the returned set
};

// Breadth-first enumeration of all products of at most max_word_len
// generators and generator inverses.  Elements are deduplicated on their
// canonical key, the identity is dropped, and mutually inverse elements are
// identified (the representative keeps the shortest witness word, ties
// broken lexicographically).  The result is deterministic: sorted by word
// length, then word.  Throws ExplosionLimit once more than cap distinct
// elements have been collected.
std::vector<CanonicalElement> ball_enumerate(const GroupPresentation& p,
                                             int max_word_len,
                                             double tol = kDefaultTol,
                                             std::size_t cap = 10'000'000,
                                             BallStats* stats = nullptr);

struct SpectrumBuildStats {
  std::size_t discarded_nonloxodromic = 0;
  std::size_t undecided_pairs = 0;     // same-bucket pairs not proven conjugate
  std::size_t mixed_buckets = 0;       // buckets mixing primitive and power classes
  std::size_t weak_power_matches = 0;  // power marks made without an exact key hit
};

// Aggregates translation-length data of the given elements into a spectrum
// table with horizon y.  Elements that are not hyperbolic or loxodromic are
// discarded (counted in stats).  Rows merge classes whose (length, holonomy)
// agree within bucket_tol; multiplicity counts conjugacy classes per row,
// where conjugacy is tested by conjugating with the supplied elements and
// undecided pairs default to distinct.  Primitivity is assigned by matching
// matrix powers of shorter classes.  complete is the caller's assertion that
// every class of length <= y is present (an empty input is trivially
// complete).
SpectrumTable build_spectrum(const std::vector<CanonicalElement>& elements,
                             double y,
                             double bucket_tol = 1e-7,
                             double matrix_tol = kDefaultTol,
                             bool assert_complete = false,
                             SpectrumBuildStats* stats = nullptr);

}  // namespace holospec

#endif
