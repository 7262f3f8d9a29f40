#ifndef HOLOSPEC_ALGEBRA_HPP
#define HOLOSPEC_ALGEBRA_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>

#include "holospec/errors.hpp"

namespace holospec {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;

// 2x2 complex matrix, row major.  Group elements are kept with det = 1; the
// PSL sign ambiguity is resolved separately by canonicalize().
struct Mat2 {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }

  // Inverse of a unit-determinant matrix (adjugate).
  Mat2 inverse() const { return Mat2{d, -b, -c, a}; }

  Mat2 operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
  }
  Mat2 operator-() const { return Mat2{-a, -b, -c, -d}; }

  bool close_to(const Mat2& o, double tol) const {
    return std::abs(a - o.a) <= tol && std::abs(b - o.b) <= tol &&
           std::abs(c - o.c) <= tol && std::abs(d - o.d) <= tol;
  }
};

enum class ElementClass { Identity, Parabolic, Elliptic, Hyperbolic, Loxodromic };

const char* to_string(ElementClass c);

// Translation length and holonomy angle of a loxodromic class.  The length is
// normalized to be >= 0 (an element and its inverse share the same invariant)
// and the holonomy is stored on the branch (-pi, pi].  Elliptic elements are
// representable with length == 0; spectra exclude them.
struct ComplexLength {
  double length = 0.0;
  double holonomy = 0.0;
};

// Group element with a unit determinant, sign-normalized entries and an
// optional witness word in the generators ("a", "B" = inverse of "b", ...).
struct CanonicalElement {
  Mat2 m;
  std::string word;
};

// Quantized entry encoding used for dedup keys; one slot per real coordinate.
using ElementKey = std::array<std::int64_t, 8>;

// Reduce an angle to (-pi, pi].
double wrap_angle(double theta);

// Trace-based classification; the result is invariant under the PSL sign and
// under inversion (both preserve tr^2).
ElementClass classify(const Mat2& m, double tol = kDefaultTol);

// Extract (length, holonomy) from the eigenvalue lambda with |lambda| > 1 of
// the trace polynomial x^2 - tr x + 1: length = 2 log|lambda|, holonomy =
// 2 arg(lambda) mod 2pi.  Elliptic input yields length 0.  Identity and
// parabolic input throw NotLoxodromic.
ComplexLength complex_length(const Mat2& m, double tol = kDefaultTol);

// w = (|1 - e^{l + i theta}| |1 - e^{-l - i theta}|)^{-1}.  Behaves like
// e^{-l} for large l.  Throws DegenerateLength when length <= 0.
double weight(const ComplexLength& cl);

// (l, theta) -> (k l, k theta mod 2pi); the root length tags along unchanged.
std::pair<ComplexLength, double> power_class(const ComplexLength& cl,
                                             double root_length, int k);

// Deterministic representative of the PSL class of a raw matrix: rescale the
// determinant to 1, then pick the sign whose grid-rounded entry tuple is
// lexicographically smaller.  Throws SingularMatrix when det is ~ 0.
CanonicalElement canonicalize(const Mat2& raw, double tol = kDefaultTol,
                              std::string word = {});

// Entry tuple of a canonical matrix rounded to the tol grid.  Matrices equal
// up to well below tol share a key (away from grid boundaries).
ElementKey canonical_key(const Mat2& canonical, double tol = kDefaultTol);

// Key shared by the canonical classes of m and m^{-1}: the lexicographic
// minimum of the two canonical keys.
ElementKey inverse_closed_key(const Mat2& canonical, double tol = kDefaultTol);

}  // namespace holospec

#endif
