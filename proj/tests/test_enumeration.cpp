#include <cctype>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "holospec/algebra.hpp"
#include "holospec/enumeration.hpp"
#include "holospec/errors.hpp"
#include "holospec/spectrum.hpp"
#include "oracles.hpp"

using namespace holospec;
using oracles::near;

namespace {

GroupPresentation sanov() {
  GroupPresentation p;
  p.name = "sanov";
  p.source = "inline";
  p.generators.push_back(
      canonicalize(Mat2{Complex(1), Complex(2), Complex(0), Complex(1)},
                   kDefaultTol, "a"));
  p.generators.push_back(
      canonicalize(Mat2{Complex(1), Complex(0), Complex(2), Complex(1)},
                   kDefaultTol, "b"));
  return p;
}

Mat2 word_matrix(const GroupPresentation& p, const std::string& w) {
  Mat2 acc;
  for (const char ch : w) {
    const bool inv = std::isupper(static_cast<unsigned char>(ch)) != 0;
    const std::size_t idx =
        static_cast<std::size_t>(inv ? ch - 'A' : ch - 'a');
    REQUIRE(idx < p.generators.size());
    Mat2 g = p.generators[idx].m;
    if (inv) g = g.inverse();
    acc = acc * g;
  }
  return acc;
}

bool word_before(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

TEST_CASE("free-group ball has the full reduced-word count") {
  const GroupPresentation p = sanov();
  BallStats st;
  const std::vector<CanonicalElement> ball = ball_enumerate(p, 3, kDefaultTol,
                                                            1'000'000, &st);
  // reduced words of length <= 3 in rank 2: 1 + 4 + 12 + 36
  CHECK(st.distinct_elements == 53);
  CHECK(st.nonidentity == 52);
  CHECK(st.after_inverse_pairing == 26);
  CHECK(ball.size() == 26);
  CHECK(st.words_visited >= 52);

  std::set<ElementKey> keys;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (i > 0) CHECK(!word_before(ball[i].word, ball[i - 1].word));
    // the witness word reproduces the matrix (up to the projective sign)
    const CanonicalElement redo =
        canonicalize(word_matrix(p, ball[i].word));
    CHECK(redo.m.close_to(ball[i].m, 1e-9));
    keys.insert(inverse_closed_key(ball[i].m));
  }
  CHECK(keys.size() == 26);  // nobody's inverse is also in the set
}

TEST_CASE("enumeration stops at the explosion cap") {
  const GroupPresentation p = sanov();
  CHECK_THROWS_AS(ball_enumerate(p, 6, kDefaultTol, 10), ExplosionLimit);
}

TEST_CASE("cyclic group: powers, primitivity, horizon filter") {
  GroupPresentation p;
  p.name = "cyclic";
  p.source = "inline";
  const double lam = std::exp(0.5);
  p.generators.push_back(canonicalize(
      Mat2{Complex(lam), Complex(0), Complex(0), Complex(1.0 / lam)},
      kDefaultTol, "a"));

  BallStats bst;
  const std::vector<CanonicalElement> ball =
      ball_enumerate(p, 4, kDefaultTol, 1000, &bst);
  CHECK(ball.size() == 4);  // a, a^2, a^3, a^4 after inverse pairing

  SpectrumBuildStats sst;
  const SpectrumTable full =
      build_spectrum(ball, 10.0, 1e-7, kDefaultTol, true, &sst);
  REQUIRE(full.classes.size() == 4);
  CHECK(full.complete);
  CHECK(near(full.systole, 1.0, 1e-12));
  CHECK(full.horizon == 10.0);
  for (int k = 1; k <= 4; ++k) {
    const GeodesicClass& c = full.classes[static_cast<std::size_t>(k - 1)];
    CHECK(near(c.length, double(k), 1e-12));
    CHECK(near(c.holonomy, 0.0, 1e-12));
    CHECK(c.multiplicity == 1);
    CHECK(c.primitive == (k == 1));
    CHECK(c.power_index == k);
    CHECK(near(c.root_length, 1.0, 1e-12));
  }
  CHECK(sst.discarded_nonloxodromic == 0);

  const SpectrumTable cut = build_spectrum(ball, 2.5);
  CHECK(cut.classes.size() == 2);
  CHECK(!cut.complete);
}

TEST_CASE("duplicate and inverse inputs do not inflate multiplicity") {
  const double lam = std::exp(0.7);
  const Mat2 g{Complex(lam), Complex(0), Complex(0), Complex(1.0 / lam)};
  const std::vector<CanonicalElement> elems = {
      canonicalize(g, kDefaultTol, "a"), canonicalize(g, kDefaultTol, "a"),
      canonicalize(g.inverse(), kDefaultTol, "A")};
  const SpectrumTable t = build_spectrum(elems, 5.0);
  REQUIRE(t.classes.size() == 1);
  CHECK(t.classes[0].multiplicity == 1);
}

TEST_CASE("witnessed conjugates merge into one class") {
  const Mat2 g = oracles::diag_loxodromic(0.8, 0.7);
  const Mat2 h{Complex(2), Complex(1), Complex(1), Complex(1)};  // trace 3
  const Mat2 conj = h * g * h.inverse();
  SpectrumBuildStats st;
  const SpectrumTable t = build_spectrum(
      {canonicalize(g), canonicalize(conj), canonicalize(h)}, 10.0, 1e-7,
      kDefaultTol, false, &st);
  REQUIRE(t.classes.size() == 2);  // the g-class and the h-class
  CHECK(st.undecided_pairs == 0);
  for (const GeodesicClass& c : t.classes) CHECK(c.multiplicity == 1);
}

TEST_CASE("unwitnessed equal-invariant pair stays split") {
  oracles::Rng rng(0xabcdef12u);
  const Mat2 g = oracles::diag_loxodromic(0.8, 0.7);
  const Mat2 p = oracles::random_sl2(rng);
  const Mat2 twin = p * g * p.inverse();
  SpectrumBuildStats st;
  const SpectrumTable t =
      build_spectrum({canonicalize(g), canonicalize(twin)}, 10.0, 1e-7,
                     kDefaultTol, false, &st);
  REQUIRE(t.classes.size() == 1);
  CHECK(t.classes[0].multiplicity == 2);
  CHECK(st.undecided_pairs == 1);
}

TEST_CASE("non-loxodromic elements are discarded, not folded in") {
  const Mat2 rot{Complex(std::cos(0.4), std::sin(0.4)), Complex(0), Complex(0),
                 Complex(std::cos(0.4), -std::sin(0.4))};
  const Mat2 par{Complex(1), Complex(1), Complex(0), Complex(1)};
  SpectrumBuildStats st;
  const SpectrumTable t = build_spectrum({canonicalize(rot), canonicalize(par)},
                                         5.0, 1e-7, kDefaultTol, false, &st);
  CHECK(t.classes.empty());
  CHECK(st.discarded_nonloxodromic == 2);
}

TEST_CASE("table invariants catch corrupted rows") {
  SpectrumTable t;
  t.systole = 1.0;
  t.horizon = 5.0;
  t.classes = {GeodesicClass{2.0, 0.5, 1, true, 2.0, 1},
               GeodesicClass{1.0, 0.0, 1, true, 1.0, 1}};
  CHECK_THROWS_AS(validate_table(t), InvariantViolation);  // unsorted

  t.classes = {GeodesicClass{1.0, 0.0, 1, true, 1.0, 1},
               GeodesicClass{2.5, 0.5, 1, false, 1.0, 2}};
  CHECK_THROWS_AS(validate_table(t), InvariantViolation);  // power law broken

  t.classes = {GeodesicClass{1.0, 4.0, 1, true, 1.0, 1}};
  CHECK_THROWS_AS(validate_table(t), InvariantViolation);  // holonomy branch

  t.classes = {GeodesicClass{1.0, 0.0, 0, true, 1.0, 1}};
  CHECK_THROWS_AS(validate_table(t), InvariantViolation);  // multiplicity

  t.classes = {GeodesicClass{1.0, 0.0, 1, true, 1.0, 1},
               GeodesicClass{1.0 + 1e-9, 1e-9, 1, true, 1.0 + 1e-9, 1}};
  CHECK_THROWS_AS(validate_table(t), InvariantViolation);  // unmerged twins

  t.classes = {GeodesicClass{1.0, 0.0, 1, true, 1.0, 1},
               GeodesicClass{2.0, 1.0, 2, true, 2.0, 1}};
  CHECK_NOTHROW(validate_table(t));
}
