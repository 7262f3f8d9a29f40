#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "holospec/diagnostics.hpp"
#include "holospec/errors.hpp"
#include "holospec/sums.hpp"
#include "oracles.hpp"

using namespace holospec;
using oracles::near;

namespace {

SpectrumTable atoms_at(const std::vector<double>& holonomies) {
  SpectrumTable t;
  double l = 1.0;
  for (const double th : holonomies) {
    t.classes.push_back(GeodesicClass{l, th, 1, true, l, 1});
    l += 0.1;
  }
  t.systole = 1.0;
  t.horizon = 10.0;
  t.complete = true;
  std::sort(t.classes.begin(), t.classes.end(),
            [](const GeodesicClass& a, const GeodesicClass& b) {
              return a.length < b.length;
            });
  validate_table(t);
  return t;
}

std::size_t column_of(const DiagnosticReport& r, const std::string& name) {
  const auto it = std::find(r.columns.begin(), r.columns.end(), name);
  REQUIRE(it != r.columns.end());
  return static_cast<std::size_t>(it - r.columns.begin());
}

}  // namespace

TEST_CASE("discrepancy of tiny configurations is exact") {
  const double q = oracles::kPi / 2.0;
  const SpectrumTable four = atoms_at({0.0, q, oracles::kPi, -q});
  CHECK(near(equidist_discrepancy(four, 10.0, 64), 0.25, 1e-12));

  const SpectrumTable one = atoms_at({1.3});
  CHECK(near(equidist_discrepancy(one, 10.0, 64), 1.0, 1e-12));

  CHECK_THROWS_AS(equidist_discrepancy(four, 10.0, 7), DomainError);
  CHECK_THROWS_AS(equidist_discrepancy(four, 0.5, 64), EmptySample);
}

TEST_CASE("discrepancy is invariant under grid-aligned rotation") {
  oracles::Rng rng(0x0ddba11u);
  std::vector<double> base;
  for (int i = 0; i < 17; ++i)
    base.push_back(rng.uniform(-3.1, 3.1));
  const int G = 64;
  const double shift = oracles::kTwoPi * 5.0 / double(G);
  std::vector<double> moved;
  for (const double th : base) moved.push_back(wrap_angle(th + shift));
  const double d0 = equidist_discrepancy(atoms_at(base), 10.0, G);
  const double d1 = equidist_discrepancy(atoms_at(moved), 10.0, G);
  CHECK(near(d0, d1, 1e-9));
}

TEST_CASE("golden-angle atoms look equidistributed, clusters do not") {
  const SpectrumTable spread = oracles::golden_table(1000);
  const SpectrumTable lumped = atoms_at({0.0, 0.01, 0.02, 0.03, 0.05, 0.04});
  const double ds = equidist_discrepancy(spread, 10.0, 64);
  const double dl = equidist_discrepancy(lumped, 10.0, 64);
  CHECK(ds < 0.05);
  CHECK(dl > 0.5);
}

TEST_CASE("counting report recomputes from its own columns") {
  const SpectrumTable t = oracles::golden_table(800);
  const std::vector<double> grid = {2.5, 3.0, 3.5, 4.0};
  const std::vector<SpectralDatum> comp = {
      SpectralDatum{Complex(0.5, 0.0), 0, 1}};
  const DiagnosticReport r = pgt_report(t, comp, grid);
  CHECK(r.name == "pgt_main_term");
  REQUIRE(r.rows.size() == grid.size());
  const std::size_t cy = column_of(r, "y");
  const std::size_t cc = column_of(r, "count");
  const std::size_t cm = column_of(r, "main");
  const std::size_t cg = column_of(r, "gap");
  const std::size_t cn = column_of(r, "normalized");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const std::vector<double>& row = r.rows[i];
    CHECK(row[cy] == grid[i]);
    double count = 0.0;
    for (const GeodesicClass& c : t.classes)
      if (c.primitive && c.length <= grid[i])
        count += double(c.multiplicity);
    CHECK(near(row[cc], count, 1e-9));
    CHECK(near(row[cm], ei_main_term(2.0, grid[i], comp), 1e-9));
    CHECK(near(row[cg], row[cc] - row[cm], 1e-12));
    CHECK(near(row[cn], row[cg] * grid[i] * std::exp(-5.0 * grid[i] / 3.0),
               1e-12));
  }
  CHECK((r.verdict == Verdict::Consistent ||
         r.verdict == Verdict::Inconclusive));
  CHECK(!r.caveats.empty());
  REQUIRE(r.fitted.size() >= 2);
  CHECK(r.fitted[0].first == "trend_slope_top_half");

  CHECK_THROWS_AS(pgt_report(t, comp, {2.5, 20.0}), IncompleteSpectrum);
  CHECK_THROWS_AS(pgt_report(t, comp, {1.5, 2.5}), DomainError);
  CHECK_THROWS_AS(pgt_report(t, comp, {3.0, 2.5}), DomainError);
}

TEST_CASE("cancellation report: shape, ratio arithmetic, n = 0 refusal") {
  const SpectrumTable t = oracles::golden_table(600);
  const std::vector<long> ns = {1, 3};
  const std::vector<double> grid = {2.0, 2.5, 3.0};
  const DiagnosticReport r = charsum_cancellation_report(t, ns, grid);
  REQUIRE(r.rows.size() == ns.size() * grid.size());
  const std::size_t ci_n = column_of(r, "n");
  const std::size_t ci_y = column_of(r, "y");
  const std::size_t ci_a = column_of(r, "abs_K");
  const std::size_t ci_e = column_of(r, "envelope");
  const std::size_t ci_r = column_of(r, "ratio");
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const std::vector<double>& row = r.rows[i];
    const long n = ns[i / grid.size()];
    const double y = grid[i % grid.size()];
    CHECK(row[ci_n] == double(n));
    CHECK(row[ci_y] == y);
    const Complex K = char_sum(t, n, sharp_window(0.0, y)).value;
    CHECK(near(row[ci_a], std::abs(K), 1e-12));
    const double env =
        std::exp(5.0 * y / 3.0) / y + double(n) * double(n) * std::exp(y);
    CHECK(near(row[ci_e], env, 1e-9));
    CHECK(near(row[ci_r], row[ci_a] / row[ci_e], 1e-15));
  }
  CHECK_THROWS_AS(charsum_cancellation_report(t, {0, 1}, grid), DomainError);
  CHECK_THROWS_AS(charsum_cancellation_report(t, {}, grid), DomainError);
}

TEST_CASE("primitivity gaps vanish on all-primitive tables") {
  oracles::Rng rng(0x9e3779b9u);
  const SpectrumTable t = oracles::random_primitive_table(rng, 40, 5.0);
  const DiagnosticReport r = primitivity_gap_report(t, {1, 2}, {2.0, 3.0, 4.0});
  const std::size_t c1 = column_of(r, "gap_s_sp");
  const std::size_t c3 = column_of(r, "gap_tp_t");
  for (const std::vector<double>& row : r.rows) {
    CHECK(row[c1] == 0.0);
    CHECK(row[c3] == 0.0);
  }
}

TEST_CASE("primitivity gaps equal the direct power-tail sums") {
  const SpectrumTable t = oracles::cyclic_table(1.0, oracles::kPi / 2, 8.0);
  const std::vector<long> ns = {1, 2};
  const std::vector<double> grid = {2.5, 4.5, 6.5};
  const DiagnosticReport r = primitivity_gap_report(t, ns, grid);
  const std::size_t c1 = column_of(r, "gap_s_sp");
  const std::size_t c3 = column_of(r, "gap_tp_t");
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const long n = ns[i / grid.size()];
    const double y = grid[i % grid.size()];
    // every non-primitive class is the k-th power row, k >= 2
    Complex s_tail{0.0, 0.0}, t_tail{0.0, 0.0};
    for (const GeodesicClass& c : t.classes) {
      if (c.primitive || c.length > y) continue;
      const Complex chr =
          std::exp(Complex(0.0, double(n) * c.holonomy));
      s_tail += c.length * std::exp(-c.length) * chr;
      t_tail += c.root_length *
                weight(ComplexLength{c.length, c.holonomy}) * chr;
    }
    CHECK(near(r.rows[i][c1], std::abs(s_tail), 1e-12));
    CHECK(near(r.rows[i][c3], std::abs(t_tail), 1e-12));
  }
}
