#include "holospec/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "holospec/sums.hpp"

namespace holospec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double positive_mod_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

void check_grid(const std::vector<double>& y_grid, double horizon,
                double min_y) {
  if (y_grid.empty()) throw DomainError("empty evaluation grid");
  double prev = -1.0;
  for (double y : y_grid) {
    if (!std::isfinite(y) || y < min_y)
      throw DomainError("grid point below the allowed minimum");
    if (y <= prev) throw DomainError("grid must be strictly increasing");
    if (y > horizon + 1e-12)
      throw IncompleteSpectrum("grid reaches past the table horizon");
    prev = y;
  }
}

// Least-squares slope of v against x; nullopt when underdetermined.
std::optional<double> ls_slope(const std::vector<double>& x,
                               const std::vector<double>& v) {
  const std::size_t n = x.size();
  if (n < 2) return std::nullopt;
  double mx = 0.0, mv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    mv += v[i];
  }
  mx /= static_cast<double>(n);
  mv /= static_cast<double>(n);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (x[i] - mx) * (v[i] - mv);
    den += (x[i] - mx) * (x[i] - mx);
  }
  if (den == 0.0) return std::nullopt;
  return num / den;
}

// Slope over the top half of the grid (the larger arguments).
std::optional<double> top_half_slope(const std::vector<double>& x,
                                     const std::vector<double>& v) {
  const std::size_t half = x.size() / 2;
  std::vector<double> xs(x.begin() + static_cast<std::ptrdiff_t>(half),
                         x.end());
  std::vector<double> vs(v.begin() + static_cast<std::ptrdiff_t>(half),
                         v.end());
  return ls_slope(xs, vs);
}

std::string table_echo(const SpectrumTable& t) {
  std::ostringstream os;
  os << t.classes.size() << " classes, horizon " << t.horizon
     << (t.complete ? ", complete" : ", incomplete");
  return os.str();
}

std::string grid_echo(const std::vector<double>& y_grid) {
  std::ostringstream os;
  os << y_grid.size() << " points in [" << y_grid.front() << ", "
     << y_grid.back() << "]";
  return os.str();
}

const char* kTrendCaveat =
    "verdict from a least-squares trend over the top half of the grid; "
    "desk-scale heuristic, not a proof";

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent:
      return "consistent";
    case Verdict::Inconclusive:
      return "inconclusive";
    case Verdict::Violated:
      return "violated";
  }
  return "inconclusive";
}

DiagnosticReport pgt_report(const SpectrumTable& table,
                            const std::vector<SpectralDatum>& comp,
                            const std::vector<double>& y_grid) {
  check_grid(y_grid, table.horizon, 2.0);
  validate_spectral(comp);

  DiagnosticReport r;
  r.name = "pgt_main_term";
  {
    std::ostringstream os;
    os << "grid: " << grid_echo(y_grid) << "; complementary entries: "
       << comp.size() << "; table: " << table_echo(table);
    r.inputs = os.str();
  }
  r.columns = {"y", "count", "main", "gap", "normalized"};

  std::vector<double> ys, norms;
  double max_abs = 0.0;
  for (double y : y_grid) {
    const double count =
        char_sum(table, 0, sharp_window(0.0, y)).value.real();
    const double main = ei_main_term(2.0, y, comp);
    const double gap = count - main;
    const double normalized = gap * y * std::exp(-5.0 * y / 3.0);
    r.rows.push_back({y, count, main, gap, normalized});
    ys.push_back(y);
    norms.push_back(std::abs(normalized));
    max_abs = std::max(max_abs, std::abs(normalized));
  }

  std::optional<double> slope = top_half_slope(ys, norms);
  r.fitted.emplace_back("trend_slope_top_half",
                        slope ? *slope : std::nan(""));
  r.fitted.emplace_back("max_abs_normalized", max_abs);
  r.verdict = slope && *slope <= 0.1 ? Verdict::Consistent
                                     : Verdict::Inconclusive;
  r.caveats.push_back(kTrendCaveat);
  if (!slope) r.caveats.push_back("grid too short for a trend estimate");
  return r;
}

double equidist_discrepancy(const SpectrumTable& table, double y,
                            int grid_size) {
  if (grid_size < 8) throw DomainError("grid_size must be >= 8");

  std::vector<std::pair<double, double>> atoms;  // (position, weight)
  double total = 0.0;
  for (const GeodesicClass& c : table.classes) {
    if (!c.primitive || c.length > y) continue;
    atoms.emplace_back(positive_mod_2pi(c.holonomy),
                       static_cast<double>(c.multiplicity));
    total += static_cast<double>(c.multiplicity);
  }
  if (atoms.empty())
    throw EmptySample("no primitive classes within the length bound");
  std::sort(atoms.begin(), atoms.end());

  std::vector<double> xs(atoms.size());
  std::vector<double> prefix(atoms.size() + 1, 0.0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    xs[i] = atoms[i].first;
    prefix[i + 1] = prefix[i] + atoms[i].second;
  }
  auto mass_lt = [&](double x) {
    return prefix[static_cast<std::size_t>(
        std::lower_bound(xs.begin(), xs.end(), x) - xs.begin())];
  };
  auto mass_le = [&](double x) {
    return prefix[static_cast<std::size_t>(
        std::upper_bound(xs.begin(), xs.end(), x) - xs.begin())];
  };

  std::vector<double> candidates = xs;
  for (int k = 0; k < grid_size; ++k)
    candidates.push_back(kTwoPi * static_cast<double>(k) /
                         static_cast<double>(grid_size));

  double best = 0.0;
  for (double a : candidates) {
    const double lt_a = mass_lt(a);
    for (double b : candidates) {
      const double len = positive_mod_2pi(b - a);
      const double mass =
          a <= b ? mass_le(b) - lt_a : total - lt_a + mass_le(b);
      best = std::max(best, std::abs(mass / total - len / kTwoPi));
    }
  }
  return best;
}

DiagnosticReport charsum_cancellation_report(
    const SpectrumTable& table, const std::vector<long>& n_list,
    const std::vector<double>& y_grid) {
  if (n_list.empty()) throw DomainError("empty character list");
  for (long n : n_list)
    if (n == 0) throw DomainError("character sums need n != 0 here");
  check_grid(y_grid, table.horizon, 1e-12);

  DiagnosticReport r;
  r.name = "charsum_cancellation";
  {
    std::ostringstream os;
    os << "characters: " << n_list.size() << "; grid: " << grid_echo(y_grid)
       << "; table: " << table_echo(table);
    r.inputs = os.str();
  }
  r.columns = {"n", "y", "abs_K", "envelope", "ratio"};

  double max_ratio = 0.0;
  double max_slope = 0.0;
  bool any_violated = false;
  bool all_consistent = true;
  for (long n : n_list) {
    std::vector<double> ys, ratios;
    for (double y : y_grid) {
      const Complex K = char_sum(table, n, sharp_window(0.0, y)).value;
      const double a = std::abs(K);
      const double env = std::exp(5.0 * y / 3.0) / y +
                         static_cast<double>(n) * n * std::exp(y);
      const double ratio = a / env;
      r.rows.push_back({static_cast<double>(n), y, a, env, ratio});
      ys.push_back(y);
      ratios.push_back(ratio);
      max_ratio = std::max(max_ratio, ratio);
    }
    std::optional<double> slope = top_half_slope(ys, ratios);
    if (!slope) {
      all_consistent = false;
      continue;
    }
    max_slope = std::max(max_slope, *slope);
    if (*slope > 0.1) {
      all_consistent = false;
      if (ratios.back() > 2.0 * ratios.front()) any_violated = true;
    }
  }

  r.fitted.emplace_back("max_ratio", max_ratio);
  r.fitted.emplace_back("max_trend_slope", max_slope);
  r.verdict = any_violated     ? Verdict::Violated
              : all_consistent ? Verdict::Consistent
                               : Verdict::Inconclusive;
  r.caveats.push_back(kTrendCaveat);
  return r;
}

DiagnosticReport primitivity_gap_report(const SpectrumTable& table,
                                        const std::vector<long>& n_list,
                                        const std::vector<double>& y_grid) {
  if (n_list.empty()) throw DomainError("empty character list");
  check_grid(y_grid, table.horizon, 1e-12);

  DiagnosticReport r;
  r.name = "primitivity_gaps";
  {
    std::ostringstream os;
    os << "characters: " << n_list.size() << "; grid: " << grid_echo(y_grid)
       << "; table: " << table_echo(table);
    r.inputs = os.str();
  }
  r.columns = {"n",
               "y",
               "gap_s_sp",
               "gap_sp_tp",
               "gap_tp_t",
               "gap_s_sp_over_y",
               "gap_sp_tp_over_y",
               "gap_tp_t_over_y"};

  auto sum_of = [&](WeightMode wm, ClassFilter cf, long n, double y) {
    SumSpec spec;
    spec.weight_mode = wm;
    spec.class_filter = cf;
    spec.length_window = sharp_window(0.0, y);
    spec.holonomy_mode = HolonomyMode::ExpIN;
    spec.n = n;
    return weighted_sum(table, spec).value;
  };

  double sup1 = 0.0, sup2 = 0.0, sup3 = 0.0;
  bool all_consistent = true;
  for (long n : n_list) {
    std::vector<double> ys, v1, v2, v3;
    for (double y : y_grid) {
      const Complex S = sum_of(WeightMode::ExpWeight, ClassFilter::All, n, y);
      const Complex SP =
          sum_of(WeightMode::ExpWeight, ClassFilter::PrimitiveOnly, n, y);
      const Complex TP =
          sum_of(WeightMode::TraceWeight, ClassFilter::PrimitiveOnly, n, y);
      const Complex T = sum_of(WeightMode::TraceWeight, ClassFilter::All, n, y);
      const double g1 = std::abs(S - SP);
      const double g2 = std::abs(SP - TP);
      const double g3 = std::abs(TP - T);
      r.rows.push_back({static_cast<double>(n), y, g1, g2, g3, g1 / y, g2 / y,
                        g3 / y});
      ys.push_back(y);
      v1.push_back(g1 / y);
      v2.push_back(g2 / y);
      v3.push_back(g3 / y);
      sup1 = std::max(sup1, g1 / y);
      sup2 = std::max(sup2, g2 / y);
      sup3 = std::max(sup3, g3 / y);
    }
    for (const std::vector<double>* v : {&v1, &v2, &v3}) {
      std::optional<double> slope = top_half_slope(ys, *v);
      if (!slope || *slope > 0.1) all_consistent = false;
    }
  }

  r.fitted.emplace_back("sup_s_sp_over_y", sup1);
  r.fitted.emplace_back("sup_sp_tp_over_y", sup2);
  r.fitted.emplace_back("sup_tp_t_over_y", sup3);
  r.verdict = all_consistent ? Verdict::Consistent : Verdict::Inconclusive;
  r.caveats.push_back(kTrendCaveat);
  return r;
}

}  // namespace holospec
