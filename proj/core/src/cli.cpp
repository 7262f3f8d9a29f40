#include "holospec/cli.hpp"

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "holospec/diagnostics.hpp"
#include "holospec/enumeration.hpp"
#include "holospec/errors.hpp"
#include "holospec/io.hpp"
#include "holospec/measures.hpp"
#include "holospec/spectrum.hpp"
#include "holospec/sums.hpp"
#include "holospec/testfuncs.hpp"
#include "holospec/trace_formula.hpp"

namespace holospec {

void validate_config(const RunConfig& cfg) {
  if (!(cfg.matrix_tol > 0.0) || !(cfg.bucket_tol > 0.0) ||
      !(cfg.quad_tol > 0.0))
    throw DomainError("config: tolerances must be strictly positive");
  if (cfg.ball_cap == 0 || cfg.fourier_cap <= 0)
    throw DomainError("config: caps must be positive");
  if (cfg.threads < 1) throw DomainError("config: threads must be >= 1");
  if (cfg.format != "json" && cfg.format != "csv")
    throw DomainError("config: format must be json or csv");
}

namespace {

using ojson = nlohmann::ordered_json;

struct CliState {
  RunConfig cfg;

  int max_word_len = 4;
  double y = 0.0;
  double eta = 0.1;
  double etaprime = 0.1;
  long n = 0;
  std::vector<long> n_list{1, 2};
  std::vector<double> y_grid;
  double l_min = 0.0;
  double l_max = 0.0;
  double hol_min = 0.0;
  double hol_max = 0.0;
  double lambda = 0.0;
  double t_edge = 1.0;
  double r = 1.0;
  double vol = 1.0;
  int grid_size = 64;
  std::string window;  // smooth length-window kind
  std::string weight = "trace";
  std::string hol_mode = "cos";
  bool primitive_only = false;
  bool assert_complete = false;
  bool alt_grouping = false;
};

ojson cjson(Complex z) {
  ojson j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw IoError("cannot open for writing: " + cfg.out_path);
  out << text;
  out.flush();
  if (!out) throw IoError("write failed: " + cfg.out_path);
}

// Single exit path for commands that produce one document: write it, then
// let --strict turn an incomplete result into exit code 3.
int finish(const RunConfig& cfg, const std::string& text, bool complete,
           const std::string& warning) {
  emit(cfg, text);
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
  if (!complete && cfg.strict) {
    std::cerr << "strict: result marked incomplete\n";
    return 3;
  }
  return 0;
}

std::string one_row_csv(const std::vector<std::string>& header,
                        const std::vector<std::string>& row) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << header[i];
  os << "\n";
  for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
  os << "\n";
  return os.str();
}

std::vector<SpectralDatum> load_spectral(const CliState& st) {
  if (st.cfg.spectral_path.empty()) return {};
  return import_spectral_data(st.cfg.spectral_path);
}

std::vector<SpectralDatum> complementary_part(
    const std::vector<SpectralDatum>& data) {
  std::vector<SpectralDatum> comp;
  for (const SpectralDatum& d : data)
    if (d.is_complementary()) comp.push_back(d);
  return comp;
}

ojson table_json(const SpectrumTable& t) {
  ojson j;
  j["systole"] = t.systole;
  j["horizon"] = t.horizon;
  j["complete"] = t.complete;
  ojson rows = ojson::array();
  for (const GeodesicClass& c : t.classes) {
    ojson r;
    r["length"] = c.length;
    r["holonomy"] = c.holonomy;
    r["multiplicity"] = c.multiplicity;
    r["primitive"] = c.primitive;
    r["root_length"] = c.root_length;
    r["power_index"] = c.power_index;
    rows.push_back(std::move(r));
  }
  j["classes"] = std::move(rows);
  return j;
}

int cmd_enumerate(const CliState& st) {
  const GroupPresentation pres = import_presentation(st.cfg.presentation_path);
  BallStats bstats;
  const std::vector<CanonicalElement> ball = ball_enumerate(
      pres, st.max_word_len, st.cfg.matrix_tol, st.cfg.ball_cap, &bstats);
  SpectrumBuildStats sstats;
  const SpectrumTable table =
      build_spectrum(ball, st.y, st.cfg.bucket_tol, st.cfg.matrix_tol,
                     st.assert_complete, &sstats);
  std::cerr << "ball r<=" << st.max_word_len << ": "
            << bstats.distinct_elements << " distinct, "
            << bstats.after_inverse_pairing << " after inverse pairing; "
            << table.classes.size() << " classes up to y=" << st.y << "\n";
  if (st.cfg.format == "csv")
    return finish(st.cfg, spectrum_to_csv(table), true, "");
  ojson j;
  j["presentation"] = pres.name;
  j["generators"] = pres.generators.size();
  j["max_word_len"] = st.max_word_len;
  ojson bs;
  bs["words_visited"] = bstats.words_visited;
  bs["distinct_elements"] = bstats.distinct_elements;
  bs["nonidentity"] = bstats.nonidentity;
  bs["after_inverse_pairing"] = bstats.after_inverse_pairing;
  j["ball"] = std::move(bs);
  ojson ss;
  ss["discarded_nonloxodromic"] = sstats.discarded_nonloxodromic;
  ss["undecided_pairs"] = sstats.undecided_pairs;
  ss["mixed_buckets"] = sstats.mixed_buckets;
  ss["weak_power_matches"] = sstats.weak_power_matches;
  j["bucketing"] = std::move(ss);
  j["table"] = table_json(table);
  return finish(st.cfg, dump(j), true, "");
}

int cmd_spectrum_check(const CliState& st) {
  const SpectrumTable table = import_spectrum(st.cfg.spectrum_path);
  const std::string warn =
      table.complete ? "" : "table marked incomplete";
  if (st.cfg.format == "csv")
    return finish(st.cfg,
                  one_row_csv({"classes", "systole", "horizon", "complete"},
                              {std::to_string(table.classes.size()),
                               format_double(table.systole),
                               format_double(table.horizon),
                               table.complete ? "1" : "0"}),
                  table.complete, warn);
  ojson j;
  j["ok"] = true;
  j["classes"] = table.classes.size();
  j["systole"] = table.systole;
  j["horizon"] = table.horizon;
  j["complete"] = table.complete;
  return finish(st.cfg, dump(j), table.complete, warn);
}

int cmd_charsum(const CliState& st) {
  const SpectrumTable table = import_spectrum(st.cfg.spectrum_path);
  const SumResult res =
      char_sum(table, st.n, sharp_window(0.0, st.y), st.cfg.threads);
  if (st.cfg.format == "csv")
    return finish(st.cfg,
                  one_row_csv({"n", "y", "re", "im", "complete"},
                              {std::to_string(st.n), format_double(st.y),
                               format_double(res.value.real()),
                               format_double(res.value.imag()),
                               res.complete ? "1" : "0"}),
                  res.complete, res.warning);
  ojson j;
  j["n"] = st.n;
  j["y"] = st.y;
  j["value"] = cjson(res.value);
  j["complete"] = res.complete;
  j["warning"] = res.warning;
  return finish(st.cfg, dump(j), res.complete, res.warning);
}

int cmd_count(const CliState& st) {
  const SpectrumTable table = import_spectrum(st.cfg.spectrum_path);
  const CountResult res =
      ambient_count(table, st.l_min, st.l_max, st.hol_min, st.hol_max);
  if (st.cfg.format == "csv")
    return finish(
        st.cfg,
        one_row_csv({"count", "complete"},
                    {std::to_string(res.value), res.complete ? "1" : "0"}),
        res.complete, res.warning);
  ojson j;
  ojson w;
  w["l_min"] = st.l_min;
  w["l_max"] = st.l_max;
  w["hol_min"] = st.hol_min;
  w["hol_max"] = st.hol_max;
  j["window"] = std::move(w);
  j["count"] = res.value;
  j["complete"] = res.complete;
  j["warning"] = res.warning;
  return finish(st.cfg, dump(j), res.complete, res.warning);
}

// Length-window descriptor from the --window name.  The circle kinds are not
// length windows and are rejected by validate_sum_spec downstream anyway.
CutoffDescriptor length_descriptor(const CliState& st, const CLI::App& sub,
                                   const std::string& kind) {
  const auto need = [&](const char* flag) {
    if (!sub.count(flag))
      throw DomainError(std::string("--window ") + kind + " needs " + flag);
  };
  if (kind == "gy") {
    need("--y");
    return make_g_y_eta(st.y, st.eta);
  }
  if (kind == "hy") {
    need("--y");
    return make_h_y_eta(st.y, st.eta);
  }
  if (kind == "fmaj") {
    need("--y");
    return make_f_majorant_len(st.y, st.eta);
  }
  if (kind == "glambda") {
    need("--t");
    return make_g_lambda(st.t_edge, st.eta, st.lambda);
  }
  if (kind == "hlambda") {
    need("--t");
    return make_h_lambda(st.t_edge, st.eta, st.lambda);
  }
  if (kind == "indicator") {
    need("--y");
    return make_indicator_len(st.y);
  }
  throw DomainError("--window: unknown kind " + kind);
}

int cmd_sums(const CliState& st, const CLI::App& sub) {
  const SpectrumTable table = import_spectrum(st.cfg.spectrum_path);

  SumSpec spec;
  spec.n = st.n;
  if (st.weight == "trace")
    spec.weight_mode = WeightMode::TraceWeight;
  else if (st.weight == "exp")
    spec.weight_mode = WeightMode::ExpWeight;
  else
    spec.weight_mode = WeightMode::Unit;
  spec.class_filter =
      st.primitive_only ? ClassFilter::PrimitiveOnly : ClassFilter::All;

  if (sub.count("--window")) {
    if (sub.count("--l-min") || sub.count("--l-max"))
      throw DomainError("give either --window or --l-min/--l-max, not both");
    spec.length_window = smooth_window(length_descriptor(st, sub, st.window));
  } else {
    const double hi = sub.count("--l-max") ? st.l_max : table.horizon;
    spec.length_window = sharp_window(st.l_min, hi);
  }

  if (st.hol_mode == "cos")
    spec.holonomy_mode = HolonomyMode::CosN;
  else if (st.hol_mode == "sin")
    spec.holonomy_mode = HolonomyMode::SinN;
  else if (st.hol_mode == "expin")
    spec.holonomy_mode = HolonomyMode::ExpIN;
  else {
    if (!sub.count("--hol-min") || !sub.count("--hol-max"))
      throw DomainError("--hol-mode window needs --hol-min and --hol-max");
    spec.holonomy_mode = HolonomyMode::Window;
    spec.holonomy_window =
        make_f_interval(st.hol_min, st.hol_max, st.etaprime);
  }

  const SumResult res = weighted_sum(table, spec, st.cfg.threads);
  if (st.cfg.format == "csv")
    return finish(st.cfg,
                  one_row_csv({"re", "im", "complete"},
                              {format_double(res.value.real()),
                               format_double(res.value.imag()),
                               res.complete ? "1" : "0"}),
                  res.complete, res.warning);
  ojson j;
  j["weight"] = st.weight;
  j["primitive_only"] = st.primitive_only;
  j["hol_mode"] = st.hol_mode;
  j["n"] = st.n;
  ojson w;
  if (spec.length_window.sharp) {
    w["kind"] = "sharp";
    w["lo"] = spec.length_window.lo;
    w["hi"] = spec.length_window.hi;
  } else {
    const CutoffDescriptor& d = spec.length_window.descriptor;
    w["kind"] = to_string(d.kind);
    w["y"] = d.y;
    w["eta"] = d.eta;
    w["t"] = d.t;
    w["lambda"] = d.lambda;
  }
  j["length_window"] = std::move(w);
  if (spec.holonomy_mode == HolonomyMode::Window) {
    ojson hw;
    hw["theta_lo"] = spec.holonomy_window.theta_lo;
    hw["theta_hi"] = spec.holonomy_window.theta_hi;
    hw["etaprime"] = spec.holonomy_window.etaprime;
    j["holonomy_window"] = std::move(hw);
  }
  j["value"] = cjson(res.value);
  j["complete"] = res.complete;
  j["warning"] = res.warning;
  return finish(st.cfg, dump(j), res.complete, res.warning);
}

int cmd_tf(const CliState& st, const CLI::App& sub, bool even) {
  const std::vector<SpectralDatum> spectral =
      import_spectral_data(st.cfg.spectral_path);
  const SpectrumTable table = import_spectrum(st.cfg.spectrum_path);
  const ManifoldConstants mc{st.vol, table.systole};

  const std::string kind = st.window.empty() ? (even ? "gy" : "hy") : st.window;
  if (even) {
    if (kind != "gy" && kind != "glambda")
      throw DomainError("tf-even --window must be gy or glambda");
  } else {
    if (kind != "hy" && kind != "hlambda")
      throw DomainError("tf-odd --window must be hy or hlambda");
  }
  const CutoffDescriptor d = length_descriptor(st, sub, kind);

  const TraceFormulaReport rep =
      even ? even_tf_sides(d, st.n, spectral, table, mc,
                           st.alt_grouping ? EvenGrouping::MeasureAbsorbed
                                           : EvenGrouping::Standard,
                           st.cfg.threads)
           : odd_tf_sides(d, st.n, spectral, table, mc, st.cfg.threads);

  const double reach = support_radius(d);
  const bool complete = table.complete && reach <= table.horizon + 1e-12;
  std::string warn;
  if (!complete) {
    std::ostringstream os;
    os << "geometric side may be truncated: window reach "
       << format_double(reach) << ", horizon " << format_double(table.horizon)
       << (table.complete ? "" : ", table marked incomplete");
    warn = os.str();
  }

  if (st.cfg.format == "csv")
    return finish(
        st.cfg,
        one_row_csv({"spectral_re", "spectral_im", "geometric_re",
                     "geometric_im", "identity_re", "identity_im",
                     "trivial_re", "trivial_im", "residual_re", "residual_im"},
                    {format_double(rep.spectral_side.real()),
                     format_double(rep.spectral_side.imag()),
                     format_double(rep.geometric_side.real()),
                     format_double(rep.geometric_side.imag()),
                     format_double(rep.identity_term.real()),
                     format_double(rep.identity_term.imag()),
                     format_double(rep.trivial_rep_term.real()),
                     format_double(rep.trivial_rep_term.imag()),
                     format_double(rep.residual.real()),
                     format_double(rep.residual.imag())}),
        complete, warn);
  return finish(st.cfg, trace_report_to_json(rep), complete, warn);
}

int cmd_weyl_window(const CliState& st) {
  const std::vector<SpectralDatum> spectral =
      import_spectral_data(st.cfg.spectral_path);
  const ManifoldConstants mc{st.vol, 1.0};
  const WeylWindowReport rep =
      weyl_window_report(spectral, st.r, st.n, mc);
  if (st.cfg.format == "csv")
    return finish(st.cfg,
                  one_row_csv({"r", "n", "count", "plancherel_term"},
                              {format_double(st.r), std::to_string(st.n),
                               std::to_string(rep.count),
                               format_double(rep.plancherel_term)}),
                  true, "");
  ojson j;
  j["r"] = st.r;
  j["n"] = st.n;
  j["count"] = rep.count;
  j["plancherel_term"] = rep.plancherel_term;
  return finish(st.cfg, dump(j), true, "");
}

int cmd_pgt(const CliState& st) {
  const SpectrumTable table = import_spectrum(st.cfg.spectrum_path);
  const std::vector<SpectralDatum> comp =
      complementary_part(load_spectral(st));
  const DiagnosticReport rep = pgt_report(table, comp, st.y_grid);
  const std::string text = st.cfg.format == "csv" ? report_to_csv(rep)
                                                  : report_to_json(rep);
  return finish(st.cfg, text, table.complete,
                table.complete ? "" : "table marked incomplete");
}

int cmd_equidist(const CliState& st) {
  const SpectrumTable table = import_spectrum(st.cfg.spectrum_path);
  const double disc = equidist_discrepancy(table, st.y, st.grid_size);
  const bool complete =
      table.complete && st.y <= table.horizon + 1e-12;
  const std::string warn =
      complete ? "" : "classes beyond the horizon may be missing";
  if (st.cfg.format == "csv")
    return finish(st.cfg,
                  one_row_csv({"y", "grid_size", "discrepancy"},
                              {format_double(st.y),
                               std::to_string(st.grid_size),
                               format_double(disc)}),
                  complete, warn);
  ojson j;
  j["y"] = st.y;
  j["grid_size"] = st.grid_size;
  j["discrepancy"] = disc;
  return finish(st.cfg, dump(j), complete, warn);
}

int cmd_report(const CliState& st, const CLI::App& sub) {
  if (st.cfg.format != "json")
    throw DomainError("report emits --format json only");
  const SpectrumTable table = import_spectrum(st.cfg.spectrum_path);
  const std::vector<SpectralDatum> comp =
      complementary_part(load_spectral(st));
  const double y_top = sub.count("--y") ? st.y : st.y_grid.back();

  ojson j;
  j["pgt"] = ojson::parse(report_to_json(pgt_report(table, comp, st.y_grid)));
  j["charsum"] = ojson::parse(
      report_to_json(charsum_cancellation_report(table, st.n_list, st.y_grid)));
  j["primitivity"] = ojson::parse(
      report_to_json(primitivity_gap_report(table, st.n_list, st.y_grid)));
  ojson eq;
  eq["y"] = y_top;
  eq["grid_size"] = st.grid_size;
  eq["discrepancy"] = equidist_discrepancy(table, y_top, st.grid_size);
  j["equidist"] = std::move(eq);
  return finish(st.cfg, dump(j), table.complete,
                table.complete ? "" : "table marked incomplete");
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
  CliState st;

  CLI::App app{
      "length spectra, geodesic sums and trace-formula reports for "
      "quotients by discrete subgroups of PSL(2,C)"};
  app.name("holospec");
  app.require_subcommand(1);

  app.add_option("--tol", st.cfg.matrix_tol,
                 "matrix canonicalization tolerance");
  app.add_option("--bucket-tol", st.cfg.bucket_tol,
                 "spectrum bucketing tolerance");
  app.add_option("--ball-cap", st.cfg.ball_cap,
                 "enumeration element cap");
  app.add_option("--threads", st.cfg.threads, "worker threads for sums");
  app.add_flag("--strict", st.cfg.strict,
               "incomplete results become exit code 3");
  app.add_option("--out", st.cfg.out_path, "output file (default stdout)");
  app.add_option("--format", st.cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "word ball -> bucketed length spectrum");
  enumerate->add_option("--presentation", st.cfg.presentation_path,
                        "generator matrices, one per line")
      ->required()
      ->check(CLI::ExistingFile);
  enumerate->add_option("--max-word-len", st.max_word_len, "ball radius");
  enumerate->add_option("--y", st.y, "keep classes with length <= y")
      ->required()
      ->check(CLI::PositiveNumber);
  enumerate->add_flag("--complete", st.assert_complete,
                      "assert the table is complete up to y");

  CLI::App* check =
      app.add_subcommand("spectrum-check", "validate a spectrum file");
  check->add_option("--spectrum", st.cfg.spectrum_path, "spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* charsum_cmd =
      app.add_subcommand("charsum", "holonomy character sum K_n(y)");
  charsum_cmd->add_option("--spectrum", st.cfg.spectrum_path, "spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);
  charsum_cmd->add_option("--n", st.n, "character index")->required();
  charsum_cmd->add_option("--y", st.y, "length cutoff")->required();

  CLI::App* count_cmd =
      app.add_subcommand("count", "primitive classes in a length x holonomy box");
  count_cmd->add_option("--spectrum", st.cfg.spectrum_path, "spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);
  count_cmd->add_option("--l-min", st.l_min, "length lower bound")->required();
  count_cmd->add_option("--l-max", st.l_max, "length upper bound")->required();
  count_cmd->add_option("--hol-min", st.hol_min, "holonomy arc start")
      ->required();
  count_cmd->add_option("--hol-max", st.hol_max, "holonomy arc end")
      ->required();

  CLI::App* sums_cmd =
      app.add_subcommand("sums", "weighted geodesic sum over the table");
  sums_cmd->add_option("--spectrum", st.cfg.spectrum_path, "spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);
  sums_cmd->add_option("--n", st.n, "character index");
  sums_cmd->add_option("--weight", st.weight, "weight factor")
      ->check(CLI::IsMember({"trace", "exp", "unit"}));
  sums_cmd->add_flag("--primitive-only", st.primitive_only,
                     "restrict to primitive classes");
  sums_cmd->add_option("--hol-mode", st.hol_mode, "holonomy factor")
      ->check(CLI::IsMember({"cos", "sin", "expin", "window"}));
  sums_cmd->add_option("--l-min", st.l_min, "sharp window lower bound");
  sums_cmd->add_option("--l-max", st.l_max, "sharp window upper bound");
  sums_cmd->add_option("--window", st.window, "smooth length window kind")
      ->check(CLI::IsMember(
          {"gy", "hy", "fmaj", "glambda", "hlambda", "indicator"}));
  sums_cmd->add_option("--y", st.y, "window edge");
  sums_cmd->add_option("--eta", st.eta, "window smoothing width");
  sums_cmd->add_option("--t", st.t_edge, "tilted window edge");
  sums_cmd->add_option("--lambda", st.lambda, "tilt exponent");
  sums_cmd->add_option("--hol-min", st.hol_min, "holonomy window start");
  sums_cmd->add_option("--hol-max", st.hol_max, "holonomy window end");
  sums_cmd->add_option("--etaprime", st.etaprime, "circle smoothing width");

  CLI::App* tf_even =
      app.add_subcommand("tf-even", "even trace formula, both sides");
  tf_even->add_option("--spectral-data", st.cfg.spectral_path,
                      "spectral parameters CSV")
      ->required()
      ->check(CLI::ExistingFile);
  tf_even->add_option("--spectrum", st.cfg.spectrum_path, "spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);
  tf_even->add_option("--n", st.n, "circle harmonic")->required();
  tf_even->add_option("--window", st.window, "even test window kind (default gy)")
      ->check(CLI::IsMember({"gy", "glambda"}));
  tf_even->add_option("--y", st.y, "window edge");
  tf_even->add_option("--eta", st.eta, "smoothing width");
  tf_even->add_option("--t", st.t_edge, "tilted window edge");
  tf_even->add_option("--lambda", st.lambda, "tilt exponent");
  tf_even->add_option("--vol", st.vol, "quotient volume");
  tf_even->add_flag("--alt-grouping", st.alt_grouping,
                    "absorb complementary terms into the density integral");

  CLI::App* tf_odd =
      app.add_subcommand("tf-odd", "odd trace formula, both sides");
  tf_odd->add_option("--spectral-data", st.cfg.spectral_path,
                     "spectral parameters CSV")
      ->required()
      ->check(CLI::ExistingFile);
  tf_odd->add_option("--spectrum", st.cfg.spectrum_path, "spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);
  tf_odd->add_option("--n", st.n, "circle harmonic")->required();
  tf_odd->add_option("--window", st.window, "odd test window kind (default hy)")
      ->check(CLI::IsMember({"hy", "hlambda"}));
  tf_odd->add_option("--y", st.y, "window edge");
  tf_odd->add_option("--eta", st.eta, "smoothing width");
  tf_odd->add_option("--t", st.t_edge, "tilted window edge");
  tf_odd->add_option("--lambda", st.lambda, "tilt exponent");
  tf_odd->add_option("--vol", st.vol, "quotient volume");

  CLI::App* weyl =
      app.add_subcommand("weyl-window", "eigenvalue count vs Plancherel mass");
  weyl->add_option("--spectral-data", st.cfg.spectral_path,
                   "spectral parameters CSV")
      ->required()
      ->check(CLI::ExistingFile);
  weyl->add_option("--r", st.r, "window center |nu|")->required();
  weyl->add_option("--n", st.n, "circle harmonic");
  weyl->add_option("--vol", st.vol, "quotient volume");

  CLI::App* pgt =
      app.add_subcommand("pgt", "primitive count vs integrated main term");
  pgt->add_option("--spectrum", st.cfg.spectrum_path, "spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);
  pgt->add_option("--spectral-data", st.cfg.spectral_path,
                  "spectral parameters CSV (complementary entries used)")
      ->check(CLI::ExistingFile);
  pgt->add_option("--y-grid", st.y_grid, "increasing length cutoffs")
      ->required()
      ->delimiter(',');

  CLI::App* equidist =
      app.add_subcommand("equidist", "holonomy equidistribution discrepancy");
  equidist->add_option("--spectrum", st.cfg.spectrum_path, "spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);
  equidist->add_option("--y", st.y, "length cutoff")->required();
  equidist->add_option("--grid-size", st.grid_size,
                       "uniform candidate endpoints");

  CLI::App* report =
      app.add_subcommand("report", "full diagnostic battery as one JSON");
  report->add_option("--spectrum", st.cfg.spectrum_path, "spectrum CSV")
      ->required()
      ->check(CLI::ExistingFile);
  report->add_option("--spectral-data", st.cfg.spectral_path,
                     "spectral parameters CSV (complementary entries used)")
      ->check(CLI::ExistingFile);
  report->add_option("--y-grid", st.y_grid, "increasing length cutoffs")
      ->required()
      ->delimiter(',');
  report->add_option("--n-list", st.n_list, "character indices")
      ->delimiter(',');
  report->add_option("--y", st.y, "discrepancy cutoff (default: last grid point)");
  report->add_option("--grid-size", st.grid_size,
                     "uniform candidate endpoints");

  for (CLI::App* sub : app.get_subcommands({}))
    sub->fallthrough();

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("holospec");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    validate_config(st.cfg);
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "enumerate") return cmd_enumerate(st);
    if (name == "spectrum-check") return cmd_spectrum_check(st);
    if (name == "charsum") return cmd_charsum(st);
    if (name == "count") return cmd_count(st);
    if (name == "sums") return cmd_sums(st, *sub);
    if (name == "tf-even") return cmd_tf(st, *sub, true);
    if (name == "tf-odd") return cmd_tf(st, *sub, false);
    if (name == "weyl-window") return cmd_weyl_window(st);
    if (name == "pgt") return cmd_pgt(st);
    if (name == "equidist") return cmd_equidist(st);
    if (name == "report") return cmd_report(st, *sub);
    std::cerr << "error: unknown subcommand " << name << "\n";
    return 2;
  } catch (const IncompleteSpectrum& e) {
    std::cerr << "incomplete spectrum: " << e.what() << "\n";
    return st.cfg.strict ? 3 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace holospec
