#include "holospec/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace holospec {

namespace {

using ojson = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t line,
                             const std::string& what) {
  std::ostringstream os;
  os << path << ":" << line << ": " << what;
  throw ParseError(os.str());
}

double parse_double(const std::string& field, const std::string& path,
                    std::size_t line, const char* name) {
  const std::string t = trim(field);
  if (!t.empty()) {
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() + t.size()) return v;
  }
  parse_fail(path, line,
             std::string(name) + ": not a number: '" + field + "'");
}

long parse_long(const std::string& field, const std::string& path,
                std::size_t line, const char* name) {
  const std::string t = trim(field);
  if (!t.empty()) {
    char* end = nullptr;
    long v = std::strtol(t.c_str(), &end, 10);
    if (end == t.c_str() + t.size()) return v;
  }
  parse_fail(path, line,
             std::string(name) + ": not an integer: '" + field + "'");
}

bool parse_bool(const std::string& field, const std::string& path,
                std::size_t line, const char* name) {
  const std::string t = trim(field);
  if (t == "0" || t == "false") return false;
  if (t == "1" || t == "true") return true;
  parse_fail(path, line, std::string(name) + ": not a flag: '" + field + "'");
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

constexpr const char* kSpectrumHeader =
    "length,holonomy,multiplicity,primitive,root_length,power_index";
constexpr const char* kSpectralHeader = "re_nu,im_nu,p,multiplicity";

ojson complex_json(Complex z) {
  ojson j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

SpectrumTable import_spectrum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  bool have_horizon = false, have_complete = false, header_seen = false;
  double horizon = 0.0;
  bool complete = false;
  std::vector<std::pair<std::size_t, GeodesicClass>> rows;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string s = trim(line);
    if (s.empty()) continue;
    if (s[0] == '#') {
      if (s.rfind("#horizon=", 0) == 0) {
        horizon = parse_double(s.substr(9), path, lineno, "horizon");
        have_horizon = true;
      } else if (s.rfind("#complete=", 0) == 0) {
        complete = parse_bool(s.substr(10), path, lineno, "complete");
        have_complete = true;
      }
      // "#systole=" and other comments are informational
      continue;
    }
    if (!header_seen) {
      if (s != kSpectrumHeader)
        parse_fail(path, lineno,
                   std::string("expected header '") + kSpectrumHeader + "'");
      header_seen = true;
      continue;
    }
    const std::vector<std::string> f = split_csv(s);
    if (f.size() != 6) {
      std::ostringstream os;
      os << "expected 6 fields, got " << f.size();
      parse_fail(path, lineno, os.str());
    }
    GeodesicClass c;
    c.length = parse_double(f[0], path, lineno, "length");
    c.holonomy = parse_double(f[1], path, lineno, "holonomy");
    c.multiplicity = parse_long(f[2], path, lineno, "multiplicity");
    c.primitive = parse_bool(f[3], path, lineno, "primitive");
    c.root_length = parse_double(f[4], path, lineno, "root_length");
    c.power_index =
        static_cast<int>(parse_long(f[5], path, lineno, "power_index"));
    rows.emplace_back(lineno, c);
  }
  if (!header_seen)
    throw ParseError(path + ": missing spectrum header row");

  // Row-local invariants first, so the error can cite the file line.
  for (const auto& [ln, c] : rows) {
    SpectrumTable one;
    one.classes = {c};
    one.systole = c.length;
    one.horizon = std::isfinite(c.length) && c.length > 0.0 ? c.length : 0.0;
    try {
      validate_table(one);
    } catch (const InvariantViolation& e) {
      std::ostringstream os;
      os << path << ":" << ln << ": " << e.what();
      throw InvariantViolation(os.str());
    }
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second.length != b.second.length)
                       return a.second.length < b.second.length;
                     return a.second.holonomy < b.second.holonomy;
                   });

  SpectrumTable t;
  t.classes.reserve(rows.size());
  for (const auto& [ln, c] : rows) t.classes.push_back(c);
  if (have_horizon) {
    t.horizon = horizon;
  } else if (!t.classes.empty()) {
    t.horizon = t.classes.back().length;
  } else {
    throw ParseError(path + ": empty table needs a #horizon= line");
  }
  t.systole = t.classes.empty() ? t.horizon : t.classes.front().length;
  t.complete = have_complete ? complete : t.classes.empty();
  validate_table(t);
  return t;
}

std::string spectrum_to_csv(const SpectrumTable& table) {
  std::ostringstream os;
  os << kSpectrumHeader << "\n";
  os << "#horizon=" << format_double(table.horizon) << "\n";
  os << "#systole=" << format_double(table.systole) << "\n";
  os << "#complete=" << (table.complete ? 1 : 0) << "\n";
  for (const GeodesicClass& c : table.classes) {
    os << format_double(c.length) << ',' << format_double(c.holonomy) << ','
       << c.multiplicity << ',' << (c.primitive ? 1 : 0) << ','
       << format_double(c.root_length) << ',' << c.power_index << "\n";
  }
  return os.str();
}

void export_spectrum(const SpectrumTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << spectrum_to_csv(table);
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

GroupPresentation import_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  GroupPresentation p;
  p.source = path;
  {
    std::size_t slash = path.find_last_of("/\\");
    std::string base =
        slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    p.name = dot == std::string::npos ? base : base.substr(0, dot);
  }

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const std::string s = trim(line);
    if (s.empty()) continue;

    std::istringstream iss(s);
    double v[8];
    for (int i = 0; i < 8; ++i) {
      if (!(iss >> v[i]))
        parse_fail(path, lineno, "expected 8 reals per generator line");
    }
    std::string extra;
    if (iss >> extra) parse_fail(path, lineno, "trailing token: " + extra);

    Mat2 m{Complex{v[0], v[1]}, Complex{v[2], v[3]}, Complex{v[4], v[5]},
           Complex{v[6], v[7]}};
    if (std::abs(m.det() - 1.0) > 1e-6) {
      std::ostringstream os;
      os << path << ":" << lineno << ": determinant " << m.det()
         << " is not 1";
      throw NonUnitDeterminant(os.str());
    }
    const std::size_t i = p.generators.size();
    std::string label =
        i < 26 ? std::string(1, static_cast<char>('a' + i))
               : "g" + std::to_string(i);
    p.generators.push_back(canonicalize(m, kDefaultTol, std::move(label)));
  }
  return p;
}

std::vector<SpectralDatum> import_spectral_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  bool header_seen = false;
  std::vector<SpectralDatum> data;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (!header_seen) {
      if (s != kSpectralHeader)
        parse_fail(path, lineno,
                   std::string("expected header '") + kSpectralHeader + "'");
      header_seen = true;
      continue;
    }
    const std::vector<std::string> f = split_csv(s);
    if (f.size() != 4) {
      std::ostringstream os;
      os << "expected 4 fields, got " << f.size();
      parse_fail(path, lineno, os.str());
    }
    SpectralDatum d;
    d.nu = Complex{parse_double(f[0], path, lineno, "re_nu"),
                   parse_double(f[1], path, lineno, "im_nu")};
    d.p = static_cast<int>(parse_long(f[2], path, lineno, "p"));
    d.multiplicity = parse_long(f[3], path, lineno, "multiplicity");
    try {
      validate_spectral({d});
    } catch (const InvariantViolation& e) {
      std::ostringstream os;
      os << path << ":" << lineno << ": " << e.what();
      throw InvariantViolation(os.str());
    }
    data.push_back(d);
  }
  if (!header_seen) throw ParseError(path + ": missing spectral header row");
  return data;
}

std::string report_to_json(const DiagnosticReport& r) {
  ojson j;
  j["name"] = r.name;
  j["inputs"] = r.inputs;
  j["columns"] = r.columns;
  j["rows"] = r.rows;
  ojson fitted = ojson::object();
  for (const auto& [k, v] : r.fitted) fitted[k] = v;
  j["fitted"] = fitted;
  j["verdict"] = to_string(r.verdict);
  j["caveats"] = r.caveats;
  return j.dump(2) + "\n";
}

std::string trace_report_to_json(const TraceFormulaReport& r) {
  ojson j;
  j["spectral_side"] = complex_json(r.spectral_side);
  j["geometric_side"] = complex_json(r.geometric_side);
  j["identity_term"] = complex_json(r.identity_term);
  j["trivial_rep_term"] = complex_json(r.trivial_rep_term);
  j["residual"] = complex_json(r.residual);
  j["truncation_note"] = r.truncation_note;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const DiagnosticReport& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.columns.size(); ++i)
    os << (i ? "," : "") << r.columns[i];
  os << "\n";
  for (const std::vector<double>& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_double(row[i]);
    os << "\n";
  }
  return os.str();
}

}  // namespace holospec
