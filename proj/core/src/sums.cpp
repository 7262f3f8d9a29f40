#include "holospec/sums.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

namespace holospec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kChunk = 256;

double positive_mod_2pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

double circ_dist(double a, double b) { return std::abs(wrap_angle(a - b)); }

struct Neumaier {
  double s = 0.0, c = 0.0;
  void add(double x) {
    double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double total() const { return s + c; }
};

Complex chunk_total(const std::function<Complex(std::size_t)>& term,
                    std::size_t begin, std::size_t end) {
  Neumaier re, im;
  for (std::size_t i = begin; i < end; ++i) {
    Complex v = term(i);
    re.add(v.real());
    im.add(v.imag());
  }
  return {re.total(), im.total()};
}

}  // namespace

Complex chunk_tree_sum(const std::function<Complex(std::size_t)>& term,
                       std::size_t count, int threads) {
  if (count == 0) return {0.0, 0.0};
  const std::size_t nchunks = (count + kChunk - 1) / kChunk;
  std::vector<Complex> totals(nchunks);

  const std::size_t workers = std::min<std::size_t>(
      nchunks, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t ci = 0; ci < nchunks; ++ci)
      totals[ci] =
          chunk_total(term, ci * kChunk, std::min(count, (ci + 1) * kChunk));
  } else {
    // Each worker owns a block of chunks; chunk totals are positionally
    // fixed so the later tree reduction cannot see the thread layout.
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t per = (nchunks + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          const std::size_t first = w * per;
          const std::size_t last = std::min(nchunks, first + per);
          for (std::size_t ci = first; ci < last; ++ci)
            totals[ci] = chunk_total(term, ci * kChunk,
                                     std::min(count, (ci + 1) * kChunk));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<Complex> level = std::move(totals);
  while (level.size() > 1) {
    std::vector<Complex> next((level.size() + 1) / 2);
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = 2 * i + 1 < level.size() ? level[2 * i] + level[2 * i + 1]
                                         : level[2 * i];
    }
    level.swap(next);
  }
  return level.front();
}

LengthWindow sharp_window(double lo, double hi) {
  if (!(lo >= 0.0) || !(hi >= lo))
    throw DomainError("sharp length window needs 0 <= lo <= hi");
  LengthWindow w;
  w.sharp = true;
  w.lo = lo;
  w.hi = hi;
  return w;
}

LengthWindow smooth_window(const CutoffDescriptor& d) {
  LengthWindow w;
  w.sharp = false;
  w.descriptor = d;
  validate_sum_spec(SumSpec{.length_window = w});
  return w;
}

double support_radius(const CutoffDescriptor& d) {
  switch (d.kind) {
    case CutoffKind::Psi:
      return 1.0;
    case CutoffKind::PsiEta:
      return d.eta;
    case CutoffKind::GYEta:
    case CutoffKind::HYEta:
      return d.y + d.eta;
    case CutoffKind::FMajorantLen:
      return d.y + 2.0 * d.eta;
    case CutoffKind::GLambda:
    case CutoffKind::HLambda:
      return d.t + d.eta;
    case CutoffKind::IndicatorLen:
      return d.y;
    case CutoffKind::FIEtaPrime:
    case CutoffKind::IndicatorHol:
      break;
  }
  throw UnsupportedKind("support_radius: circle kind has no line support");
}

void validate_sum_spec(const SumSpec& spec) {
  if (spec.length_window.sharp) {
    if (!(spec.length_window.lo >= 0.0) ||
        !(spec.length_window.hi >= spec.length_window.lo))
      throw DomainError("sharp length window needs 0 <= lo <= hi");
  } else {
    validate(spec.length_window.descriptor);
    support_radius(spec.length_window.descriptor);  // rejects circle kinds
  }
  if (spec.holonomy_mode == HolonomyMode::Window) {
    const CutoffKind k = spec.holonomy_window.kind;
    if (k != CutoffKind::FIEtaPrime && k != CutoffKind::IndicatorHol)
      throw InvalidDescriptor("holonomy window must be a circle kind");
    validate(spec.holonomy_window);
  }
}

namespace {

Complex class_term(const GeodesicClass& c, const SumSpec& spec) {
  if (spec.class_filter == ClassFilter::PrimitiveOnly && !c.primitive)
    return {0.0, 0.0};

  double lw;
  if (spec.length_window.sharp) {
    if (c.length < spec.length_window.lo || c.length > spec.length_window.hi)
      return {0.0, 0.0};
    lw = 1.0;
  } else {
    lw = cutoff_eval(spec.length_window.descriptor, c.length);
  }
  if (lw == 0.0) return {0.0, 0.0};

  double wf = 1.0;
  switch (spec.weight_mode) {
    case WeightMode::TraceWeight:
      wf = c.root_length * weight(ComplexLength{c.length, c.holonomy});
      break;
    case WeightMode::ExpWeight:
      wf = c.length * std::exp(-c.length);
      break;
    case WeightMode::Unit:
      break;
  }

  Complex hf;
  const double nth = static_cast<double>(spec.n) * c.holonomy;
  switch (spec.holonomy_mode) {
    case HolonomyMode::CosN:
      hf = {std::cos(nth), 0.0};
      break;
    case HolonomyMode::SinN:
      hf = {std::sin(nth), 0.0};
      break;
    case HolonomyMode::ExpIN:
      hf = {std::cos(nth), std::sin(nth)};
      break;
    case HolonomyMode::Window:
      hf = {cutoff_eval(spec.holonomy_window, c.holonomy), 0.0};
      break;
  }
  return static_cast<double>(c.multiplicity) * wf * lw * hf;
}

void note_horizon(const SpectrumTable& table, double reach, SumResult* r) {
  std::ostringstream os;
  if (reach > table.horizon + 1e-12) {
    r->complete = false;
    os << "window reaches length " << reach << " past table horizon "
       << table.horizon;
  }
  if (!table.complete) {
    r->complete = false;
    if (os.tellp() > 0) os << "; ";
    os << "spectrum table is marked incomplete";
  }
  if (os.tellp() > 0) r->warning = os.str();
}

}  // namespace

SumResult weighted_sum(const SpectrumTable& table, const SumSpec& spec,
                       int threads) {
  validate_sum_spec(spec);
  SumResult r;
  const double reach = spec.length_window.sharp
                           ? spec.length_window.hi
                           : support_radius(spec.length_window.descriptor);
  note_horizon(table, reach, &r);
  const auto& cs = table.classes;
  r.value = chunk_tree_sum(
      [&](std::size_t i) { return class_term(cs[i], spec); }, cs.size(),
      threads);
  return r;
}

SumResult char_sum(const SpectrumTable& table, long n,
                   const LengthWindow& window, int threads) {
  SumSpec spec;
  spec.weight_mode = WeightMode::Unit;
  spec.class_filter = ClassFilter::PrimitiveOnly;
  spec.length_window = window;
  spec.holonomy_mode = HolonomyMode::ExpIN;
  spec.n = n;
  return weighted_sum(table, spec, threads);
}

CountResult ambient_count(const SpectrumTable& table, double l_lo, double l_hi,
                          double th_lo, double th_hi) {
  if (!(l_lo >= 0.0) || !(l_hi >= l_lo))
    throw DomainError("ambient_count needs 0 <= l_lo <= l_hi");
  CountResult r;
  {
    std::ostringstream os;
    if (l_hi > table.horizon + 1e-12) {
      r.complete = false;
      os << "length interval reaches " << l_hi << " past table horizon "
         << table.horizon;
    }
    if (!table.complete) {
      r.complete = false;
      if (os.tellp() > 0) os << "; ";
      os << "spectrum table is marked incomplete";
    }
    if (os.tellp() > 0) r.warning = os.str();
  }

  // a descending pair wraps through the cut: from th_lo up and around to
  // th_hi; widths of 2 pi or more (only reachable unwrapped) mean everything
  const double raw_width = th_hi - th_lo;
  const double width =
      raw_width < 0.0 ? positive_mod_2pi(raw_width) : raw_width;
  const bool full_circle = width >= kTwoPi - 1e-12;
  long count = 0;
  for (const GeodesicClass& c : table.classes) {
    if (!c.primitive) continue;
    if (c.length < l_lo || c.length > l_hi) continue;
    if (!full_circle) {
      const double pos = positive_mod_2pi(c.holonomy - th_lo);
      const bool inside = pos <= width + 1e-12 || pos >= kTwoPi - 1e-12;
      if (!inside) continue;
    }
    count += c.multiplicity;
  }
  r.value = count;
  return r;
}

double boundary_length_sum(const SpectrumTable& table, double y, double eta) {
  if (!(eta > 0.0)) throw DomainError("boundary_length_sum needs eta > 0");
  const auto& cs = table.classes;
  Complex v = chunk_tree_sum(
      [&](std::size_t i) -> Complex {
        const GeodesicClass& c = cs[i];
        if (c.length < y - eta || c.length > y + eta) return {0.0, 0.0};
        return {c.multiplicity * c.root_length *
                    weight(ComplexLength{c.length, c.holonomy}),
                0.0};
      },
      cs.size());
  return v.real();
}

double boundary_holonomy_sum(const SpectrumTable& table, double y,
                             double theta0, double etaprime) {
  if (!(etaprime > 0.0) || !(etaprime <= kTwoPi))
    throw DomainError("boundary_holonomy_sum needs 0 < etaprime <= 2 pi");
  const auto& cs = table.classes;
  Complex v = chunk_tree_sum(
      [&](std::size_t i) -> Complex {
        const GeodesicClass& c = cs[i];
        if (c.length > y) return {0.0, 0.0};
        if (circ_dist(c.holonomy, theta0) > etaprime + 1e-12 &&
            circ_dist(c.holonomy, -theta0) > etaprime + 1e-12)
          return {0.0, 0.0};
        return {c.multiplicity * c.root_length *
                    weight(ComplexLength{c.length, c.holonomy}),
                0.0};
      },
      cs.size());
  return v.real();
}

}  // namespace holospec
