#ifndef HOLOSPEC_QUADRATURE_HPP
#define HOLOSPEC_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <utility>

namespace holospec::quad {

// Adaptive Gauss(7)/Kronrod(15) integration, templated on the integrand's
// value type (double or std::complex<double>).  Bisection is depth-first and
// left-to-right, so results are bit-reproducible for a fixed integrand.

namespace detail {

// Kronrod-15 abscissae (positive half) and weights, with the embedded
// Gauss-7 weights on the shared nodes (odd indices + center).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double vnorm(const T& v) {
  return std::abs(v);
}

template <class F, class T = decltype(std::declval<F&>()(0.0))>
struct Panel {
  T kronrod;
  double err;
};

template <class F>
auto gk15(F& f, double a, double b) {
  using T = decltype(f(a));
  const double h = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  const T fc = f(mid);
  T resg = kWg[3] * fc;
  T resk = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const T f1 = f(mid - dx);
    const T f2 = f(mid + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  Panel<F> p;
  p.kronrod = resk * h;
  p.err = vnorm<T>((resk - resg) * h);
  return p;
}

template <class F>
auto adapt(F& f, double a, double b, double tol, int depth) {
  auto p = gk15(f, a, b);
  if (p.err <= tol || depth <= 0) return p.kronrod;
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, depth - 1) +
         adapt(f, mid, b, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Integrate f over [a, b] to absolute target abs_tol.
template <class F>
auto integrate(F&& f, double a, double b, double abs_tol = 1e-10,
               int max_depth = 40) {
  if (a == b) return decltype(f(a)){};
  return detail::adapt(f, a, b, abs_tol, max_depth);
}

// Integrate to a relative target, using a single coarse pass for the scale.
template <class F>
auto integrate_rel(F&& f, double a, double b, double rel_tol = 1e-9,
                   int max_depth = 40) {
  using T = decltype(f(a));
  if (a == b) return T{};
  auto coarse = detail::gk15(f, a, b);
  const double scale = detail::vnorm<T>(coarse.kronrod);
  const double abs_tol =
      rel_tol * (scale > 0.0 ? scale : 1.0);
  return detail::adapt(f, a, b, abs_tol, max_depth);
}

}  // namespace holospec::quad

#endif
