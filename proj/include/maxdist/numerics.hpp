#pragma once

// Small numeric kernels: adaptive Simpson quadrature and bracketed bisection.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace maxdist {

namespace detail {

template <class F>
double simpson_step(F& f, double a, double m, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson integral of f over [a,b] to absolute tolerance tol.
template <class F>
double integrate(F&& f, double a, double b, double tol, int max_depth = 60) {
  if (!(b >= a)) throw std::invalid_argument("integrate: bad interval");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

/// Root of f on [lo,hi] by bisection to absolute x-tolerance; f(lo), f(hi)
/// must straddle zero.
template <class F>
double bisect(F&& f, double lo, double hi, double tol_abs) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw std::invalid_argument("bisect: bracket does not straddle a root");
  }
  for (int it = 0; it < 400 && hi - lo > tol_abs; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Median of an unsorted copy of the values.
inline double median_of(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median_of: empty input");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  std::nth_element(values.begin(), values.begin() + mid - 1, values.end());
  return 0.5 * (values[mid - 1] + hi);
}

}  // namespace maxdist
