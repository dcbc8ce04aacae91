#pragma once

#include <cmath>
#include <stdexcept>

namespace telescope::inference {

struct Maximum {
  double argmax;
  double value;
};

/// Golden-section search for the maximum of f on [lo, hi].
///
/// Assumes f is unimodal on the bracket; stops once the bracket is narrower than tol.
template <typename F>
Maximum golden_section_maximize(F&& f, double lo, double hi, double tol, int max_iter = 500) {
  if (!(lo < hi) || !(tol > 0.0)) {
    throw std::invalid_argument("golden_section_maximize: need lo < hi and tol > 0");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < max_iter && b - a > tol; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  Maximum best = fc >= fd ? Maximum{c, fc} : Maximum{d, fd};
  // The endpoints are never probed by the interior points.
  for (const double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe > best.value) {
      best = {edge, fe};
    }
  }
  return best;
}

}  // namespace telescope::inference
