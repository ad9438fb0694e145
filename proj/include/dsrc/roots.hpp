#ifndef DSRC_ROOTS_HPP
#define DSRC_ROOTS_HPP

#include <cmath>
#include <utility>

#include "dsrc/errors.hpp"

namespace dsrc {

struct BisectionOptions {
  // Stop when |hi - lo| <= rel_tol * max(1, |mid|) or the bracket can no
  // longer be split in double precision.
  double rel_tol = 1e-12;
  int max_iter = 200;
};

/// Plain dichotomy on [lo, hi]. An endpoint that is an exact root is
/// returned as is. Throws RootNotBracketed when f(lo) and f(hi) share a sign.
template <typename F>
double bisect(F&& f, double lo, double hi, BisectionOptions opts = {}) {
  double f_lo = f(lo);
  if (f_lo == 0.0) return lo;
  const double f_hi = f(hi);
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw RootNotBracketed("bisection: no sign change on bracket");
  }
  for (int it = 0; it < opts.max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (std::abs(hi - lo) <= opts.rel_tol * std::max(1.0, std::abs(mid)) ||
        mid == lo || mid == hi) {
      return mid;
    }
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace dsrc

#endif  // DSRC_ROOTS_HPP
