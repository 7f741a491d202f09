// Copyright 2026 The tsaexo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSAEXO_BISECT_H_
#define TSAEXO_BISECT_H_

#include <cstddef>

namespace tsaexo {

struct BisectResult {
  double root;
  std::size_t iterations;
  bool converged;
};

// Bisection for a monotonically increasing function on [lo, hi]. Stops
// once the bracket is narrower than x_tol or the midpoint hits an exact
// zero. If f has no sign change on the bracket the nearer endpoint is
// returned with converged = false.
template <class Fn>
BisectResult BisectIncreasing(const Fn& f, double lo, double hi, double x_tol,
                              std::size_t max_iterations) {
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo >= 0.0) return {lo, 0, f_lo == 0.0};
  if (f_hi <= 0.0) return {hi, 0, f_hi == 0.0};

  std::size_t it = 0;
  while (it < max_iterations && hi - lo > x_tol) {
    ++it;
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return {mid, it, true};
    if (f_mid < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), it, hi - lo <= x_tol};
}

}  // namespace tsaexo

#endif  // TSAEXO_BISECT_H_
