// Copyright 2026 The Puribound Authors
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

#include "puribound/rootfind.hpp"

#include <cmath>

namespace puribound {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol, int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw SolverError("bisect: no sign change on bracket [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
  }
  for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol, int max_iter) {
  constexpr double kInvPhi = 0.6180339887498949;  // 1/phi
  double c = hi - (hi - lo) * kInvPhi;
  double d = lo + (hi - lo) * kInvPhi;
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - (hi - lo) * kInvPhi;
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + (hi - lo) * kInvPhi;
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace puribound
