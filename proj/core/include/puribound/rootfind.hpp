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

#ifndef PURIBOUND_ROOTFIND_HPP
#define PURIBOUND_ROOTFIND_HPP

#include <functional>

#include "puribound/matrix.hpp"

namespace puribound {

// Root of f on [lo, hi] by bisection. Requires a sign change on the
// bracket; throws SolverError otherwise.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double tol = 1e-12, int max_iter = 200);

// Minimizer of a unimodal f on [lo, hi] by golden-section search.
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-10, int max_iter = 300);

}  // namespace puribound

#endif  // PURIBOUND_ROOTFIND_HPP
