// Copyright 2026 The adidas-nfg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADIDAS_SIMPLEX_H_
#define ADIDAS_SIMPLEX_H_

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "adidas/base.h"
#include "adidas/strategy.h"

namespace adidas {

// argmin_{x in simplex} ||x - v||_2 by sorting and thresholding.
inline MixedStrategy SimplexProjectEuclidean(const Vector& v) {
  if (v.size() == 0) throw DimensionError("empty vector");
  if (!v.allFinite()) throw DomainError("non-finite input to projection");
  std::vector<double> u(v.data(), v.data() + v.size());
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumsum = 0.0, theta = 0.0;
  for (size_t k = 0; k < u.size(); ++k) {
    cumsum += u[k];
    const double t = (cumsum - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0.0) theta = t;
  }
  Vector x = (v.array() - theta).cwiseMax(0.0).matrix();
  // The threshold is exact up to rounding; fold the residual back in.
  x /= x.sum();
  return MixedStrategy::Raw(std::move(x));
}

// g - mean(g): removes the component normal to the simplex.
inline Vector TangentProject(const Vector& g) {
  return (g.array() - g.mean()).matrix();
}

// x * exp(-eta g), renormalized. Computed in log space so large steps do not
// overflow; the result stays strictly positive down to `floor`.
inline MixedStrategy MirrorStepEntropic(const MixedStrategy& x, const Vector& g,
                                        double eta, double floor = 1e-300) {
  if (g.size() != x.size()) throw DimensionError("gradient size mismatch");
  if (!g.allFinite() || !std::isfinite(eta)) {
    throw DomainError("non-finite mirror step");
  }
  if (x.probs().minCoeff() <= 0.0) {
    throw DomainError("entropic mirror step needs a strictly positive x");
  }
  Vector logits = x.probs().array().log().matrix() - eta * g;
  logits.array() -= logits.maxCoeff();
  Vector out = logits.array().exp().matrix();
  out /= out.sum();
  out = out.cwiseMax(floor);
  out /= out.sum();
  return MixedStrategy::Raw(std::move(out));
}

}  // namespace adidas

#endif  // ADIDAS_SIMPLEX_H_
