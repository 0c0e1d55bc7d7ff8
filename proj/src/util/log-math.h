// util/log-math.h

// Copyright 2026  TinyASR Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef TINYASR_UTIL_LOG_MATH_H_
#define TINYASR_UTIL_LOG_MATH_H_

#include <cmath>
#include <limits>
#include <vector>

namespace tinyasr {

constexpr double kLogZero = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)), guarding against -inf and subtracting the max.
inline double LogAdd(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

inline double LogSumExp(const std::vector<double> &values) {
  double sum = kLogZero;
  for (double v : values) sum = LogAdd(sum, v);
  return sum;
}

}  // namespace tinyasr

#endif  // TINYASR_UTIL_LOG_MATH_H_
