// Copyright (c) 2026 The s2w Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef S2W_WFST_WEIGHT_H_
#define S2W_WFST_WEIGHT_H_

#include <cmath>
#include <limits>
#include <ostream>

namespace s2w::wfst {

// Tropical semiring: Plus = min, Times = +, Zero = +inf, One = 0.
class TropicalWeight {
 public:
  constexpr TropicalWeight() = default;
  constexpr explicit TropicalWeight(double value) : value_(value) {}

  static constexpr TropicalWeight Zero() {
    return TropicalWeight(std::numeric_limits<double>::infinity());
  }
  static constexpr TropicalWeight One() { return TropicalWeight(0.0); }

  constexpr double value() const { return value_; }
  bool is_zero() const { return std::isinf(value_) && value_ > 0; }

  friend constexpr bool operator==(TropicalWeight a, TropicalWeight b) {
    return a.value_ == b.value_;
  }

 private:
  double value_ = 0.0;
};

inline TropicalWeight Plus(TropicalWeight a, TropicalWeight b) {
  return a.value() <= b.value() ? a : b;
}

inline TropicalWeight Times(TropicalWeight a, TropicalWeight b) {
  if (a.is_zero() || b.is_zero()) return TropicalWeight::Zero();
  return TropicalWeight(a.value() + b.value());
}

// Equality up to `delta`, used for tie detection between path costs that
// were summed in different orders.
inline bool ApproxEqual(TropicalWeight a, TropicalWeight b,
                        double delta = 1e-9) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  return std::fabs(a.value() - b.value()) <= delta;
}

inline std::ostream &operator<<(std::ostream &os, TropicalWeight w) {
  if (w.is_zero()) return os << "Infinity";
  return os << w.value();
}

}  // namespace s2w::wfst

#endif  // S2W_WFST_WEIGHT_H_
