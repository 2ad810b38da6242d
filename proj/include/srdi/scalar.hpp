// Copyright 2026 The srdi Authors
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

#ifndef SRDI_SCALAR_HPP_
#define SRDI_SCALAR_HPP_

#include <algorithm>
#include <cmath>
#include <concepts>

#include <boost/multiprecision/gmp.hpp>

namespace srdi {

// Exact rational arithmetic, used by oracles and exactness cross-checks.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool kExact = false;

  // Comparison slack for costs, weights and SRD sums of magnitude `scale`.
  static double slack(double scale) { return 1e-9 * std::max(1.0, std::abs(scale)); }

  // Two weights differ when they are further apart than this.
  static bool differs(double a, double b) { return std::abs(a - b) > 1e-12; }

  static double to_double(double x) { return x; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool kExact = true;
  static Rational slack(const Rational&) { return Rational(0); }
  static bool differs(const Rational& a, const Rational& b) { return a != b; }
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
};

template <class T>
concept Scalar = requires(const T& a) {
  { ScalarTraits<T>::kExact } -> std::convertible_to<bool>;
  { ScalarTraits<T>::slack(a) } -> std::convertible_to<T>;
};

template <Scalar S>
double to_double(const S& x) {
  return ScalarTraits<S>::to_double(x);
}

}  // namespace srdi

#endif  // SRDI_SCALAR_HPP_
