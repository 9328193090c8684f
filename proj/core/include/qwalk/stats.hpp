// Copyright 2026 The qwalk Authors
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

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace qwalk {

/// Fixed-width histogram. Bins are [e_i, e_{i+1}) except the last, which is
/// closed. Samples outside [lo, hi] are tallied in underflow / overflow.
struct Histogram {
  std::vector<double> edges;
  std::vector<std::size_t> counts;
  std::size_t underflow = 0;
  std::size_t overflow = 0;

  std::size_t in_range() const;
  /// counts / (in_range * width); integrates to 1 over [lo, hi].
  std::vector<double> density() const;
  double center(std::size_t bin) const { return 0.5 * (edges[bin] + edges[bin + 1]); }
};

/// Throws std::invalid_argument for bins < 1, lo >= hi or empty samples.
Histogram histogram(std::span<const double> samples, int bins, double lo, double hi);

/// Right-continuous empirical CDF of a sample.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::span<const double> samples);
  double operator()(double x) const;
  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

/// Kolmogorov-Smirnov statistic sup_x |F_n(x) - F(x)| against a continuous
/// model CDF. Throws std::invalid_argument on an empty sample.
double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Maximum-likelihood rate 1 / mean. Throws std::invalid_argument on an
/// empty sample or a nonpositive value.
double exponential_mle(std::span<const double> samples);

inline double exponential_cdf(double x, double rate) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-rate * x); }

/// CSV: bin_lo, bin_hi, count, density.
void write_histogram_csv(const Histogram& h, std::ostream& out);

}  // namespace qwalk
