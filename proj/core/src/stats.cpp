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

#include "qwalk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace qwalk {

std::size_t Histogram::in_range() const {
  std::size_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::vector<double> Histogram::density() const {
  std::vector<double> out(counts.size(), 0.0);
  const double total = static_cast<double>(in_range());
  if (total == 0.0) return out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    out[i] = static_cast<double>(counts[i]) / (total * (edges[i + 1] - edges[i]));
  }
  return out;
}

Histogram histogram(std::span<const double> samples, int bins, double lo, double hi) {
  if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
  if (!(lo < hi)) throw std::invalid_argument("histogram range must satisfy lo < hi");
  if (samples.empty()) throw std::invalid_argument("histogram of an empty sample");

  Histogram h;
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / bins;
  for (int i = 0; i <= bins; ++i) h.edges[i] = lo + width * i;
  h.edges.back() = hi;
  h.counts.assign(bins, 0);
  for (double v : samples) {
    if (v < lo) {
      ++h.underflow;
    } else if (v > hi) {
      ++h.overflow;
    } else {
      auto bin = static_cast<int>((v - lo) / width);
      bin = std::clamp(bin, 0, bins - 1);
      // Correct for rounding in the division against the stored edges.
      if (v < h.edges[bin]) --bin;
      else if (bin + 1 < bins && v >= h.edges[bin + 1]) ++bin;
      ++h.counts[bin];
    }
  }
  return h;
}

EmpiricalCdf::EmpiricalCdf(std::span<const double> samples) : sorted_(samples.begin(), samples.end()) {
  if (sorted_.empty()) throw std::invalid_argument("empirical CDF of an empty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double ks_distance(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("KS distance of an empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    worst = std::max({worst, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return std::clamp(worst, 0.0, 1.0);
}

double exponential_mle(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("exponential fit of an empty sample");
  double sum = 0.0;
  for (double v : samples) {
    if (!(v > 0.0)) throw std::invalid_argument("exponential fit needs positive samples");
    sum += v;
  }
  return static_cast<double>(samples.size()) / sum;
}

void write_histogram_csv(const Histogram& h, std::ostream& out) {
  const auto density = h.density();
  out << "bin_lo,bin_hi,count,density\n" << std::setprecision(17);
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out << h.edges[i] << ',' << h.edges[i + 1] << ',' << h.counts[i] << ',' << density[i] << '\n';
  }
}

}  // namespace qwalk
