// Copyright 2026 The paracomp Authors.
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

#pragma once

#include <span>
#include <vector>

namespace paracomp::stats {

double mean(std::span<const double> x);
// Sample standard deviation (n - 1 denominator).
double sample_sd(std::span<const double> x);

// Ranks starting at 1; tied values share their average rank.
std::vector<double> average_ranks(std::span<const double> x);

// Throws DegenerateSample if either input is constant or sizes differ.
double pearson(std::span<const double> x, std::span<const double> y);
double spearman(std::span<const double> x, std::span<const double> y);

// Two-sided p-value for a correlation coefficient from the t approximation
// with n - 2 degrees of freedom.
double correlation_p_value(double r, std::size_t n);

// Two-sided tail probability P(|T| >= |t|) for Student's t.
double students_t_two_sided(double t, double dof);

struct TTestResult {
  double t = 0.0;
  double p = 1.0;
  double mean = 0.0;
  double sd = 0.0;
  std::size_t n = 0;
};

// Two-sided one-sample Student's t-test against zero. Throws ZeroVariance
// for constant samples and InvalidArgument for n < 2.
TTestResult one_sample_ttest(std::span<const double> deltas);

}  // namespace paracomp::stats
