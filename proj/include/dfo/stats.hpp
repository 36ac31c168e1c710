#pragma once

#include <vector>

namespace dfo {

/// Regularized incomplete beta function I_x(a, b) via the Lentz continued
/// fraction; accurate to ~1e-12 for the moderate (a, b) used here.
double incomplete_beta(double a, double b, double x);

/// CDF of Beta(a, b) at x.
inline double beta_cdf(double a, double b, double x) { return incomplete_beta(a, b, x); }

/// Two-sided Kolmogorov-Smirnov statistic of a sample against a CDF.
/// Sorts a copy of the sample.
double ks_statistic(std::vector<double> sample, double (*cdf)(double, double, double), double a,
                    double b);

/// Asymptotic two-sided KS critical value at level alpha for n samples.
double ks_critical(double alpha, std::size_t n);

}  // namespace dfo
