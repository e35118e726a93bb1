#ifndef ADCMODEL_STATS_HPP
#define ADCMODEL_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace adcmodel::stats {

/// Ordinary least squares result. `coeffs[j]` multiplies predictor column j.
struct OlsResult {
  std::vector<double> coeffs;
  std::vector<double> residuals;  // response - fitted, in input row order
  double r_squared = 0.0;
};

/// Solves min ||X b - y||_2 for dense X given as rows. All rows must have the
/// same width, including any explicit intercept column of ones.
/// Throws FitError when X is rank-deficient (collinear predictors).
OlsResult ols_fit(const std::vector<std::vector<double>>& rows,
                  std::span<const double> response);

/// Quantile with linear interpolation between order statistics
/// (h = (n-1)*q). `q` in [0, 1]; values need not be sorted.
double quantile(std::vector<double> values, double q);

/// Pearson correlation coefficient. Returns 0 when either side is constant.
double pearson_r(std::span<const double> a, std::span<const double> b);

}  // namespace adcmodel::stats

#endif
