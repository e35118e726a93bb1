#include "adcmodel/stats.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "adcmodel/errors.hpp"

namespace adcmodel::stats {

OlsResult ols_fit(const std::vector<std::vector<double>>& rows,
                  std::span<const double> response) {
  const std::size_t n = rows.size();
  if (n == 0 || response.size() != n) {
    throw FitError("ols_fit: empty system or row/response size mismatch");
  }
  const std::size_t k = rows.front().size();
  if (k == 0 || n < k) {
    throw FitError("ols_fit: fewer rows than coefficients");
  }

  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
  Eigen::VectorXd y(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != k) {
      throw FitError("ols_fit: ragged predictor rows");
    }
    for (std::size_t j = 0; j < k; ++j) {
      x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    y(static_cast<Eigen::Index>(i)) = response[i];
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
  if (qr.rank() < static_cast<Eigen::Index>(k)) {
    throw FitError("ols_fit: collinear predictors (rank " +
                   std::to_string(qr.rank()) + " of " + std::to_string(k) + ")");
  }
  Eigen::VectorXd beta = qr.solve(y);
  Eigen::VectorXd resid = y - x * beta;

  OlsResult out;
  out.coeffs.assign(beta.data(), beta.data() + beta.size());
  out.residuals.assign(resid.data(), resid.data() + resid.size());

  const double mean = y.mean();
  const double ss_tot = (y.array() - mean).square().sum();
  const double ss_res = resid.squaredNorm();
  out.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return out;
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) {
    throw FitError("quantile: empty sample");
  }
  q = std::clamp(q, 0.0, 1.0);
  std::sort(values.begin(), values.end());
  const double h = static_cast<double>(values.size() - 1) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

double pearson_r(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  if (n != b.size() || n < 2) {
    throw FitError("pearson_r: size mismatch or too few samples");
  }
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(n);
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(n);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) {
    return 0.0;
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace adcmodel::stats
