// Independent reference implementations used only to check the library.
// These deliberately avoid the library's code paths: regression residuals
// instead of precision matrices, bisection instead of Newton, direct formula
// evaluation instead of the shared transform chain.
#ifndef RSEDA_TESTS_ORACLES_HPP
#define RSEDA_TESTS_ORACLES_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace oracles {

// Pearson correlation of two columns.
inline double pearson(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const Eigen::VectorXd xc = x.array() - x.mean();
  const Eigen::VectorXd yc = y.array() - y.mean();
  return xc.dot(yc) / std::sqrt(xc.squaredNorm() * yc.squaredNorm());
}

// Partial correlation of columns i and j given all other columns: regress
// each on the remaining columns (with intercept) and correlate residuals.
inline double partial_correlation_by_regression(const Eigen::MatrixXd& data,
                                                Eigen::Index i,
                                                Eigen::Index j) {
  const Eigen::Index n = data.rows();
  const Eigen::Index d = data.cols();
  Eigen::MatrixXd design(n, d - 1);  // intercept + the other d-2 columns
  design.col(0).setOnes();
  Eigen::Index col = 1;
  for (Eigen::Index c = 0; c < d; ++c) {
    if (c == i || c == j) continue;
    design.col(col++) = data.col(c);
  }
  const auto solve = [&](const Eigen::VectorXd& y) -> Eigen::VectorXd {
    const Eigen::VectorXd beta =
        design.colPivHouseholderQr().solve(y);
    return y - design * beta;
  };
  const Eigen::VectorXd ri = solve(data.col(i));
  const Eigen::VectorXd rj = solve(data.col(j));
  return ri.dot(rj) / std::sqrt(ri.squaredNorm() * rj.squaredNorm());
}

// Kepler equation by pure bisection; E - e sin E is strictly increasing.
inline double kepler_bisection(double mean_anomaly, double e,
                               double tol = 1e-13) {
  const double two_pi = 2.0 * 3.14159265358979323846;
  double m = std::fmod(mean_anomaly, two_pi);
  if (m < 0.0) m += two_pi;
  double lo = 0.0, hi = two_pi;
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < 500; ++it) {
    mid = 0.5 * (lo + hi);
    const double f = mid - e * std::sin(mid) - m;
    if (std::abs(f) < tol || (hi - lo) < 1e-16) break;
    if (f < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

// True anomaly via the literal half-angle tangent formula with quadrant
// correction; singular at E = pi, so callers keep E away from pi.
inline double true_anomaly_tan_form(double eccentric_anomaly, double e) {
  const double two_pi = 2.0 * 3.14159265358979323846;
  const double t = 2.0 * std::atan(std::tan(eccentric_anomaly / 2.0) *
                                   std::sqrt((1.0 + e) / (1.0 - e)));
  // atan maps into (-pi/2, pi/2); restore the branch of E/2.
  double corrected = t;
  if (eccentric_anomaly > 3.14159265358979323846) corrected += two_pi;
  if (corrected < 0.0) corrected += two_pi;
  return corrected;
}

// Log of the product of per-point normal densities, written independently.
inline double gaussian_density_product_log(const std::vector<double>& residual,
                                           const std::vector<double>& variance) {
  double log_product = 0.0;
  for (std::size_t i = 0; i < residual.size(); ++i) {
    const double density =
        std::exp(-residual[i] * residual[i] / (2.0 * variance[i])) /
        std::sqrt(2.0 * 3.14159265358979323846 * variance[i]);
    log_product += std::log(density);
  }
  return log_product;
}

// Schaffers F7 for d = 2 with identity rotations and zero shift, written
// directly from the closed form.
inline double rsf7_direct_2d(double theta1, double theta2, double alpha,
                             double beta) {
  double x1 = theta1;
  double x2 = theta2;
  if (x1 > 0.0) x1 = std::pow(x1, 1.0);  // exponent 1 at i=1
  if (x2 > 0.0) x2 = std::pow(x2, 1.0 + beta * std::sqrt(x2));
  const double y1 = x1;
  const double y2 = std::sqrt(alpha) * x2;
  const double z = std::sqrt(y1 * y1 + y2 * y2);
  const double s = std::sin(50.0 * std::pow(z, 0.2));
  const double sum = std::sqrt(z) + std::sqrt(z) * s * s;
  return sum * sum - 800.0;
}

}  // namespace oracles

#endif  // RSEDA_TESTS_ORACLES_HPP
