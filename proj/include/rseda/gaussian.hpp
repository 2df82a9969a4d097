#ifndef RSEDA_GAUSSIAN_HPP
#define RSEDA_GAUSSIAN_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "rseda/rng.hpp"

namespace rseda {

/// Multivariate Gaussian with a symmetric covariance whose eigenvalues have
/// been floored away from zero.
struct GaussianModel {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;

  Eigen::Index dimension() const { return mean.size(); }
};

/// Empirical mean and unbiased (n-1) sample covariance of the rows of
/// `points`, symmetrized, with covariance eigenvalues floored at `floor`.
/// Throws "insufficient points for covariance" for fewer than 2 rows.
GaussianModel fit_gaussian(const Eigen::MatrixXd& points, double floor);
GaussianModel fit_gaussian(const std::vector<std::vector<double>>& points,
                           double floor);

/// `count` independent draws, one per row. Components of each draw consume
/// normals from rng in index order, so streams are reproducible.
Eigen::MatrixXd sample_gaussian(const GaussianModel& model, std::size_t count,
                                Rng& rng);

}  // namespace rseda

#endif  // RSEDA_GAUSSIAN_HPP
