#include "rseda/gaussian.hpp"

#include <stdexcept>

#include <Eigen/Dense>

namespace rseda {

GaussianModel fit_gaussian(const Eigen::MatrixXd& points, double floor) {
  const Eigen::Index n = points.rows();
  if (n < 2) throw std::invalid_argument("insufficient points for covariance");

  GaussianModel model;
  model.mean = points.colwise().mean();

  const Eigen::MatrixXd centered = points.rowwise() - model.mean.transpose();
  Eigen::MatrixXd cov =
      (centered.transpose() * centered) / static_cast<double>(n - 1);
  cov = ((cov + cov.transpose()) * 0.5).eval();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  const Eigen::VectorXd floored = eig.eigenvalues().cwiseMax(floor);
  model.covariance = eig.eigenvectors() * floored.asDiagonal() *
                     eig.eigenvectors().transpose();
  model.covariance =
      ((model.covariance + model.covariance.transpose()) * 0.5).eval();
  return model;
}

GaussianModel fit_gaussian(const std::vector<std::vector<double>>& points,
                           double floor) {
  if (points.size() < 2) {
    throw std::invalid_argument("insufficient points for covariance");
  }
  const auto m = points.front().size();
  Eigen::MatrixXd mat(static_cast<Eigen::Index>(points.size()),
                      static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (points[r].size() != m) {
      throw std::invalid_argument("point dimension mismatch");
    }
    for (std::size_t c = 0; c < m; ++c) {
      mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          points[r][c];
    }
  }
  return fit_gaussian(mat, floor);
}

Eigen::MatrixXd sample_gaussian(const GaussianModel& model, std::size_t count,
                                Rng& rng) {
  const Eigen::Index m = model.dimension();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(model.covariance);
  const Eigen::MatrixXd transform =
      eig.eigenvectors() *
      eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal();

  Eigen::MatrixXd samples(static_cast<Eigen::Index>(count), m);
  Eigen::VectorXd z(m);
  for (std::size_t s = 0; s < count; ++s) {
    for (Eigen::Index i = 0; i < m; ++i) z(i) = rng.normal();
    samples.row(static_cast<Eigen::Index>(s)) =
        (model.mean + transform * z).transpose();
  }
  return samples;
}

}  // namespace rseda
