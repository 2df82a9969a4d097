#include "rseda/correlation.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace rseda {

namespace {

bool product_is_identity(const Eigen::MatrixXd& m, const Eigen::MatrixXd& inv,
                         double tol) {
  if (!inv.allFinite()) return false;
  const Eigen::MatrixXd residual =
      m * inv - Eigen::MatrixXd::Identity(m.rows(), m.cols());
  return residual.cwiseAbs().maxCoeff() < tol;
}

}  // namespace

RegularizedInverse regularized_inverse(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument("matrix must be square");
  }
  constexpr double kProductTol = 1e-8;
  constexpr double kEpsLadder[] = {0.0,  1e-12, 1e-11, 1e-10, 1e-9, 1e-8,
                                   1e-7, 1e-6,  1e-5,  1e-4,  1e-3, 1e-2};
  for (double eps : kEpsLadder) {
    Eigen::MatrixXd regularized = m;
    regularized.diagonal().array() += eps;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(regularized);
    Eigen::MatrixXd inv = lu.inverse();
    if (product_is_identity(regularized, inv, kProductTol)) {
      return {std::move(inv), eps};
    }
  }
  throw std::runtime_error("irrecoverably singular");
}

CorrelationMatrix partial_correlation_matrix(const Eigen::MatrixXd& data) {
  const Eigen::Index a = data.rows();
  const Eigen::Index d = data.cols();
  if (a < 3) throw std::invalid_argument("insufficient samples");
  if (d < 1) throw std::invalid_argument("data must have at least one column");

  CorrelationMatrix result;

  // Standardize columns; flatten zero-variance columns to all-zero so they
  // contribute exact zero rows/columns to the correlation matrix.
  Eigen::MatrixXd z(a, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    const double mean = data.col(c).mean();
    const Eigen::VectorXd centered = data.col(c).array() - mean;
    const double sd = std::sqrt(centered.squaredNorm() /
                                static_cast<double>(a - 1));
    if (!(sd > 1e-12 * (1.0 + std::abs(mean)))) {
      z.col(c).setZero();
      result.degenerate_columns.push_back(static_cast<std::size_t>(c));
    } else {
      z.col(c) = centered / sd;
    }
  }

  Eigen::MatrixXd corr = (z.transpose() * z) / static_cast<double>(a - 1);
  for (std::size_t c : result.degenerate_columns) {
    corr(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c)) = 1.0;
  }
  corr = ((corr + corr.transpose()) * 0.5).eval();

  const Eigen::MatrixXd precision = regularized_inverse(corr).inverse;

  Eigen::MatrixXd c(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      if (i == j) {
        c(i, j) = 1.0;
      } else {
        c(i, j) = -precision(i, j) /
                  std::sqrt(precision(i, i) * precision(j, j));
      }
    }
  }
  c = ((c + c.transpose()) * 0.5).eval();
  c = c.cwiseMax(-1.0).cwiseMin(1.0);
  for (std::size_t k : result.degenerate_columns) {
    const auto ki = static_cast<Eigen::Index>(k);
    c.row(ki).setZero();
    c.col(ki).setZero();
    c(ki, ki) = 1.0;
  }
  c.diagonal().setOnes();

  result.entries = std::move(c);
  return result;
}

}  // namespace rseda
