#ifndef RSEDA_CORRELATION_HPP
#define RSEDA_CORRELATION_HPP

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace rseda {

/// Sample linear partial correlation matrix. Symmetric, unit diagonal,
/// entries in [-1, 1]. Columns whose data had zero variance are listed in
/// degenerate_columns and carry zero off-diagonal correlations.
struct CorrelationMatrix {
  Eigen::MatrixXd entries;
  std::vector<std::size_t> degenerate_columns;

  bool degenerate() const { return !degenerate_columns.empty(); }
};

/// Inverse of (m + eps*I) where eps escalates from 0 by decades until the
/// product with the regularized matrix matches the identity numerically.
struct RegularizedInverse {
  Eigen::MatrixXd inverse;
  double epsilon = 0.0;
};

/// Throws "irrecoverably singular" if still singular at eps = 1e-2.
RegularizedInverse regularized_inverse(const Eigen::MatrixXd& m);

/// Partial correlation of every column pair, controlling for all remaining
/// columns, via the precision matrix of the column correlation matrix:
/// C(i,j) = -P(i,j)/sqrt(P(i,i)*P(j,j)). Requires at least 3 rows.
CorrelationMatrix partial_correlation_matrix(const Eigen::MatrixXd& data);

}  // namespace rseda

#endif  // RSEDA_CORRELATION_HPP
