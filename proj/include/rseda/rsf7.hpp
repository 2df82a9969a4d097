#ifndef RSEDA_RSF7_HPP
#define RSEDA_RSF7_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "rseda/core.hpp"

namespace rseda {

/// One Rotated Schaffers F7 instance: global optimum location, two
/// orthogonal rotations, conditioning exponent base and asymmetry strength.
/// Immutable after creation; evaluation is pure.
struct Rsf7Instance {
  int d = 0;
  Eigen::VectorXd shift;       // o, the global optimum (f = -800 there)
  Eigen::MatrixXd rotation1;   // applied to theta - o
  Eigen::MatrixXd rotation2;   // applied after the asymmetry transform
  double alpha = 10.0;
  double beta = 0.5;
  std::uint64_t seed = 0;
};

/// Deterministic instance: shift uniform on [-80, 80]^d, rotations from
/// QR-orthonormalized standard-normal matrices with the sign of the
/// triangular factor's diagonal fixed positive.
Rsf7Instance make_instance(int d, std::uint64_t seed);

/// Asymmetry operator: x_i -> x_i^(1 + beta*(i-1)/(d-1)*sqrt(x_i)) for
/// positive coordinates (1-based i); non-positive coordinates pass through.
Eigen::VectorXd t_asy(const Eigen::VectorXd& x, double beta);

/// Diagonal conditioning: y_i = alpha^((i-1)/(2(d-1))) * x_i, 1-based i.
Eigen::VectorXd lambda_transform(const Eigen::VectorXd& x, double alpha);

/// Schaffers F7 after the full transform chain
/// y = Lambda * R2 * T_asy(R1 * (theta - o)). Minimum value -800 at theta = o.
double rsf7(const std::vector<double>& theta, const Rsf7Instance& instance);

/// Maximization companion g = -f, peak value 800.
double rsf7_g(const std::vector<double>& theta, const Rsf7Instance& instance);

/// The benchmark search box, [-100, 100]^d.
Bounds rsf7_bounds(int d);

std::string instance_to_json(const Rsf7Instance& instance);
Rsf7Instance instance_from_json(const std::string& text);
void save_instance(const std::string& path, const Rsf7Instance& instance);
Rsf7Instance load_instance(const std::string& path);

}  // namespace rseda

#endif  // RSEDA_RSF7_HPP
