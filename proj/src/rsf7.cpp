#include "rseda/rsf7.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>
#include <json.hpp>

#include "rseda/rng.hpp"

namespace rseda {

namespace {

Eigen::MatrixXd random_orthogonal(int d, Rng& rng) {
  Eigen::MatrixXd gauss(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) gauss(r, c) = rng.normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gauss);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR();
  // Fix the sign ambiguity of QR so instances are reproducible.
  for (int i = 0; i < d; ++i) {
    if (r(i, i) < 0.0) q.col(i) = -q.col(i);
  }
  return q;
}

}  // namespace

Rsf7Instance make_instance(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("rsf7 requires dimension >= 2");
  Rng rng(seed);
  Rsf7Instance inst;
  inst.d = d;
  inst.seed = seed;
  inst.shift.resize(d);
  for (int i = 0; i < d; ++i) inst.shift(i) = rng.uniform(-80.0, 80.0);
  inst.rotation1 = random_orthogonal(d, rng);
  inst.rotation2 = random_orthogonal(d, rng);
  return inst;
}

Eigen::VectorXd t_asy(const Eigen::VectorXd& x, double beta) {
  const Eigen::Index d = x.size();
  const double denom = d > 1 ? static_cast<double>(d - 1) : 1.0;
  Eigen::VectorXd out(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    if (x(i) > 0.0) {
      const double exponent =
          1.0 + beta * (static_cast<double>(i) / denom) * std::sqrt(x(i));
      out(i) = std::pow(x(i), exponent);
    } else {
      out(i) = x(i);
    }
  }
  return out;
}

Eigen::VectorXd lambda_transform(const Eigen::VectorXd& x, double alpha) {
  const Eigen::Index d = x.size();
  if (d < 2) throw std::invalid_argument("lambda transform requires d >= 2");
  Eigen::VectorXd out(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    out(i) = std::pow(alpha, static_cast<double>(i) /
                                 (2.0 * static_cast<double>(d - 1))) *
             x(i);
  }
  return out;
}

double rsf7(const std::vector<double>& theta, const Rsf7Instance& instance) {
  const int d = instance.d;
  if (static_cast<int>(theta.size()) != d) {
    throw std::invalid_argument("parameter arity mismatch");
  }
  Eigen::VectorXd x(d);
  for (int i = 0; i < d; ++i) x(i) = theta[i] - instance.shift(i);
  const Eigen::VectorXd y = lambda_transform(
      instance.rotation2 * t_asy(instance.rotation1 * x, instance.beta),
      instance.alpha);

  double sum = 0.0;
  for (int i = 0; i + 1 < d; ++i) {
    const double z = std::sqrt(y(i) * y(i) + y(i + 1) * y(i + 1));
    const double sz = std::sqrt(z);
    const double s = std::sin(50.0 * std::pow(z, 0.2));
    sum += sz + sz * s * s;
  }
  sum /= static_cast<double>(d - 1);
  return sum * sum - 800.0;
}

double rsf7_g(const std::vector<double>& theta, const Rsf7Instance& instance) {
  return -rsf7(theta, instance);
}

Bounds rsf7_bounds(int d) {
  return Bounds(std::vector<double>(d, -100.0), std::vector<double>(d, 100.0));
}

std::string instance_to_json(const Rsf7Instance& instance) {
  nlohmann::json j;
  j["d"] = instance.d;
  j["seed"] = instance.seed;
  j["alpha"] = instance.alpha;
  j["beta"] = instance.beta;
  j["o"] = std::vector<double>(instance.shift.data(),
                               instance.shift.data() + instance.d);
  auto rows = [](const Eigen::MatrixXd& m) {
    std::vector<double> flat;
    flat.reserve(static_cast<std::size_t>(m.size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) flat.push_back(m(r, c));
    }
    return flat;
  };
  j["m1"] = rows(instance.rotation1);
  j["m2"] = rows(instance.rotation2);
  return j.dump(2);
}

Rsf7Instance instance_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Rsf7Instance inst;
  inst.d = j.at("d").get<int>();
  if (inst.d < 2) throw std::invalid_argument("rsf7 requires dimension >= 2");
  inst.seed = j.at("seed").get<std::uint64_t>();
  inst.alpha = j.at("alpha").get<double>();
  inst.beta = j.at("beta").get<double>();
  const auto o = j.at("o").get<std::vector<double>>();
  const auto m1 = j.at("m1").get<std::vector<double>>();
  const auto m2 = j.at("m2").get<std::vector<double>>();
  const auto d = static_cast<std::size_t>(inst.d);
  if (o.size() != d || m1.size() != d * d || m2.size() != d * d) {
    throw std::invalid_argument("instance fields have inconsistent sizes");
  }
  inst.shift = Eigen::Map<const Eigen::VectorXd>(o.data(), inst.d);
  inst.rotation1.resize(inst.d, inst.d);
  inst.rotation2.resize(inst.d, inst.d);
  for (int r = 0; r < inst.d; ++r) {
    for (int c = 0; c < inst.d; ++c) {
      inst.rotation1(r, c) = m1[static_cast<std::size_t>(r) * d + c];
      inst.rotation2(r, c) = m2[static_cast<std::size_t>(r) * d + c];
    }
  }
  return inst;
}

void save_instance(const std::string& path, const Rsf7Instance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open instance file: " + path);
  out << instance_to_json(instance) << '\n';
  if (!out) throw std::runtime_error("failed writing instance file: " + path);
}

Rsf7Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return instance_from_json(ss.str());
}

}  // namespace rseda
