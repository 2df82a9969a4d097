#ifndef RSEDA_CORE_HPP
#define RSEDA_CORE_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Core>

namespace rseda {

/// Per-dimension coordinate handling. Log dimensions are searched in natural
/// log space; circular dimensions are linear but out-of-range samples wrap
/// modulo the period instead of clipping (used for angles, where clipping
/// would pile samples onto the boundary).
enum class Scale { linear, log, circular };

/// A box search space with per-dimension scale flags.
class Bounds {
 public:
  Bounds(std::vector<double> lower, std::vector<double> upper,
         std::vector<Scale> scales = {});

  std::size_t dimension() const { return lower_.size(); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  const std::vector<Scale>& scales() const { return scales_; }

  /// Box corners in optimizer (scaled) coordinates.
  const std::vector<double>& scaled_lower() const { return scaled_lower_; }
  const std::vector<double>& scaled_upper() const { return scaled_upper_; }

  std::vector<double> to_scaled(const std::vector<double>& params) const;
  std::vector<double> from_scaled(const std::vector<double>& scaled) const;

  /// Pulls a scaled-space point back into the box: clip for linear/log
  /// dimensions, wrap for circular ones.
  std::vector<double> repair_scaled(std::vector<double> scaled) const;

  bool contains(const std::vector<double>& params) const;

 private:
  std::vector<double> lower_, upper_;
  std::vector<Scale> scales_;
  std::vector<double> scaled_lower_, scaled_upper_;
};

/// Clip every coordinate into [lower, upper]. Idempotent; identity on
/// in-bounds input.
std::vector<double> clamp_to_bounds(std::vector<double> params,
                                    const Bounds& bounds);

/// A parameter vector with its objective value. Larger fitness is fitter;
/// the toolkit maximizes throughout.
struct Solution {
  std::vector<double> params;
  double fitness = -std::numeric_limits<double>::infinity();
};

/// Fitness evaluation contract: a pure function of the parameter vector plus
/// an exact evaluation counter.
class Objective {
 public:
  using Fn = std::function<double(const std::vector<double>&)>;

  Objective(std::size_t arity, Fn fn);

  double evaluate(const std::vector<double>& params);

  std::size_t arity() const { return arity_; }
  std::uint64_t evaluation_count() const { return count_; }

 private:
  std::size_t arity_;
  Fn fn_;
  std::uint64_t count_ = 0;
};

/// Keep the ceil(fraction * n) fittest solutions, fitness descending.
/// Ties resolve by input order (stable).
std::vector<Solution> truncation_select(const std::vector<Solution>& solutions,
                                        double fraction);

/// Pool of Promising Solutions: a bounded archive of the fittest solutions
/// seen so far, sorted by fitness descending with stable insertion-order
/// tie-break (earlier members outrank equal-fitness newcomers).
class Pps {
 public:
  Pps() = default;
  explicit Pps(std::size_t capacity);

  /// Members become the `capacity` fittest of (members ∪ candidates).
  void update(std::vector<Solution> candidates);

  const std::vector<Solution>& members() const { return members_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const Solution& best() const { return members_.front(); }

  /// Members as an a×d matrix, one row per solution.
  Eigen::MatrixXd as_matrix() const;

 private:
  std::size_t capacity_ = 0;
  std::vector<Solution> members_;
};

}  // namespace rseda

#endif  // RSEDA_CORE_HPP
