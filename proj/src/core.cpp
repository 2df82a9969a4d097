#include "rseda/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rseda {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper,
               std::vector<Scale> scales)
    : lower_(std::move(lower)),
      upper_(std::move(upper)),
      scales_(std::move(scales)) {
  if (lower_.empty() || lower_.size() != upper_.size()) {
    throw std::invalid_argument("bounds dimension mismatch");
  }
  if (scales_.empty()) {
    scales_.assign(lower_.size(), Scale::linear);
  }
  if (scales_.size() != lower_.size()) {
    throw std::invalid_argument("bounds dimension mismatch");
  }
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]) ||
        !(lower_[i] < upper_[i])) {
      throw std::invalid_argument("bounds require lower < upper");
    }
    if (scales_[i] == Scale::log && !(lower_[i] > 0.0)) {
      throw std::invalid_argument("logarithmic scale requires positive lower bound");
    }
  }
  scaled_lower_.resize(lower_.size());
  scaled_upper_.resize(lower_.size());
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (scales_[i] == Scale::log) {
      scaled_lower_[i] = std::log(lower_[i]);
      scaled_upper_[i] = std::log(upper_[i]);
    } else {
      scaled_lower_[i] = lower_[i];
      scaled_upper_[i] = upper_[i];
    }
  }
}

std::vector<double> Bounds::to_scaled(const std::vector<double>& params) const {
  std::vector<double> out(params);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (scales_[i] == Scale::log) out[i] = std::log(out[i]);
  }
  return out;
}

std::vector<double> Bounds::from_scaled(const std::vector<double>& scaled) const {
  std::vector<double> out(scaled);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (scales_[i] == Scale::log) out[i] = std::exp(out[i]);
  }
  return out;
}

std::vector<double> Bounds::repair_scaled(std::vector<double> scaled) const {
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    const double lo = scaled_lower_[i];
    const double hi = scaled_upper_[i];
    if (scales_[i] == Scale::circular) {
      const double period = hi - lo;
      double y = std::fmod(scaled[i] - lo, period);
      if (y < 0.0) y += period;
      scaled[i] = lo + y;
    } else {
      scaled[i] = std::min(std::max(scaled[i], lo), hi);
    }
  }
  return scaled;
}

bool Bounds::contains(const std::vector<double>& params) const {
  if (params.size() != lower_.size()) return false;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!(params[i] >= lower_[i] && params[i] <= upper_[i])) return false;
  }
  return true;
}

std::vector<double> clamp_to_bounds(std::vector<double> params,
                                    const Bounds& bounds) {
  if (params.size() != bounds.dimension()) {
    throw std::invalid_argument("parameter arity mismatch");
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    params[i] = std::min(std::max(params[i], bounds.lower()[i]),
                         bounds.upper()[i]);
  }
  return params;
}

Objective::Objective(std::size_t arity, Fn fn)
    : arity_(arity), fn_(std::move(fn)) {
  if (arity_ == 0 || !fn_) throw std::invalid_argument("invalid objective");
}

double Objective::evaluate(const std::vector<double>& params) {
  if (params.size() != arity_) {
    throw std::invalid_argument("parameter arity mismatch");
  }
  ++count_;
  return fn_(params);
}

std::vector<Solution> truncation_select(const std::vector<Solution>& solutions,
                                        double fraction) {
  if (solutions.empty()) throw std::invalid_argument("empty population");
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("selection fraction must lie in (0,1]");
  }
  const auto keep = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(solutions.size())));
  std::vector<Solution> sorted(solutions);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Solution& a, const Solution& b) {
                     return a.fitness > b.fitness;
                   });
  sorted.resize(keep);
  return sorted;
}

Pps::Pps(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ == 0) throw std::invalid_argument("pps capacity must be positive");
}

void Pps::update(std::vector<Solution> candidates) {
  if (candidates.empty()) return;
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Solution& a, const Solution& b) {
                     return a.fitness > b.fitness;
                   });
  std::vector<Solution> merged;
  merged.reserve(members_.size() + candidates.size());
  // Existing members were inserted earlier, so they win fitness ties.
  std::merge(members_.begin(), members_.end(), candidates.begin(),
             candidates.end(), std::back_inserter(merged),
             [](const Solution& a, const Solution& b) {
               return a.fitness > b.fitness;
             });
  if (merged.size() > capacity_) merged.resize(capacity_);
  members_ = std::move(merged);
}

Eigen::MatrixXd Pps::as_matrix() const {
  if (members_.empty()) return {};
  const auto d = members_.front().params.size();
  Eigen::MatrixXd m(static_cast<Eigen::Index>(members_.size()),
                    static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < members_.size(); ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          members_[r].params[c];
    }
  }
  return m;
}

}  // namespace rseda
