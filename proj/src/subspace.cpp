#include "rseda/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rseda {

Subspace partition_row(const CorrelationMatrix& c, std::size_t row, double r) {
  const auto d = static_cast<std::size_t>(c.entries.rows());
  if (row >= d) throw std::invalid_argument("row index out of range");

  std::vector<double> magnitude(d);
  for (std::size_t j = 0; j < d; ++j) {
    magnitude[j] = std::abs(c.entries(static_cast<Eigen::Index>(row),
                                      static_cast<Eigen::Index>(j)));
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Descending magnitude; the anchor wins exact-magnitude ties (it must stay
  // in its own subspace), remaining ties go to the lower index.
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (magnitude[a] != magnitude[b]) return magnitude[a] > magnitude[b];
    if ((a == row) != (b == row)) return a == row;
    return a < b;
  });

  double sum = 0.0;
  for (double m : magnitude) sum += m;  // >= 1 since the diagonal is 1

  Subspace sub;
  sub.anchor = row;
  double cumulative = 0.0;
  for (std::size_t m = 0; m < d; ++m) {
    sub.indices.push_back(order[m]);
    cumulative += magnitude[order[m]];
    if (cumulative / sum >= r) break;
  }
  return sub;
}

std::vector<Subspace> partition_subspaces(const CorrelationMatrix& c,
                                          Rng& rng) {
  const auto d = static_cast<std::size_t>(c.entries.rows());
  std::vector<Subspace> subspaces;
  subspaces.reserve(d);
  for (std::size_t row = 0; row < d; ++row) {
    subspaces.push_back(partition_row(c, row, rng.uniform()));
  }
  return subspaces;
}

}  // namespace rseda
