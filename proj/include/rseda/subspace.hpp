#ifndef RSEDA_SUBSPACE_HPP
#define RSEDA_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "rseda/correlation.hpp"
#include "rseda/rng.hpp"

namespace rseda {

/// An ordered set of coordinate indices. The anchor is the correlation-matrix
/// row that generated the subspace and is always the first index.
struct Subspace {
  std::vector<std::size_t> indices;
  std::size_t anchor = 0;

  std::size_t size() const { return indices.size(); }
};

/// Subspace for one correlation row with an explicit roulette draw r.
/// Row entries are taken by magnitude, sorted descending (anchor first on
/// exact ties, then lower index), normalized by the row sum, and the subspace
/// is the shortest prefix whose cumulative mass reaches r.
Subspace partition_row(const CorrelationMatrix& c, std::size_t row, double r);

/// One subspace per correlation row, in row order, consuming one uniform
/// draw per row from rng.
std::vector<Subspace> partition_subspaces(const CorrelationMatrix& c, Rng& rng);

}  // namespace rseda

#endif  // RSEDA_SUBSPACE_HPP
