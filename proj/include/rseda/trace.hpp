#ifndef RSEDA_TRACE_HPP
#define RSEDA_TRACE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rseda/core.hpp"

namespace rseda {

enum class TerminationReason { converged, budget_exhausted };

struct TracePoint {
  std::uint64_t evaluations = 0;
  double best_fitness = 0.0;
};

/// Outcome of an optimizer run: the best solution (natural units), the
/// convergence trace (one point per improvement and per iteration boundary,
/// best fitness non-decreasing), and why the run stopped.
struct RunResult {
  Solution best;
  std::vector<TracePoint> trace;
  TerminationReason reason = TerminationReason::converged;
  std::uint64_t evaluations_used = 0;
};

const char* to_string(TerminationReason reason);

/// CSV with header `evals,best_fitness`. Doubles are written round-trip
/// exact, so identical runs give byte-identical files.
void write_trace_csv(const std::string& path,
                     const std::vector<TracePoint>& trace);

}  // namespace rseda

#endif  // RSEDA_TRACE_HPP
