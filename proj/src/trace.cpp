#include "rseda/trace.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rseda {

const char* to_string(TerminationReason reason) {
  switch (reason) {
    case TerminationReason::converged:
      return "converged";
    case TerminationReason::budget_exhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

void write_trace_csv(const std::string& path,
                     const std::vector<TracePoint>& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open trace file: " + path);
  out << "evals,best_fitness\n";
  char buf[64];
  for (const auto& p : trace) {
    std::snprintf(buf, sizeof(buf), "%.17g", p.best_fitness);
    out << p.evaluations << ',' << buf << '\n';
  }
  if (!out) throw std::runtime_error("failed writing trace file: " + path);
}

}  // namespace rseda
