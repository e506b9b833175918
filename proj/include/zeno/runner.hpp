#pragma once

#include <vector>

#include "zeno/analysis.hpp"
#include "zeno/config.hpp"

namespace zeno {

struct SweepCurve {
  ProtocolSpec protocol;
  std::vector<double> survival;
  std::vector<double> rate;
  CurveAnalysis analysis;  // empty when the grid is too short to classify
};

struct SweepResult {
  std::vector<double> taus;
  std::vector<SweepCurve> curves;
};

// Evaluates every protocol over the tau grid. The per-tau transition set
// (the only expensive part; it holds the bath integrals) is computed once
// and shared across protocols. tau points are distributed over workers by
// index, each writing its pre-sized slot, so results are byte-identical for
// every thread count. Errors raised at some tau are rethrown on the calling
// thread with the offending tau prepended; when several tau points fail, the
// smallest one wins so the report is deterministic too.
SweepResult run_sweep(const RunConfig& config);

}  // namespace zeno
