#pragma once

// A uniform join E = (+)_j X^j built by coding requirements C_k, which copy
// a universal ceer U into a column, and lowness requirements L_m, which
// restrain the use of halted oracle computations.

#include <optional>
#include <string>
#include <vector>

#include "ceerlab/ceer.hpp"
#include "ceerlab/lab/run_log.hpp"

namespace ceerlab {

struct Sigma3Params {
  Stage stages = 500;
  /// Indices of E materialized when the join is formed.
  Natural join_bound = 1024;
};

struct Sigma3Inputs {
  /// W^[k]
  std::vector<StagedSet> w_columns;
  CeerTable u{64};
  std::vector<FunctionalStub> functionals;
};

struct Sigma3Run {
  Sigma3Params params;
  RunLog log;
  std::vector<CeerTable> columns;
  /// Column currently assigned to C_k.
  std::vector<std::optional<Natural>> assigned;
  /// Restraint currently held by L_m.
  std::vector<std::optional<FunctionalStub::Halt>> restraints;

  CeerTable join() const;
  /// Partition of [0, bound) of the join at `stage`, computed from the
  /// columns without forming the join.
  Partition oracle(Stage stage, Natural bound) const;
  std::string summary() const;
};

Sigma3Run run_sigma3_ceer(const Sigma3Inputs& inputs, const Sigma3Params& params);

}  // namespace ceerlab
