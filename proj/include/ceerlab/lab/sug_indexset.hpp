#pragma once

// Two families of abelian groups (G_l) and (H_l): C_k drives a fresh
// star-universal construction in some G_l, D_<k,k'> codes a fixed ceer
// into some H_l, and L_m restrains new relators in the groups below the
// use of a halted computation. Priority: C_0, L_0, D_0, C_1, L_1, D_1, ...

#include <optional>
#include <string>
#include <vector>

#include "ceerlab/ceer.hpp"
#include "ceerlab/lab/run_log.hpp"
#include "ceerlab/lab/star_universal.hpp"

namespace ceerlab {

struct SugParams {
  Stage stages = 200;
  StarParams star;
};

struct SugInputs {
  std::vector<StagedSet> v_columns;
  std::vector<StagedSet> u_columns;
  /// Inputs every G_l's star-universal construction runs on.
  StarInputs star;
  /// The fixed table coded into the H_l.
  CeerTable coded{32};
  /// Halting records (since, use); a record stands while no relator has
  /// entered a group with index below its use since it halted.
  std::vector<FunctionalStub> functionals;
};

struct CodedGroup {
  CeerTable table{32};
  /// Coding steps taken; the table has been copied through stage clock-1.
  Stage clock = 0;
};

struct SugRun {
  SugParams params;
  RunLog log;
  std::vector<std::optional<StarUniversalConstruction>> g;
  std::vector<std::optional<CodedGroup>> h;
  std::vector<std::optional<Natural>> c_group;
  std::vector<std::optional<Natural>> d_group;
  std::vector<std::optional<FunctionalStub::Halt>> restraints;
  /// Stages at which group l (G or H) received relators.
  std::vector<std::vector<Stage>> g_relator_stages;
  std::vector<std::vector<Stage>> h_relator_stages;

  /// Does the halting record still stand at `stage`?
  bool standing(const FunctionalStub::Halt& h, Stage stage) const;
  std::string summary() const;
};

SugRun run_sug_indexset(const SugInputs& inputs, const SugParams& params);

}  // namespace ceerlab
