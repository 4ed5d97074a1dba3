#pragma once

// The dark-ring construction and its dark-group variant: requirements
// L_0, D_0, L_1, D_1, ... acting on a homogeneous ideal H of F.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ceerlab/ceer.hpp"
#include "ceerlab/golod_shafarevich.hpp"
#include "ceerlab/ideal.hpp"
#include "ceerlab/lab/run_log.hpp"
#include "ceerlab/units.hpp"

namespace ceerlab {

struct DarkRingParams {
  std::uint32_t p = 2;
  std::size_t maxdeg = HomogeneousIdeal::kDefaultMaxDegree;
  Stage stages = 500;
  Rational epsilon{1, 4};
  /// Build the unit-group variant: H starts as {x^N, y^N} and T_n holds
  /// unit words.
  bool group = false;
  std::size_t unit_exponent = 13;

  /// Throws InvalidInput for inadmissible values.
  void validate() const;
};

/// One element of a test set W_m. For unit words `poly` is the expansion
/// below the horizon.
struct TestWord {
  Poly poly;
  std::optional<UnitWord> unit;
  Stage stage = 0;

  std::string text() const;
};

struct DarkRingInputs {
  /// U^[n]
  std::vector<StagedSet> u_columns;
  /// W_m, each in enumeration order with non-decreasing stages.
  std::vector<std::vector<TestWord>> w;
};

struct LightEntry {
  Monomial monomial;
  std::optional<UnitWord> unit;
  Stage stage = 0;
};

struct CollapseAction {
  Stage stage = 0;
  std::size_t f_index = 0;
  std::size_t g_index = 0;
  std::size_t k_s = 0;
  std::vector<Poly> components;
};

struct DarkRingRun {
  DarkRingParams params;
  RunLog log;
  HomogeneousIdeal ideal;
  /// Every generator of H with the stage it was enumerated.
  std::vector<StagedRelator> relators;
  std::vector<std::vector<LightEntry>> T;
  std::vector<std::set<std::size_t>> protected_degrees;
  std::vector<std::optional<CollapseAction>> collapses;
  std::size_t stages_audited = 0;
  /// (stage, L_n) pairs where L_n had work but its fresh degree was above
  /// the horizon.
  std::size_t horizon_blocked = 0;

  HomogeneousIdeal ideal_at(Stage stage) const;
  std::string summary() const;
};

DarkRingRun run_dark_ring(const DarkRingInputs& inputs, const DarkRingParams& params);
DarkRingRun run_dark_group(const DarkRingInputs& inputs, DarkRingParams params);

/// Word-problem table of F/H_s on an enumerated list of polynomials,
/// comparing canonical forms at the horizon at each stage in `stages`.
CeerTable ring_word_problem(const DarkRingRun& run, const std::vector<Poly>& elements,
                            std::span<const Stage> stages);

}  // namespace ceerlab
