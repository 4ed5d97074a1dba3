#pragma once

// Declarative scenario files:
//
//   construction = dark-ring
//   stages = 300
//
//   [set U 0]                 column 0 of the set family U
//   4 @ 2
//   stream every=3 start=1    values 0, 1, 2, ... at stages 1, 4, 7, ...
//
//   [polys W 1]               test words as polynomials ([units W m] for
//   x*y @ 3                   unit words)
//   template=y^{n} n0=2 every=1 start=1
//
//   [ceer U]
//   bound = 16
//   0 1 @ 5
//
//   [phi 0]                   stage tables for phi_e
//   0 : x100 @ 20
//   * : x7 @ 30
//
//   [functional 0]            halting records for a lowness requirement
//   since=3 use=5
//
// '#' starts a comment. Streams run up to `until`, default the stage budget.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ceerlab/ceer.hpp"
#include "ceerlab/lab/dark_ring.hpp"
#include "ceerlab/lab/run_log.hpp"
#include "ceerlab/lab/sigma3.hpp"
#include "ceerlab/lab/star_universal.hpp"
#include "ceerlab/lab/sug_indexset.hpp"

namespace ceerlab {

struct StreamSpec {
  /// Text with "{n}" placeholders; empty for plain numeric streams.
  std::string pattern;
  bool monomials = false;
  Natural n0 = 0;
  Stage every = 1;
  Stage start = 1;
  std::optional<Stage> until;
  std::size_t line = 0;
};

struct Located {
  std::string text;
  Stage stage = 0;
  std::size_t line = 0;
};

struct SetSpec {
  std::vector<Located> entries;
  std::vector<StreamSpec> streams;
};

struct WordListSpec {
  bool units = false;
  std::vector<Located> entries;
  std::vector<StreamSpec> streams;
};

struct Scenario {
  std::string name;
  std::map<std::string, Located> params;
  std::map<std::string, std::map<std::size_t, SetSpec>> sets;
  std::map<std::string, std::map<std::size_t, WordListSpec>> words;
  std::map<std::string, CeerTable> ceers;
  std::map<std::size_t, PhiStub> phis;
  std::map<std::size_t, FunctionalStub> functionals;

  std::string construction() const;
  /// Command-line style overrides (line 0).
  void set_param(const std::string& key, const std::string& value);
};

/// Throws ParseError carrying the line number.
Scenario parse_scenario(std::istream& in, const std::string& name = "scenario");
Scenario load_scenario(const std::string& path);

struct RunOutcome {
  RunLog log;
  std::string summary;
};

/// Validates the parameters (ParseError with the parameter's line) and
/// runs the named construction.
RunOutcome run_scenario(const Scenario& scenario);

DarkRingInputs dark_ring_inputs(const Scenario& s, const DarkRingParams& p);
DarkRingParams dark_ring_params(const Scenario& s);
StarParams star_params(const Scenario& s);
StarInputs star_inputs(const Scenario& s);
Sigma3Params sigma3_params(const Scenario& s);
Sigma3Inputs sigma3_inputs(const Scenario& s);
SugParams sug_params(const Scenario& s);
SugInputs sug_inputs(const Scenario& s);

}  // namespace ceerlab
