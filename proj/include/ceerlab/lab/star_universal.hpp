#pragma once

// An abelian group G on generators x_k (k < B^(levels+1)) with words
//   v_i = prod_{k in block i} a x_k   in G * Z/2Z,
// kept so that v_i = v_j iff i U j, while requirements R_e diagonalize
// against phi_e being a reduction of an auxiliary ceer X to W_G.
//
// Block 0 is [0, B) and block j >= 1 is [B^j, B^(j+1)).

#include <optional>
#include <string>
#include <vector>

#include "ceerlab/ceer.hpp"
#include "ceerlab/free_product.hpp"
#include "ceerlab/lab/run_log.hpp"
#include "ceerlab/presentation.hpp"

namespace ceerlab {

/// phi_e as an explicit table: argument -> (word in the x_k, stage of
/// convergence). A wildcard entry answers every argument without its own
/// entry.
struct PhiStub {
  struct Value {
    GroupWord word;
    Stage stage = 0;
  };
  std::map<Natural, Value> values;
  std::optional<Value> wildcard;

  std::optional<GroupWord> at(Natural arg, Stage stage) const;
};

struct StarParams {
  Natural base = 10;
  std::size_t levels = 2;
  Stage stages = 500;
  /// Working bound of the auxiliary ceer X.
  Natural x_bound = 64;

  /// Requires an even base and, for every level j, more than B^j level-j
  /// generators left after 4 j 2^j removals. Throws InvalidInput.
  void validate() const;
  Natural block_begin(std::size_t j) const;
  Natural block_end(std::size_t j) const;
  Natural generator_count() const { return block_end(levels); }
  std::size_t level_of(Natural generator) const;
};

struct StarInputs {
  CeerTable u{16};
  std::vector<PhiStub> phis;
};

struct LevelCensus {
  std::size_t level = 0;
  std::size_t free = 0;
  std::size_t determined = 0;
  std::size_t collapsed = 0;
  bool operator==(const LevelCensus&) const = default;
};

enum class DiagonalOutcome { waiting, equal, won, assumed };

struct DiagonalState {
  Natural a = 0;
  Natural b = 0;
  DiagonalOutcome outcome = DiagonalOutcome::waiting;
  /// Level K under which a Case-2 assumption was made.
  std::size_t assumed_level = 0;
  Stage initialized_at = 0;
};

class StarUniversalConstruction {
 public:
  /// Validates parameters and performs the stage-0 initialization.
  StarUniversalConstruction(StarInputs inputs, StarParams params);

  /// Runs one more stage.
  void step();
  /// Runs until params().stages.
  void run();

  Stage stage() const noexcept { return stage_; }
  const StarParams& params() const noexcept { return params_; }
  const StarInputs& inputs() const noexcept { return in_; }
  const StagedPresentation& presentation() const noexcept { return G_; }
  const CeerTable& x() const noexcept { return X_; }
  const RunLog& log() const noexcept { return log_; }
  const std::vector<DiagonalState>& requirements() const noexcept { return R_; }
  /// Current level-j generators in index order.
  const std::vector<Natural>& level_sequence(std::size_t j) const { return seq_.at(j); }

  std::string summary() const;

 private:
  Exponents reduce(const Exponents& w) const;
  std::string label(Natural g, GeneratorStatus s) const;
  void set_status(Natural g, GeneratorStatus s, LogRecord& rec);
  void emit(Relation r, LogRecord& rec);
  void respond_to_u();
  bool act(std::size_t e);
  void reinitialize(std::size_t e);
  void check_budget(const std::string& requirement) const;
  std::optional<std::size_t> top_level(const Exponents& w) const;

  StarInputs in_;
  StarParams params_;
  Stage stage_ = 0;
  StagedPresentation G_;
  CeerTable X_;
  RunLog log_;
  std::vector<std::vector<Natural>> seq_;
  std::vector<std::pair<Natural, Natural>> det_;
  std::vector<bool> responded_;
  std::vector<DiagonalState> R_;
  Natural next_witness_ = 0;
};

StarUniversalConstruction run_star_universal(const StarInputs& inputs, const StarParams& params);

/// v_i as a word of G * Z/2Z (G is factor 0, "a" factor 1).
FreeProductWord v_word(const StarParams& params, std::size_t i);
/// v_i = v_j in G_stage * Z/2Z.
bool v_equal(const StagedPresentation& G, const StarParams& params, std::size_t i, std::size_t j,
             Stage stage);
LevelCensus level_census(const StagedPresentation& G, const StarParams& params, std::size_t j,
                         Stage stage);

}  // namespace ceerlab
