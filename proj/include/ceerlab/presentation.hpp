#pragma once

// Abelian presentations on generators x_0, x_1, ... with a triangular
// stream of relations x_j = w(x_0, ..., x_{j-1}).

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ceerlab/errors.hpp"
#include "ceerlab/words.hpp"

namespace ceerlab {

enum class RelationType { collapse_to_one = 1, equal = 2, inverse = 3, product = 4 };

struct Relation {
  RelationType type = RelationType::collapse_to_one;
  Natural lhs = 0;
  /// Right-hand side as an exponent vector over generators below lhs.
  Exponents rhs;
  Stage stage = 0;

  /// "x12 = x10^-1", "x5 = 1", "x98 = x10^-1 x12^-1 ...".
  std::string text() const;
};

/// Parses Relation::text output. The type is inferred from the shape.
Relation parse_relation(std::string_view text, Stage stage = 0);

enum class GeneratorStatus { level, free, determined, collapsed };
std::string status_name(GeneratorStatus s);

class StagedPresentation {
 public:
  explicit StagedPresentation(Natural generator_count = 0);

  Natural generator_count() const noexcept { return count_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  std::size_t relation_count(Stage stage) const;

  /// Validates shape, stage monotonicity, a single LHS per generator and
  /// triangularity before appending. Throws InvariantViolation or
  /// MonotonicityError naming the relation.
  void add_relation(Relation r);
  /// Index of the relation with this LHS if it is enumerated by `stage`.
  std::optional<std::size_t> lhs_relation(Natural g, Stage stage = ~Stage{0}) const;

  void set_status(Natural g, GeneratorStatus s, Stage stage);
  GeneratorStatus status(Natural g, Stage stage = ~Stage{0}) const;

 private:
  Natural count_;
  std::vector<Relation> relations_;
  std::unordered_map<Natural, std::size_t> lhs_;
  std::unordered_map<Natural, std::vector<std::pair<Stage, GeneratorStatus>>> status_;
};

/// Canonical form of w in G_stage: every generator that is an LHS by
/// `stage` is replaced by its right-hand side, highest index first.
Exponents staged_abelian_wp(const StagedPresentation& P, const Exponents& w, Stage stage);

/// First offending relation if the list is not triangular or repeats an
/// LHS, else nullopt.
std::optional<std::string> triangularity_defect(const std::vector<Relation>& relations);

}  // namespace ceerlab
