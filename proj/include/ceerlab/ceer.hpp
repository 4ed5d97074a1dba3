#pragma once

// Stage-enumerated equivalence relations on a bounded prefix of the
// naturals, together with the reduction order's basic operations.
//
// A CeerTable never asserts a negative fact: a query at stage s answers
// "related" or "not yet related". Every table works on [0, bound).

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ceerlab/errors.hpp"

namespace ceerlab {

inline constexpr Natural kDefaultBound = 4096;
inline constexpr Stage kFinalStage = std::numeric_limits<Stage>::max();

/// Cantor pairing <j,n> = (j+n)(j+n+1)/2 + n. Used for every join and
/// product in the library.
constexpr Natural cantor_pair(Natural j, Natural n) {
  return (j + n) * (j + n + 1) / 2 + n;
}
std::pair<Natural, Natural> cantor_unpair(Natural z);

struct StagedPair {
  Natural a = 0;
  Natural b = 0;
  Stage stage = 0;
  bool operator==(const StagedPair&) const = default;
};

/// Immutable partition of [0, bound): each index maps to the least
/// element of its class.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Natural> least);

  Natural bound() const noexcept { return least_.size(); }
  Natural least(Natural x) const;
  bool related(Natural a, Natural b) const { return least(a) == least(b); }
  std::size_t class_count() const;
  /// Classes sorted by least element, members ascending.
  std::vector<std::vector<Natural>> classes() const;
  /// The partition induced on [0, bound) (bound <= this->bound()).
  Partition restricted(Natural bound) const;
  const std::vector<Natural>& least_elements() const noexcept { return least_; }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<Natural> least_;
};

class CeerTable {
 public:
  explicit CeerTable(Natural bound = kDefaultBound);

  static CeerTable identity(Natural bound = kDefaultBound) {
    return CeerTable(bound);
  }
  /// Every pair of indices related from `stage` on.
  static CeerTable all_related(Natural bound, Stage stage = 0);

  Natural bound() const noexcept { return bound_; }
  const std::vector<StagedPair>& pairs() const noexcept { return pairs_; }
  /// Largest stage carried by any pair (0 for an empty table).
  Stage last_stage() const noexcept;
  /// Distinct stages at which pairs were enumerated, ascending.
  std::vector<Stage> stages() const;

  /// Enumerates (a,b) at `stage`. Throws MonotonicityError when `stage`
  /// precedes a stage already present and RangeError for indices outside
  /// the bound.
  CeerTable& add(Natural a, Natural b, Stage stage);

  bool related(Natural a, Natural b, Stage stage = kFinalStage) const;
  /// Least element of x's class at `stage`.
  Natural representative(Natural x, Stage stage = kFinalStage) const;
  Partition snapshot(Stage stage = kFinalStage) const;

  bool operator==(const CeerTable& other) const {
    return bound_ == other.bound_ && pairs_ == other.pairs_;
  }

 private:
  void check_index(Natural x) const;
  Natural root(Natural x, Stage stage) const;
  Natural least_of_root(Natural r, Stage stage) const;

  Natural bound_;
  std::vector<StagedPair> pairs_;
  // Union by rank without path compression; link_stage_[x] is the stage at
  // which x stopped being a root. Stages increase along every root path.
  std::vector<Natural> parent_;
  std::vector<Stage> link_stage_;
  std::vector<std::uint8_t> rank_;
  // Stage-stamped history of each root's least member, when it differs
  // from the root itself.
  std::unordered_map<Natural, std::vector<std::pair<Stage, Natural>>> least_changes_;
};

/// Value-returning form of CeerTable::add.
CeerTable assert_pair(CeerTable ceer, Natural a, Natural b, Stage stage);

/// A c.e. set given by its enumeration: values paired with the stage at
/// which they appear. Entries keep enumeration order.
class StagedSet {
 public:
  struct Entry {
    Natural value = 0;
    Stage stage = 0;
    bool operator==(const Entry&) const = default;
  };

  StagedSet() = default;
  StagedSet(std::initializer_list<Entry> entries);

  void add(Natural value, Stage stage);
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t count_at(Stage stage) const;
  std::vector<Natural> elements_at(Stage stage) const;
  bool contains(Natural value, Stage stage = kFinalStage) const;
  /// Stage at which `value` first appears, if it does.
  std::optional<Stage> entry_stage(Natural value) const;

 private:
  std::vector<Entry> entries_;
};

/// A partial computable map given as a table. Entries never change once
/// they converge.
class ReductionFn {
 public:
  struct Entry {
    Natural value = 0;
    Stage stage = 0;
  };

  explicit ReductionFn(Natural totality_bound = 0)
      : totality_bound_(totality_bound) {}

  static ReductionFn identity(Natural bound);
  static ReductionFn constant(Natural bound, Natural value);
  static ReductionFn tabulate(Natural bound,
                              const std::function<Natural(Natural)>& fn);

  /// Records f(n) = value from `stage` on. Redefining with a different
  /// value throws InvariantViolation.
  void define(Natural n, Natural value, Stage stage = 0);
  std::optional<Natural> at(Natural n, Stage stage = kFinalStage) const;
  /// Converged value or PartialityError naming n.
  Natural operator()(Natural n) const;
  Natural totality_bound() const noexcept { return totality_bound_; }
  void set_totality_bound(Natural bound) { totality_bound_ = bound; }
  const std::map<Natural, Entry>& table() const noexcept { return table_; }
  /// Throws PartialityError for the first argument below `bound` without
  /// a value.
  void require_total(Natural bound) const;

 private:
  Natural totality_bound_;
  std::map<Natural, Entry> table_;
};

/// Stand-in for an oracle computation phi_m^{E_s}(m).
///
/// Each halting record (since, use) says the computation halted at stage
/// `since` after consulting the oracle only on indices below `use`. At a
/// later stage the record still stands exactly when the oracle's partition
/// of [0, use) is unchanged; adding pairs elsewhere or advancing the stage
/// never destroys it.
class FunctionalStub {
 public:
  struct Halt {
    Stage since = 0;
    Natural use = 0;
    bool operator==(const Halt&) const = default;
  };
  /// Partition of [0, bound) as seen at a stage.
  using Oracle = std::function<Partition(Stage, Natural)>;

  FunctionalStub() = default;
  FunctionalStub(Natural id, std::vector<Halt> halts);

  Natural id() const noexcept { return id_; }
  const std::vector<Halt>& halts() const noexcept { return halts_; }
  /// Latest halting record still standing at `stage`, if any.
  std::optional<Halt> evaluate(const Oracle& oracle, Stage stage) const;
  std::optional<Halt> evaluate(const CeerTable& oracle, Stage stage) const;

 private:
  Natural id_ = 0;
  std::vector<Halt> halts_;
};

CeerTable uniform_join(std::span<const CeerTable> columns,
                       Natural bound = kDefaultBound);
CeerTable product(const CeerTable& a, const CeerTable& b,
                  Natural bound = kDefaultBound);
/// i ~ j iff f(i) R f(j), on [0, bound) with bound defaulting to the
/// reduction's totality bound.
CeerTable pullback(const ReductionFn& f, const CeerTable& r,
                   std::optional<Natural> bound = std::nullopt);

struct ReductionReport {
  Natural bound = 0;
  Stage stage = 0;
  /// i E j at the stage, but f(i), f(j) are not related even by R's final
  /// stage. Conclusive.
  std::vector<std::pair<Natural, Natural>> positive_violations;
  /// f(i) R f(j) at the stage while i, j are not yet E-related. Only
  /// inconclusive evidence: E may still catch up.
  std::vector<std::pair<Natural, Natural>> unaligned_so_far;

  bool no_violations() const { return positive_violations.empty(); }
};

ReductionReport verify_reduction(const ReductionFn& f, const CeerTable& e,
                                 const CeerTable& r, Natural bound,
                                 Stage stage);

std::optional<std::pair<Natural, Natural>> darkness_probe(const CeerTable& e,
                                                          const StagedSet& w,
                                                          Stage stage);

bool lightness_witness_check(const CeerTable& e, std::span<const Natural> t,
                             Stage stage);

/// Builds the table on [0, bound) whose stage-s classes are the fibres of
/// key(x, s), evaluated at each stage in `stages`. Keys must only merge
/// as the stage grows; a split throws InvariantViolation.
template <class KeyFn>
CeerTable table_from_classifier(Natural bound, std::span<const Stage> stages,
                                KeyFn&& key) {
  CeerTable out(bound);
  using Key = std::decay_t<decltype(key(Natural{}, Stage{}))>;
  for (Stage s : stages) {
    std::map<Key, Natural> first;
    std::vector<Key> keys;
    keys.reserve(bound);
    for (Natural x = 0; x < bound; ++x) {
      keys.push_back(key(x, s));
      auto [it, inserted] = first.emplace(keys.back(), x);
      if (!inserted && !out.related(it->second, x, s)) out.add(it->second, x, s);
    }
    for (Natural x = 0; x < bound; ++x) {
      Natural rep = out.representative(x, s);
      if (!(keys[rep] == keys[x]))
        throw InvariantViolation("classifier split a class at stage " +
                                 std::to_string(s));
    }
  }
  return out;
}

/// Stage list for derived tables: 0 plus every stage in the inputs.
std::vector<Stage> merged_stages(std::initializer_list<const CeerTable*> tables);

}  // namespace ceerlab
