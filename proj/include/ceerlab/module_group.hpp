#pragma once

// Z/2Z-module groups over a ceer, the groups G_A, and word-problem tables.

#include <functional>
#include <map>
#include <vector>

#include "ceerlab/ceer.hpp"
#include "ceerlab/words.hpp"

namespace ceerlab {

/// Canonical form of a word in g_k's in <g_k | g_k^2, [g_j,g_k], g_j = g_k
/// for j E k> at `stage`: the class representatives (least elements) with
/// odd total multiplicity, ascending. Indices at or beyond the ceer's
/// bound are their own classes.
std::vector<Natural> z2_module_wp(const CeerTable& ceer, const GroupWord& w, Stage stage);

/// Identity test in <g_i | g_i^2 = 1, g_i = 1 for i in A>.
bool ga_wp(const StagedSet& A, const GroupWord& w, Stage stage);

/// Substitution of words in old generators for new generators.
class GeneratorTranslation {
 public:
  using Key = std::pair<char, Natural>;
  explicit GeneratorTranslation(std::map<Key, GroupWord> reps) : reps_(std::move(reps)) {}

  /// Image of a word in the new generators. Letters without a
  /// representative raise InvalidInput.
  GroupWord operator()(const GroupWord& w) const;

 private:
  std::map<Key, GroupWord> reps_;
};

/// The reduction induced by a change of finite generating set, on an
/// explicit list of words: word i of `words` maps to position i of
/// `images`, which holds its translation.
struct TranslatedWordProblem {
  std::vector<GroupWord> images;
  ReductionFn reduction;
};

TranslatedWordProblem finite_genset_translate(const GeneratorTranslation& t,
                                              const std::vector<GroupWord>& words);

/// Word-problem table of an enumerated word list: i ~ j at stage s iff
/// canonical(words[i], s) == canonical(words[j], s), sampled at `stages`.
template <class Canonical>
CeerTable word_problem_table(const std::vector<GroupWord>& words, std::span<const Stage> stages,
                             Canonical&& canonical) {
  return table_from_classifier(words.size(), stages,
                               [&](Natural i, Stage s) { return canonical(words[i], s); });
}

}  // namespace ceerlab
