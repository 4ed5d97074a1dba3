#pragma once

// Free products of groups with solvable word problems, reduced to the
// alternating normal form.

#include <cstddef>
#include <memory>
#include <vector>

#include "ceerlab/ceer.hpp"
#include "ceerlab/presentation.hpp"
#include "ceerlab/words.hpp"

namespace ceerlab {

/// Canonical forms inside one factor. canonical(w) is empty exactly when
/// w is the identity, and two words are equal iff their canonical forms
/// are.
class FactorDecider {
 public:
  virtual ~FactorDecider() = default;
  virtual GroupWord canonical(const GroupWord& w) const = 0;
  bool is_identity(const GroupWord& w) const { return canonical(w).empty(); }
};

/// Z/nZ generated by a single letter (default "a").
class CyclicDecider : public FactorDecider {
 public:
  explicit CyclicDecider(std::int64_t order, GroupLetter generator = plain('a'));
  GroupWord canonical(const GroupWord& w) const override;
  std::int64_t order() const noexcept { return order_; }
  const GroupLetter& generator() const noexcept { return gen_; }

 private:
  std::int64_t order_;
  GroupLetter gen_;
};

/// G_stage of a staged abelian presentation, on letters x_k.
class StagedAbelianDecider : public FactorDecider {
 public:
  StagedAbelianDecider(const StagedPresentation& P, Stage stage) : P_(P), stage_(stage) {}
  GroupWord canonical(const GroupWord& w) const override;

 private:
  const StagedPresentation& P_;
  Stage stage_;
};

/// The Z/2Z-module over a ceer's classes at a stage, on letters g_k.
class CeerModuleDecider : public FactorDecider {
 public:
  CeerModuleDecider(const CeerTable& ceer, Stage stage) : ceer_(ceer), stage_(stage) {}
  GroupWord canonical(const GroupWord& w) const override;

 private:
  const CeerTable& ceer_;
  Stage stage_;
};

struct Syllable {
  std::size_t factor = 0;
  GroupWord element;
  bool operator==(const Syllable&) const = default;
};

using FreeProductWord = std::vector<Syllable>;

/// Normal form: syllables canonicalized, identities deleted and adjacent
/// same-factor syllables merged until none remain. Empty iff w = 1.
FreeProductWord fp_reduce(const FreeProductWord& w,
                          const std::vector<const FactorDecider*>& deciders);
FreeProductWord fp_inverse(const FreeProductWord& w);
FreeProductWord fp_concat(FreeProductWord a, const FreeProductWord& b);
bool fp_is_identity(const FreeProductWord& w, const std::vector<const FactorDecider*>& deciders);

/// g_0 a g_1 a ... a g_n in G * Z/2Z, G being factor 0 and the letter "a"
/// factor 1.
FreeProductWord alternating_word(const std::vector<GroupWord>& g);
/// Recovers g_0..g_n from a word that alternates G-syllables with single
/// "a" syllables (missing G-syllables count as identities). Throws
/// InvalidInput otherwise.
std::vector<GroupWord> split_alternating(const FreeProductWord& w);

/// g_0 h^-1 g_1 h g_2 h^-1 ... with h in factor 1. Throws InvalidInput
/// when h is the identity of H.
FreeProductWord star_z2_to_star_h(const std::vector<GroupWord>& g, const GroupWord& h,
                                  const FactorDecider& H);

}  // namespace ceerlab
