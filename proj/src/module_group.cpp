#include "ceerlab/module_group.hpp"

#include <algorithm>

namespace ceerlab {

std::vector<Natural> z2_module_wp(const CeerTable& ceer, const GroupWord& w, Stage stage) {
  std::map<Natural, bool> odd;
  for (const auto& l : w) {
    if (l.name != 'g' || !l.indexed)
      throw InvalidInput("letter " + format_word({l}) + " is not a module generator g_k");
    Natural rep = l.index < ceer.bound() ? ceer.representative(l.index, stage) : l.index;
    if (l.exp % 2 != 0) odd[rep] = !odd[rep];
  }
  std::vector<Natural> out;
  for (const auto& [rep, flag] : odd)
    if (flag) out.push_back(rep);
  return out;
}

bool ga_wp(const StagedSet& A, const GroupWord& w, Stage stage) {
  std::map<Natural, bool> odd;
  for (const auto& l : w) {
    if (l.name != 'g' || !l.indexed)
      throw InvalidInput("letter " + format_word({l}) + " is not a generator g_i");
    if (l.exp % 2 != 0) odd[l.index] = !odd[l.index];
  }
  return std::all_of(odd.begin(), odd.end(), [&](const auto& kv) {
    return !kv.second || A.contains(kv.first, stage);
  });
}

GroupWord GeneratorTranslation::operator()(const GroupWord& w) const {
  GroupWord out;
  for (const auto& l : w) {
    auto it = reps_.find({l.name, l.indexed ? l.index : 0});
    if (it == reps_.end())
      throw InvalidInput("no representative for generator " + format_word({plain(l.name)}));
    const GroupWord piece = l.exp >= 0 ? it->second : inverse(it->second);
    for (std::int64_t i = 0, n = l.exp >= 0 ? l.exp : -l.exp; i < n; ++i)
      out.insert(out.end(), piece.begin(), piece.end());
  }
  return freely_reduce(out);
}

TranslatedWordProblem finite_genset_translate(const GeneratorTranslation& t,
                                              const std::vector<GroupWord>& words) {
  TranslatedWordProblem out;
  out.reduction = ReductionFn(words.size());
  for (Natural i = 0; i < words.size(); ++i) {
    out.images.push_back(t(words[i]));
    out.reduction.define(i, i);
  }
  return out;
}

}  // namespace ceerlab
