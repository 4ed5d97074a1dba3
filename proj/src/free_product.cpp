#include "ceerlab/free_product.hpp"

#include <algorithm>

#include "ceerlab/module_group.hpp"

namespace ceerlab {

CyclicDecider::CyclicDecider(std::int64_t order, GroupLetter generator)
    : order_(order), gen_(generator) {
  if (order < 1) throw InvalidInput("cyclic group order must be positive");
  gen_.exp = 1;
}

GroupWord CyclicDecider::canonical(const GroupWord& w) const {
  std::int64_t total = 0;
  for (const auto& l : w) {
    if (!l.same_generator(gen_))
      throw InvalidInput("letter " + format_word({l}) + " is not in the cyclic factor");
    total += l.exp;
  }
  total = ((total % order_) + order_) % order_;
  if (total == 0) return {};
  GroupLetter out = gen_;
  out.exp = total;
  return {out};
}

GroupWord StagedAbelianDecider::canonical(const GroupWord& w) const {
  return word_of(staged_abelian_wp(P_, exponents_of(w, 'x'), stage_), 'x');
}

GroupWord CeerModuleDecider::canonical(const GroupWord& w) const {
  GroupWord out;
  for (Natural rep : z2_module_wp(ceer_, w, stage_)) out.push_back(gen('g', rep));
  return out;
}

FreeProductWord fp_reduce(const FreeProductWord& w,
                          const std::vector<const FactorDecider*>& deciders) {
  auto decider = [&](std::size_t f) -> const FactorDecider& {
    if (f >= deciders.size() || !deciders[f])
      throw InvalidInput("no decider for factor " + std::to_string(f));
    return *deciders[f];
  };
  FreeProductWord stack;
  for (const auto& s : w) {
    GroupWord element = decider(s.factor).canonical(s.element);
    if (element.empty()) continue;
    if (!stack.empty() && stack.back().factor == s.factor) {
      GroupWord merged = decider(s.factor).canonical(concat(stack.back().element, element));
      if (merged.empty())
        stack.pop_back();
      else
        stack.back().element = std::move(merged);
    } else {
      stack.push_back({s.factor, std::move(element)});
    }
  }
  return stack;
}

FreeProductWord fp_inverse(const FreeProductWord& w) {
  FreeProductWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->factor, inverse(it->element)});
  return out;
}

FreeProductWord fp_concat(FreeProductWord a, const FreeProductWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool fp_is_identity(const FreeProductWord& w, const std::vector<const FactorDecider*>& deciders) {
  return fp_reduce(w, deciders).empty();
}

FreeProductWord alternating_word(const std::vector<GroupWord>& g) {
  FreeProductWord out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0) out.push_back({1, {plain('a')}});
    if (!g[i].empty()) out.push_back({0, g[i]});
  }
  return out;
}

std::vector<GroupWord> split_alternating(const FreeProductWord& w) {
  std::vector<GroupWord> g(1);
  for (const auto& s : w) {
    if (s.factor == 0) {
      if (!g.back().empty()) throw InvalidInput("two G-syllables without an 'a' between them");
      g.back() = s.element;
    } else if (s.factor == 1 && s.element == GroupWord{plain('a')}) {
      g.emplace_back();
    } else {
      throw InvalidInput("word does not alternate G-letters with a");
    }
  }
  return g;
}

FreeProductWord star_z2_to_star_h(const std::vector<GroupWord>& g, const GroupWord& h,
                                  const FactorDecider& H) {
  if (H.is_identity(h)) throw InvalidInput("h must be a nontrivial element of H");
  FreeProductWord out;
  const GroupWord h_inv = inverse(h);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0) out.push_back({1, i % 2 ? h_inv : h});
    if (!g[i].empty()) out.push_back({0, g[i]});
  }
  return out;
}

}  // namespace ceerlab
