#include "ceerlab/presentation.hpp"

#include <unordered_set>

namespace ceerlab {

std::string Relation::text() const {
  return "x" + std::to_string(lhs) + " = " + format_exponents(rhs);
}

Relation parse_relation(std::string_view text, Stage stage) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError(0, "relation without '=': " + std::string(text));
  GroupWord left = parse_word(text.substr(0, eq));
  if (left.size() != 1 || left[0].exp != 1 || left[0].name != 'x' || !left[0].indexed)
    throw ParseError(0, "relation must have a single generator on the left: " + std::string(text));
  Relation r;
  r.lhs = left[0].index;
  r.rhs = exponents_of(parse_word(text.substr(eq + 1)));
  r.stage = stage;
  if (r.rhs.empty())
    r.type = RelationType::collapse_to_one;
  else if (r.rhs.size() == 1 && r.rhs.begin()->second == 1)
    r.type = RelationType::equal;
  else if (r.rhs.size() == 1 && r.rhs.begin()->second == -1)
    r.type = RelationType::inverse;
  else
    r.type = RelationType::product;
  return r;
}

std::string status_name(GeneratorStatus s) {
  switch (s) {
    case GeneratorStatus::level: return "level";
    case GeneratorStatus::free: return "free";
    case GeneratorStatus::determined: return "determined";
    case GeneratorStatus::collapsed: return "collapsed";
  }
  return "?";
}

StagedPresentation::StagedPresentation(Natural generator_count) : count_(generator_count) {}

std::size_t StagedPresentation::relation_count(Stage stage) const {
  std::size_t n = 0;
  while (n < relations_.size() && relations_[n].stage <= stage) ++n;
  return n;
}

void StagedPresentation::add_relation(Relation r) {
  if (r.lhs >= count_)
    throw RangeError("relation " + r.text() + " mentions x" + std::to_string(r.lhs) +
                     " beyond the generator count " + std::to_string(count_));
  if (!relations_.empty() && r.stage < relations_.back().stage)
    throw MonotonicityError("relation " + r.text() + " enumerated at stage " +
                            std::to_string(r.stage) + " after stage " +
                            std::to_string(relations_.back().stage));
  if (lhs_.count(r.lhs))
    throw InvariantViolation("duplicate left-hand side in " + r.text());
  for (const auto& [g, e] : r.rhs)
    if (g >= r.lhs) throw InvariantViolation("non-triangular relation " + r.text());
  lhs_.emplace(r.lhs, relations_.size());
  relations_.push_back(std::move(r));
}

std::optional<std::size_t> StagedPresentation::lhs_relation(Natural g, Stage stage) const {
  auto it = lhs_.find(g);
  if (it == lhs_.end() || relations_[it->second].stage > stage) return std::nullopt;
  return it->second;
}

void StagedPresentation::set_status(Natural g, GeneratorStatus s, Stage stage) {
  auto& history = status_[g];
  if (!history.empty() && history.back().first > stage)
    throw MonotonicityError("status of x" + std::to_string(g) + " rewritten in the past");
  if (!history.empty() && history.back().first == stage)
    history.back().second = s;
  else
    history.emplace_back(stage, s);
}

GeneratorStatus StagedPresentation::status(Natural g, Stage stage) const {
  auto it = status_.find(g);
  GeneratorStatus out = GeneratorStatus::level;
  if (it == status_.end()) return out;
  for (const auto& [s, st] : it->second) {
    if (s > stage) break;
    out = st;
  }
  return out;
}

Exponents staged_abelian_wp(const StagedPresentation& P, const Exponents& w, Stage stage) {
  Exponents out = w;
  auto it = out.end();
  while (it != out.begin()) {
    --it;
    const Natural g = it->first;
    auto rel = P.lhs_relation(g, stage);
    if (!rel) continue;
    const Relation& r = P.relations()[*rel];
    if (!r.rhs.empty() && r.rhs.rbegin()->first >= g)
      throw InvariantViolation("non-triangular relation " + r.text());
    const std::int64_t e = it->second;
    out.erase(it);
    add_scaled(out, r.rhs, e);
    it = out.lower_bound(g);
  }
  return out;
}

std::optional<std::string> triangularity_defect(const std::vector<Relation>& relations) {
  std::unordered_set<Natural> seen;
  for (const auto& r : relations) {
    if (!seen.insert(r.lhs).second) return "duplicate left-hand side in " + r.text();
    for (const auto& [g, e] : r.rhs)
      if (g >= r.lhs) return "non-triangular relation " + r.text();
  }
  return std::nullopt;
}

}  // namespace ceerlab
