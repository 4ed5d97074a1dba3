#include "ceerlab/lab/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ceerlab/golod_shafarevich.hpp"
#include "ceerlab/ideal.hpp"
#include "ceerlab/lab/star_universal.hpp"
#include "ceerlab/presentation.hpp"

namespace ceerlab {
namespace {

std::string construction_of(const RunLog& log) {
  return log.header.value("construction", std::string());
}

void require_construction(const RunLog& log, const std::string& suite,
                          std::initializer_list<const char*> allowed) {
  const std::string c = construction_of(log);
  for (const char* a : allowed)
    if (c == a) return;
  throw InvalidInput("suite '" + suite + "' does not apply to construction '" + c + "'");
}

void fail(SuiteReport& r, std::string what) {
  r.passed = false;
  r.failures.push_back(std::move(what));
}

StarParams star_params_of(const RunLog& log) {
  StarParams p;
  p.base = log.header.at("base").get<Natural>();
  p.levels = log.header.at("levels").get<std::size_t>();
  p.stages = log.header.value("stages", p.stages);
  return p;
}

CeerTable u_of(const RunLog& log) {
  CeerTable u(log.header.value("u-bound", Natural{16}));
  for (const auto& t : log.header.value("u-pairs", Json::array()))
    u.add(t.at(0).get<Natural>(), t.at(1).get<Natural>(), t.at(2).get<Stage>());
  return u;
}

/// Stages at which something happened, plus 0 and the final stage.
std::vector<Stage> event_stages(const RunLog& log, const CeerTable* u = nullptr) {
  std::set<Stage> s{0};
  for (const auto& r : log.records) s.insert(r.stage);
  if (u)
    for (const auto& p : u->pairs()) s.insert(p.stage);
  if (log.header.contains("stages")) s.insert(log.header["stages"].get<Stage>());
  return {s.begin(), s.end()};
}

GeneratorStatus parse_status(const std::string& name) {
  if (name.rfind("level", 0) == 0) return GeneratorStatus::level;
  if (name == "free") return GeneratorStatus::free;
  if (name == "determined") return GeneratorStatus::determined;
  if (name == "collapsed") return GeneratorStatus::collapsed;
  throw InvalidInput("unknown generator status '" + name + "'");
}

/// Rebuilds the presentation; a broken relation is reported instead of
/// thrown when `report` is given.
StagedPresentation replay_star(const RunLog& log, const StarParams& p, SuiteReport* report) {
  StagedPresentation G(p.generator_count());
  for (const auto& rec : log.records) {
    for (const auto& text : rec.relations) {
      if (report) ++report->checks;
      try {
        G.add_relation(parse_relation(text, rec.stage));
      } catch (const Error& e) {
        if (!report) throw;
        fail(*report, "stage " + std::to_string(rec.stage) + ", " + rec.requirement + ": relation " +
                          text + " rejected: " + e.what());
      }
    }
    for (const auto& change : rec.status_changes) {
      // "x12: level-1 -> free"
      auto colon = change.find(':');
      auto arrow = change.find("->");
      if (change.empty() || change[0] != 'x' || colon == std::string::npos || arrow == std::string::npos)
        throw InvalidInput("malformed status change '" + change + "'");
      Natural g = std::stoull(change.substr(1, colon - 1));
      std::string to = change.substr(arrow + 2);
      to.erase(0, to.find_first_not_of(' '));
      G.set_status(g, parse_status(to), rec.stage);
    }
  }
  return G;
}

SuiteReport triangularity(const RunLog& log) {
  require_construction(log, "triangularity", {"star-universal"});
  SuiteReport r;
  replay_star(log, star_params_of(log), &r);
  return r;
}

SuiteReport vi_vs_u(const RunLog& log) {
  require_construction(log, "vi-vs-U", {"star-universal"});
  SuiteReport r;
  const StarParams p = star_params_of(log);
  const CeerTable u = u_of(log);
  const StagedPresentation G = replay_star(log, p, nullptr);
  for (Stage s : event_stages(log, &u)) {
    for (std::size_t i = 0; i <= p.levels; ++i)
      for (std::size_t j = i + 1; j <= p.levels; ++j) {
        ++r.checks;
        const bool eq = v_equal(G, p, i, j, s);
        const bool rel = i < u.bound() && j < u.bound() && u.related(i, j, s);
        if (eq != rel)
          fail(r, "stage " + std::to_string(s) + ": v" + std::to_string(i) + (eq ? " = " : " != ") + "v" +
                      std::to_string(j) + " but U " + (rel ? "relates" : "separates") + " them");
      }
  }
  return r;
}

SuiteReport census(const RunLog& log) {
  require_construction(log, "level-census", {"star-universal"});
  SuiteReport r;
  const StarParams p = star_params_of(log);
  const CeerTable u = u_of(log);
  const StagedPresentation G = replay_star(log, p, nullptr);
  for (Stage s : event_stages(log, &u)) {
    for (std::size_t j = 0; j <= p.levels; ++j) {
      const bool least = j >= u.bound() || u.representative(j, s) == j;
      if (!least) continue;
      ++r.checks;
      const LevelCensus c = level_census(G, p, j, s);
      const Natural need = j == 0 ? 1 : p.block_begin(j);
      if (c.level <= need)
        fail(r, "stage " + std::to_string(s) + ": level " + std::to_string(j) + " has only " +
                    std::to_string(c.level) + " level generators, need more than " + std::to_string(need));
    }
  }
  return r;
}

struct RingReplay {
  std::uint32_t p = 2;
  std::size_t maxdeg = 16;
  /// (stage, relator)
  std::vector<std::pair<Stage, Poly>> relators;
  /// record index of every relator
  std::vector<std::size_t> origin;
};

RingReplay replay_ring(const RunLog& log) {
  RingReplay rr;
  rr.p = log.header.at("p").get<std::uint32_t>();
  rr.maxdeg = log.header.at("maxdeg").get<std::size_t>();
  for (std::size_t i = 0; i < log.records.size(); ++i)
    for (const auto& text : log.records[i].relations) {
      rr.relators.emplace_back(log.records[i].stage, Poly::parse(text, rr.p));
      rr.origin.push_back(i);
    }
  return rr;
}

HomogeneousIdeal ideal_of(const RingReplay& rr, Stage stage = kFinalStage) {
  HomogeneousIdeal I(rr.p, rr.maxdeg);
  for (const auto& [s, f] : rr.relators)
    if (s <= stage && f.degree() <= rr.maxdeg) I.add_generator(f);
  return I;
}

SuiteReport membership(const RunLog& log) {
  require_construction(log, "membership", {"dark-ring", "dark-group"});
  SuiteReport r;
  const RingReplay rr = replay_ring(log);
  HomogeneousIdeal I = ideal_of(rr);
  for (const auto& rec : log.records) {
    if (rec.kind != "collapse") continue;
    ++r.checks;
    Poly f = Poly::parse(rec.details.at("f-poly").get<std::string>(), rr.p);
    Poly g = Poly::parse(rec.details.at("g-poly").get<std::string>(), rr.p);
    Poly diff = (f - g).truncated(rr.maxdeg);
    if (!I.member(diff))
      fail(r, rec.requirement + " at stage " + std::to_string(rec.stage) + ": " +
                  rec.details.at("f").get<std::string>() + " - " + rec.details.at("g").get<std::string>() +
                  " is not in the final ideal");
  }
  return r;
}

Natural requirement_index(const std::string& name) { return std::stoull(name.substr(1)); }

SuiteReport protection(const RunLog& log) {
  require_construction(log, "protection", {"dark-ring", "dark-group"});
  SuiteReport r;
  const RingReplay rr = replay_ring(log);
  // Per L_n: active protected degrees with the monomials they guard.
  struct Guard {
    Stage since;
    std::size_t degree;
    Monomial monomial;
  };
  std::map<Natural, std::vector<Guard>> active;
  std::vector<std::pair<Natural, Guard>> survivors;
  for (std::size_t i = 0; i < log.records.size(); ++i) {
    const auto& rec = log.records[i];
    if (rec.kind == "light") {
      active[requirement_index(rec.requirement)].push_back(
          {rec.stage, rec.details.at("degree").get<std::size_t>(),
           Monomial::parse(rec.details.at("monomial").get<std::string>())});
    }
    if (rec.kind == "collapse") {
      const Natural m = requirement_index(rec.requirement);
      for (const auto& text : rec.relations) {
        const std::size_t deg = Poly::parse(text, rr.p).degree();
        for (const auto& [n, guards] : active) {
          if (n < m) continue;
          for (const auto& g : guards) {
            ++r.checks;
            if (deg <= g.degree)
              fail(r, rec.requirement + " at stage " + std::to_string(rec.stage) + " added degree-" +
                          std::to_string(deg) + " relator " + text + " under L" + std::to_string(n) +
                          "'s protected degree " + std::to_string(g.degree));
          }
        }
      }
    }
    for (const auto& inj : rec.injured)
      if (inj.requirement.size() > 1 && inj.requirement[0] == 'L') active.erase(requirement_index(inj.requirement));
  }
  HomogeneousIdeal I = ideal_of(rr);
  for (const auto& [n, guards] : active)
    for (const auto& g : guards) {
      if (g.degree > rr.maxdeg) continue;
      ++r.checks;
      if (I.member(Poly(rr.p, g.monomial)))
        fail(r, "T" + std::to_string(n) + " monomial " + g.monomial.to_string() + " entered the ideal");
    }
  return r;
}

SuiteReport gs(const RunLog& log) {
  require_construction(log, "gs-audit", {"dark-ring", "dark-group"});
  SuiteReport r;
  const RingReplay rr = replay_ring(log);
  GSBudget budget;
  budget.epsilon = parse_rational(log.header.value("epsilon", std::string("1/4")));
  std::size_t next = 0;
  for (Stage s : event_stages(log)) {
    while (next < rr.relators.size() && rr.relators[next].first <= s) {
      ++budget.counts[rr.relators[next].second.degree()];
      ++next;
    }
    ++r.checks;
    auto result = gs_audit(budget, rr.maxdeg);
    if (!result.passed()) fail(r, "stage " + std::to_string(s) + ": " + result.describe());
  }
  return r;
}

SuiteReport injury(const RunLog& log) {
  SuiteReport r;
  for (const auto& rec : log.records) {
    for (const auto& inj : rec.injured) {
      ++r.checks;
      if (rec.priority == kNoPriority) {
        if (rec.kind != "U-response")
          fail(r, "stage " + std::to_string(rec.stage) + ": " + rec.requirement + " has no priority but injured " +
                      inj.requirement);
        continue;
      }
      if (inj.priority <= rec.priority)
        fail(r, "stage " + std::to_string(rec.stage) + ": " + rec.requirement + " (priority " +
                    std::to_string(rec.priority) + ") injured " + inj.requirement + " (priority " +
                    std::to_string(inj.priority) + ")");
    }
  }
  return r;
}

}  // namespace

std::string SuiteReport::describe() const {
  std::ostringstream out;
  for (const auto& w : warnings) out << "warning: " << w << '\n';
  for (const auto& f : failures) out << "violation: " << f << '\n';
  out << suite << ": " << (passed ? "pass" : "FAIL");
  if (vacuous)
    out << " (vacuous)";
  else
    out << " (" << checks << " checks, " << failures.size() << " violations)";
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"triangularity", "level-census", "vi-vs-U", "membership",
                                                 "protection",    "gs-audit",     "injury"};
  return names;
}

SuiteReport verify_log(const RunLog& log, const std::string& suite) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw InvalidInput("unknown suite '" + suite + "'");
  SuiteReport r;
  if (log.records.empty()) {
    r.vacuous = true;
    r.warnings.push_back("log has no records; nothing to check");
  } else if (suite == "triangularity") {
    r = triangularity(log);
  } else if (suite == "level-census") {
    r = census(log);
  } else if (suite == "vi-vs-U") {
    r = vi_vs_u(log);
  } else if (suite == "membership") {
    r = membership(log);
  } else if (suite == "protection") {
    r = protection(log);
  } else if (suite == "gs-audit") {
    r = gs(log);
  } else {
    r = injury(log);
  }
  r.suite = suite;
  if (!r.vacuous && r.checks == 0) r.warnings.push_back("no applicable records in the log");
  return r;
}

}  // namespace ceerlab
