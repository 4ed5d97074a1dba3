#include "ceerlab/lab/sug_indexset.hpp"

#include <algorithm>
#include <sstream>

namespace ceerlab {
namespace {

std::size_t slot_count(const SugInputs& in) {
  std::size_t d = 0;
  if (!in.v_columns.empty() && !in.u_columns.empty())
    d = cantor_pair(in.v_columns.size() - 1, in.u_columns.size() - 1) + 1;
  return std::max({in.v_columns.size(), in.functionals.size(), d});
}

bool touched_since(const std::vector<Stage>& stages, Stage after, Stage upto) {
  return std::any_of(stages.begin(), stages.end(), [&](Stage s) { return s > after && s <= upto; });
}

}  // namespace

bool SugRun::standing(const FunctionalStub::Halt& halt, Stage stage) const {
  if (halt.since > stage) return false;
  for (Natural l = 0; l < halt.use; ++l) {
    if (l < g_relator_stages.size() && touched_since(g_relator_stages[l], halt.since, stage)) return false;
    if (l < h_relator_stages.size() && touched_since(h_relator_stages[l], halt.since, stage)) return false;
  }
  return true;
}

std::string SugRun::summary() const {
  std::ostringstream out;
  out << "sug-indexset run: " << params.stages << " stages\n";
  for (std::size_t k = 0; k < c_group.size(); ++k)
    if (c_group[k]) out << "C" << k << " drives G" << *c_group[k] << " (" << g[*c_group[k]]->stage() << " steps)\n";
  for (std::size_t z = 0; z < d_group.size(); ++z)
    if (d_group[z]) out << "D" << z << " codes into H" << *d_group[z] << " (clock " << h[*d_group[z]]->clock << ")\n";
  for (std::size_t m = 0; m < restraints.size(); ++m)
    if (restraints[m]) out << "L" << m << " restrains groups below " << restraints[m]->use << '\n';
  out << "actions logged: " << log.records.size() << '\n';
  return out.str();
}

SugRun run_sug_indexset(const SugInputs& in, const SugParams& params) {
  params.star.validate();
  SugRun run;
  run.params = params;
  const std::size_t slots = slot_count(in);
  run.c_group.assign(in.v_columns.size(), std::nullopt);
  run.restraints.assign(in.functionals.size(), std::nullopt);
  const std::size_t nd = slots;
  run.d_group.assign(nd, std::nullopt);
  std::vector<std::size_t> c_seen(in.v_columns.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> d_seen(nd, {0, 0});
  Natural next_g = 0, next_h = 0;

  run.log.header = {{"construction", "sug-indexset"},
                    {"stages", params.stages},
                    {"base", params.star.base},
                    {"levels", params.star.levels}};
  LogRecord init;
  init.stage = 0;
  init.requirement = "init";
  init.kind = "init";
  init.action = "declare every G_l and H_l abelian";
  init.justification = "commutator relators for all groups at stage 0";
  run.log.records.push_back(init);

  auto floor_for = [&](std::size_t priority) {
    Natural floor = 0;
    for (std::size_t m = 0; m < run.restraints.size(); ++m)
      if (3 * m + 1 < priority && run.restraints[m]) floor = std::max(floor, run.restraints[m]->use);
    return floor;
  };
  auto ensure = [](auto& v, Natural l) {
    if (v.size() <= l) v.resize(l + 1);
  };
  // A new restraint moves lower C/D requirements off the groups it covers.
  auto restrain_below = [&](std::size_t priority, Natural use, LogRecord& rec) {
    for (std::size_t k = 0; k < run.c_group.size(); ++k)
      if (3 * k > priority && run.c_group[k] && *run.c_group[k] < use) {
        run.c_group[k].reset();
        rec.injured.push_back({"C" + std::to_string(k), 3 * k});
      }
    for (std::size_t z = 0; z < nd; ++z)
      if (3 * z + 2 > priority && run.d_group[z] && *run.d_group[z] < use) {
        run.d_group[z].reset();
        rec.injured.push_back({"D" + std::to_string(z), 3 * z + 2});
      }
  };
  // Relators entering group l cancel lower restraints whose use covers l.
  auto break_restraints_below = [&](std::size_t priority, Natural l, LogRecord& rec) {
    for (std::size_t m = 0; m < run.restraints.size(); ++m)
      if (3 * m + 1 > priority && run.restraints[m] && l < run.restraints[m]->use) {
        run.restraints[m].reset();
        rec.injured.push_back({"L" + std::to_string(m), 3 * m + 1});
      }
  };

  for (Stage s = 1; s <= params.stages; ++s) {
    for (std::size_t prio = 0; prio < 3 * slots; ++prio) {
      LogRecord rec;
      rec.stage = s;
      rec.priority = prio;
      const std::size_t idx = prio / 3;
      if (prio % 3 == 0) {
        if (idx >= in.v_columns.size()) continue;
        const std::size_t count = in.v_columns[idx].count_at(s);
        if (count <= c_seen[idx]) continue;
        c_seen[idx] = count;
        rec.requirement = "C" + std::to_string(idx);
        rec.kind = "coding";
        Natural l;
        std::size_t before = 0;
        if (!run.c_group[idx]) {
          l = std::max(next_g, floor_for(prio));
          next_g = l + 1;
          ensure(run.g, l);
          ensure(run.g_relator_stages, l);
          StarParams sp = params.star;
          sp.stages = params.stages;
          run.g[l].emplace(in.star, sp);
          run.c_group[idx] = l;
          rec.action = "initialize G" + std::to_string(l);
        } else {
          l = *run.c_group[idx];
          before = run.g[l]->presentation().relations().size();
          run.g[l]->step();
          rec.action = "step G" + std::to_string(l);
        }
        const std::size_t added = run.g[l]->presentation().relations().size() - before;
        if (added) {
          run.g_relator_stages[l].push_back(s);
          break_restraints_below(prio, l, rec);
        }
        rec.justification = "new element of V" + std::to_string(idx);
        rec.details = {{"group", "G" + std::to_string(l)},
                       {"internal-stage", run.g[l]->stage()},
                       {"relators", added}};
      } else if (prio % 3 == 1) {
        if (idx >= in.functionals.size()) continue;
        std::optional<FunctionalStub::Halt> halt;
        for (auto it = in.functionals[idx].halts().rbegin(); it != in.functionals[idx].halts().rend(); ++it)
          if (run.standing(*it, s)) {
            halt = *it;
            break;
          }
        if (!halt || run.restraints[idx] == halt) continue;
        run.restraints[idx] = halt;
        rec.requirement = "L" + std::to_string(idx);
        rec.kind = "lowness";
        rec.action = "restrain groups below " + std::to_string(halt->use);
        rec.justification = "phi_" + std::to_string(in.functionals[idx].id()) + " halted at stage " +
                            std::to_string(halt->since);
        rec.details = {{"use", halt->use}, {"since", halt->since}};
        restrain_below(prio, halt->use, rec);
      } else {
        if (idx >= nd) continue;
        auto [k, kp] = cantor_unpair(idx);
        if (k >= in.v_columns.size() || kp >= in.u_columns.size()) continue;
        const std::size_t cv = in.v_columns[k].count_at(s), cu = in.u_columns[kp].count_at(s);
        if (cv <= d_seen[idx].first || cu <= d_seen[idx].second) continue;
        d_seen[idx] = {cv, cu};
        rec.requirement = "D" + std::to_string(idx);
        rec.kind = "pair-coding";
        if (!run.d_group[idx]) {
          Natural l = std::max(next_h, floor_for(prio));
          next_h = l + 1;
          ensure(run.h, l);
          ensure(run.h_relator_stages, l);
          run.h[l] = CodedGroup{CeerTable(in.coded.bound()), 0};
          run.d_group[idx] = l;
          rec.action = "initialize H" + std::to_string(l);
        } else {
          rec.action = "continue coding into H" + std::to_string(*run.d_group[idx]);
        }
        const Natural l = *run.d_group[idx];
        auto& H = *run.h[l];
        std::size_t added = 0;
        for (const auto& p : in.coded.pairs()) {
          if (p.stage > H.clock) break;
          if (!H.table.related(p.a, p.b)) {
            H.table.add(p.a, p.b, s);
            rec.relations.push_back("h" + std::to_string(p.a) + " = h" + std::to_string(p.b));
            ++added;
          }
        }
        ++H.clock;
        if (added) {
          run.h_relator_stages[l].push_back(s);
          break_restraints_below(prio, l, rec);
        }
        rec.justification = "new elements of V" + std::to_string(k) + " and U" + std::to_string(kp);
        rec.details = {{"group", "H" + std::to_string(l)}, {"clock", H.clock}, {"k", k}, {"k'", kp}};
      }
      run.log.records.push_back(std::move(rec));
      break;
    }
  }
  return run;
}

}  // namespace ceerlab
