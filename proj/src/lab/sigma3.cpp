#include "ceerlab/lab/sigma3.hpp"

#include <algorithm>
#include <sstream>

namespace ceerlab {
namespace {

Natural least_pair_index(Natural column) { return column * (column + 1) / 2; }

std::string c_name(std::size_t k) { return "C" + std::to_string(k); }
std::string l_name(std::size_t m) { return "L" + std::to_string(m); }

}  // namespace

CeerTable Sigma3Run::join() const { return uniform_join(columns, params.join_bound); }

Partition Sigma3Run::oracle(Stage stage, Natural bound) const {
  std::vector<Natural> least(bound);
  for (Natural z = 0; z < bound; ++z) {
    auto [j, n] = cantor_unpair(z);
    if (j < columns.size() && n < columns[j].bound())
      least[z] = cantor_pair(j, columns[j].representative(n, stage));
    else
      least[z] = z;
  }
  return Partition(std::move(least));
}

std::string Sigma3Run::summary() const {
  std::ostringstream out;
  out << "sigma3 run: " << params.stages << " stages, " << columns.size() << " columns touched\n";
  for (std::size_t k = 0; k < assigned.size(); ++k)
    if (assigned[k]) out << "C" << k << " holds column " << *assigned[k] << '\n';
  for (std::size_t m = 0; m < restraints.size(); ++m)
    if (restraints[m])
      out << "L" << m << " restrains use " << restraints[m]->use << " (halted at stage "
          << restraints[m]->since << ")\n";
  out << "actions logged: " << log.records.size() << '\n';
  return out.str();
}

Sigma3Run run_sigma3_ceer(const Sigma3Inputs& in, const Sigma3Params& params) {
  Sigma3Run run;
  run.params = params;
  const std::size_t nc = in.w_columns.size();
  const std::size_t nl = in.functionals.size();
  run.assigned.assign(nc, std::nullopt);
  run.restraints.assign(nl, std::nullopt);
  std::vector<std::size_t> consumed(nc, 0);
  std::vector<std::size_t> copied;
  Natural next_column = 0;
  run.log.header = {{"construction", "sigma3"},
                    {"stages", params.stages},
                    {"join-bound", params.join_bound},
                    {"u-bound", in.u.bound()}};

  auto reinitialize_below = [&](std::size_t priority, LogRecord& rec) {
    for (std::size_t k = 0; k < nc; ++k)
      if (2 * k > priority && run.assigned[k]) {
        run.assigned[k].reset();
        rec.injured.push_back({c_name(k), 2 * k});
      }
    for (std::size_t m = 0; m < nl; ++m)
      if (2 * m + 1 > priority && run.restraints[m]) {
        run.restraints[m].reset();
        rec.injured.push_back({l_name(m), 2 * m + 1});
      }
  };

  auto catch_up = [&](Natural j, Stage s) {
    auto& col = run.columns[j];
    std::size_t count = 0;
    for (const auto& pr : in.u.pairs()) {
      if (pr.stage > s) break;
      if (count++ < copied[j]) continue;
      if (!col.related(pr.a, pr.b)) col.add(pr.a, pr.b, s);
    }
    std::size_t added = count - copied[j];
    copied[j] = count;
    return added;
  };

  auto oracle = [&](Stage s, Natural bound) { return run.oracle(s, bound); };

  for (Stage s = 1; s <= params.stages; ++s) {
    for (std::size_t prio = 0; prio < 2 * std::max(nc, nl); ++prio) {
      LogRecord rec;
      rec.stage = s;
      rec.priority = prio;
      if (prio % 2 == 0) {
        const std::size_t k = prio / 2;
        if (k >= nc || in.w_columns[k].count_at(s) <= consumed[k]) continue;
        consumed[k] = in.w_columns[k].count_at(s);
        rec.requirement = c_name(k);
        rec.kind = "coding";
        if (!run.assigned[k]) {
          Natural floor = 0;
          for (std::size_t m = 0; m < nl && 2 * m + 1 < prio; ++m)
            if (run.restraints[m]) floor = std::max(floor, run.restraints[m]->use);
          Natural j = next_column;
          while (least_pair_index(j) < floor) ++j;
          next_column = j + 1;
          if (run.columns.size() <= j) {
            run.columns.resize(j + 1, CeerTable(in.u.bound()));
            copied.resize(j + 1, 0);
          }
          run.assigned[k] = j;
          std::size_t added = catch_up(j, s);
          rec.action = "initialize with column " + std::to_string(j);
          rec.justification = "new element of W^[" + std::to_string(k) +
                              "]; column " + std::to_string(j) +
                              " is fresh and above every higher-priority restraint";
          rec.details = {{"column", j}, {"pairs-copied", added}};
        } else {
          const Natural j = *run.assigned[k];
          std::size_t added = catch_up(j, s);
          rec.action = "catch column " + std::to_string(j) + " up with U_s";
          rec.justification = "new element of W^[" + std::to_string(k) + "]";
          rec.details = {{"column", j}, {"pairs-copied", added}};
        }
      } else {
        const std::size_t m = prio / 2;
        if (m >= nl) continue;
        auto halt = in.functionals[m].evaluate(oracle, s);
        if (!halt || run.restraints[m] == halt) continue;
        run.restraints[m] = halt;
        rec.requirement = l_name(m);
        rec.kind = "lowness";
        rec.action = "restrain use " + std::to_string(halt->use);
        rec.justification = "phi_" + std::to_string(in.functionals[m].id()) +
                            " halted at stage " + std::to_string(halt->since) +
                            " with use " + std::to_string(halt->use);
        rec.details = {{"use", halt->use}, {"since", halt->since}};
      }
      reinitialize_below(prio, rec);
      run.log.records.push_back(std::move(rec));
      break;
    }
  }
  return run;
}

}  // namespace ceerlab
