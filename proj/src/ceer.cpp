#include "ceerlab/ceer.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace ceerlab {

std::pair<Natural, Natural> cantor_unpair(Natural z) {
  // w = floor((sqrt(8z+1)-1)/2), corrected for rounding.
  auto w = static_cast<Natural>((std::sqrt(8.0 * static_cast<double>(z) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > z) --w;
  while ((w + 1) * (w + 2) / 2 <= z) ++w;
  Natural n = z - w * (w + 1) / 2;
  return {w - n, n};
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<Natural> least) : least_(std::move(least)) {}

Natural Partition::least(Natural x) const {
  if (x >= least_.size())
    throw RangeError("index " + std::to_string(x) + " outside partition bound " +
                     std::to_string(least_.size()));
  return least_[x];
}

std::size_t Partition::class_count() const {
  std::size_t n = 0;
  for (Natural x = 0; x < least_.size(); ++x)
    if (least_[x] == x) ++n;
  return n;
}

std::vector<std::vector<Natural>> Partition::classes() const {
  std::vector<std::vector<Natural>> out;
  std::vector<std::size_t> slot(least_.size());
  for (Natural x = 0; x < least_.size(); ++x) {
    if (least_[x] == x) {
      slot[x] = out.size();
      out.push_back({});
    }
    out[slot[least_[x]]].push_back(x);
  }
  return out;
}

Partition Partition::restricted(Natural bound) const {
  if (bound > least_.size())
    throw RangeError("cannot restrict a partition beyond its bound");
  std::vector<Natural> least(bound);
  std::vector<Natural> first(least_.size(), kFinalStage);
  for (Natural x = 0; x < bound; ++x) {
    Natural& f = first[least_[x]];
    if (f == kFinalStage) f = x;
    least[x] = f;
  }
  return Partition(std::move(least));
}

// ---------------------------------------------------------------- CeerTable

CeerTable::CeerTable(Natural bound)
    : bound_(bound), parent_(bound), link_stage_(bound, kFinalStage), rank_(bound, 0) {
  for (Natural x = 0; x < bound; ++x) parent_[x] = x;
}

CeerTable CeerTable::all_related(Natural bound, Stage stage) {
  CeerTable t(bound);
  for (Natural x = 1; x < bound; ++x) t.add(0, x, stage);
  return t;
}

Stage CeerTable::last_stage() const noexcept {
  return pairs_.empty() ? 0 : pairs_.back().stage;
}

std::vector<Stage> CeerTable::stages() const {
  std::vector<Stage> out;
  for (const auto& p : pairs_)
    if (out.empty() || out.back() != p.stage) out.push_back(p.stage);
  return out;
}

void CeerTable::check_index(Natural x) const {
  if (x >= bound_)
    throw RangeError("index " + std::to_string(x) + " outside working bound " +
                     std::to_string(bound_));
}

CeerTable& CeerTable::add(Natural a, Natural b, Stage stage) {
  check_index(a);
  check_index(b);
  if (!pairs_.empty() && stage < pairs_.back().stage)
    throw MonotonicityError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                            ") at stage " + std::to_string(stage) +
                            " precedes stage " + std::to_string(pairs_.back().stage));
  pairs_.push_back({a, b, stage});
  Natural ra = root(a, kFinalStage);
  Natural rb = root(b, kFinalStage);
  if (ra == rb) return *this;
  if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
  const Natural least_a = least_of_root(ra, kFinalStage);
  const Natural least_b = least_of_root(rb, kFinalStage);
  parent_[rb] = ra;
  link_stage_[rb] = stage;
  if (rank_[ra] == rank_[rb]) ++rank_[ra];
  if (least_b < least_a) least_changes_[ra].push_back({stage, least_b});
  return *this;
}

Natural CeerTable::root(Natural x, Stage stage) const {
  while (parent_[x] != x && link_stage_[x] <= stage) x = parent_[x];
  return x;
}

Natural CeerTable::least_of_root(Natural r, Stage stage) const {
  auto it = least_changes_.find(r);
  if (it == least_changes_.end()) return r;
  Natural least = r;
  for (const auto& [s, v] : it->second) {
    if (s > stage) break;
    least = v;
  }
  return least;
}

Natural CeerTable::representative(Natural x, Stage stage) const {
  check_index(x);
  return least_of_root(root(x, stage), stage);
}

bool CeerTable::related(Natural a, Natural b, Stage stage) const {
  check_index(a);
  check_index(b);
  return root(a, stage) == root(b, stage);
}

Partition CeerTable::snapshot(Stage stage) const {
  std::vector<Natural> least_of_root(bound_, kFinalStage);
  std::vector<Natural> least(bound_);
  for (Natural x = 0; x < bound_; ++x) {
    Natural r = root(x, stage);
    if (least_of_root[r] == kFinalStage) least_of_root[r] = x;
    least[x] = least_of_root[r];
  }
  return Partition(std::move(least));
}

CeerTable assert_pair(CeerTable ceer, Natural a, Natural b, Stage stage) {
  ceer.add(a, b, stage);
  return ceer;
}

// ---------------------------------------------------------------- StagedSet

StagedSet::StagedSet(std::initializer_list<Entry> entries) {
  for (const auto& e : entries) add(e.value, e.stage);
}

void StagedSet::add(Natural value, Stage stage) {
  if (!entries_.empty() && stage < entries_.back().stage)
    throw MonotonicityError("set entry at stage " + std::to_string(stage) +
                            " precedes stage " + std::to_string(entries_.back().stage));
  entries_.push_back({value, stage});
}

std::size_t StagedSet::count_at(Stage stage) const {
  auto it = std::upper_bound(entries_.begin(), entries_.end(), stage,
                             [](Stage s, const Entry& e) { return s < e.stage; });
  return static_cast<std::size_t>(it - entries_.begin());
}

std::vector<Natural> StagedSet::elements_at(Stage stage) const {
  std::vector<Natural> out;
  for (std::size_t i = 0, n = count_at(stage); i < n; ++i) out.push_back(entries_[i].value);
  return out;
}

bool StagedSet::contains(Natural value, Stage stage) const {
  auto s = entry_stage(value);
  return s && *s <= stage;
}

std::optional<Stage> StagedSet::entry_stage(Natural value) const {
  for (const auto& e : entries_)
    if (e.value == value) return e.stage;
  return std::nullopt;
}

// -------------------------------------------------------------- ReductionFn

ReductionFn ReductionFn::identity(Natural bound) {
  return tabulate(bound, [](Natural n) { return n; });
}

ReductionFn ReductionFn::constant(Natural bound, Natural value) {
  return tabulate(bound, [value](Natural) { return value; });
}

ReductionFn ReductionFn::tabulate(Natural bound,
                                  const std::function<Natural(Natural)>& fn) {
  ReductionFn f(bound);
  for (Natural n = 0; n < bound; ++n) f.define(n, fn(n), 0);
  return f;
}

void ReductionFn::define(Natural n, Natural value, Stage stage) {
  auto [it, inserted] = table_.emplace(n, Entry{value, stage});
  if (!inserted && it->second.value != value)
    throw InvariantViolation("reduction already converged at " + std::to_string(n) +
                             " to " + std::to_string(it->second.value));
}

std::optional<Natural> ReductionFn::at(Natural n, Stage stage) const {
  auto it = table_.find(n);
  if (it == table_.end() || it->second.stage > stage) return std::nullopt;
  return it->second.value;
}

Natural ReductionFn::operator()(Natural n) const {
  auto v = at(n);
  if (!v) throw PartialityError(n, "reduction diverges at argument " + std::to_string(n));
  return *v;
}

void ReductionFn::require_total(Natural bound) const {
  for (Natural n = 0; n < bound; ++n) (void)(*this)(n);
}

// ----------------------------------------------------------- FunctionalStub

FunctionalStub::FunctionalStub(Natural id, std::vector<Halt> halts)
    : id_(id), halts_(std::move(halts)) {
  std::stable_sort(halts_.begin(), halts_.end(),
                   [](const Halt& a, const Halt& b) { return a.since < b.since; });
}

std::optional<FunctionalStub::Halt> FunctionalStub::evaluate(const Oracle& oracle,
                                                             Stage stage) const {
  for (auto it = halts_.rbegin(); it != halts_.rend(); ++it) {
    if (it->since > stage) continue;
    if (oracle(it->since, it->use) == oracle(stage, it->use)) return *it;
  }
  return std::nullopt;
}

std::optional<FunctionalStub::Halt> FunctionalStub::evaluate(const CeerTable& oracle,
                                                             Stage stage) const {
  return evaluate(
      [&oracle](Stage s, Natural use) {
        return oracle.snapshot(s).restricted(std::min(use, oracle.bound()));
      },
      stage);
}

// --------------------------------------------------------------- operations

std::vector<Stage> merged_stages(std::initializer_list<const CeerTable*> tables) {
  std::set<Stage> all{0};
  for (const CeerTable* t : tables)
    for (Stage s : t->stages()) all.insert(s);
  return {all.begin(), all.end()};
}

CeerTable uniform_join(std::span<const CeerTable> columns, Natural bound) {
  std::set<Stage> all{0};
  for (const auto& c : columns)
    for (Stage s : c.stages()) all.insert(s);
  std::vector<Stage> stages(all.begin(), all.end());

  // Column snapshots are recomputed once per stage.
  std::vector<Partition> snaps(columns.size());
  Stage current = kFinalStage;
  auto key = [&](Natural x, Stage s) -> std::pair<Natural, Natural> {
    if (s != current) {
      for (std::size_t j = 0; j < columns.size(); ++j) snaps[j] = columns[j].snapshot(s);
      current = s;
    }
    auto [j, n] = cantor_unpair(x);
    if (j >= columns.size() || n >= columns[j].bound()) return {kFinalStage, x};
    return {j, snaps[j].least(n)};
  };
  return table_from_classifier(bound, stages, key);
}

CeerTable product(const CeerTable& a, const CeerTable& b, Natural bound) {
  auto stages = merged_stages({&a, &b});
  Partition pa, pb;
  Stage current = kFinalStage;
  auto key = [&](Natural x, Stage s) -> std::pair<Natural, Natural> {
    if (s != current) {
      pa = a.snapshot(s);
      pb = b.snapshot(s);
      current = s;
    }
    auto [u, v] = cantor_unpair(x);
    if (u >= a.bound() || v >= b.bound()) return {kFinalStage, x};
    return {pa.least(u), pb.least(v)};
  };
  return table_from_classifier(bound, stages, key);
}

CeerTable pullback(const ReductionFn& f, const CeerTable& r,
                   std::optional<Natural> bound) {
  const Natural n = bound.value_or(f.totality_bound());
  std::vector<Natural> image(n);
  for (Natural i = 0; i < n; ++i) {
    image[i] = f(i);
    if (image[i] >= r.bound())
      throw RangeError("f(" + std::to_string(i) + ") = " + std::to_string(image[i]) +
                       " lies outside the target bound");
  }
  auto stages = merged_stages({&r});
  Partition pr;
  Stage current = kFinalStage;
  auto key = [&](Natural x, Stage s) {
    if (s != current) {
      pr = r.snapshot(s);
      current = s;
    }
    return pr.least(image[x]);
  };
  return table_from_classifier(n, stages, key);
}

ReductionReport verify_reduction(const ReductionFn& f, const CeerTable& e,
                                 const CeerTable& r, Natural bound, Stage stage) {
  ReductionReport report;
  report.bound = bound;
  report.stage = stage;
  std::vector<Natural> image(bound);
  for (Natural i = 0; i < bound; ++i) image[i] = f(i);
  const Partition pe = e.snapshot(stage);
  const Partition pr_now = r.snapshot(stage);
  const Partition pr_final = r.snapshot();
  for (Natural i = 0; i < bound; ++i) {
    for (Natural j = i + 1; j < bound; ++j) {
      const bool e_rel = pe.related(i, j);
      if (e_rel && !pr_final.related(image[i], image[j]))
        report.positive_violations.emplace_back(i, j);
      else if (!e_rel && pr_now.related(image[i], image[j]))
        report.unaligned_so_far.emplace_back(i, j);
    }
  }
  return report;
}

std::optional<std::pair<Natural, Natural>> darkness_probe(const CeerTable& e,
                                                          const StagedSet& w,
                                                          Stage stage) {
  std::map<Natural, Natural> seen;  // representative -> first element
  for (Natural x : w.elements_at(stage)) {
    if (x >= e.bound()) continue;
    auto [it, inserted] = seen.emplace(e.representative(x, stage), x);
    if (!inserted && it->second != x) return std::make_pair(it->second, x);
  }
  return std::nullopt;
}

bool lightness_witness_check(const CeerTable& e, std::span<const Natural> t,
                             Stage stage) {
  std::set<Natural> reps;
  for (Natural x : t)
    if (!reps.insert(e.representative(x, stage)).second) return false;
  return true;
}

}  // namespace ceerlab
