#include "ceerlab/lab/dark_ring.hpp"

#include <algorithm>
#include <sstream>

namespace ceerlab {
namespace {

std::string l_name(std::size_t n) { return "L" + std::to_string(n); }
std::string d_name(std::size_t m) { return "D" + std::to_string(m); }

struct LightState {
  std::size_t consumed = 0;
  std::vector<LightEntry> T;
  std::set<std::size_t> protect;
};

struct CollapseState {
  std::optional<CollapseAction> acted;
  std::size_t cached_ks = 0;
  std::uint64_t cached_version = ~std::uint64_t{0};
  std::size_t processed = 0;
  std::map<std::string, std::size_t> seen;
  std::optional<std::pair<std::size_t, std::size_t>> hit;
};

class DarkRingEngine {
 public:
  DarkRingEngine(const DarkRingInputs& in, const DarkRingParams& params)
      : in_(in), run_{params, {}, HomogeneousIdeal(params.p, params.maxdeg), {}, {}, {}, {}, 0, 0} {
    const std::size_t n = std::max(in.u_columns.size(), in.w.size());
    light_.resize(n);
    collapse_.resize(n);
  }

  DarkRingRun run() {
    const auto& P = run_.params;
    run_.log.header = {{"construction", P.group ? "dark-group" : "dark-ring"},
                       {"p", P.p},
                       {"maxdeg", P.maxdeg},
                       {"stages", P.stages},
                       {"epsilon", format_rational(P.epsilon)}};
    if (P.group) run_.log.header["unit-exponent"] = P.unit_exponent;
    if (P.group) initialize_units();
    audit(0);
    for (Stage s = 1; s <= P.stages; ++s) {
      for (std::size_t r = 0; r < 2 * light_.size(); ++r) {
        bool acted = r % 2 == 0 ? try_light(r / 2, s) : try_collapse(r / 2, s);
        if (acted) break;
      }
      audit(s);
    }
    for (auto& l : light_) {
      run_.T.push_back(l.T);
      run_.protected_degrees.push_back(l.protect);
    }
    for (auto& d : collapse_) run_.collapses.push_back(d.acted);
    return std::move(run_);
  }

 private:
  void add_relator(const Poly& h, Stage s) {
    run_.ideal.add_generator(h);
    run_.relators.push_back({h, s});
    max_used_ = std::max(max_used_, h.degree());
  }

  void initialize_units() {
    const auto N = run_.params.unit_exponent;
    LogRecord rec;
    rec.stage = 0;
    rec.requirement = "init";
    rec.kind = "init";
    rec.action = "unit-exponent relations";
    for (Letter l : {Letter::x, Letter::y}) {
      Poly h(run_.params.p, Monomial::power(l, N));
      add_relator(h, 0);
      rec.relations.push_back(h.to_string());
    }
    rec.justification = "x^N = y^N = 0 makes 1+x and 1+y invertible";
    rec.details = {{"N", N}};
    run_.log.records.push_back(std::move(rec));
  }

  void audit(Stage s) {
    GSBudget budget{run_.params.epsilon, run_.ideal.generator_counts()};
    auto result = gs_audit(budget, std::max<std::size_t>(2, run_.ideal.max_generator_degree()));
    if (!result.passed())
      throw GSViolation(s, result.failing_degree,
                        "Golod-Shafarevich audit failed at stage " + std::to_string(s) + ": " +
                            result.describe());
    ++run_.stages_audited;
  }

  std::size_t fresh_degree() const {
    std::size_t k = std::max(max_used_, run_.ideal.max_generator_degree());
    for (const auto& l : light_)
      if (!l.protect.empty()) k = std::max(k, *l.protect.rbegin());
    return k + 1;
  }

  bool try_light(std::size_t n, Stage s) {
    if (n >= in_.u_columns.size()) return false;
    auto& st = light_[n];
    if (in_.u_columns[n].count_at(s) <= st.consumed) return false;
    const std::size_t k = fresh_degree();
    if (k > run_.params.maxdeg) {
      ++run_.horizon_blocked;
      return false;
    }
    const auto& basis = run_.ideal.degree_basis(k);
    std::optional<Monomial> chosen;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits)
      if (!basis.reduce({{bits, 1}}).empty()) {
        chosen = Monomial(bits, k);
        break;
      }
    if (!chosen) {
      ++run_.horizon_blocked;
      return false;
    }
    ++st.consumed;
    LightEntry entry{*chosen, std::nullopt, s};
    if (run_.params.group) entry.unit = unit_word_of(*chosen);
    st.T.push_back(entry);
    st.protect.insert(k);
    max_used_ = std::max(max_used_, k);

    LogRecord rec;
    rec.stage = s;
    rec.requirement = l_name(n);
    rec.priority = 2 * n;
    rec.kind = "light";
    rec.action = "enumerate into T" + std::to_string(n) + " and protect degree " + std::to_string(k);
    rec.justification = "new element of U^[" + std::to_string(n) + "]; " + chosen->to_string() +
                        " is the least degree-" + std::to_string(k) + " monomial outside (H_s)";
    rec.details = {{"degree", k}, {"monomial", chosen->to_string()}};
    if (entry.unit) rec.details["unit-word"] = format_unit_word(*entry.unit);
    run_.log.records.push_back(std::move(rec));
    return true;
  }

  std::size_t collapse_threshold(std::size_t m) const {
    std::size_t ks = m + 10;
    for (std::size_t n = 0; n <= m && n < light_.size(); ++n)
      if (!light_[n].protect.empty()) ks = std::max(ks, *light_[n].protect.rbegin());
    return ks;
  }

  bool try_collapse(std::size_t m, Stage s) {
    if (m >= in_.w.size()) return false;
    auto& st = collapse_[m];
    if (st.acted) return false;
    const std::size_t ks = collapse_threshold(m);
    if (ks > run_.params.maxdeg) return false;
    if (ks != st.cached_ks || run_.ideal.version() != st.cached_version) {
      st.cached_ks = ks;
      st.cached_version = run_.ideal.version();
      st.processed = 0;
      st.seen.clear();
      st.hit.reset();
    }
    const auto& W = in_.w[m];
    while (!st.hit && st.processed < W.size() && W[st.processed].stage <= s) {
      std::string key = run_.ideal.quotient_reduce(W[st.processed].poly, ks).to_string();
      auto [it, inserted] = st.seen.emplace(std::move(key), st.processed);
      if (!inserted) st.hit = std::make_pair(it->second, st.processed);
      ++st.processed;
    }
    if (!st.hit) return false;

    const auto [fi, gi] = *st.hit;
    const Poly diff = W[fi].poly - W[gi].poly;
    CollapseAction act{s, fi, gi, ks, {}};
    LogRecord rec;
    rec.stage = s;
    rec.requirement = d_name(m);
    rec.priority = 2 * m + 1;
    rec.kind = "collapse";
    for (const auto& [k, component] : homogeneous_components(diff)) {
      if (k <= ks) continue;
      act.components.push_back(component);
      rec.relations.push_back(component.to_string());
    }
    for (const auto& c : act.components) add_relator(c, s);
    rec.action = "add " + std::to_string(act.components.size()) +
                 " homogeneous components of f-g to H";
    rec.justification = "f-g = 0 in A_s/(F_{>" + std::to_string(ks) + "}) for W" +
                        std::to_string(m) + " entries " + std::to_string(fi) + " and " +
                        std::to_string(gi);
    rec.details = {{"k_s", ks},
                   {"f-index", fi},
                   {"g-index", gi},
                   {"f", W[fi].text()},
                   {"g", W[gi].text()},
                   {"f-poly", W[fi].poly.to_string()},
                   {"g-poly", W[gi].poly.to_string()}};
    for (std::size_t n = m + 1; n < light_.size(); ++n) {
      auto& l = light_[n];
      if (l.T.empty() && l.protect.empty()) continue;
      l.T.clear();
      l.protect.clear();
      rec.injured.push_back({l_name(n), 2 * n});
    }
    st.acted = std::move(act);
    run_.log.records.push_back(std::move(rec));
    return true;
  }

  const DarkRingInputs& in_;
  DarkRingRun run_;
  std::vector<LightState> light_;
  std::vector<CollapseState> collapse_;
  std::size_t max_used_ = 0;
};

}  // namespace

void DarkRingParams::validate() const {
  check_modulus(p);
  if (maxdeg < 2 || maxdeg > 30) throw InvalidInput("maxdeg must lie in [2, 30]");
  if (epsilon <= 0 || epsilon > 1)
    throw InvalidInput("epsilon must lie in (0, 1], got " + format_rational(epsilon));
  if (group && unit_exponent < 2) throw InvalidInput("unit exponent must be at least 2");
}

std::string TestWord::text() const { return unit ? format_unit_word(*unit) : poly.to_string(); }

HomogeneousIdeal DarkRingRun::ideal_at(Stage stage) const {
  HomogeneousIdeal I(params.p, params.maxdeg);
  for (const auto& r : relators)
    if (r.stage <= stage) I.add_generator(r.relator);
  return I;
}

std::string DarkRingRun::summary() const {
  std::ostringstream out;
  out << (params.group ? "dark-group" : "dark-ring") << " run: " << params.stages
      << " stages, p=" << params.p << ", maxdeg=" << params.maxdeg
      << ", epsilon=" << format_rational(params.epsilon);
  if (params.group) out << ", N=" << params.unit_exponent;
  out << '\n';
  for (std::size_t m = 0; m < collapses.size(); ++m) {
    if (collapses[m])
      out << "D" << m << " acted at stage " << collapses[m]->stage << " (k_s=" << collapses[m]->k_s
          << ", " << collapses[m]->components.size() << " relators)\n";
  }
  for (std::size_t n = 0; n < T.size(); ++n)
    if (!T[n].empty()) out << "L" << n << ": |T" << n << "| = " << T[n].size() << '\n';
  out << "relators emitted: " << relators.size() << '\n';
  if (horizon_blocked) out << "L actions held back by the degree horizon: " << horizon_blocked << '\n';
  out << "gs_audit: pass at all " << stages_audited << " stages\n";
  return out.str();
}

DarkRingRun run_dark_ring(const DarkRingInputs& inputs, const DarkRingParams& params) {
  params.validate();
  for (const auto& w : inputs.w)
    for (const auto& t : w) {
      if (t.poly.modulus() != params.p) throw ModulusMismatch("test word " + t.text() + " has the wrong modulus");
      if (t.poly.degree() > params.maxdeg)
        throw HorizonError(t.poly.degree(), params.maxdeg);
    }
  return DarkRingEngine(inputs, params).run();
}

DarkRingRun run_dark_group(const DarkRingInputs& inputs, DarkRingParams params) {
  params.group = true;
  DarkRingInputs expanded = inputs;
  for (auto& w : expanded.w)
    for (auto& t : w)
      if (t.unit) t.poly = unit_word_expand(*t.unit, params.unit_exponent, params.p, params.maxdeg);
  return run_dark_ring(expanded, params);
}

CeerTable ring_word_problem(const DarkRingRun& run, const std::vector<Poly>& elements,
                            std::span<const Stage> stages) {
  std::map<Stage, HomogeneousIdeal> ideals;
  for (Stage s : stages) ideals.emplace(s, run.ideal_at(s));
  return table_from_classifier(elements.size(), stages, [&](Natural i, Stage s) {
    return ideals.at(s).quotient_reduce(elements[i], run.params.maxdeg).to_string();
  });
}

}  // namespace ceerlab
