#include "ceerlab/lab/star_universal.hpp"

#include <algorithm>
#include <sstream>

namespace ceerlab {
namespace {

Natural ipow(Natural b, std::size_t e) {
  Natural out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= b;
  return out;
}

std::string r_name(std::size_t e) { return "R" + std::to_string(e); }

Relation make_relation(RelationType type, Natural lhs, Exponents rhs, Stage s) {
  return Relation{type, lhs, std::move(rhs), s};
}

}  // namespace

std::optional<GroupWord> PhiStub::at(Natural arg, Stage stage) const {
  auto it = values.find(arg);
  if (it != values.end()) {
    if (it->second.stage <= stage) return it->second.word;
    return std::nullopt;
  }
  if (wildcard && wildcard->stage <= stage) return wildcard->word;
  return std::nullopt;
}

void StarParams::validate() const {
  if (base < 2 || base % 2 != 0)
    throw InvalidInput("base must be even and at least 2, got " + std::to_string(base));
  if (levels < 1) throw InvalidInput("at least one level beyond level 0 is required");
  long double total = 1;
  for (std::size_t i = 0; i <= levels; ++i) total *= static_cast<long double>(base);
  if (total > (1u << 22))
    throw InvalidInput("B^(levels+1) = " + std::to_string(static_cast<double>(total)) +
                       " generators is beyond the supported size");
  for (std::size_t j = 0; j <= levels; ++j) {
    const Natural size = block_end(j) - block_begin(j);
    const Natural removable = 4 * j * ipow(2, j);
    if (size <= removable + 2 || size - 2 - removable <= ipow(base, j))
      throw InvalidInput("level " + std::to_string(j) + " has too few generators for base " +
                         std::to_string(base) + " (need B^(j+1) - B^j - 4 j 2^j > B^j)");
  }
  if (x_bound < 2) throw InvalidInput("x_bound must be at least 2");
}

Natural StarParams::block_begin(std::size_t j) const { return j == 0 ? 0 : ipow(base, j); }
Natural StarParams::block_end(std::size_t j) const { return ipow(base, j + 1); }

std::size_t StarParams::level_of(Natural g) const {
  std::size_t j = 0;
  while (g >= block_end(j)) ++j;
  return j;
}

StarUniversalConstruction::StarUniversalConstruction(StarInputs inputs, StarParams params)
    : in_(std::move(inputs)), params_(params), X_(params.x_bound) {
  params_.validate();
  G_ = StagedPresentation(params_.generator_count());
  seq_.resize(params_.levels + 1);
  det_.resize(params_.levels + 1);
  responded_.assign(params_.levels + 1, false);

  Json upairs = Json::array();
  for (const auto& p : in_.u.pairs()) upairs.push_back({p.a, p.b, p.stage});
  log_.header = {{"construction", "star-universal"},
                 {"base", params_.base},
                 {"levels", params_.levels},
                 {"stages", params_.stages},
                 {"x-bound", params_.x_bound},
                 {"u-bound", in_.u.bound()},
                 {"u-pairs", upairs}};

  LogRecord rec;
  rec.stage = 0;
  rec.requirement = "init";
  rec.kind = "init";
  rec.action = "even and odd product relations on every level";
  rec.justification = "prod of even (odd) generators of each block = 1";
  for (std::size_t j = 0; j <= params_.levels; ++j) {
    const Natural lo = params_.block_begin(j), hi = params_.block_end(j);
    const Natural det_even = hi - 2, det_odd = hi - 1;
    for (Natural det : {det_even, det_odd}) {
      Exponents rhs;
      for (Natural k = lo + (det - lo) % 2; k < det; k += 2) rhs[k] = -1;
      emit(make_relation(RelationType::product, det, std::move(rhs), 0), rec);
      set_status(det, GeneratorStatus::determined, rec);
    }
    det_[j] = {det_even, det_odd};
    for (Natural k = lo; k < det_even; ++k) seq_[j].push_back(k);
  }
  log_.records.push_back(std::move(rec));

  R_.resize(in_.phis.size());
  for (std::size_t e = 0; e < R_.size(); ++e) reinitialize(e);
  check_budget("init");
}

std::string StarUniversalConstruction::label(Natural g, GeneratorStatus s) const {
  if (s == GeneratorStatus::level) return "level-" + std::to_string(params_.level_of(g));
  return status_name(s);
}

void StarUniversalConstruction::set_status(Natural g, GeneratorStatus s, LogRecord& rec) {
  GeneratorStatus old = G_.status(g);
  G_.set_status(g, s, stage_);
  rec.status_changes.push_back("x" + std::to_string(g) + ": " + label(g, old) + " -> " + label(g, s));
}

void StarUniversalConstruction::emit(Relation r, LogRecord& rec) {
  r.stage = stage_;
  rec.relations.push_back(r.text());
  G_.add_relation(std::move(r));
}

Exponents StarUniversalConstruction::reduce(const Exponents& w) const {
  return staged_abelian_wp(G_, w, stage_);
}

void StarUniversalConstruction::reinitialize(std::size_t e) {
  if (next_witness_ + 1 >= X_.bound())
    throw BudgetExhausted(0, r_name(e), "no fresh witnesses left below the X bound " +
                                           std::to_string(X_.bound()));
  R_[e] = DiagonalState{next_witness_, next_witness_ + 1, DiagonalOutcome::waiting, 0, stage_};
  next_witness_ += 2;
}

void StarUniversalConstruction::check_budget(const std::string& requirement) const {
  for (std::size_t j = 0; j <= params_.levels; ++j) {
    if (j < in_.u.bound() && in_.u.representative(j, stage_) != j) continue;
    if (seq_[j].size() <= ipow(params_.base, j))
      throw BudgetExhausted(j, requirement,
                            "level " + std::to_string(j) + " has only " +
                                std::to_string(seq_[j].size()) + " level generators left after " +
                                requirement + " acted at stage " + std::to_string(stage_));
  }
}

void StarUniversalConstruction::respond_to_u() {
  for (std::size_t j = 1; j <= params_.levels; ++j) {
    if (responded_[j] || j >= in_.u.bound()) continue;
    const Natural i = in_.u.representative(j, stage_);
    if (i == j) continue;
    const Natural lo_i = params_.block_begin(i);
    const Natural size_i = params_.block_end(i) - lo_i;
    LogRecord rec;
    rec.stage = stage_;
    rec.requirement = "U";
    rec.kind = "U-response";
    rec.action = "collapse level " + std::to_string(j) + " onto level " + std::to_string(i);
    rec.justification = std::to_string(i) + " U " + std::to_string(j) + " at stage " +
                        std::to_string(stage_);
    auto& S = seq_[j];
    if (S.size() < size_i)
      throw BudgetExhausted(j, "U", "level " + std::to_string(j) + " has " +
                                        std::to_string(S.size()) + " level generators, " +
                                        std::to_string(size_i) + " are needed");
    for (Natural t = 0; t < S.size(); ++t) {
      if (t < size_i)
        emit(make_relation(RelationType::equal, S[t], {{lo_i + t, 1}}, stage_), rec);
      else
        emit(make_relation(RelationType::collapse_to_one, S[t], {}, stage_), rec);
      set_status(S[t], GeneratorStatus::collapsed, rec);
    }
    set_status(det_[j].first, GeneratorStatus::collapsed, rec);
    set_status(det_[j].second, GeneratorStatus::collapsed, rec);
    S.clear();
    responded_[j] = true;
    rec.details = {{"i", i}, {"j", j}, {"mapped", size_i}};
    for (std::size_t e = 0; e < R_.size(); ++e)
      if (R_[e].outcome == DiagonalOutcome::assumed && j <= e) {
        reinitialize(e);
        rec.injured.push_back({r_name(e), e});
      }
    log_.records.push_back(std::move(rec));
    check_budget("U");
  }
}

std::optional<std::size_t> StarUniversalConstruction::top_level(const Exponents& w) const {
  std::optional<std::size_t> K;
  for (const auto& [g, x] : w)
    if (G_.status(g) == GeneratorStatus::level) K = std::max(K.value_or(0), params_.level_of(g));
  return K;
}

bool StarUniversalConstruction::act(std::size_t e) {
  auto& st = R_[e];
  if (st.outcome != DiagonalOutcome::waiting) return false;
  auto fa = in_.phis[e].at(st.a, stage_);
  auto fb = in_.phis[e].at(st.b, stage_);
  if (!fa || !fb) return false;
  Exponents raw = exponents_of(*fa);
  add_scaled(raw, exponents_of(*fb), -1);
  for (const auto& [g, x] : raw)
    if (g >= params_.generator_count())
      throw InvalidInput("phi_" + std::to_string(e) + " mentions x" + std::to_string(g) +
                         " beyond the generator count");
  const Exponents w = reduce(raw);

  LogRecord rec;
  rec.stage = stage_;
  rec.requirement = r_name(e);
  rec.priority = e;
  rec.kind = "diagonal";
  rec.details = {{"a", st.a}, {"b", st.b}, {"w", format_exponents(w)}};
  auto collapse_x = [&] {
    if (!X_.related(st.a, st.b)) X_.add(st.a, st.b, stage_);
  };
  bool injures = true;

  const bool has_free = std::any_of(w.begin(), w.end(), [&](const auto& kv) {
    return G_.status(kv.first) == GeneratorStatus::free;
  });
  const auto K = top_level(w);
  if (w.empty()) {
    rec.action = "case-0";
    rec.justification = "w = 1 in G_s; a, b stay X-unrelated";
    st.outcome = DiagonalOutcome::equal;
    injures = false;
  } else if (has_free) {
    rec.action = "case-1";
    rec.justification = "w contains a free generator, so w != 1 in G; collapse a X b";
    collapse_x();
    st.outcome = DiagonalOutcome::won;
  } else if (*K <= e) {
    rec.action = "case-2";
    rec.justification = "K = " + std::to_string(*K) + " <= e; collapse a X b assuming no later U-collapse below e";
    rec.details["K"] = *K;
    collapse_x();
    st.outcome = DiagonalOutcome::assumed;
    st.assumed_level = *K;
  } else {
    auto& S = seq_[*K];
    auto exp_of = [&](Natural g) {
      auto it = w.find(g);
      return it == w.end() ? std::int64_t{0} : it->second;
    };
    std::optional<std::size_t> first_pos;
    bool odd_case = false;
    for (int parity : {0, 1}) {
      std::optional<std::size_t> prev;
      for (std::size_t i = 0; i < S.size() && !first_pos; ++i) {
        if (S[i] % 2 != static_cast<Natural>(parity)) continue;
        if (prev && exp_of(S[*prev]) != exp_of(S[i])) first_pos = prev;
        prev = i;
      }
      if (first_pos) {
        odd_case = parity == 1;
        break;
      }
    }
    rec.details["K"] = *K;
    if (first_pos) {
      const std::size_t i1 = *first_pos;
      const std::size_t i2 = i1 + 2;
      if (i2 >= S.size() || S[i2] % 2 != S[i1] % 2)
        throw InvariantViolation("level " + std::to_string(*K) + " sequence does not alternate parity");
      const Natural first = S[i1], ell = S[i1 + 1], second = S[i2];
      Natural m;
      std::size_t erase_from;
      if (i2 + 1 < S.size()) {
        m = S[i2 + 1];
        erase_from = i1;
        rec.details["m-position"] = "after";
      } else if (i1 >= 1) {
        m = S[i1 - 1];
        erase_from = i1 - 1;
        rec.details["m-position"] = "before";
      } else {
        throw BudgetExhausted(*K, r_name(e), "no neighbour left for case 3");
      }
      rec.action = odd_case ? "case-3b" : "case-3a";
      rec.justification = std::string("consecutive ") + (odd_case ? "odd" : "even") +
                          " level generators x" + std::to_string(first) + ", x" +
                          std::to_string(second) + " have unequal exponents in w";
      emit(make_relation(RelationType::collapse_to_one, ell, {}, stage_), rec);
      emit(make_relation(RelationType::collapse_to_one, m, {}, stage_), rec);
      emit(make_relation(RelationType::inverse, second, {{first, -1}}, stage_), rec);
      set_status(ell, GeneratorStatus::collapsed, rec);
      set_status(m, GeneratorStatus::collapsed, rec);
      set_status(first, GeneratorStatus::free, rec);
      set_status(second, GeneratorStatus::free, rec);
      S.erase(S.begin() + static_cast<std::ptrdiff_t>(erase_from),
              S.begin() + static_cast<std::ptrdiff_t>(erase_from + 4));
      collapse_x();
      st.outcome = DiagonalOutcome::won;
    } else {
      if (S.size() < 4)
        throw BudgetExhausted(*K, r_name(e), "too few level generators for case 3c");
      const Natural max_even = S[S.size() - 2], max_odd = S[S.size() - 1];
      rec.action = "case-3c";
      rec.justification = "every level-" + std::to_string(*K) +
                          " even (odd) generator has the same exponent in w";
      for (Natural det : {max_even, max_odd}) {
        Exponents rhs;
        for (Natural g : S)
          if (g % 2 == det % 2 && g != det) rhs[g] = -1;
        emit(make_relation(RelationType::product, det, std::move(rhs), stage_), rec);
      }
      set_status(max_even, GeneratorStatus::determined, rec);
      set_status(max_odd, GeneratorStatus::determined, rec);
      set_status(det_[*K].first, GeneratorStatus::collapsed, rec);
      set_status(det_[*K].second, GeneratorStatus::collapsed, rec);
      det_[*K] = {max_even, max_odd};
      S.resize(S.size() - 2);
      const Exponents after = reduce(raw);
      const auto K_after = top_level(after);
      rec.details["K-before"] = *K;
      rec.details["K-after"] = K_after ? Json(*K_after) : Json(nullptr);
      rec.details["w-after"] = format_exponents(after);
    }
  }
  if (injures)
    for (std::size_t f = e + 1; f < R_.size(); ++f)
      if (R_[f].outcome == DiagonalOutcome::waiting || R_[f].outcome == DiagonalOutcome::assumed) {
        reinitialize(f);
        rec.injured.push_back({r_name(f), f});
      }
  log_.records.push_back(std::move(rec));
  check_budget(r_name(e));
  return true;
}

void StarUniversalConstruction::step() {
  ++stage_;
  respond_to_u();
  for (std::size_t e = 0; e < R_.size(); ++e)
    if (act(e)) break;
}

void StarUniversalConstruction::run() {
  while (stage_ < params_.stages) step();
}

std::string StarUniversalConstruction::summary() const {
  std::ostringstream out;
  out << "star-universal run: base " << params_.base << ", levels " << params_.levels << ", "
      << stage_ << " stages, " << params_.generator_count() << " generators\n";
  out << "relations emitted: " << G_.relations().size() << '\n';
  for (std::size_t j = 0; j <= params_.levels; ++j) {
    auto c = level_census(G_, params_, j, stage_);
    out << "level " << j << ": " << c.level << " level, " << c.free << " free, " << c.determined
        << " determined, " << c.collapsed << " collapsed\n";
  }
  for (std::size_t e = 0; e < R_.size(); ++e) {
    const char* outcome[] = {"waiting", "equal (case 0)", "won", "assumed (case 2)"};
    out << "R" << e << ": witnesses " << R_[e].a << ", " << R_[e].b << ", "
        << outcome[static_cast<int>(R_[e].outcome)] << '\n';
  }
  return out.str();
}

StarUniversalConstruction run_star_universal(const StarInputs& inputs, const StarParams& params) {
  StarUniversalConstruction c(inputs, params);
  c.run();
  return c;
}

FreeProductWord v_word(const StarParams& params, std::size_t i) {
  FreeProductWord out;
  for (Natural k = params.block_begin(i); k < params.block_end(i); ++k) {
    out.push_back({1, {plain('a')}});
    out.push_back({0, {gen('x', k)}});
  }
  return out;
}

bool v_equal(const StagedPresentation& G, const StarParams& params, std::size_t i, std::size_t j,
             Stage stage) {
  StagedAbelianDecider g(G, stage);
  CyclicDecider z2(2);
  return fp_is_identity(fp_concat(fp_inverse(v_word(params, i)), v_word(params, j)), {&g, &z2});
}

LevelCensus level_census(const StagedPresentation& G, const StarParams& params, std::size_t j,
                         Stage stage) {
  LevelCensus c;
  for (Natural k = params.block_begin(j); k < params.block_end(j); ++k) {
    switch (G.status(k, stage)) {
      case GeneratorStatus::level: ++c.level; break;
      case GeneratorStatus::free: ++c.free; break;
      case GeneratorStatus::determined: ++c.determined; break;
      case GeneratorStatus::collapsed: ++c.collapsed; break;
    }
  }
  return c;
}

}  // namespace ceerlab
