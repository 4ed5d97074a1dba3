#include <doctest.h>

#include <random>

#include "ceerlab/free_product.hpp"
#include "ceerlab/module_group.hpp"
#include "ceerlab/presentation.hpp"
#include "ceerlab/words.hpp"
#include "oracles.hpp"

using namespace ceerlab;

namespace {

Relation rel(const char* text, Stage s = 0) { return parse_relation(text, s); }

/// Substitutes right-hand sides until no LHS generator is left.
Exponents substitute_all(const std::vector<Relation>& rels, Exponents w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : rels) {
      auto it = w.find(r.lhs);
      if (it == w.end()) continue;
      const std::int64_t e = it->second;
      w.erase(it);
      for (const auto& [g, k] : r.rhs) {
        w[g] += e * k;
        if (w[g] == 0) w.erase(g);
      }
      changed = true;
    }
  }
  return w;
}

}  // namespace

TEST_CASE("group words") {
  auto w = parse_word("x3 x3 x1^-2 a");
  CHECK(format_word(w) == "x3 x3 x1^-2 a");
  CHECK(format_word(freely_reduce(w)) == "x3^2 x1^-2 a");
  CHECK(format_word(parse_word("1")) == "1");
  CHECK(freely_reduce(concat(w, inverse(w))).empty());
  CHECK(exponents_of(parse_word("x3 x1^-2 x3")) == Exponents{{1, -2}, {3, 2}});
  CHECK_THROWS_AS(exponents_of(w), InvalidInput);
  CHECK(format_exponents({{1, -2}, {3, 2}}) == "x1^-2 x3^2");
  CHECK_THROWS_AS(parse_word("x3^"), ParseError);
}

TEST_CASE("relations and their text form") {
  CHECK(rel("x12 = x10^-1").type == RelationType::inverse);
  CHECK(rel("x5 = 1").type == RelationType::collapse_to_one);
  CHECK(rel("x7 = x3").type == RelationType::equal);
  CHECK(rel("x9 = x1^-1 x3^-1").type == RelationType::product);
  for (const char* t : {"x12 = x10^-1", "x5 = 1", "x7 = x3", "x9 = x1^-1 x3^-1"}) CHECK(rel(t).text() == t);
}

TEST_CASE("staged presentations stay triangular") {
  StagedPresentation P(20);
  P.add_relation(rel("x9 = x1^-1 x3^-1", 0));
  P.add_relation(rel("x12 = x10^-1", 2));
  CHECK_THROWS_AS(P.add_relation(rel("x12 = x3", 3)), InvariantViolation);
  CHECK_THROWS_AS(P.add_relation(rel("x4 = x6", 3)), InvariantViolation);
  CHECK_THROWS_AS(P.add_relation(rel("x5 = 1", 1)), MonotonicityError);
  CHECK_THROWS_AS(P.add_relation(rel("x25 = 1", 3)), RangeError);
  CHECK(P.relation_count(1) == 1);
  CHECK(P.lhs_relation(12, 1) == std::nullopt);
  CHECK(P.lhs_relation(12) == std::size_t{1});

  try {
    P.add_relation(rel("x9 = x2", 4));
    FAIL("duplicate LHS accepted");
  } catch (const InvariantViolation& e) {
    CHECK(std::string(e.what()).find("x9 = x2") != std::string::npos);
  }

  CHECK_FALSE(triangularity_defect(P.relations()));
  auto bad = P.relations();
  bad.push_back(rel("x12 = x1", 9));
  auto defect = triangularity_defect(bad);
  REQUIRE(defect);
  CHECK(defect->find("x12 = x1") != std::string::npos);

  P.set_status(9, GeneratorStatus::determined, 0);
  CHECK(P.status(9, 0) == GeneratorStatus::determined);
  CHECK(P.status(3) == GeneratorStatus::level);
}

TEST_CASE("abelian word problem matches naive substitution") {
  std::mt19937_64 rng(5);
  StagedPresentation P(30);
  std::vector<Relation> rels;
  Stage s = 0;
  for (Natural g = 10; g < 30; ++g) {
    if (rng() % 3 == 0) continue;
    Exponents rhs;
    for (int i = 0; i < 3; ++i) {
      const Natural t = rng() % g;
      if (rng() % 2) rhs[t] += (rng() % 2) ? 1 : -1;
      if (rhs.count(t) && rhs[t] == 0) rhs.erase(t);
    }
    s += rng() % 3;
    Relation r{rhs.empty() ? RelationType::collapse_to_one : RelationType::product, g, rhs, s};
    if (r.type == RelationType::product && rhs.size() == 1 && rhs.begin()->second == 1)
      r.type = RelationType::equal;
    else if (r.type == RelationType::product && rhs.size() == 1 && rhs.begin()->second == -1)
      r.type = RelationType::inverse;
    P.add_relation(r);
    rels.push_back(r);
  }
  for (int t = 0; t < 200; ++t) {
    Exponents w;
    for (int i = 0; i < 5; ++i) w[rng() % 30] += static_cast<std::int64_t>(rng() % 5) - 2;
    std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
    const Stage at = rng() % (s + 2);
    std::vector<Relation> live;
    for (const auto& r : rels)
      if (r.stage <= at) live.push_back(r);
    REQUIRE(staged_abelian_wp(P, w, at) == substitute_all(live, w));
  }
}

TEST_CASE("free products of cyclic groups agree with a modular stack reducer") {
  for (std::int64_t m = 2; m <= 4; ++m) {
    CyclicDecider G(m, plain('b'));
    CyclicDecider Z2(2);
    std::vector<const FactorDecider*> d{&G, &Z2};
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::int64_t> g(n, 0);
      for (;;) {
        std::vector<GroupWord> parts;
        oracle::CyclicWord ow;
        for (std::size_t i = 0; i < n; ++i) {
          parts.push_back(g[i] ? GroupWord{plain('b', g[i])} : GroupWord{});
          if (i) ow.push_back({1, 1});
          ow.push_back({0, g[i]});
        }
        auto w = alternating_word(parts);
        CHECK(fp_is_identity(w, d) == oracle::cyclic_product_is_identity(ow, {m, 2}));
        CHECK(fp_reduce(fp_concat(w, fp_inverse(w)), d).empty());
        std::size_t i = 0;
        while (i < n && ++g[i] == m) g[i++] = 0;
        if (i == n) break;
      }
    }
  }
}

TEST_CASE("alternating words split back into their G-parts") {
  std::vector<GroupWord> g{parse_word("x1"), {}, parse_word("x2^-1")};
  auto w = alternating_word(g);
  CHECK(split_alternating(w) == g);
  FreeProductWord broken{{1, parse_word("a^3")}};
  CHECK(split_alternating({{1, parse_word("a")}, {1, parse_word("a")}}).size() == 3);
  CHECK_THROWS_AS(split_alternating(broken), InvalidInput);
  CHECK_THROWS_AS(star_z2_to_star_h(g, parse_word("c^3"), CyclicDecider(3, plain('c'))), InvalidInput);
}

TEST_CASE("Z/2 module word problem over a ceer") {
  CeerTable e(8);
  e.add(1, 3, 2).add(3, 5, 4);
  CHECK(z2_module_wp(e, parse_word("g1 g5"), 4).empty());
  CHECK(z2_module_wp(e, parse_word("g1 g5"), 3) == std::vector<Natural>{1, 5});
  CHECK(z2_module_wp(e, parse_word("g2 g2^3 g9"), 4) == std::vector<Natural>{9});

  std::mt19937_64 rng(3);
  auto r = oracle::random_ceer(rng, 12, 8);
  for (int t = 0; t < 100; ++t) {
    GroupWord w;
    std::map<Natural, int> parity;
    const Stage s = rng() % (r.last_stage() + 2);
    auto labels = oracle::closure(r.pairs(), 12, s);
    for (int i = 0; i < 6; ++i) {
      Natural k = rng() % 12;
      w.push_back(gen('g', k, 1));
      parity[labels[k]] ^= 1;
    }
    std::vector<Natural> expect;
    for (auto [k, bit] : parity)
      if (bit) expect.push_back(k);
    REQUIRE(z2_module_wp(r, w, s) == expect);
    CeerModuleDecider dec(r, s);
    REQUIRE(dec.is_identity(w) == expect.empty());
  }
}

TEST_CASE("G_A word problem") {
  StagedSet A{{2, 1}, {5, 3}};
  CHECK(ga_wp(A, parse_word("g2 g7 g7"), 1));
  CHECK_FALSE(ga_wp(A, parse_word("g5"), 2));
  CHECK(ga_wp(A, parse_word("g5"), 3));
}

TEST_CASE("change of finite generating set") {
  GeneratorTranslation t({{{'y', 0}, parse_word("x0 x1")}, {{'y', 1}, parse_word("x1^-1")}});
  CHECK(format_word(freely_reduce(t(parse_word("y0 y1")))) == "x0");
  CHECK_THROWS_AS(t(parse_word("y2")), InvalidInput);
  auto tw = finite_genset_translate(t, {parse_word("y0"), parse_word("y1 y1")});
  CHECK(tw.images.size() == 2);
  CHECK(tw.reduction(1) == 1);
}
