#include <doctest.h>

#include <random>
#include <sstream>

#include "ceerlab/ceer.hpp"
#include "ceerlab/ceer_io.hpp"
#include "oracles.hpp"

using namespace ceerlab;

TEST_CASE("cantor pairing inverts on a prefix") {
  for (Natural z = 0; z < 5000; ++z) {
    auto [j, n] = cantor_unpair(z);
    CHECK(cantor_pair(j, n) == z);
    CHECK(oracle::unpair(z) == std::make_pair(j, n));
  }
  CHECK(cantor_pair(0, 0) == 0);
  CHECK(cantor_pair(1, 0) == 1);
  CHECK(cantor_pair(0, 1) == 2);
}

TEST_CASE("stage-faithful relatedness") {
  CeerTable t(16);
  t.add(1, 2, 3).add(2, 5, 7);

  CHECK_FALSE(t.related(1, 2, 2));
  CHECK(t.related(1, 2, 3));
  CHECK_FALSE(t.related(1, 5, 6));
  CHECK(t.related(1, 5, 7));
  CHECK(t.related(4, 4, 0));
  CHECK(t.representative(5, 7) == 1);
  CHECK(t.representative(5, 6) == 5);
  CHECK(t.last_stage() == 7);
  CHECK(t.stages() == std::vector<Stage>{3, 7});

  SUBCASE("snapshots agree with a breadth-first closure at every stage") {
    std::mt19937_64 rng(7);
    auto r = oracle::random_ceer(rng, 40, 30);
    for (Stage s = 0; s <= r.last_stage() + 1; ++s) {
      auto labels = oracle::closure(r.pairs(), 40, s);
      auto snap = r.snapshot(s);
      for (Natural x = 0; x < 40; ++x) REQUIRE(snap.least(x) == labels[x]);
    }
  }
}

TEST_CASE("table errors") {
  CeerTable t(8);
  t.add(0, 1, 5);
  CHECK_THROWS_AS(t.add(2, 3, 4), MonotonicityError);
  CHECK_THROWS_AS(t.add(2, 8, 6), RangeError);
  CHECK_NOTHROW(assert_pair(t, 2, 3, 5));
  CHECK_FALSE(t.related(2, 3));
}

TEST_CASE("partition classes") {
  CeerTable t(6);
  t.add(0, 3, 1).add(4, 5, 2);
  auto classes = t.snapshot().classes();
  CHECK(classes == std::vector<std::vector<Natural>>{{0, 3}, {1}, {2}, {4, 5}});
  CHECK(t.snapshot().class_count() == 4);
  CHECK(t.snapshot().restricted(4).classes() == std::vector<std::vector<Natural>>{{0, 3}, {1}, {2}});
  CHECK(CeerTable::all_related(5, 2).snapshot(1).class_count() == 5);
  CHECK(CeerTable::all_related(5, 2).snapshot(2).class_count() == 1);
}

TEST_CASE("staged sets") {
  StagedSet w;
  w.add(4, 1);
  w.add(9, 3);
  w.add(4, 5);
  CHECK_THROWS_AS(w.add(1, 2), MonotonicityError);
  CHECK(w.count_at(2) == 1);
  CHECK(w.elements_at(3) == std::vector<Natural>{4, 9});
  CHECK(w.contains(9));
  CHECK_FALSE(w.contains(9, 2));
  CHECK(w.entry_stage(4) == Stage{1});
  CHECK_FALSE(w.entry_stage(7));
}

TEST_CASE("product and join against the definitions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = oracle::random_ceer(rng, 8, 5);
    auto b = oracle::random_ceer(rng, 8, 5);
    auto c = oracle::random_ceer(rng, 8, 5);
    auto prod = product(a, b, 32);
    std::vector<CeerTable> cols{a, b, c};
    auto join = uniform_join(cols, 32);
    const Stage last = std::max({a.last_stage(), b.last_stage(), c.last_stage()}) + 1;
    for (Stage s = 0; s <= last; ++s) {
      auto la = oracle::closure(a.pairs(), 8, s), lb = oracle::closure(b.pairs(), 8, s),
           lc = oracle::closure(c.pairs(), 8, s);
      const std::vector<Natural>* col[3] = {&la, &lb, &lc};
      for (Natural x = 0; x < 32; ++x)
        for (Natural y = 0; y < 32; ++y) {
          auto [u, v] = oracle::unpair(x);
          auto [u2, v2] = oracle::unpair(y);
          bool p = x == y || (u < 8 && v < 8 && u2 < 8 && v2 < 8 && la[u] == la[u2] && lb[v] == lb[v2]);
          REQUIRE(prod.related(x, y, s) == p);
          bool j = x == y || (u == u2 && u < 3 && v < 8 && v2 < 8 && (*col[u])[v] == (*col[u])[v2]);
          REQUIRE(join.related(x, y, s) == j);
        }
    }
  }
}

TEST_CASE("join of empty columns is the identity") {
  std::vector<CeerTable> cols{CeerTable(8), CeerTable(8)};
  CHECK(uniform_join(cols, 50).snapshot().class_count() == 50);
}

TEST_CASE("pullback and reductions") {
  CeerTable r(10);
  r.add(0, 1, 2).add(3, 4, 6);

  auto same = pullback(ReductionFn::identity(10), r);
  for (Stage s : {0, 2, 6})
    for (Natural i = 0; i < 10; ++i)
      for (Natural j = 0; j < 10; ++j) CHECK(same.related(i, j, s) == r.related(i, j, s));

  auto shifted = pullback(ReductionFn::tabulate(5, [](Natural n) { return n + 1; }), r);
  CHECK(shifted.related(2, 3, 6));
  CHECK_FALSE(shifted.related(2, 3, 5));
  CHECK(shifted.related(0, 0));

  CHECK(verify_reduction(ReductionFn::identity(10), r, r, 10, 6).no_violations());
  auto bad = verify_reduction(ReductionFn::identity(10), r, CeerTable(10), 10, 6);
  CHECK(bad.positive_violations == std::vector<std::pair<Natural, Natural>>{{0, 1}, {3, 4}});

  // E lags behind R: evidence only, no violation.
  CeerTable late(10);
  late.add(0, 1, 9);
  auto lag = verify_reduction(ReductionFn::identity(10), late, r, 10, 3);
  CHECK(lag.no_violations());
  CHECK(lag.unaligned_so_far == std::vector<std::pair<Natural, Natural>>{{0, 1}});
}

TEST_CASE("reduction functions are partial until defined") {
  ReductionFn f(4);
  f.define(0, 3, 2);
  CHECK(f.at(0, 1) == std::nullopt);
  CHECK(f.at(0, 2) == Natural{3});
  CHECK_THROWS_AS(f(1), PartialityError);
  CHECK_THROWS_AS(f.define(0, 4), InvariantViolation);
  CHECK_NOTHROW(f.define(0, 3, 5));
  try {
    f.require_total(4);
    FAIL("expected a partiality error");
  } catch (const PartialityError& e) {
    CHECK(e.argument() == 1);
  }
  CHECK(ReductionFn::constant(3, 7)(2) == 7);
}

TEST_CASE("darkness and lightness probes") {
  CeerTable e(20);
  e.add(2, 6, 4);
  StagedSet w{{1, 1}, {2, 2}, {6, 3}};
  CHECK_FALSE(darkness_probe(e, w, 3));
  auto hit = darkness_probe(e, w, 4);
  REQUIRE(hit);
  CHECK(*hit == std::make_pair(Natural{2}, Natural{6}));

  std::vector<Natural> t{1, 2, 6};
  CHECK(lightness_witness_check(e, t, 3));
  CHECK_FALSE(lightness_witness_check(e, t, 4));
}

TEST_CASE("functional stubs keep a halt while the use is untouched") {
  CeerTable e(12);
  e.add(8, 9, 5).add(1, 2, 10);
  FunctionalStub phi(0, {{3, 4}});
  CHECK_FALSE(phi.evaluate(e, 2));
  CHECK(phi.evaluate(e, 7) == FunctionalStub::Halt{3, 4});
  CHECK_FALSE(phi.evaluate(e, 10));
}

TEST_CASE("classifier tables reject splits") {
  std::vector<Stage> stages{0, 1};
  auto splitting = [](Natural x, Stage s) { return s == 0 ? Natural{0} : x; };
  CHECK_THROWS_AS(table_from_classifier(4, stages, splitting), InvariantViolation);
}

TEST_CASE("dump round trips") {
  CeerTable t(16);
  t.add(1, 2, 3).add(4, 5, 6);
  std::stringstream ss;
  dump_pairs(ss, t);
  CHECK(load_pairs(ss) == t);

  std::stringstream headerless("{\"a\":0,\"b\":1,\"s\":2}\n");
  CHECK(load_pairs(headerless, 5).bound() == 5);

  std::stringstream broken("{\"a\":0,\"b\":1,\"s\":2}\n{\"a\":0\n");
  CHECK_THROWS_AS(load_pairs(broken), ParseError);

  std::stringstream cls;
  dump_classes(cls, t.snapshot().restricted(4));
  CHECK(cls.str() == "[0]\n[1,2]\n[3]\n");

  ReductionFn f = ReductionFn::tabulate(3, [](Natural n) { return 2 * n; });
  std::stringstream fs;
  dump_reduction(fs, f);
  auto g = load_reduction(fs);
  CHECK(g.totality_bound() == 3);
  CHECK(g(2) == 4);
}
