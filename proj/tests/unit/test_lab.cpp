#include <doctest.h>

#include <sstream>

#include "ceerlab/lab/scenario.hpp"
#include "ceerlab/lab/verify.hpp"
#include "ceerlab/presentation.hpp"

using namespace ceerlab;

namespace {

Scenario scenario(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in, "inline");
}

std::size_t line_of(const std::string& text) {
  try {
    scenario(text);
    auto sc = scenario(text);
    run_scenario(sc);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::size_t count_kind(const RunLog& log, const std::string& kind) {
  std::size_t n = 0;
  for (const auto& r : log.records) n += r.kind == kind;
  return n;
}

}  // namespace

TEST_CASE("scenario parsing") {
  auto sc = scenario(R"(construction = dark-ring
stages = 40   # short run

[set U 0]
3 @ 2
stream every=5 start=4 until=14 from=7

[polys W 1]
x*y @ 3
template=y^{n} n0=2 every=10 start=1

[ceer U]
bound = 8
0 1 @ 5

[phi 2]
0 : x100 x3^-1 @ 4
* : 1 @ 9

[functional 0]
since=3 use=5
)");
  CHECK(sc.construction() == "dark-ring");
  CHECK(sc.params.at("stages").text == "40");
  CHECK(sc.sets.at("U").at(0).entries.size() == 1);
  CHECK(sc.sets.at("U").at(0).streams.size() == 1);
  CHECK(sc.words.at("W").at(1).streams.at(0).pattern == "y^{n}");
  CHECK(sc.ceers.at("U").related(0, 1, 5));
  CHECK(sc.phis.at(2).at(5, 9) == GroupWord{});
  CHECK_FALSE(sc.phis.at(2).at(5, 8));
  CHECK(sc.functionals.at(0).halts().size() == 1);

  auto p = dark_ring_params(sc);
  auto in = dark_ring_inputs(sc, p);
  REQUIRE(in.u_columns.size() == 1);
  // 3 @ 2, then 7 @ 4, 8 @ 9, 9 @ 14
  CHECK(in.u_columns[0].elements_at(40) == std::vector<Natural>{3, 7, 8, 9});
  CHECK(in.u_columns[0].entry_stage(8) == Stage{9});
  REQUIRE(in.w.size() == 2);
  CHECK(in.w[0].empty());
  REQUIRE(in.w[1].size() == 5);
  CHECK(in.w[1][1].text() == "x*y");
  CHECK(in.w[1][4].poly == Poly::parse("y^5", 2));
}

TEST_CASE("scenario errors carry line numbers") {
  CHECK(line_of("construction = dark-ring\nepsilon = 0\n") == 2);
  CHECK(line_of("construction = dark-ring\n\nsize = 3\n") == 3);
  CHECK(line_of("construction = dark-ring\n[set U 0]\n4 @ x\n") == 3);
  CHECK(line_of("construction = dark-ring\n[set U 0]\n4 @ 3\n5 @ 1\n") == 0);
  CHECK(line_of("construction = star-universal\nbase = 9\n") == 2);
  CHECK(line_of("construction = dark-ring\n[ceer U]\n0 1 @ 4\n1 2 @ 2\n") == 4);
  CHECK(line_of("construction = dark-ring\nmaxdeg = 4\n[polys W 0]\nx^5 @ 1\n") == 4);
  CHECK(line_of("[bogus X]\n") == 1);
  CHECK_THROWS_AS(run_scenario(scenario("construction = nothing\n")), ParseError);
  auto sc = scenario("construction = dark-ring\n");
  CHECK_THROWS_AS(sc.set_param("colour", "red"), InvalidInput);
}

TEST_CASE("set entries given out of order are sorted by stage") {
  auto sc = scenario("construction = dark-ring\n[set U 0]\n4 @ 3\n5 @ 1\n");
  auto in = dark_ring_inputs(sc, dark_ring_params(sc));
  CHECK(in.u_columns[0].elements_at(3) == std::vector<Natural>{5, 4});
}

TEST_CASE("dark ring: empty inputs do nothing") {
  auto out = run_scenario(scenario("construction = dark-ring\nstages = 20\n"));
  CHECK(out.log.records.empty());
  auto v = verify_log(out.log, "membership");
  CHECK(v.passed);
  CHECK(v.vacuous);
}

TEST_CASE("dark ring: D_0 finds two words already equal modulo the high part") {
  auto sc = scenario(R"(construction = dark-ring
maxdeg = 12
stages = 2100
[set U 0]
0 @ 1
[polys W 0]
monomials every=1 start=1
)");
  auto p = dark_ring_params(sc);
  const auto in = dark_ring_inputs(sc, p);
  auto run = run_dark_ring(in, p);
  REQUIRE(run.collapses.size() >= 1);
  REQUIRE(run.collapses[0]);
  const auto& act = *run.collapses[0];
  CHECK(act.k_s == 10);
  for (const auto& c : act.components) CHECK(c.degree() > act.k_s);
  const auto& W = in.w[0];
  CHECK(run.ideal.member((W[act.f_index].poly - W[act.g_index].poly).truncated(p.maxdeg)));
  CHECK(run.stages_audited == 2101);
  CHECK(verify_log(run.log, "membership").passed);
  CHECK(verify_log(run.log, "gs-audit").passed);
}

TEST_CASE("dark ring: an infinite U column gives L_0 fresh degrees up to the horizon") {
  auto sc = scenario("construction = dark-ring\nmaxdeg = 12\nstages = 40\n[set U 0]\nstream every=1 start=1\n");
  auto p = dark_ring_params(sc);
  auto run = run_dark_ring(dark_ring_inputs(sc, p), p);
  REQUIRE(run.T.size() == 1);
  CHECK(run.T[0].size() == 12);
  CHECK(run.horizon_blocked == 40 - 12);
  for (std::size_t i = 0; i < run.T[0].size(); ++i) {
    CHECK(run.T[0][i].monomial.degree() == i + 1);
    CHECK_FALSE(run.ideal.member(Poly(2, run.T[0][i].monomial)));
  }
}

TEST_CASE("dark group with N = 10 breaks the budget at initialization") {
  auto sc = scenario("construction = dark-group\nunit-exponent = 10\nmaxdeg = 12\nstages = 3\n");
  try {
    run_scenario(sc);
    FAIL("expected a Golod-Shafarevich violation");
  } catch (const GSViolation& e) {
    CHECK(e.stage() == 0);
    CHECK(e.degree() == 10);
  }
}

TEST_CASE("star-universal: quiet inputs leave only the initialization relations") {
  auto sc = scenario("construction = star-universal\nstages = 30\n");
  auto run = run_star_universal(star_inputs(sc), star_params(sc));
  const auto& G = run.presentation();
  CHECK(G.relations().size() == 2 * (run.params().levels + 1));
  CHECK_FALSE(v_equal(G, run.params(), 0, 1, 30));
  auto c1 = level_census(G, run.params(), 1, 0);
  CHECK(c1.level == 88);
  CHECK(c1.determined == 2);
}

TEST_CASE("star-universal: odd bases are rejected") {
  StarParams p;
  p.base = 9;
  CHECK_THROWS_AS(p.validate(), InvalidInput);
  p.base = 10;
  CHECK_NOTHROW(p.validate());
  CHECK(p.block_begin(0) == 0);
  CHECK(p.block_begin(2) == 100);
  CHECK(p.generator_count() == 1000);
  CHECK(p.level_of(57) == 1);
}

TEST_CASE("star-universal: case 1 collapses a X b and keeps w nontrivial") {
  auto sc = scenario(R"(construction = star-universal
stages = 40
[phi 0]
0 : x100 @ 3
1 : x102 @ 3
[phi 1]
4 : x100 @ 10
5 : 1 @ 10
)");
  auto run = run_star_universal(star_inputs(sc), star_params(sc));
  const auto& rec = run.log().records;
  bool case1 = false;
  for (const auto& r : rec)
    if (r.action == "case-1") {
      case1 = true;
      const Natural a = r.details["a"], b = r.details["b"];
      CHECK(run.x().related(a, b, r.stage));
      CHECK_FALSE(run.x().related(a, b, r.stage - 1));
      for (Stage s = r.stage; s <= 40; ++s)
        CHECK_FALSE(staged_abelian_wp(run.presentation(), {{100, 1}}, s).empty());
    }
  CHECK(case1);

  // case 3a at stage 3 removed exactly four level-2 generators
  auto before = level_census(run.presentation(), run.params(), 2, 2);
  auto after = level_census(run.presentation(), run.params(), 2, 3);
  CHECK(before.level - after.level == 4);
  CHECK(after.free == 2);
}

TEST_CASE("sigma3: an infinite coding column ends up copying U") {
  auto sc = scenario(R"(construction = sigma3
stages = 60
[set W 0]
0 @ 1
[set W 2]
stream every=3 start=2
[ceer U]
bound = 32
0 1 @ 4
2 3 @ 20
1 5 @ 33
)");
  auto run = run_sigma3_ceer(sigma3_inputs(sc), sigma3_params(sc));
  REQUIRE(run.assigned.size() >= 3);
  REQUIRE(run.assigned[2]);
  const auto& col = run.columns[*run.assigned[2]];
  CHECK(col.snapshot() == sigma3_inputs(sc).u.snapshot());
  CHECK(verify_log(run.log, "injury").passed);
}

TEST_CASE("sigma3: no entries and no halts leave the join trivial") {
  auto run = run_sigma3_ceer(sigma3_inputs(scenario("construction = sigma3\nstages = 10\n")), {10, 64});
  CHECK(run.log.records.empty());
  CHECK(run.join().snapshot().class_count() == 64);
}

TEST_CASE("sigma3: lowness restraints hold while the use is untouched") {
  auto sc = scenario(R"(construction = sigma3
stages = 50
[functional 0]
since=5 use=6
)");
  auto run = run_sigma3_ceer(sigma3_inputs(sc), sigma3_params(sc));
  REQUIRE(run.restraints.size() == 1);
  CHECK(run.restraints[0] == FunctionalStub::Halt{5, 6});
}

TEST_CASE("sug index set: C_0 replays the standalone construction") {
  auto sc = scenario("construction = sug-indexset\nstages = 40\n[set V 0]\nstream every=2 start=1\n[ceer U]\nbound = 16\n0 1 @ 5\n");
  auto params = sug_params(sc);
  auto in = sug_inputs(sc);
  auto run = run_sug_indexset(in, params);
  REQUIRE(run.c_group.size() >= 1);
  REQUIRE(run.c_group[0]);
  const auto& g = *run.g[*run.c_group[0]];
  StarParams sp = params.star;
  sp.stages = params.stages;
  StarUniversalConstruction alone(in.star, sp);
  while (alone.stage() < g.stage()) alone.step();
  CHECK(alone.log().str() == g.log().str());
}

TEST_CASE("sug index set: D codes the fixed table into its group") {
  auto sc = scenario(R"(construction = sug-indexset
stages = 60
[set V 0]
stream every=2 start=1
[set U 0]
stream every=1 start=1
[ceer coded]
bound = 16
0 1 @ 1
2 3 @ 4
1 2 @ 9
)");
  auto in = sug_inputs(sc);
  auto run = run_sug_indexset(in, sug_params(sc));
  REQUIRE(run.d_group.size() >= 1);
  REQUIRE(run.d_group[0]);
  const auto& H = *run.h[*run.d_group[0]];
  CHECK(H.clock > 9);
  CHECK(H.table.snapshot() == in.coded.snapshot(H.clock - 1));
}

TEST_CASE("sug index set: finite columns give only the abelianization") {
  auto out = run_scenario(scenario("construction = sug-indexset\nstages = 30\n[set V 0]\n0 @ 1\n"));
  CHECK(count_kind(out.log, "init") == 1);
  CHECK(out.log.records.size() == 2);
}

TEST_CASE("verify suites") {
  auto sc = scenario(R"(construction = star-universal
stages = 30
[ceer U]
bound = 16
0 1 @ 5
)");
  auto out = run_scenario(sc);
  for (const char* s : {"triangularity", "level-census", "vi-vs-U", "injury"}) CHECK(verify_log(out.log, s).passed);
  CHECK_THROWS_AS(verify_log(out.log, "membership"), InvalidInput);
  CHECK_THROWS_AS(verify_log(out.log, "nonsense"), InvalidInput);

  RunLog corrupted = out.log;
  corrupted.records.back().relations.push_back(corrupted.records.front().relations.front());
  auto r = verify_log(corrupted, "triangularity");
  CHECK_FALSE(r.passed);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].find(corrupted.records.front().relations.front()) != std::string::npos);

  RunLog empty;
  auto e = verify_log(empty, "vi-vs-U");
  CHECK(e.passed);
  CHECK(e.vacuous);
  CHECK(e.describe().find("warning") != std::string::npos);

  RunLog bad_injury = out.log;
  bad_injury.records.push_back({7, "R3", 3, "diagonal", "case-1", {}, {}, {{"R1", 1}}, "", Json::object()});
  CHECK_FALSE(verify_log(bad_injury, "injury").passed);
}

TEST_CASE("run logs round trip and fail with line numbers") {
  auto out = run_scenario(scenario("construction = star-universal\nstages = 12\n[ceer U]\nbound = 16\n0 2 @ 3\n"));
  std::istringstream in(out.log.str());
  CHECK(RunLog::read(in).str() == out.log.str());
  std::istringstream broken(out.log.str() + "{not json\n");
  try {
    RunLog::read(broken);
    FAIL("malformed log accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == out.log.records.size() + 2);
  }
}
