#include <doctest.h>

#include "gentop/generate.hpp"
#include "gentop/gtn.hpp"

using namespace gentop;

namespace {

WorldSet ws(int n, std::initializer_list<int> worlds) {
  return WorldSet::of(n, worlds);
}

GTNModel two_world_model() {
  // N_a = {{a},{a,b}}, N_b = {{a,b}}; both worlds sit in each of their
  // own neighbourhoods.
  return make_gtn_model(
      2, {{ws(2, {0}), ws(2, {0, 1})}, {ws(2, {0, 1})}}, {});
}

}  // namespace

TEST_CASE("validate_gtn accepts the two-world model") {
  GTNModel m = two_world_model();
  CHECK(validate_gtn(m).valid());
  CHECK(w1_worlds(m) == WorldSet::full(2));
  CHECK(w2_worlds(m) == WorldSet(2));
}

TEST_CASE("a world inside ⋃N with no neighbourhoods breaks the split") {
  // With N_a = {{a},{a,b}} the world b lies in a neighbourhood, so it
  // belongs to neither W1 (no family) nor W2 (not outside ⋃N).
  GTNModel m = make_gtn_model(2, {{ws(2, {0}), ws(2, {0, 1})}, {}}, {});
  auto report = validate_gtn(m);
  CHECK(!report.valid());
  CHECK(report.violations[0].rule == "world-split");
  // Shrinking N_a to {{a}} repairs it: b drops out of ⋃N into W2.
  GTNModel ok = make_gtn_model(2, {{ws(2, {0})}, {}}, {});
  CHECK(validate_gtn(ok).valid());
  CHECK(w2_worlds(ok) == ws(2, {1}));
}

TEST_CASE("core condition failure is witnessed") {
  GTNModel m = make_gtn_model(2, {{ws(2, {1})}, {}}, {});
  auto report = validate_gtn(m);
  CHECK(!report.valid());
  bool core_violation = false;
  for (const auto& v : report.violations) core_violation |= v.rule == "core-set";
  CHECK(core_violation);
}

TEST_CASE("incoherent stored unions are flagged") {
  GTNModel m = make_gtn_model(2, {{ws(2, {0})}, {}}, {});
  m.n_union = WorldSet(2);  // drop the host below its own member
  auto report = validate_gtn(m);
  CHECK(!report.valid());
  CHECK(report.violations[0].rule == "union-of-neighbourhoods");
}

TEST_CASE("empty neighbourhoods everywhere are valid") {
  GTNModel m = make_gtn_model(2, {{}, {}}, {});
  CHECK(validate_gtn(m).valid());
  CHECK(w2_worlds(m) == WorldSet::full(2));
}

TEST_CASE("forcing in neighbourhood models") {
  GTNModel m = make_gtn_model(
      2, {{ws(2, {0}), ws(2, {0, 1})}, {}}, {{"p", ws(2, {0})}});
  CHECK(forces_gtn(m, 0, parse_formula("[]p")));
  CHECK(!forces_gtn(m, 1, parse_formula("[]p")));
  CHECK(!forces_gtn(m, 1, parse_formula("[]~p")));
  CHECK(forces_gtn(m, 1, parse_formula("<>p")));
  CHECK(forces_gtn(m, 1, parse_formula("<>~p")));
  GTNModel empty_val = make_gtn_model(
      2, {{ws(2, {0}), ws(2, {0, 1})}, {}}, {{"p", WorldSet(2)}});
  CHECK(!forces_gtn(empty_val, 0, parse_formula("[]p")));
  CHECK_THROWS_AS(forces_gtn(m, 0, parse_formula("*p")), UnsupportedOperator);
}

TEST_CASE("superset closure is implicit and recorded by the loader") {
  GTNLoadInfo info;
  GTNModel m = make_gtn_model(2, {{ws(2, {0})}, {}}, {}, &info);
  CHECK(!info.closure_added_sets);  // {a} is the only subset of ⋃N={a}
  GTNModel m2 = make_gtn_model(
      2, {{ws(2, {0}), ws(2, {0, 1})}, {ws(2, {0, 1})}}, {}, &info);
  CHECK(!info.closure_added_sets);
  // Omitting {a,b} from N_a leaves a gap that closure fills.
  GTNModel m3 = make_gtn_model(2, {{ws(2, {0})}, {ws(2, {0, 1})}}, {}, &info);
  CHECK(info.closure_added_sets);
  CHECK(m3.in_family(0, ws(2, {0, 1})));
}

TEST_CASE("induced topology of the two-world model") {
  GenTopology t = induced_topology(two_world_model());
  CHECK(t.opens ==
        std::vector<WorldSet>{WorldSet(2), ws(2, {0}), ws(2, {0, 1})});
  CHECK(validate_topology(2, t.opens).valid());
}

TEST_CASE("induced topology of the empty model is trivial") {
  GTNModel m = make_gtn_model(2, {{}, {}}, {});
  CHECK(induced_topology(m).opens == std::vector<WorldSet>{WorldSet(2)});
}

TEST_CASE("union of induced opens is the union of neighbourhoods") {
  Rng rng(31);
  SearchConfig cfg;
  cfg.max_worlds = 6;
  for (int i = 0; i < 100; ++i) {
    GTNModel m = random_gtn(rng, cfg);
    REQUIRE(validate_gtn(m).valid());
    CHECK(induced_topology(m).union_of_opens() == m.union_of_n());
  }
}

TEST_CASE("gtn_to_gtf on the worked examples") {
  GTFModel empty = gtn_to_gtf(make_gtn_model(2, {{}, {}}, {}));
  CHECK(empty.topology.opens == std::vector<WorldSet>{WorldSet(2)});
  CHECK(empty.F[0].empty());
  CHECK(empty.F[1].empty());

  GTFModel m = gtn_to_gtf(two_world_model());
  CHECK(validate_gtf(m).valid());
  CHECK(m.F[0] == std::vector<WorldSet>{ws(2, {0}), ws(2, {0, 1})});
  CHECK(m.F[1] == std::vector<WorldSet>{ws(2, {0, 1})});
}

TEST_CASE("gtn_to_gtf restricts families to induced opens") {
  // N_a's closure holds the non-induced sets {a,b} and {a,c}; carrying
  // them into F verbatim would break the determined-family condition.
  GTNModel m = make_gtn_model(
      3, {{ws(3, {0})}, {ws(3, {1, 2})}, {ws(3, {1, 2})}}, {});
  REQUIRE(validate_gtn(m).valid());
  CHECK(m.in_family(0, ws(3, {0, 1})));
  GenTopology t = induced_topology(m);
  CHECK(!t.contains(ws(3, {0, 1})));
  GTFModel g = gtn_to_gtf(m);
  CHECK(validate_gtf(g).valid());
  CHECK(g.F[0] == std::vector<WorldSet>{ws(3, {0}), WorldSet::full(3)});
}

TEST_CASE("gtn_to_gtf rejects invalid input") {
  GTNModel bad = make_gtn_model(2, {{ws(2, {1})}, {}}, {});
  CHECK_THROWS_AS(gtn_to_gtf(bad), std::invalid_argument);
}

TEST_CASE("gtf_to_gtn takes generalized neighbourhoods") {
  GTFModel m = make_gtf_model(example_1(), {{2, {}}}, {});
  GTNModel g = gtf_to_gtn(m);
  CHECK(validate_gtn(g).valid());
  CHECK(g.minimal[2].empty());
  CHECK(g.family_members(0) ==
        std::vector<WorldSet>{ws(3, {0}), ws(3, {0, 1})});

  GTFModel m2 = make_gtf_model(example_1(), {{2, {WorldSet(3)}}}, {});
  GTNModel g2 = gtf_to_gtn(m2);
  CHECK(g2.family_members(2) ==
        std::vector<WorldSet>{WorldSet(3), ws(3, {0}), ws(3, {1}),
                              ws(3, {0, 1})});

  GTFModel strong = make_gtf_model(example_2(), {}, {});
  CHECK(w2_worlds(gtf_to_gtn(strong)).empty());
}

TEST_CASE("orphans with empty families become worlds without neighbourhoods") {
  GTFModel m = make_gtf_model(example_1(), {{2, {}}}, {});
  GTNModel g = gtf_to_gtn(m);
  CHECK(w2_worlds(g) == ws(3, {2}));
  CHECK(g.minimal[2].empty());
}

TEST_CASE("round-trip forcing equivalence, exhaustive small models") {
  auto formulas = enumerate_all({"p", "q"}, 5, kOpBox);
  long checked = 0;
  for_each_gtf_model(3, 8, 2, {"p", "q"}, [&](const GTFModel& m) {
    // Sample the valuation grid to keep the sweep quick: all models
    // with both variables' sets drawn from a fixed pattern.
    GTNModel g = gtf_to_gtn(m);
    GTFEvaluator em(m);
    GTNEvaluator eg(g);
    for (const auto& f : formulas) {
      if (em.truth_set(f) != eg.truth_set(f)) {
        ++checked;
        FAIL_CHECK("forcing mismatch on " << to_text(f));
        return;
      }
    }
    ++checked;
  });
  CHECK(checked > 1000);
}

TEST_CASE("round-trip forcing equivalence, randomized") {
  Rng rng(32);
  SearchConfig cfg;
  cfg.max_worlds = 6;
  auto formulas = enumerate_all({"p", "q"}, 5, kOpBox);
  for (int i = 0; i < 60; ++i) {
    GTNModel m = random_gtn(rng, cfg);
    GTFModel g = gtn_to_gtf(m);
    CHECK(validate_gtf(g).valid());
    GTNEvaluator em(m);
    GTFEvaluator eg(g);
    for (const auto& f : formulas)
      CHECK(em.truth_set(f) == eg.truth_set(f));
    // Composing back reproduces every truth set.
    GTNModel back = gtf_to_gtn(g);
    GTNEvaluator eb(back);
    for (const auto& f : formulas)
      CHECK(em.truth_set(f) == eb.truth_set(f));
  }
}
