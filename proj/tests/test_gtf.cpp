#include <doctest.h>

#include "gentop/generate.hpp"
#include "gentop/gtf.hpp"

using namespace gentop;

namespace {

WorldSet ws(int n, std::initializer_list<int> worlds) {
  return WorldSet::of(n, worlds);
}

// Example-1 space with worlds a=0, b=1, c=2; c is orphaned.
GTFModel example_model(std::vector<WorldSet> f_c, Valuation v) {
  return make_gtf_model(example_1(), {{2, std::move(f_c)}}, std::move(v));
}

}  // namespace

TEST_CASE("validate_gtf accepts determined families") {
  GTFModel m = example_model({}, {});
  CHECK(validate_gtf(m).valid());
  CHECK(m.F[0] == std::vector<WorldSet>{ws(3, {0}), ws(3, {0, 1})});
  CHECK(m.F[1] == std::vector<WorldSet>{ws(3, {1}), ws(3, {0, 1})});
  CHECK(m.F[2].empty());
}

TEST_CASE("validate_gtf rejects a covered world missing a determined open") {
  GTFModel m = example_model({}, {});
  m.F[0] = {ws(3, {0})};  // drop {a,b}
  auto report = validate_gtf(m);
  CHECK(!report.valid());
  CHECK(report.violations[0].rule == "F-determined");
  CHECK(report.violations[0].witness.find("{w0,w1}") != std::string::npos);
}

TEST_CASE("validate_gtf rejects non-open members on orphans") {
  GTFModel m = example_model({ws(3, {2})}, {});
  auto report = validate_gtf(m);
  CHECK(!report.valid());
  CHECK(report.violations[0].rule == "F-open");
}

TEST_CASE("inverse enumerates the families") {
  GTFModel m = example_model({}, {});
  CHECK(inverse(m, ws(3, {0})) == ws(3, {0}));
  GTFModel m2 = example_model({ws(3, {0})}, {});
  CHECK(inverse(m2, ws(3, {0})) == ws(3, {0, 2}));
  CHECK(inverse(m2, WorldSet(3)) == WorldSet(3));
  GTFModel m3 = example_model({WorldSet(3)}, {});
  CHECK(inverse(m3, WorldSet(3)) == ws(3, {2}));
  CHECK_THROWS_AS(inverse(m, ws(3, {2})), std::invalid_argument);
}

TEST_CASE("impossible world: everything possible, nothing necessary") {
  GTFModel m = example_model({}, {{"p", ws(3, {0, 1})}, {"q", WorldSet(3)}});
  CHECK(forces(m, 0, parse_formula("[]p")));
  CHECK(!forces(m, 2, parse_formula("[]q")));
  CHECK(!forces(m, 2, parse_formula("[]p")));
  CHECK(forces(m, 2, parse_formula("<>q")));
  CHECK(forces(m, 2, parse_formula("<>~q")));
  CHECK(forces(m, 2, parse_formula("<>false")));
}

TEST_CASE("reflexivity fails at an orphan with a borrowed family") {
  GTFModel m = example_model({ws(3, {0})}, {{"p", ws(3, {0})}});
  CHECK(forces(m, 2, parse_formula("[]p")));
  CHECK(!forces(m, 2, parse_formula("p")));
  CHECK(!forces(m, 2, parse_formula("[]p -> p")));
}

TEST_CASE("meet aggregation fails without intersection closure") {
  GenTopology t = close_under_unions(
      3, std::vector<WorldSet>{ws(3, {0, 1}), ws(3, {1, 2})});
  GTFModel m = make_gtf_model(t, {},
                              {{"p", ws(3, {0, 1})}, {"q", ws(3, {1, 2})}});
  CHECK(forces(m, 1, parse_formula("[]p & []q")));
  CHECK(!forces(m, 1, parse_formula("[](p & q)")));
}

TEST_CASE("neighbourhoods are the supersets of family members inside ⋃μ") {
  GTFModel m = example_model({}, {});
  auto na = neighbourhoods(m, 0);
  CHECK(na == std::vector<WorldSet>{ws(3, {0}), ws(3, {0, 1})});
  CHECK(neighbourhoods(m, 2).empty());
  GTFModel m2 = example_model({WorldSet(3)}, {});
  auto nc = neighbourhoods(m2, 2);
  CHECK(nc == std::vector<WorldSet>{WorldSet(3), ws(3, {0}), ws(3, {1}),
                                    ws(3, {0, 1})});
}

TEST_CASE("is_consistent") {
  CHECK(is_consistent(example_model({}, {})));
  CHECK(!is_consistent(example_model({WorldSet(3)}, {})));
  GTFModel strong = make_gtf_model(example_2(), {}, {});
  CHECK(is_consistent(strong));
}

TEST_CASE("check_regularities holds on well-behaved models") {
  // All families nonempty and p true on ⋃μ: box p becomes global.
  GTFModel m = example_model({ws(3, {0})}, {{"p", ws(3, {0, 1})}});
  auto report = check_regularities(m);
  CHECK(report.valid());
  CHECK(truth_set(m, parse_formula("[]p")) == WorldSet::full(3));
}

TEST_CASE("check_regularities covers orphan diamonds") {
  GTFModel m = example_model({}, {{"p", ws(3, {0, 1})}});
  CHECK(check_regularities(m).valid());
  CHECK(forces(m, 2, parse_formula("<>p")));
}

TEST_CASE("orphan sharing a covered world's family agrees on box atoms") {
  GTFModel m = example_model({ws(3, {0}), ws(3, {0, 1})},
                             {{"p", ws(3, {0})}, {"q", ws(3, {1})}});
  REQUIRE(m.F[2] == m.F[0]);
  CHECK(check_regularities(m).valid());
  for (const auto& f : enumerate_all({"p", "q"}, 4, kOpBox)) {
    if (!is_mod_shape(f)) continue;
    CHECK(forces(m, 2, f) == forces(m, 0, f));
  }
}

TEST_CASE("extensionality per model: equal truth sets modalize equally") {
  Rng rng(21);
  SearchConfig cfg;
  cfg.max_worlds = 5;
  for (int i = 0; i < 60; ++i) {
    GTFModel m = random_gtf(rng, cfg, false);
    GTFEvaluator ev(m);
    auto formulas = enumerate_all({"p", "q"}, 3, kOpBox | kOpBullet);
    for (std::size_t a = 0; a < formulas.size(); ++a)
      for (std::size_t b = a + 1; b < formulas.size(); ++b) {
        if (ev.truth_set(formulas[a]) != ev.truth_set(formulas[b])) continue;
        CHECK(ev.truth_set(Formula::box(formulas[a])) ==
              ev.truth_set(Formula::box(formulas[b])));
        CHECK(ev.truth_set(Formula::bullet(formulas[a])) ==
              ev.truth_set(Formula::bullet(formulas[b])));
        CHECK(ev.truth_set(Formula::diamond(formulas[a])) ==
              ev.truth_set(Formula::diamond(formulas[b])));
      }
  }
}

TEST_CASE("monotonicity per model: box respects truth-set inclusion") {
  Rng rng(22);
  SearchConfig cfg;
  cfg.max_worlds = 5;
  for (int i = 0; i < 60; ++i) {
    GTFModel m = random_gtf(rng, cfg, false);
    GTFEvaluator ev(m);
    auto formulas = enumerate_all({"p", "q"}, 3, kOpBox);
    for (std::size_t a = 0; a < formulas.size(); ++a)
      for (std::size_t b = 0; b < formulas.size(); ++b) {
        if (!ev.truth_set(formulas[a]).subset_of(ev.truth_set(formulas[b])))
          continue;
        CHECK(ev.truth_set(Formula::box(formulas[a]))
                  .subset_of(ev.truth_set(Formula::box(formulas[b]))));
      }
  }
}

TEST_CASE("meet distribution and transitivity schemas hold on samples") {
  Rng rng(23);
  SearchConfig cfg;
  cfg.max_worlds = 6;
  FormulaPtr m_inst = instantiate(axiom_schema(SchemaId::M),
                                  {{"phi", Formula::var("p")},
                                   {"psi", Formula::var("q")}});
  FormulaPtr four_inst = instantiate(axiom_schema(SchemaId::Four),
                                     {{"phi", Formula::var("p")}});
  FormulaPtr bullet_t = instantiate(axiom_schema(SchemaId::BulletT),
                                    {{"phi", Formula::var("p")}});
  for (int i = 0; i < 200; ++i) {
    GTFModel m = random_gtf(rng, cfg, false);
    WorldSet full = WorldSet::full(m.topology.universe_size);
    CHECK(truth_set(m, m_inst) == full);
    CHECK(truth_set(m, four_inst) == full);
    CHECK(truth_set(m, bullet_t) == full);
  }
}

TEST_CASE("reflexivity holds inside ⋃μ") {
  Rng rng(24);
  SearchConfig cfg;
  cfg.max_worlds = 6;
  FormulaPtr t_inst = instantiate(axiom_schema(SchemaId::T),
                                  {{"phi", Formula::var("p")}});
  for (int i = 0; i < 200; ++i) {
    GTFModel m = random_gtf(rng, cfg, false);
    WorldSet covered = m.topology.union_of_opens();
    CHECK(covered.subset_of(truth_set(m, t_inst)));
  }
}

TEST_CASE("black modalities are rejected by the GTF evaluator") {
  GTFModel m = example_model({}, {});
  CHECK_THROWS_AS(truth_set(m, parse_formula("[b]p")), UnsupportedOperator);
  CHECK_THROWS_AS(truth_set(m, parse_formula("<b>p")), UnsupportedOperator);
}

TEST_CASE("abbreviations and expansions evaluate identically") {
  Rng rng(25);
  SearchConfig cfg;
  cfg.max_worlds = 5;
  for (int i = 0; i < 50; ++i) {
    GTFModel m = random_gtf(rng, cfg, false);
    GTFEvaluator ev(m);
    for (const char* text :
         {"<>p", "p <-> q", "true", "<>(p <-> <>q)", "~<>~p"}) {
      FormulaPtr f = parse_formula(text);
      CHECK(ev.truth_set(f) == ev.truth_set(expanded(f)));
    }
  }
}
