#include <doctest.h>

#include "gentop/generate.hpp"
#include "gentop/ifs.hpp"

using namespace gentop;

namespace {

WorldSet ws(int n, std::initializer_list<int> worlds) {
  return WorldSet::of(n, worlds);
}

// μ = {∅,{a}} on two worlds, with the orphan b carrying {{a}}.
GTFModel small_ifs(Valuation v) {
  GenTopology t = close_under_unions(2, std::vector<WorldSet>{ws(2, {0})});
  return make_gtf_model(t, {{1, {ws(2, {0})}}}, std::move(v));
}

bool bullet_box_agree(const GTFModel& m, const StrongModel& s,
                      const std::vector<std::string>& vars, int max_nodes) {
  GTFModel boxside = strong_to_ifs(s);
  GTFEvaluator em(m);
  GTFEvaluator es(boxside);
  FormulaEnumerator en(vars, max_nodes, kOpBullet);
  while (auto f = en.next()) {
    if (em.truth_set(*f) !=
        es.truth_set(swap_modality(*f, Conn::Bullet, Conn::Box)))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validate_ifs accepts the two-world example") {
  GTFModel m = small_ifs({});
  IfsCertificate cert = validate_ifs(m);
  CHECK(cert.ifs());
  REQUIRE(cert.orphan_results.size() == 1);
  CHECK(cert.orphan_results[0].world == 1);
}

TEST_CASE("an empty orphan family fails the nonemptiness condition") {
  GenTopology t = close_under_unions(2, std::vector<WorldSet>{ws(2, {0})});
  GTFModel m = make_gtf_model(t, {{1, {}}}, {});
  IfsCertificate cert = validate_ifs(m);
  CHECK(!cert.ifs());
  CHECK(!cert.orphan_results[0].nonempty_ok);
}

TEST_CASE("a family that skips every part of a decomposition fails") {
  GenTopology t = close_under_unions(
      3, std::vector<WorldSet>{ws(3, {0}), ws(3, {1})});
  GTFModel m = make_gtf_model(t, {{2, {ws(3, {0, 1})}}}, {});
  IfsCertificate cert = validate_ifs(m);
  CHECK(!cert.ifs());
  REQUIRE(cert.orphan_results.size() == 1);
  CHECK(cert.orphan_results[0].superset_ok);
  CHECK(!cert.orphan_results[0].partition_ok);
}

TEST_CASE("superset violations are caught") {
  GenTopology t = close_under_unions(
      3, std::vector<WorldSet>{ws(3, {0}), ws(3, {0, 1})});
  GTFModel m = make_gtf_model(t, {{2, {ws(3, {0})}}}, {});
  IfsCertificate cert = validate_ifs(m);
  CHECK(!cert.orphan_results[0].superset_ok);
}

TEST_CASE("ifs_to_strong on the two-world example") {
  GTFModel m = small_ifs({{"p", WorldSet::full(2)}});
  StrongModel s = ifs_to_strong(m);
  CHECK(s.topology.opens == std::vector<WorldSet>{WorldSet(2),
                                                  WorldSet::full(2)});
  CHECK(is_strong(s.topology));
  CHECK(forces(m, 1, parse_formula("*p")));
  CHECK(forces(strong_to_ifs(s), 1, parse_formula("[]p")));

  GTFModel m2 = small_ifs({{"p", ws(2, {0})}});
  StrongModel s2 = ifs_to_strong(m2);
  CHECK(!forces(m2, 1, parse_formula("*p")));
  CHECK(!forces(strong_to_ifs(s2), 1, parse_formula("[]p")));
}

TEST_CASE("ifs_to_strong refuses models that are not in-fact-strong") {
  GenTopology t = close_under_unions(2, std::vector<WorldSet>{ws(2, {0})});
  GTFModel m = make_gtf_model(t, {{1, {}}}, {});
  CHECK_THROWS_AS(ifs_to_strong(m), std::invalid_argument);
  // Degenerate empty universe: the only way to avoid orphans over the
  // trivial topology, rejected outright.
  GTFModel degenerate{GenTopology{0, {WorldSet(0)}}, {}, {}};
  CHECK_THROWS_AS(ifs_to_strong(degenerate), std::invalid_argument);
}

TEST_CASE("a strong model viewed as in-fact-strong reproduces its topology") {
  StrongModel s{example_2(), {{"p", ws(3, {0})}}};
  GTFModel m = strong_to_ifs(s);
  CHECK(validate_ifs(m).ifs());  // vacuously: no orphans
  StrongModel round = ifs_to_strong(m);
  CHECK(round.topology.opens == s.topology.opens);
}

TEST_CASE("strong_to_ifs assigns the determined families") {
  GenTopology t = close_under_unions(1, std::vector<WorldSet>{ws(1, {0})});
  GTFModel m = strong_to_ifs(StrongModel{t, {}});
  CHECK(m.F[0] == std::vector<WorldSet>{ws(1, {0})});
  CHECK_THROWS_AS(strong_to_ifs(StrongModel{example_1(), {}}),
                  std::invalid_argument);
}

TEST_CASE("round trip preserves box truth sets") {
  Rng rng(51);
  SearchConfig cfg;
  cfg.max_worlds = 5;
  auto formulas = enumerate_all({"p", "q"}, 5, kOpBox);
  for (int i = 0; i < 40; ++i) {
    StrongModel s = random_strong(rng, cfg);
    GTFModel lifted = strong_to_ifs(s);
    StrongModel round = ifs_to_strong(lifted);
    CHECK(round.topology.opens == s.topology.opens);
    GTFModel lifted_round = strong_to_ifs(round);
    GTFEvaluator ea(lifted);
    GTFEvaluator eb(lifted_round);
    for (const auto& f : formulas) CHECK(ea.truth_set(f) == eb.truth_set(f));
  }
}

TEST_CASE("translation equivalence, exhaustive small models") {
  int ifs_count = 0;
  for_each_gtf_model(3, 8, 2, {"p"}, [&](const GTFModel& m) {
    if (!validate_ifs(m).ifs()) return;
    ++ifs_count;
    StrongModel s = ifs_to_strong(m);
    CHECK(validate_topology(s.topology.universe_size, s.topology.opens)
              .valid());
    CHECK(is_strong(s.topology));
    if (!bullet_box_agree(m, s, {"p"}, 5))
      FAIL_CHECK("bullet/box disagreement on an exhaustive model");
  });
  CHECK(ifs_count > 100);
}

TEST_CASE("translation equivalence on seeded larger models") {
  Rng rng(52);
  SearchConfig cfg;
  cfg.max_worlds = 5;
  cfg.max_opens = 8;
  for (int i = 0; i < 60; ++i) {
    GTFModel m = random_ifs(rng, cfg);
    REQUIRE(validate_ifs(m).ifs());
    StrongModel s = ifs_to_strong(m);
    CHECK(is_strong(s.topology));
    CHECK(validate_topology(s.topology.universe_size, s.topology.opens)
              .valid());
    if (!bullet_box_agree(m, s, {"p", "q"}, 5))
      FAIL_CHECK("bullet/box disagreement on a seeded model");
  }
}

TEST_CASE("the size guard protects the decomposition check") {
  GenTopology big = forbidden_space(6, ws(6, {5}));  // 32 opens
  GTFModel m = make_gtf_model(big, {}, {});
  CHECK_THROWS_AS(validate_ifs(m), std::invalid_argument);
}
