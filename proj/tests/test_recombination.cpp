#include <catch2/catch_amalgamated.hpp>

#include "dnalg/recombination.hpp"
#include "dnalg/tangle_solve.hpp"

using namespace dnalg;

TEST_CASE("tn3 series matches the classical product list") {
  RecombinationSystem tn3 = find_system("tn3");
  auto series = processive_series(tn3, 4);
  REQUIRE(series.size() == 4);
  CHECK(series[0].id.str() == "hopf link");
  CHECK(series[1].id.name == "figure-8 knot");
  CHECK(series[2].id.name == "whitehead link");
  CHECK(series[3].id.crossings == 6);
  // processivity is literal prefix iteration
  for (int i = 0; i < 3; ++i)
    CHECK(series[i + 1].word ==
          GenWord(4, {Generator::sigma(2)}).compose(series[i].word));
}

TEST_CASE("substrate form independence") {
  auto a = processive_series(find_system("tn3"), 4);
  auto b = processive_series(find_system("tn3-alt"), 4);
  for (int i = 0; i < 4; ++i) CHECK(a[i].id.str() == b[i].id.str());
}

TEST_CASE("series is stable under free reduction of the substrate") {
  RecombinationSystem sys("tn3-padded", GenWord::parse("s1 s3 s3^-1 s3 s2^-1", 4),
                          Generator::sigma(2));
  auto a = processive_series(sys, 4);
  auto b = processive_series(find_system("tn3"), 4);
  for (int i = 0; i < 4; ++i) CHECK(a[i].id.str() == b[i].id.str());
}

TEST_CASE("gin series") {
  RecombinationSystem gin = find_system("gin");
  CHECK(identify(gin.substrate, Closure::Plat).str() == "unknot"); // i = 0
  auto series = processive_series(gin, 4);
  // the +1-twist series through fractions 1/2, 3/2, 5/2, 7/2: the twist
  // knot ladder
  CHECK(series[0].id.str() == "unknot");
  CHECK(series[1].id.name == "trefoil");
  CHECK(series[2].id.name == "figure-8 knot");
  CHECK(series[3].id.name == "5_2");
  // inversion status alternates with the twist parity
  CHECK(series[0].marked_status == "inverted");
  CHECK(series[1].marked_status == "restored");
  CHECK(series[2].marked_status == "inverted");
  CHECK(series[3].marked_status == "restored");
}

TEST_CASE("parity report holds for k up to 3") {
  for (int k = 1; k <= 3; ++k) {
    auto rows = parity_report(k, 6);
    REQUIRE(rows.size() == 12);
    for (const auto &r : rows) {
      INFO("k=" << r.k << " i=" << r.i << " even=" << r.even_family);
      CHECK(r.matches_claim);
    }
  }
}

TEST_CASE("xer substrate and product forms") {
  GenWord sub = xer_substrate();
  CHECK(sub.free_reduce().str() == "s2 s2 s3 s2 s4^-1");

  // e4-form vs pure-braid form of the product
  GenWord e_form = GenWord(6, {Generator::e(4)}).compose(sub);
  GenWord b_form = GenWord::parse("s4^-1 s5^-1", 6).compose(sub);
  PlanarDiagram de = plat_closure(e_form), db = plat_closure(b_form);
  CHECK(de.component_count() == db.component_count());
  CHECK(jones_key(de, kauffman_bracket(e_form, Closure::Plat)) ==
        jones_key(db, kauffman_bracket(b_form, Closure::Plat)));
}

TEST_CASE("bmw plat equivalence") {
  CHECK(bmw_plat_equivalence(GenWord::empty(4), 2).agree);
  CHECK(bmw_plat_equivalence(xer_substrate(), 4).agree);
  CHECK_THROWS_AS(bmw_plat_equivalence(GenWord::empty(4), 1), WordError);
  CHECK(bmw_plat_equivalence_trials(200, 20240601u) == 0);
}

TEST_CASE("cre fixture is an unknotted substrate with a trefoil product") {
  RecombinationSystem cre = find_system("cre");
  CHECK(identify(cre.substrate, Closure::Plat).str() == "unknot");
  auto series = processive_series(cre, 1);
  CHECK(series[0].id.name == "trefoil");

  // the fixture is reproduced by the desk search it came from
  auto hits = find_unknot_to_trefoil_substrates(4);
  bool present = false;
  for (const auto &w : hits)
    if (w == cre.substrate) present = true;
  CHECK(present);
}

TEST_CASE("braid route equals tangle route for the solved substrate") {
  auto braid = processive_series(find_system("tn3"), 4);
  std::vector<std::string> observed;
  for (const auto &r : braid) observed.push_back(r.id.str());

  auto cands = solve_processive(observed, 1, 3, 5);
  REQUIRE(cands.size() == 1);
  CHECK(cands[0].fraction == Fraction(-1, 3));
  auto tangles = processive_products(cands[0].tangle, 1, 4);
  for (int i = 0; i < 4; ++i) CHECK(tangles[i].id.str() == braid[i].id.str());
}
