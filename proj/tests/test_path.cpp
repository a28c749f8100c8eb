#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "catwalk/enumerate.hpp"
#include "catwalk/family.hpp"
#include "catwalk/path.hpp"

using namespace catwalk;

TEST_CASE("token parsing") {
  Path p = parse_path("UUD3");
  REQUIRE(p.size() == 3);
  CHECK(p.steps[0] == Step::up());
  CHECK(p.steps[1] == Step::up());
  CHECK(p.steps[2] == Step::catastrophe(3));

  CHECK(parse_path("") == Path{});
  CHECK(parse_path(" U \n D ") == parse_path("UD"));
  CHECK(parse_path("D12").steps[0].drop == 12);

  // The 23-step Motzkin meander with two catastrophes.
  Path meander = parse_path("UUDFUUFD3UDUUUDDUD2UUFFUF");
  CHECK(meander.size() == 23);
  CHECK(is_member(meander, Family::motzkin_meander_cat));
  CHECK(!is_member(meander, Family::motzkin_excursion_cat));

  CHECK_THROWS_AS(parse_path("D1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("D0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("UXD"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("u"), std::invalid_argument);
  CHECK_THROWS_AS(Step::catastrophe(1), std::invalid_argument);
}

TEST_CASE("token formatting") {
  CHECK(format_path(Path({Step::up(), Step::down()})) == "UD");
  CHECK(format_path(Path({Step::up(), Step::up(), Step::catastrophe(2)})) ==
        "UUD2");
  CHECK(format_path(Path{}) == "");

  // The 17-step Dyck excursion with catastrophes round trips byte-exactly.
  const std::string fig = "UUDUUDUD3UDUUUDDUD2";
  Path p = parse_path(fig);
  CHECK(p.size() == 17);
  CHECK(format_path(p) == fig);
  CHECK(is_member(p, Family::dyck_excursion_cat));
}

TEST_CASE("heights are incremental sums of displacements") {
  Path p = parse_path("UUDFUUFD3UDUUUDDUD2UUFFUF");
  std::vector<int> h = p.heights();
  int level = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    level += p.steps[k].rise();
    CHECK(h[k] == level);
  }
  CHECK(p.final_height() == h.back());
  CHECK(parse_path("UUD3").heights() == std::vector<int>{1, 2, -1});
}

TEST_CASE("find_occurrences") {
  auto occ = find_occurrences(parse_path("UUUDDD"), pattern("UUU"));
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].start == 0);
  CHECK(occ[0].min_ordinate == 0);

  occ = find_occurrences(parse_path("UUUUDDDD"), pattern("UUU"));
  REQUIRE(occ.size() == 2);
  CHECK(occ[0].start == 0);
  CHECK(occ[0].min_ordinate == 0);
  CHECK(occ[1].start == 1);
  CHECK(occ[1].min_ordinate == 1);

  occ = find_occurrences(parse_path("UUDDUD"), pattern("DUD"));
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].start == 3);
  CHECK(occ[0].min_ordinate == 0);

  CHECK(find_occurrences(parse_path("UD"), pattern("UUU")).empty());
  CHECK_THROWS_AS(find_occurrences(parse_path("UD"), {}),
                  std::invalid_argument);
}

TEST_CASE("min ordinate laws for UUU and DUD on random walks") {
  std::mt19937 rng(20240517);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Step> steps;
    int len = 1 + static_cast<int>(rng() % 18);
    for (int i = 0; i < len; ++i) {
      steps.push_back(rng() % 2 ? Step::up() : Step::down());
    }
    Path p{steps};
    std::vector<int> h = p.heights();
    auto at = [&](int i) { return i < 0 ? 0 : h[static_cast<std::size_t>(i)]; };
    for (const Occurrence& o : find_occurrences(p, pattern("UUU"))) {
      CHECK(o.min_ordinate == at(o.start - 1));
    }
    for (const Occurrence& o : find_occurrences(p, pattern("DUD"))) {
      CHECK(o.min_ordinate == at(o.start - 1) - 1);
    }
  }
}

TEST_CASE("membership: geometry") {
  // Catastrophes must start at ordinate >= 2 and land exactly on the axis.
  CHECK(!is_member(parse_path("UD2"), Family::dyck_meander_cat));
  CHECK(!is_member(parse_path("UUUD2"), Family::dyck_meander_cat));
  CHECK(is_member(parse_path("UUD2"), Family::dyck_meander_cat));
  CHECK(!is_member(parse_path("DU"), Family::dyck));
  CHECK(!is_member(parse_path("UF"), Family::dyck_meander_cat));
  CHECK(!is_member(parse_path("UUD2"), Family::dyck));
  CHECK(is_member(parse_path("UF"), Family::motzkin_meander_cat));
  CHECK(!is_member(parse_path("UF"), Family::motzkin));
  CHECK(is_member(Path{}, Family::dyck));
  CHECK(is_member(Path{}, Family::motzkin_excursion_cat));
}

TEST_CASE("membership: pattern families") {
  CHECK(!is_member(parse_path("UUDUDD"), Family::a));  // DUD at min ordinate 1
  CHECK(is_member(parse_path("UUDDUD"), Family::a));   // its DUD sits on the axis
  CHECK(is_member(parse_path("UUUDDD"), Family::a));
  CHECK(!is_member(parse_path("UUUUDDDD"), Family::a));  // UUU at min ordinate 1

  CHECK(is_member(parse_path("UUUDDD"), Family::a_prime));
  CHECK(!is_member(parse_path("UD"), Family::a_prime));  // axis UD, no UUU after
  CHECK(is_member(parse_path("UDUUUDDD"), Family::a_prime));
  CHECK(!is_member(parse_path("UUUDDDUD"), Family::a_prime));
  CHECK(is_member(Path{}, Family::a_prime));

  CHECK(is_member(Path{}, Family::a_star));
  CHECK(is_member(parse_path("UUDD"), Family::a_star));
  CHECK(!is_member(parse_path("UD"), Family::a_star));      // must start UUD
  CHECK(!is_member(parse_path("UUDDUD"), Family::a_star));  // DUD anywhere
  CHECK(is_member(parse_path("UUDUUDDD"), Family::a_star));

  CHECK(!is_member(parse_path("UUUUUDDDDD"), Family::b));  // UUU from ordinate 2
  CHECK(is_member(parse_path("UUUUDDDD"), Family::b));
  CHECK(is_member(parse_path("UUUDDD"), Family::b));

  CHECK(is_member(parse_path("UDUDUD"), Family::b_prime));
  CHECK(is_member(parse_path("UUDDUD"), Family::b_prime));
  CHECK(!is_member(parse_path("UUUDDD"), Family::b_prime));  // must end UD
  CHECK(!is_member(parse_path("UUDUDDUD"), Family::b_prime));  // DU at min 1
  CHECK(is_member(Path{}, Family::b_prime));
}

TEST_CASE("family ids and index kinds") {
  CHECK(family_name(Family::dyck_excursion_cat) == "dyck-excursion-cat");
  CHECK(family_from_name("A-prime") == Family::a_prime);
  CHECK(!family_from_name("nope").has_value());
  CHECK(index_kind(Family::a_star) == IndexKind::semilength);
  CHECK(index_kind(Family::motzkin) == IndexKind::steps);
  CHECK(steps_for_index(Family::b, 4) == 8);
  CHECK(steps_for_index(Family::motzkin_meander_cat, 4) == 4);
}

TEST_CASE("parse round trips formatting over whole families") {
  for (Family f : {Family::dyck_excursion_cat, Family::motzkin_meander_cat}) {
    for (int n = 0; n <= 7; ++n) {
      for (const Path& p : enumerate_family(f, n)) {
        CHECK(parse_path(format_path(p)) == p);
      }
    }
  }
}

TEST_CASE("family inclusions on all paths up to 12 steps") {
  const std::vector<std::pair<Family, Family>> inclusions = {
      {Family::a_star, Family::a},
      {Family::a_prime, Family::a},
      {Family::b_prime, Family::b},
      {Family::dyck, Family::dyck_meander_cat},
      {Family::dyck_excursion_cat, Family::dyck_meander_cat},
      {Family::motzkin, Family::motzkin_excursion_cat},
  };
  for (const auto& [sub, super] : inclusions) {
    const int max_steps = 12;
    for (int n = 0; steps_for_index(sub, n) <= max_steps; ++n) {
      for (const Path& p : enumerate_family(sub, n)) {
        CHECK(is_member(p, super));
      }
    }
  }
}
