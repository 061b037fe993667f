#include <doctest.h>

#include "dw/json_io.hpp"

using dw::FiniteGroup;
using dw::Json;

TEST_CASE("group definitions from JSON") {
  auto table = dw::group_from_json(
      Json{{"name", "klein"}, {"kind", "table"},
           {"table", Json::array({{0, 1, 2, 3},
                                  {1, 0, 3, 2},
                                  {2, 3, 0, 1},
                                  {3, 2, 1, 0}})}});
  CHECK(table.order() == 4);
  CHECK(table.is_abelian());
  CHECK(table.name() == "klein");

  auto perm = dw::group_from_json(
      Json{{"kind", "perm"},
           {"generators", Json::array({{1, 0, 2}, {1, 2, 0}})}});
  CHECK(perm.order() == 6);

  auto named = dw::group_from_json(Json{
      {"kind", "named"}, {"family", "quaternion"}, {"params", {{"n", 8}}}});
  CHECK(named.order() == 8);

  auto product = dw::group_from_json(
      Json{{"kind", "named"},
           {"family", "direct_product"},
           {"params",
            {{"factors",
              Json::array({Json{{"family", "cyclic"}, {"params", {{"n", 2}}}},
                           Json{{"family", "cyclic"},
                                {"params", {{"n", 2}}}}})}}}});
  CHECK(product.order() == 4);
  CHECK(product.exponent() == 2);

  // Exactly one of table/generators/family.
  CHECK_THROWS_AS(
      dw::group_from_json(Json{{"table", Json::array({{0}})},
                               {"family", "cyclic"}}),
      dw::ValidationError);
  CHECK_THROWS_AS(dw::group_from_json(Json{{"name", "empty"}}),
                  dw::ValidationError);
  CHECK_THROWS_AS(dw::named_group("wreath", Json{{"n", 2}}),
                  dw::ValidationError);
  CHECK_THROWS_AS(dw::named_group("symmetric", Json{{"n", 9}}),
                  dw::ValidationError);
  CHECK_THROWS_AS(dw::named_group("cyclic", Json::object()),
                  dw::ValidationError);
}

TEST_CASE("group name resolution") {
  CHECK(dw::resolve_group("Z6").order() == 6);
  CHECK(dw::resolve_group("C6") == dw::resolve_group("Z6"));
  CHECK(dw::resolve_group("S4").order() == 24);
  CHECK(dw::resolve_group("A4").order() == 12);
  CHECK(dw::resolve_group("D4").order() == 8);
  CHECK(dw::resolve_group("Q8").order() == 8);
  CHECK(dw::resolve_group("trivial").order() == 1);
  CHECK(dw::resolve_group("Z2xZ2").order() == 4);
  CHECK(dw::resolve_group("Z2xZ3").is_abelian());
  CHECK_THROWS_AS(dw::resolve_group("E8"), dw::ValidationError);
  CHECK_THROWS_AS(dw::resolve_group("nonsense"), dw::ValidationError);
}

TEST_CASE("presentations from JSON") {
  auto p = dw::presentation_from_json(
      Json{{"generators", 2}, {"relators", Json::array({{1, 1}, {2, 2, 2}})}});
  CHECK(p.num_generators == 2);
  CHECK(p.relators.size() == 2);

  CHECK_THROWS_AS(dw::presentation_from_json(Json{{"relators", "x"}}),
                  dw::ValidationError);
  CHECK_THROWS_AS(dw::presentation_from_json(
                      Json{{"generators", 1}, {"relators", Json::array({{3}})}}),
                  dw::ValidationError);

  auto round = dw::presentation_from_json(dw::presentation_to_json(p));
  CHECK(round.num_generators == p.num_generators);
  CHECK(round.relators == p.relators);
}

TEST_CASE("character table serialization shape") {
  auto ct = dw::character_table(FiniteGroup::symmetric(3));
  auto j = dw::chartable_to_json(ct);
  CHECK(j["classes"] == Json::array({1, 3, 2}));
  CHECK(j["degrees"] == Json::array({1, 1, 2}));
  REQUIRE(j["table"].size() == 3);
  REQUIRE(j["table"][0].size() == 3);
  CHECK(j["table"][0][0].contains("re"));
  CHECK(j["table"][0][0].contains("im"));
}

TEST_CASE("json number hygiene") {
  CHECK(dw::json_round(-0.0) == 0.0);
  CHECK(dw::json_round(1.0 + 1e-14) == 1.0);
  auto r = dw::rational_to_json(dw::Rational(81, 1));
  CHECK(r["num"] == 81);
  CHECK(r["den"] == 1);
}
