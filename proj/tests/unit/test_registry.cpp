#include <doctest.h>

#include "equivknot/knot_descriptor.hpp"
#include "equivknot/registry.hpp"
#include "equivknot/signature.hpp"

using namespace equivknot;

TEST_CASE("knot descriptors parse and print") {
  CHECK(KnotDescriptor::parse("unknot").is_unknot());
  const KnotDescriptor t = KnotDescriptor::parse("T(2,7)");
  CHECK(t.kind == KnotDescriptor::Kind::Torus);
  CHECK(t.two_bridge() == TwoBridgeFraction{7, 1});
  const KnotDescriptor sum = KnotDescriptor::parse("T(2,7) # T(2,7)");
  CHECK(sum.kind == KnotDescriptor::Kind::Sum);
  CHECK(sum.summands.size() == 2);
  CHECK(KnotDescriptor::parse(sum.to_string()) == sum);
  CHECK(KnotDescriptor::parse("-357/-50").kind == KnotDescriptor::Kind::Fraction);

  const KnotDescriptor jm = KnotDescriptor::parse("Jq2(m)");
  CHECK(jm.is_symbolic());
  CHECK(jm.instantiate(-2).m == -2);
  CHECK(KnotDescriptor::parse("Jq2(3)").m == 3);

  CHECK_THROWS_WITH_AS(KnotDescriptor::parse("T(2,6)"), doctest::Contains("gcd 2"), ParseError);
  CHECK_THROWS_AS(KnotDescriptor::parse("6/1"), ParseError);
  CHECK_THROWS_AS(KnotDescriptor::parse("T(2)"), ParseError);
  CHECK_THROWS_AS(KnotDescriptor::parse("figure eight"), ParseError);
  CHECK_THROWS_AS(KnotDescriptor::parse("T(2,7) #"), ParseError);
}

TEST_CASE("signature magnitudes") {
  CHECK(signature_magnitude(KnotDescriptor::parse("T(2,7)")) == 6);
  CHECK(signature_magnitude(KnotDescriptor::parse("T(2,7) # T(2,7)")) == 12);
  CHECK(signature_magnitude(KnotDescriptor::parse("unknot")) == 0);
  CHECK(signature_magnitude(KnotDescriptor::parse("7/6")) == 6);
  CHECK(signature_magnitude(KnotDescriptor::parse("Jq2(3)")) == std::abs(signature_q2_jm(3)));
  CHECK_THROWS_WITH(signature_magnitude(KnotDescriptor::parse("5/2")), doctest::Contains("supply value explicitly"));
  CHECK_THROWS_WITH(signature_magnitude(KnotDescriptor::parse("T(3,4)")), doctest::Contains("supply value explicitly"));
}

TEST_CASE("unknotting bounds from descriptors") {
  CHECK(unknotting_number(KnotDescriptor::parse("T(2,7)")) == 3);
  CHECK(unknotting_number(KnotDescriptor::parse("unknot")) == 0);
  CHECK_FALSE(unknotting_number(KnotDescriptor::parse("5/2")).has_value());
  CHECK(unknotting_number_lower(KnotDescriptor::parse("T(2,7) # T(2,7)")) == 6);
  CHECK(u4_lower(KnotDescriptor::parse("5/2")) == 2);
  CHECK(u4_lower(KnotDescriptor::parse("3/1")) == 1);
  CHECK(u4_lower(KnotDescriptor::parse("unknot")) == 0);
  CHECK(is_twist_knot_quotient(KnotDescriptor::parse("9/1")));
  CHECK_FALSE(is_twist_knot_quotient(KnotDescriptor::parse("5/2")));
}

TEST_CASE("default registry contents") {
  const auto& reg = default_registry();
  for (int n = 1; n <= 10; ++n) {
    const QuotientData* k = find_entry(reg, "K_" + std::to_string(n));
    REQUIRE(k != nullptr);
    REQUIRE(k->q1.has_value());
    CHECK(k->q1->two_bridge() == TwoBridgeFraction{2 * n + 1, 1});
    CHECK(k->q2->is_unknot());
    CHECK_FALSE(k->provenance.empty());
    CHECK(type_A_lower(unknotting_number_lower(*k->q1), unknotting_number_lower(*k->q2)) == n);
  }
  const QuotientData* four = find_entry(reg, "4_1#4_1");
  REQUIRE(four != nullptr);
  CHECK(type_B_lower(u4_lower(*four->q1), u4_lower(*four->q2)) == 4);

  const QuotientData* jp = find_entry(reg, "J_m^+");
  REQUIRE(jp != nullptr);
  CHECK_FALSE(jp->q1.has_value());
  CHECK(jp->parameter == "m");
  CHECK(jp->instantiate(1).q2->m == 1);
  CHECK(find_entry(reg, "nope") == nullptr);
  for (const auto& entry : reg) CHECK_FALSE(entry.provenance.empty());
}

TEST_CASE("registry validation names field and line") {
  const std::string text = R"json({
  "schema": "equivknot-registry/1",
  "knots": [
    {
      "name": "bad",
      "q1": "T(2,6)",
      "q2": "unknot",
      "provenance": "test"
    }
  ]
})json";
  try {
    parse_registry(text, "t.json");
    FAIL("expected a registry error");
  } catch (const RegistryError& e) {
    CHECK(e.field() == "knots[0].q1");
    CHECK(e.line() == 6);
    CHECK(std::string(e.what()).find("t.json:6: knots[0].q1:") == 0);
  }

  CHECK_THROWS_AS(parse_registry(R"json({"schema": "other", "knots": []})json"), RegistryError);
  CHECK_THROWS_AS(parse_registry("{ not json"), RegistryError);
  CHECK_THROWS_AS(parse_registry(R"json({"schema": "equivknot-registry/1", "knots": [{"name": "x", "q1": null,
    "q2": null}]})json"),
                  RegistryError);
  const std::string supplied_bad = R"json({"schema": "equivknot-registry/1", "knots": [
 {"name": "x", "q1": null, "q2": null, "provenance": "p",
  "supplied": {
    "u": -1}}]})json";
  try {
    parse_registry(supplied_bad);
    FAIL("expected a registry error");
  } catch (const RegistryError& e) {
    CHECK(e.field() == "knots[0].supplied.u");
    CHECK(e.line() == 4);
  }
  CHECK(parse_registry(default_registry_text()).size() == default_registry().size());
}
