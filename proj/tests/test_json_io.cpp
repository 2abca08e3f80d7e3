#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kerovkit/json_io.hpp"

using namespace kerovkit;

TEST_CASE("rationals are canonical strings")
{
  CHECK(to_json(ratio(6, -4)) == "-3/2");
  CHECK(to_json(Rational(5)) == "5");
  CHECK(to_json(ratio(0, 7)) == "0");
}

TEST_CASE("envelope carries the schema and sorts keys")
{
  const Json j = envelope("kerov", to_json(kerov_polynomial({3})));
  CHECK(j["schema"] == kSchema);
  CHECK(j.dump() == R"({"command":"kerov","result":{"terms":[{"coefficient":"1","monomial":[2]},{"coefficient":"1","monomial":[4]}],"text":"R4 + R2"},"schema":"kerovkit/1"})");
}

TEST_CASE("sigma combinations and measures")
{
  const SigmaCombo c = SigmaCombo(SigmaSymbol({3})) - SigmaCombo(SigmaSymbol({1}));
  CHECK(to_json(c)["text"] == "-S(1) + S(3)");
  const Json mu = to_json(transition_measure(YoungDiagram({2, 1})));
  REQUIRE(mu["atoms"].size() == 3);
  CHECK(mu["atoms"][1]["weight"] == "1/4");
  CHECK(to_json(PairPartition(4, {{1, 3}, {2, 4}})).dump() == R"({"pairs":[[1,3],[2,4]],"points":4})");
}
