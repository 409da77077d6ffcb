#include <doctest.h>

#include "bptk/errors.hpp"
#include "bptk/tower.hpp"

using namespace bptk;

TEST_SUITE("tower") {
  TEST_CASE("small towers are exact") {
    std::uint64_t v = 1;
    for (unsigned m = 0; m <= 4; ++m) {
      CHECK(E(m).is_exact());
      CHECK(E(m).value() == v);
      v = std::uint64_t{1} << v;
      if (m == 4) break;
    }
    CHECK(E(4).to_string() == "65536");
  }

  TEST_CASE("E(5) has 65537 bits") {
    const auto e5 = E(5);
    REQUIRE(e5.is_exact());
    CHECK(boost::multiprecision::msb(e5.value()) == 65536);
  }

  TEST_CASE("beyond the cap values are symbolic and still ordered") {
    const auto e6 = E(6);
    CHECK_FALSE(e6.is_exact());
    CHECK(compare(E(5), e6) < 0);
    CHECK(compare(E(7), e6) > 0);
    CHECK(compare(E(6), e6) == 0);
    CHECK(compare(exp2_tower(1, 65536), E(5)) == 0);
  }

  TEST_CASE("floor_log2 steps down the tower") {
    for (unsigned m = 1; m <= 8; ++m) CHECK(compare(floor_log2(E(m)), E(m - 1)) == 0);
    CHECK(compare(floor_log2(TowerValue::exact(1000)), TowerValue::exact(9)) == 0);
    CHECK_THROWS_AS(floor_log2(TowerValue::exact(0)), DomainError);
  }

  TEST_CASE("parse forms") {
    CHECK(compare(parse_tower("E5"), parse_tower("E(5)")) == 0);
    CHECK(compare(parse_tower("2^65536"), E(5)) == 0);
    CHECK(compare(parse_tower("65536"), E(4)) == 0);
    CHECK_THROWS_AS(parse_tower("E(x)"), ParseError);
    CHECK_THROWS_AS(parse_tower(""), ParseError);
  }
}
