#include <doctest.h>

#include "s3cover/json_io.hpp"
#include "support.hpp"

using namespace s3cover;
namespace js = s3cover::json;

TEST_CASE("rational encoding") {
  CHECK(js::encode(Rational(5)).dump() == "5");
  CHECK(js::encode(Rational::make(-3, 4)).dump() == "\"-3/4\"");
  auto big = Rational::parse("123456789012345678901234567890");
  CHECK(js::encode(big).is_string());
  CHECK(js::decode_rational(js::encode(big)) == big);
  CHECK(js::decode_rational(js::Json("6/4")) == Rational::make(3, 2));
  CHECK(js::decode_rational(js::Json(-7)) == -7);
  CHECK_THROWS_AS(js::decode_rational(js::Json(1.5)), js::FormatError);
  CHECK_THROWS_AS(js::decode_rational(js::Json("1/0")), js::FormatError);
  CHECK_THROWS_AS(js::decode_rational(js::Json(nullptr)), js::FormatError);
}

TEST_CASE("params round trip is bit-exact") {
  auto p = sample(base_seed());
  auto text = js::encode(p).dump();
  CHECK(js::decode_params(js::parse(text)) == p);
  CHECK(js::encode(js::decode_params(js::parse(text))).dump() == text);
  CHECK_THROWS_AS(js::decode_params(js::parse(R"({"a":1})")), js::FormatError);
  CHECK_THROWS_AS(js::decode_params(js::parse("[1,2]")), js::FormatError);
  CHECK_THROWS_AS(js::parse("{"), js::FormatError);
}

TEST_CASE("table round trip is bit-exact") {
  for (std::uint64_t i = 0; i < 5; ++i) {
    auto p = sample(base_seed() + i);
    auto text = js::encode_table(build_cover(p), p).dump();
    auto doc = js::decode_table(js::parse(text));
    CHECK(doc.table == build_cover(p));
    REQUIRE(doc.params.has_value());
    CHECK(*doc.params == p);
    CHECK(js::encode_table(doc.table, doc.params).dump() == text);
  }
  auto j = js::encode_table(build_cover(testing::solution1()), std::nullopt);
  CHECK(j["products"].size() == 21);
  CHECK(j["products"].contains("t*t"));
  CHECK(j["products"].contains("v1*w2"));
  CHECK_FALSE(j.contains("params"));
}

TEST_CASE("malformed tables are rejected") {
  auto good = js::encode_table(build_cover(testing::solution1()), std::nullopt);
  auto missing = good;
  missing["products"].erase("w2*w2");
  CHECK_THROWS_AS(js::decode_table(missing), js::FormatError);
  auto extra = good;
  extra["products"]["w2*v1"] = extra["products"]["v1*w2"];
  CHECK_THROWS_AS(js::decode_table(extra), js::FormatError);
  auto short_row = good;
  short_row["products"]["t*t"] = js::Json::array({1, 2});
  CHECK_THROWS_AS(js::decode_table(short_row), js::FormatError);
  auto bad_basis = good;
  bad_basis["basis"][0] = "e";
  CHECK_THROWS_AS(js::decode_table(bad_basis), js::FormatError);
}

TEST_CASE("building data and basis change documents") {
  auto bd = to_building_data(testing::solution1());
  CHECK(js::decode_building_data(js::encode(bd)) == bd);
  CHECK(js::encode(bd).dump() == R"({"A":-1,"B":1,"C":1,"D":1,"E":1,"F":-1,"G":3,"h":-6})");
  auto bc = testing::random_basis_change(base_seed());
  CHECK(js::decode_basis_change(js::encode(bc)) == bc);
  auto doc = js::parse(R"({"u": "1/2", "C": [[0, 1], [1, 0]]})");
  auto parsed = js::decode_basis_change(doc);
  CHECK(parsed.u == Rational::make(1, 2));
  CHECK(parsed.C[0][1] == 1);
  CHECK_THROWS_AS(js::decode_basis_change(js::parse(R"({"u":1,"C":[[1,0]]})")), js::FormatError);
}

TEST_CASE("reports") {
  auto p = testing::solution1();
  p.h = -5;
  auto rep = js::encode(verify(build_cover(p)));
  CHECK(rep["passed"] == false);
  CHECK(rep["associativity"]["passed"] == false);
  CHECK(rep["associativity"]["witness"]["at"].size() == 3);
  auto check = js::encode(check_constraints(p));
  CHECK(check["residuals"].dump() == "[0,0,2]");
  auto minors = js::encode(std::vector<MinorEntry>{{{1, 2, 3, 4, 5}, AlgebraElement::scalar(1)}});
  CHECK(minors.dump() == R"([{"rows":[1,2,3,4,5],"value":[1,0,0,0,0,0]}])");
}
