#include <doctest.h>

#include "fixtures.hpp"
#include "minsub/io.hpp"

using namespace minsub;
using namespace minsub::io;

TEST_CASE("rationals serialize as p/q strings") {
  CHECK(to_json(make_rational(-3, 2)) == Json("-3/2"));
  CHECK(to_json(Rational(7)) == Json("7"));
  CHECK(rational_from_json(Json("4/6"), "x") == make_rational(2, 3));
  CHECK(rational_from_json(Json(5), "x") == Rational(5));
  CHECK_THROWS_AS(rational_from_json(Json(1.5), "x"), SchemaError);
  CHECK_THROWS_AS(rational_from_json(Json("1/0"), "x"), SchemaError);
}

TEST_CASE("schema errors name the field") {
  const Json bad_entry = Json::parse(R"({"dim": 2, "rows": [[1, 0], [0, "x"]], "rhs": [1, 1]})");
  try {
    (void)hpolyhedron_from_json(bad_entry);
    FAIL("expected schema error");
  } catch (const SchemaError& e) {
    CHECK(e.field() == "rows[1][1]");
  }
  const Json short_row = Json::parse(R"({"dim": 2, "rows": [[1]], "rhs": [1]})");
  CHECK_THROWS_WITH_AS(hpolyhedron_from_json(short_row), doctest::Contains("rows[0]"), SchemaError);
  const Json no_rhs = Json::parse(R"({"dim": 2, "rows": [[1, 0]]})");
  CHECK_THROWS_WITH_AS(hpolyhedron_from_json(no_rhs), doctest::Contains("'rhs'"), SchemaError);
  const Json bad_dim = Json::parse(R"({"dim": 0, "rows": [[1]], "rhs": [1]})");
  CHECK_THROWS_WITH_AS(hpolyhedron_from_json(bad_dim), doctest::Contains("'dim'"), SchemaError);
  const Json inst = Json::parse(R"({"dim": 1, "f": ["1/2"], "rays": [[1]], "P": {"rows": [[1]]}})");
  CHECK_THROWS_WITH_AS(instance_from_json(inst), doctest::Contains("P.rhs"), SchemaError);
  const Json integral = Json::parse(R"({"dim": 1, "f": ["1"], "rays": [[1]]})");
  CHECK_THROWS_WITH_AS(instance_from_json(integral), doctest::Contains("'f'"), SchemaError);
}

TEST_CASE("parse-emit-parse is the identity") {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = random_hpolyhedron(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 6);
    const auto h2 = hpolyhedron_from_json(to_json(h));
    CHECK(h2 == h);
    CHECK(to_json(h2) == to_json(h));

    const auto v = polar(h);
    const auto v2 = vpolytope_from_json(to_json(v));
    CHECK(v2.points == v.points);

    const auto fx = fixtures::random_2d_fixture(rng);
    const auto inst = instance_from_json(to_json(fx.instance));
    CHECK(inst.f == fx.instance.f);
    CHECK(inst.rays == fx.instance.rays);
    CHECK(inst.p_rows == fx.instance.p_rows);
    CHECK(inst.p_rhs == fx.instance.p_rhs);
    const auto body = body_from_json(to_json(fx.body), inst);
    CHECK(body.k == fx.body.k);
    CHECK(to_json(body) == to_json(fx.body));

    const auto cut = generate_cut(fx.instance, fx.body, 2);
    const auto cut2 = cut_from_json(to_json(cut), fx.instance.rays.size());
    CHECK(cut2.alpha == cut.alpha);
    CHECK(cut2.provenance == cut.provenance);
  }
}

TEST_CASE("report field order is stable") {
  SandwichReport r;
  r.samples_checked = 3;
  CHECK(to_json(r).dump() == R"({"passed":true,"samples_checked":3,"violations":[]})");
  r.violations.push_back({{1, 2}, Rational(1), Rational(0), Rational(2)});
  CHECK(to_json(r).dump() ==
        R"({"passed":false,"samples_checked":3,"violations":[{"x":["1","2"],"rho":"1","sigma":"0","gamma":"2"}]})");
}

TEST_CASE("text rendering carries the same content") {
  Json j;
  j["passed"] = true;
  j["violations"] = 0;
  j["x"] = Json::array({"1/2", "3"});
  j["nested"] = {{"a", 1}};
  j["items"] = Json::array({Json{{"z", Json::array({"1"})}}});
  CHECK(to_text(j) == "passed: true\nviolations: 0\nx: [1/2, 3]\nnested:\n  a: 1\nitems:\n  -\n    z: [1]\n");
}

TEST_CASE("LP debug dump") {
  lp::LinearProgram p;
  p.objective = {1, make_rational(1, 2)};
  p.bounds = {lp::Bound::free, lp::Bound::nonnegative};
  p.rows.push_back({{1, 1}, lp::Relation::less_equal, 3});
  const Json j = to_json(p);
  CHECK(j["objective"] == Json::array({"1", "1/2"}));
  CHECK(j["rows"][0]["relation"] == "<=");
  const Json out = to_json(lp::solve(p));
  CHECK(out["status"] == "optimal");
  CHECK(out["value"] == "3");
}
