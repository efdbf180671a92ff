#include <doctest.h>

#include <stdexcept>

#include "lrb/json_io.hpp"
#include "lrb/poly.hpp"

using namespace lrb;

TEST_CASE("arithmetic") {
    Poly a({1, 1}), b({1, -1});
    CHECK(a * b == Poly({1, 0, -1}));
    CHECK(a + b == Poly({2}));
    CHECK((a - a).is_zero());
    CHECK(Poly::monomial(3, 2)[3] == 2);
    CHECK(Poly({1, 2, 3}).truncated(1) == Poly({1, 2}));
    CHECK(Poly({0, 1, 0, 1}).at_one() == 2);
    CHECK_FALSE(Poly({1, -1}).nonnegative());
    CHECK(Poly({0, 1, 0, 1}).str() == "t + t^3");
}

TEST_CASE("exact division") {
    bool ok = false;
    Poly q = Poly({1, 0, 0, 1}).divided_by(Poly({1, 1}), ok);
    CHECK(ok);
    CHECK(q == Poly({1, -1, 1}));
    Poly({1, 0, 1}).divided_by(Poly({1, 1}), ok);
    CHECK_FALSE(ok);
}

TEST_CASE("inverse product series") {
    // 1/((1-t^2)(1-t^4)) = 1 + t^2 + 2t^4 + 2t^6 + 3t^8
    CHECK(inverse_product_series({2, 4}, 8) == Poly({1, 0, 1, 0, 2, 0, 2, 0, 3}));
    CHECK(inverse_product_series({}, 5) == Poly({1}));
}

TEST_CASE("json") {
    CHECK(to_json(Poly({0, 1, 0, 1})).dump() == R"({"coeffs":{"1":1,"3":1}})");
    Tableau t = empty_of_shape({2, 1}, {1});
    t.rows = {{1}, {2}};
    auto j = to_json(t);
    CHECK(j.dump() == R"({"inner":[1],"outer":[2,1],"rows":[[1],[2]]})");
    CHECK(tableau_from_json(j) == t);
    CHECK_THROWS_AS(tableau_from_json(json{{"outer", {2}}, {"inner", json::array()}, {"rows", {{1}}}}), std::invalid_argument);
}
