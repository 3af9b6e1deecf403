#include "doctest.h"

#include <cmath>

#include "pointscat/serialize.hpp"

using namespace pointscat;

TEST_CASE("CSV output splits complex columns and prints 17 digits") {
    Table t;
    t.columns = {{"k", false}, {"R", true}};
    t.add_row({{1.0, 0.0}, {-0.2, 0.8}});
    std::string csv = to_csv(t, {"pole kappa=1"});
    CHECK(csv ==
          "# pole kappa=1\n"
          "k,R_re,R_im\n"
          "1,-0.20000000000000001,0.80000000000000004\n");
}

TEST_CASE("CSV of an empty table is the header only") {
    Table t;
    t.columns = {{"a", false}, {"b", false}};
    CHECK(to_csv(t) == "a,b\n");
    CHECK(rows_to_json(t) == "[]");
}

TEST_CASE("JSON rows carry complex values as re/im objects") {
    Table t;
    t.columns = {{"k", false}, {"T", true}};
    t.add_row({{2.0, 0.0}, {0.5, -0.5}});
    CHECK(rows_to_json(t) ==
          "[\n  {\"k\": 2, \"T\": {\"re\": 0.5, \"im\": -0.5}}\n]");
}

TEST_CASE("identical tables serialize byte-identically") {
    Table t;
    t.columns = {{"x", false}};
    t.add_row({{0.1, 0.0}});
    t.add_row({{1.0 / 3.0, 0.0}});
    CHECK(to_csv(t) == to_csv(t));
    CHECK(rows_to_json(t) == rows_to_json(t));
}

TEST_CASE("non-finite values abort serialization") {
    Table t;
    t.columns = {{"x", false}};
    t.add_row({{std::nan(""), 0.0}});
    CHECK_THROWS_AS(to_csv(t), IoFailure);
    CHECK_THROWS_AS(rows_to_json(t), IoFailure);
    CHECK_THROWS_AS(format_double(INFINITY), IoFailure);

    Table w;
    w.columns = {{"a", false}, {"b", false}};
    CHECK_THROWS_AS(w.add_row({{1.0, 0.0}}), IoFailure);
}
